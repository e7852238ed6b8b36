// Copyright 2026 The pewald developers
//
// Licensed under the Apache license, version 2.0 (the "license");
// you may not use this file except in compliance with the license.
// You may obtain a copy of the license at
//
//     http://www.apache.org/licenses/license-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the license is distributed on an "as is" basis,
// without warranties or conditions of any kind, either express or implied.
// See the license for the specific language governing permissions and
// limitations under the license.

/// Where a potential is evaluated.
#[derive(Debug, Clone, PartialEq)]
pub enum EvalTargets {
    /// At every source, with the self-interaction removed.
    Sources,
    /// At explicit off-particle points.
    Points(Vec<[f64; 3]>),
}

impl EvalTargets {
    /// Number of targets for a system of `n_sources` particles.
    pub fn count(&self, n_sources: usize) -> usize {
        match self {
            EvalTargets::Sources => n_sources,
            EvalTargets::Points(p) => p.len(),
        }
    }
}
