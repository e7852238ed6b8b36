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

/// Per-target split of an Ewald potential.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Components {
    pub real: f64,
    pub kspace: f64,
    pub zero_mode: f64,
    pub self_term: f64,
}

impl Components {
    pub fn total(&self) -> f64 {
        self.real + self.kspace + self.zero_mode + self.self_term
    }
}

/// Potentials at a list of targets, with their decomposition.
#[derive(Debug, Clone, PartialEq)]
pub struct PotentialResult {
    pub total: Vec<f64>,
    pub components: Vec<Components>,
}

impl PotentialResult {
    pub fn from_components(components: Vec<Components>) -> Self {
        let total = components.iter().map(Components::total).collect();
        Self { total, components }
    }

    pub fn len(&self) -> usize {
        self.total.len()
    }

    pub fn is_empty(&self) -> bool {
        self.total.is_empty()
    }

    /// Largest `|a_i − b_i|` between the totals of two results.
    pub fn max_abs_diff(&self, other: &PotentialResult) -> f64 {
        self.total
            .iter()
            .zip(&other.total)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}
