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

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecFunError {
    #[error("{function}: argument {arg} outside the domain ({domain})")]
    Domain {
        function: &'static str,
        arg: f64,
        domain: &'static str,
    },
    #[error("invalid quadrature configuration: {0}")]
    InvalidConfig(String),
    #[error("{function}: quadrature did not converge (estimate {value}, error {abs_err})")]
    NoConvergence {
        function: &'static str,
        value: f64,
        abs_err: f64,
    },
}

pub(crate) fn domain(function: &'static str, arg: f64, domain: &'static str) -> SpecFunError {
    SpecFunError::Domain {
        function,
        arg,
        domain,
    }
}
