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

use pewald_core::CoreError;
use pewald_specfun::SpecFunError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EwaldError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
    #[error("target {target} lies within {distance:e} of source {particle}")]
    CoincidentTarget {
        target: usize,
        particle: usize,
        distance: f64,
    },
    #[error("target {target} coincides with an image of source {particle} (shift {shift:?})")]
    OverlappingImage {
        target: usize,
        particle: usize,
        shift: [f64; 3],
    },
    #[error("target {target} is on the axis of source {particle}; the wire zero mode needs the source form")]
    OnAxis { target: usize, particle: usize },
}
