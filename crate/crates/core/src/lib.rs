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

//! Domain types shared by the Ewald evaluators and the reference oracles:
//! particle systems, periodicity modes, truncation parameters, wave-vector
//! grids and image lattices.
//!
//! Units follow the Gaussian convention `−∇²φ = 4πρ`; a unit charge at
//! distance `r` produces `φ = 1/r`.

mod error;
mod lattice;
mod params;
mod result;
mod system;
mod targets;

pub use error::CoreError;
pub use lattice::{build_image_vectors, build_kgrid, shell_indices, ImageVector, KGrid};
pub use params::{default_k_max, default_layers, default_r_cut, default_xi, EwaldParams, TRUNCATION_TOLERANCE};
pub use result::{Components, PotentialResult};
pub use system::{validate_system, ParticleSystem, Periodicity, ValidationReport, NEUTRALITY_TOLERANCE};
pub use targets::EvalTargets;
