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

//! Ewald sums for the electrostatic potential of a neutral set of point
//! charges that is periodic in one, two or three directions.
//!
//! The potential is split as real space + k-space + zero mode + self term.
//! The real-space part is the same screened sum `Σ q erfc(ξr)/r` in every
//! mode; the smooth part is a 3D Fourier series (3P), a 2D series with the
//! screened kernel `g(k̄, z, ξ)` (2P), or a 1D series with the incomplete
//! Bessel function `K₀(u, v)` (1P). The zero wave number needs its own
//! Green's function in 2P and 1P and is zero by gauge in 3P.
//!
//! ```
//! use pewald::{ewald_potential, EvalTargets, EwaldOptions};
//! use pewald_core::{EwaldParams, ParticleSystem, Periodicity};
//!
//! let sys = ParticleSystem::new(
//!     vec![[0.1, 0.0, 0.0], [-0.2, 0.1, 0.3]],
//!     vec![1.0, -1.0],
//!     [1.0, 1.0, 1.0],
//! ).unwrap();
//! let params = EwaldParams::for_box(sys.box_lengths(), Periodicity::P3).unwrap();
//! let phi = ewald_potential(&sys, Periodicity::P3, &params, &EvalTargets::Sources,
//!                           &EwaldOptions::default()).unwrap();
//! assert_eq!(phi.len(), 2);
//! ```

mod error;
mod kspace;
mod potential;
mod real;
mod targets;
mod zero;

pub use error::EwaldError;
pub use kspace::{
    kspace_sum_1p, kspace_sum_1p_complex, kspace_sum_2p, kspace_sum_2p_complex, kspace_sum_3p,
    kspace_sum_3p_complex,
};
pub use potential::{ewald_potential, EwaldOptions};
pub use real::{real_space_sum, self_term};
pub use targets::{EvalTargets, COINCIDENCE_FACTOR};
#[doc(hidden)]
pub use zero::ZeroModeVariant;
pub use zero::{zero_mode_1p, zero_mode_1p_source_form, zero_mode_2p};
