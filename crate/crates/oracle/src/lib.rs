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

//! Independent reference values for the Ewald evaluators.
//!
//! Nothing here uses the Ewald split. The direct sums add bare Coulomb
//! images shell by shell, the pure Fourier sums use the unsplit slab and
//! wire Green's functions, and the remaining functions are brute-force
//! quadratures of the integrals behind each closed form.

mod direct;
mod error;
mod fourier;
mod integrals;
mod multipole;
mod special;

pub use direct::{direct_sum, direct_sum_extrapolated, direct_sum_ordered, shell_partial_sums, OracleReport, ShellOrder};
pub use error::OracleError;
pub use fourier::{pure_fourier_1p, pure_fourier_2p};
pub use integrals::{
    bare_wire_mode_integral, gaussian_abs_convolution, gaussian_shell_integral, gaussian_shell_quadrature,
    kspace_1p_quadrature, kspace_2p_quadrature, slab_mode_integral, wire_mode_integral,
};
pub use multipole::{log_sum_multipole, MultipoleTerms};
pub use special::{bessel_k0_quad, erfc_quad, erfcx_quad, expint_e1_quad, incomplete_bessel_k0_quad, oracle_config};
