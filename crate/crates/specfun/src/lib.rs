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

//! Scalar special functions used by the periodic Ewald sums.
//!
//! All kernels are pure and reentrant. Functions with a restricted domain
//! return [`SpecFunError::Domain`] instead of a NaN.

mod bessel;
mod erf;
mod error;
mod expint;
mod incomplete;
pub mod quad;
mod screened;

pub use bessel::{bessel_k0, bessel_k0_scaled};
pub use erf::{erf, erfc, erfcx};
pub use error::SpecFunError;
pub use expint::{expint_e1, expint_en, expint_ein};
pub use incomplete::{incomplete_bessel_k0, SMALL_U_THRESHOLD};
pub use quad::QuadratureConfig;
pub use screened::{g_screened, zero_mode_limit_a};

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_606_512_090_082_402_43;
