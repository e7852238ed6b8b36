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

//! Screened kernel of the slab sum and its small-wavenumber limit.

use crate::error::domain;
use crate::{erfc, erfcx, SpecFunError};

const FRAC_1_SQRT_PI: f64 = 0.564_189_583_547_756_286_948_079_451_560_772_6;

/// `e^{kz} erfc(a)` with `a = k/2ξ + ξz`, given `gauss = e^{−k²/4ξ² − ξ²z²}`.
fn scaled_term(kz: f64, a: f64, gauss: f64) -> f64 {
    if a >= 0.0 {
        erfcx(a) * gauss
    } else {
        // a < 0 forces kz < 0, so the exponential cannot overflow
        kz.exp() * erfc(a)
    }
}

/// `g(k̄, z, ξ) = e^{k̄z} erfc(k̄/2ξ + ξz) + e^{−k̄z} erfc(k̄/2ξ − ξz)`.
///
/// Evaluated through `erfcx`, so no intermediate overflows even when
/// `k̄|z|` exceeds the exponent range.
pub fn g_screened(kbar: f64, z: f64, xi: f64) -> Result<f64, SpecFunError> {
    if !(kbar > 0.0) || !kbar.is_finite() {
        return Err(domain("g_screened", kbar, "kbar > 0"));
    }
    if !(xi > 0.0) || !xi.is_finite() {
        return Err(domain("g_screened", xi, "xi > 0"));
    }
    if !z.is_finite() {
        return Err(domain("g_screened", z, "finite z"));
    }
    let c = kbar / (2.0 * xi);
    let gauss = (-(c * c) - (xi * z) * (xi * z)).exp();
    let kz = kbar * z;
    Ok(scaled_term(kz, c + xi * z, gauss) + scaled_term(-kz, c - xi * z, gauss))
}

/// `A(z, ξ) = −2(e^{−ξ²z²}/(ξ√π) − |z| erfc(ξ|z|))`, the `k̄ → 0` limit of
/// `(g(k̄, z, ξ) − 2e^{−k̄|z|}) / k̄`.
///
/// Written with `erfc` so the difference of the two nonnegative pieces
/// does not involve `|z| − z erf(ξz)`, which cancels for large `|z|`.
pub fn zero_mode_limit_a(z: f64, xi: f64) -> f64 {
    let az = z.abs();
    let x = xi * az;
    -2.0 * ((-x * x).exp() * FRAC_1_SQRT_PI / xi - az * erfc(x))
}
