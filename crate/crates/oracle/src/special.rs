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

//! Quadrature definitions of the special functions, evaluated without the
//! series, continued fractions or rational approximations of the
//! production kernels.

use pewald_specfun::quad::{integrate, integrate_panels, integrate_to_infinity};
use pewald_specfun::QuadratureConfig;

use crate::error::check;
use crate::OracleError;

const FRAC_2_SQRT_PI: f64 = std::f64::consts::FRAC_2_SQRT_PI;

/// Tight relative tolerance, just above the rounding floor of the
/// Gauss–Kronrod error estimate.
pub fn oracle_config() -> QuadratureConfig {
    QuadratureConfig {
        abs_tol: 1e-300,
        rel_tol: 2e-14,
        max_subdivisions: 4000,
    }
}

fn non_negative(x: f64, what: &'static str) -> Result<(), OracleError> {
    if x >= 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(OracleError::Rejected(format!("{what}: argument {x} must be finite and non-negative")))
    }
}

/// `∫_0^∞ e^{−2xs − s²} ds`, cut where the exponent reaches 50.
fn erfc_core(x: f64, cfg: &QuadratureConfig) -> Result<f64, OracleError> {
    let s_max = 50.0 / (x + (x * x + 50.0).sqrt());
    let f = |s: f64| (-(2.0 * x + s) * s).exp();
    check(integrate(f, 0.0, s_max, cfg), "erfc")
}

/// `erfcx(x) = (2/√π) ∫_0^∞ e^{−2xs − s²} ds` for `x ≥ 0`.
pub fn erfcx_quad(x: f64, cfg: &QuadratureConfig) -> Result<f64, OracleError> {
    non_negative(x, "erfcx")?;
    Ok(FRAC_2_SQRT_PI * erfc_core(x, cfg)?)
}

/// `erfc(x) = e^{−x²} erfcx(x)`, with `x²` split into two doubles so the
/// exponential carries no extra rounding.
pub fn erfc_quad(x: f64, cfg: &QuadratureConfig) -> Result<f64, OracleError> {
    non_negative(x, "erfc")?;
    let hi = x * x;
    let lo = x.mul_add(x, -hi);
    Ok((-hi).exp() * (1.0 - lo) * FRAC_2_SQRT_PI * erfc_core(x, cfg)?)
}

/// `K₀(x) = e^{−x} ∫_0^∞ e^{−2x sinh²(t/2)} dt`.
pub fn bessel_k0_quad(x: f64, cfg: &QuadratureConfig) -> Result<f64, OracleError> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(OracleError::Rejected(format!("K0: argument {x} must be positive")));
    }
    let t_max = 2.0 * (25.0 / x).sqrt().asinh();
    let f = |t: f64| {
        let sh = (0.5 * t).sinh();
        (-2.0 * x * sh * sh).exp()
    };
    Ok((-x).exp() * check(integrate(f, 0.0, t_max, cfg), "K0")?)
}

/// `E₁(v) = e^{−v} ∫_0^∞ exp(−v(e^w − 1)) dw`, from `t = e^w` in the
/// defining integral.
pub fn expint_e1_quad(v: f64, cfg: &QuadratureConfig) -> Result<f64, OracleError> {
    if !(v > 0.0 && v.is_finite()) {
        return Err(OracleError::Rejected(format!("E1: argument {v} must be positive")));
    }
    let w_max = (50.0 / v).ln_1p();
    // the integrand is flat up to w ≈ ln(1/v), then falls off sharply
    let knee = (1.0 / v).ln_1p().min(w_max);
    let f = |w: f64| (-v * w.exp_m1()).exp();
    let breaks: Vec<f64> = if knee > 0.0 && knee < w_max {
        vec![0.0, knee, w_max]
    } else {
        vec![0.0, w_max]
    };
    Ok((-v).exp() * check(integrate_panels(&f, &breaks, cfg), "E1")?)
}

/// `∫_1^∞ e^{−ut − v/t}/t dt` by a plain compactifying substitution.
pub fn incomplete_bessel_k0_quad(u: f64, v: f64, cfg: &QuadratureConfig) -> Result<f64, OracleError> {
    if !(u > 0.0 && v >= 0.0) {
        return Err(OracleError::Rejected(format!("K0(u, v): need u > 0, v >= 0, got ({u}, {v})")));
    }
    let f = |t: f64| (-u * t - v / t).exp() / t;
    check(integrate_to_infinity(f, 1.0, cfg), "K0(u, v)")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_values() {
        let cfg = oracle_config();
        assert!((erfc_quad(2.0, &cfg).unwrap() / 0.004_677_734_981_047_266 - 1.0).abs() < 1e-15);
        assert!((bessel_k0_quad(1.0, &cfg).unwrap() / 0.421_024_438_240_708_3 - 1.0).abs() < 1e-15);
        assert!((expint_e1_quad(1.0, &cfg).unwrap() / 0.219_383_934_395_520_27 - 1.0).abs() < 1e-15);
        assert!((erfc_quad(0.0, &cfg).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn incomplete_k0_collapses_to_e1() {
        let cfg = QuadratureConfig { abs_tol: 1e-15, rel_tol: 1e-13, max_subdivisions: 2000 };
        let a = incomplete_bessel_k0_quad(0.7, 0.0, &cfg).unwrap();
        let b = expint_e1_quad(0.7, &oracle_config()).unwrap();
        assert!((a - b).abs() < 1e-13);
    }
}
