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

//! Incomplete modified Bessel function
//! `K₀(u, v) = ∫_1^∞ e^{−ut − v/t} / t dt`.
//!
//! With `t = e^s` the integrand becomes `exp(−(u e^s + v e^{−s}))`, which is
//! unimodal in `s` with its maximum at `s* = ½ ln(v/u)` when that is
//! positive and at the lower limit otherwise. The peak value is factored
//! out, the integration range is cut where the exponent has risen by
//! [`TAIL_EXPONENT`] above its minimum, and the two sides of the peak are
//! separate panels.

use crate::error::domain;
use crate::quad::{integrate_panels, QuadratureConfig};
use crate::{bessel_k0, expint_e1, expint_en, SpecFunError};

/// Below this `u` the small-`u` expansion replaces quadrature.
pub const SMALL_U_THRESHOLD: f64 = 1e-6;

/// Extra decay, relative to the peak, at which the integration range ends.
const TAIL_EXPONENT: f64 = 60.0;

/// `K₀(u, v) = 2K₀(2√(uv)) − Σ_p (−u)^p/p! · E_{p+1}(v)`, truncated after
/// `p = 2`. The neglected term is below `u³/18`.
fn small_u(u: f64, v: f64) -> Result<f64, SpecFunError> {
    let full = 2.0 * bessel_k0(2.0 * (u * v).sqrt())?;
    let head = expint_e1(v)? - u * expint_en(2, v)? + 0.5 * u * u * expint_en(3, v)?;
    Ok(full - head)
}

/// `K₀(u, v)` for `u > 0`, `v ≥ 0`, accurate to the tolerances in `cfg`.
///
/// `v = 0` reduces to `E₁(u)`; `u < SMALL_U_THRESHOLD` uses the small-`u`
/// expansion. Failure of the adaptive quadrature to reach the requested
/// tolerance is reported as [`SpecFunError::NoConvergence`].
pub fn incomplete_bessel_k0(u: f64, v: f64, cfg: &QuadratureConfig) -> Result<f64, SpecFunError> {
    if !(u > 0.0) || !u.is_finite() {
        return Err(domain("incomplete_bessel_k0", u, "u > 0"));
    }
    if !(v >= 0.0) || !v.is_finite() {
        return Err(domain("incomplete_bessel_k0", v, "v >= 0"));
    }
    cfg.validate()?;
    if v == 0.0 {
        return expint_e1(u);
    }
    if u < SMALL_U_THRESHOLD {
        return small_u(u, v);
    }

    let t_star = (v / u).sqrt();
    let m = if t_star > 1.0 { 2.0 * (u * v).sqrt() } else { u + v };
    // roots of u w² − (m + L) w + v = 0
    let b = m + TAIL_EXPONENT;
    let root = (b * b - 4.0 * u * v).max(0.0).sqrt();
    let w_hi = (b + root) / (2.0 * u);
    let w_lo = 2.0 * v / (b + root);
    let s_lo = w_lo.max(1.0).ln();
    let s_hi = w_hi.ln();
    if s_hi <= s_lo {
        return Ok(0.0);
    }

    let f = |s: f64| (-(u * s.exp() + v * (-s).exp() - m)).exp();
    let mut breaks = vec![s_lo];
    if t_star > 1.0 {
        let s_peak = t_star.ln();
        if s_peak > s_lo && s_peak < s_hi {
            breaks.push(s_peak);
        }
    }
    breaks.push(s_hi);

    // tolerances in units of the factored-out peak e^{−m}
    let abs_scaled = (cfg.abs_tol.ln() + m).min(700.0).exp();
    let local = QuadratureConfig {
        abs_tol: abs_scaled,
        ..*cfg
    };
    let est = integrate_panels(&f, &breaks, &local);
    let value = est.value * (-m).exp();
    if !est.converged {
        return Err(SpecFunError::NoConvergence {
            function: "incomplete_bessel_k0",
            value,
            abs_err: est.abs_err * (-m).exp(),
        });
    }
    Ok(value)
}
