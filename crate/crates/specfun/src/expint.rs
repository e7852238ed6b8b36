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

//! Exponential integrals `E₁`, `E_n` and the entire function
//! `Ein(x) = ∫_0^x (1 − e^{−t})/t dt = E₁(x) + γ + ln x`.

use crate::error::domain;
use crate::{SpecFunError, EULER_GAMMA};

/// Power series of `Ein`, alternating; used for `x ≤ 1.5`.
fn ein_series(x: f64) -> f64 {
    let mut term = 1.0;
    let mut sum = 0.0;
    for k in 1..80 {
        let kf = k as f64;
        term *= -x / kf;
        let delta = -term / kf;
        sum += delta;
        if delta.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    sum
}

/// Modified Lentz evaluation of the `E₁` continued fraction, `x > 1`.
fn e1_continued_fraction(x: f64) -> f64 {
    let tiny = 1e-300;
    let mut b = x + 1.0;
    let mut c = 1.0 / tiny;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..10_000 {
        let fi = i as f64;
        let an = -fi * fi;
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        let del = c * d;
        h *= del;
        if (del - 1.0).abs() < 0.5 * f64::EPSILON {
            break;
        }
    }
    h * (-x).exp()
}

/// Exponential integral `E₁(v) = ∫_1^∞ e^{−vt}/t dt` for `v > 0`.
pub fn expint_e1(v: f64) -> Result<f64, SpecFunError> {
    if !(v > 0.0) || v.is_nan() {
        return Err(domain("expint_e1", v, "v > 0"));
    }
    if v.is_infinite() {
        return Ok(0.0);
    }
    if v <= 1.0 {
        Ok(ein_series(v) - EULER_GAMMA - v.ln())
    } else {
        Ok(e1_continued_fraction(v))
    }
}

/// `Ein(x) = E₁(x) + γ + ln x`, finite at the origin with `Ein(0) = 0`.
pub fn expint_ein(x: f64) -> Result<f64, SpecFunError> {
    if !(x >= 0.0) || x.is_nan() {
        return Err(domain("expint_ein", x, "x >= 0"));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if x <= 1.5 {
        Ok(ein_series(x))
    } else {
        Ok(e1_continued_fraction(x) + EULER_GAMMA + x.ln())
    }
}

/// Generalized exponential integral `E_n(v) = ∫_1^∞ e^{−vt}/t^n dt`,
/// `n ≥ 1`, by upward recurrence from `E₁`.
///
/// The recurrence `E_{n+1} = (e^{−v} − v E_n)/n` loses roughly
/// `log10(v/n)` digits per step for large `v`; intended for small `n`.
pub fn expint_en(n: u32, v: f64) -> Result<f64, SpecFunError> {
    if n == 0 {
        return Err(domain("expint_en", 0.0, "n >= 1"));
    }
    if !(v > 0.0) || v.is_nan() {
        return Err(domain("expint_en", v, "v > 0"));
    }
    let ev = (-v).exp();
    let mut e = expint_e1(v)?;
    for k in 1..n {
        e = (ev - v * e) / k as f64;
    }
    Ok(e)
}
