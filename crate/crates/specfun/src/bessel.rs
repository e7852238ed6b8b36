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

//! Modified Bessel function of the second kind, order zero.
//!
//! `x ≤ 2`: the ascending series
//! `K₀(x) = Σ_k (x²/4)^k/(k!)² [H_k − ln(x/2) − γ]`.
//! `x > 2`: Steed's continued fraction for `K_ν` at `ν = 0` (Temme's CF2),
//! which yields `e^x K₀(x)` directly.

use std::f64::consts::PI;

use crate::error::domain;
use crate::{SpecFunError, EULER_GAMMA};

const SERIES_LIMIT: f64 = 2.0;

fn k0_series(x: f64) -> f64 {
    let y = 0.25 * x * x;
    let log_term = (0.5 * x).ln() + EULER_GAMMA;
    let mut term = 1.0;
    let mut harmonic = 0.0;
    let mut sum = -log_term;
    for k in 1..60 {
        let kf = k as f64;
        term *= y / (kf * kf);
        harmonic += 1.0 / kf;
        let delta = term * (harmonic - log_term);
        sum += delta;
        if delta.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    sum
}

/// `e^x K₀(x)` for `x ≥ 2`.
fn k0_scaled_cf(x: f64) -> f64 {
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut delh = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let a1 = 0.25;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 1..10_000 {
        let fi = i as f64;
        a -= 2.0 * fi;
        c = -a * c / (fi + 1.0);
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh *= b * d - 1.0;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < 0.5 * f64::EPSILON {
            break;
        }
    }
    (PI / (2.0 * x)).sqrt() / s
}

/// `K₀(x)` for `x > 0`.
pub fn bessel_k0(x: f64) -> Result<f64, SpecFunError> {
    if !(x > 0.0) || x.is_nan() {
        return Err(domain("bessel_k0", x, "x > 0"));
    }
    if x.is_infinite() {
        return Ok(0.0);
    }
    if x <= SERIES_LIMIT {
        Ok(k0_series(x))
    } else {
        Ok(k0_scaled_cf(x) * (-x).exp())
    }
}

/// `e^x K₀(x)` for `x > 0`; finite where `K₀` itself underflows.
pub fn bessel_k0_scaled(x: f64) -> Result<f64, SpecFunError> {
    if !(x > 0.0) || x.is_nan() {
        return Err(domain("bessel_k0_scaled", x, "x > 0"));
    }
    if x.is_infinite() {
        return Ok(0.0);
    }
    if x <= SERIES_LIMIT {
        Ok(k0_series(x) * x.exp())
    } else {
        Ok(k0_scaled_cf(x))
    }
}
