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

//! Quadratures of the integrals behind the closed forms: the Gaussian
//! screening potential, the slab and wire mode integrals, and the
//! Gaussian-smoothed slab zero mode.

use std::collections::HashMap;
use std::f64::consts::PI;

use pewald_core::{EvalTargets, KGrid, ParticleSystem, Periodicity};
use pewald_specfun::quad::{integrate, integrate_cos_to_infinity, integrate_panels, integrate_to_infinity};
use pewald_specfun::{erf, erfc, QuadratureConfig};

use crate::error::check;
use crate::OracleError;

/// Gaussian tails are cut at `|κ| = GAUSS_CUT · ξ`, where `e^{−κ²/4ξ²} ≈ 2e-16`.
const GAUSS_CUT: f64 = 12.0;

/// Tolerances for the inner integral of a nested quadrature.
fn inner_config(cfg: &QuadratureConfig) -> QuadratureConfig {
    QuadratureConfig {
        rel_tol: (0.1 * cfg.rel_tol).max(5e-14),
        ..*cfg
    }
}

fn positive(v: f64, what: &str) -> Result<(), OracleError> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(OracleError::Rejected(format!("{what} must be positive, got {v}")))
    }
}

/// Potential at distance `r0` of a unit Gaussian of width `1/ξ`, restricted
/// to the ball of radius `b` about the evaluation point:
/// `(1/2r₀)[2 erf(ξr₀) + erf(ξ(b − r₀)) − erf(ξ(b + r₀))]`.
///
/// The difference of the last two terms is taken as a difference of `erfc`
/// values, so it stays accurate when `b` is large. At `r₀ = 0` the
/// continuous limit `(2ξ/√π)(1 − e^{−ξ²b²})` is returned.
pub fn gaussian_shell_integral(r0: f64, xi: f64, b: f64) -> Result<f64, OracleError> {
    positive(xi, "xi")?;
    positive(b, "b")?;
    if !(r0 >= 0.0 && r0.is_finite()) {
        return Err(OracleError::Rejected(format!("r0 must be non-negative, got {r0}")));
    }
    if r0 == 0.0 {
        return Ok(std::f64::consts::FRAC_2_SQRT_PI * xi * -(-(xi * b) * (xi * b)).exp_m1());
    }
    Ok((2.0 * erf(xi * r0) + erfc(xi * (b + r0)) - erfc(xi * (b - r0))) / (2.0 * r0))
}

/// `ξ³π^{−3/2} ∫_{|y−x|≤b} e^{−ξ²|y|²}/|x − y| dy` with `|x| = r₀`, by nested
/// quadrature over the radius and polar angle about `x`. The azimuthal
/// integral is the constant `2π`.
pub fn gaussian_shell_quadrature(r0: f64, xi: f64, b: f64, cfg: &QuadratureConfig) -> Result<f64, OracleError> {
    positive(xi, "xi")?;
    positive(b, "b")?;
    let inner_cfg = inner_config(cfg);
    let failed = std::cell::Cell::new(None);
    let radial = |r: f64| {
        let f = |th: f64| (-(xi * xi) * (r * r + 2.0 * r * r0 * th.cos() + r0 * r0)).exp() * th.sin();
        let e = integrate(f, 0.0, PI, &inner_cfg);
        if !e.converged {
            failed.set(Some(e.abs_err));
        }
        r * e.value
    };
    let mut breaks = vec![0.0];
    for p in [r0 - 6.0 / xi, r0, r0 + 6.0 / xi] {
        if p > 0.0 && p < b {
            breaks.push(p);
        }
    }
    breaks.push(b);
    let est = integrate_panels(&radial, &breaks, cfg);
    if let Some(abs_err) = failed.get() {
        return Err(OracleError::NoConvergence {
            what: "gaussian shell (inner)",
            abs_err,
        });
    }
    let value = check(est, "gaussian shell")?;
    Ok(2.0 * PI * xi.powi(3) * PI.powf(-1.5) * value)
}

/// Lobe boundaries of `cos(ω t)` on `[0, t_max]`, at most `cap` panels.
fn cos_breaks(omega: f64, t_max: f64, cap: usize) -> Vec<f64> {
    let mut b = vec![0.0];
    if omega > 0.0 {
        let step = (PI / omega).max(t_max / cap as f64);
        let mut t = step;
        while t < t_max {
            b.push(t);
            t += step;
        }
    }
    b.push(t_max);
    b
}

/// `∫_ℝ e^{−(k̄² + κ²)/4ξ²}/(k̄² + κ²) · e^{−iκs} dκ`, which equals
/// `(π/2k̄) g(k̄, s, ξ)`.
pub fn slab_mode_integral(kbar: f64, s: f64, xi: f64, cfg: &QuadratureConfig) -> Result<f64, OracleError> {
    positive(kbar, "kbar")?;
    positive(xi, "xi")?;
    let k2 = kbar * kbar;
    let c = 1.0 / (4.0 * xi * xi);
    let f = |kappa: f64| {
        let q = k2 + kappa * kappa;
        (-q * c).exp() / q * (kappa * s).cos()
    };
    let cut = GAUSS_CUT * xi;
    let est = integrate_panels(&f, &cos_breaks(s.abs(), cut, 400), cfg);
    Ok(2.0 * check(est, "slab mode integral")?)
}

/// `I(k, x, y, ξ) = e^{−k²/4ξ²} ∫_{ℝ²} e^{−|κ|²/4ξ²}/(|κ|² + k²) · e^{−iκ·(x, y)} dκ`
/// by nested quadrature over the first quadrant of the truncated square.
pub fn wire_mode_integral(k: f64, x: f64, y: f64, xi: f64, cfg: &QuadratureConfig) -> Result<f64, OracleError> {
    positive(k, "k")?;
    positive(xi, "xi")?;
    let k2 = k * k;
    let c = 1.0 / (4.0 * xi * xi);
    let cut = GAUSS_CUT * xi;
    let inner_cfg = inner_config(cfg);
    let bx = cos_breaks(x.abs(), cut, 200);
    let by = cos_breaks(y.abs(), cut, 200);
    let failed = std::cell::Cell::new(None);
    let outer = |k2y: f64| {
        let gy = (-k2y * k2y * c).exp() * (k2y * y).cos();
        let f = |k1: f64| (-k1 * k1 * c).exp() / (k1 * k1 + k2y * k2y + k2) * (k1 * x).cos();
        let e = integrate_panels(&f, &bx, &inner_cfg);
        if !e.converged {
            failed.set(Some(e.abs_err));
        }
        gy * e.value
    };
    let est = integrate_panels(&outer, &by, cfg);
    if let Some(abs_err) = failed.get() {
        return Err(OracleError::NoConvergence {
            what: "wire mode integral (inner)",
            abs_err,
        });
    }
    Ok(4.0 * (-k2 * c).exp() * check(est, "wire mode integral")?)
}

/// `Ī(k, x, y) = ∫_{ℝ²} e^{−iκ·(x, y)}/(|κ|² + k²) dκ`, which equals
/// `2π K₀(kρ)`. Both oscillatory half-line integrals are summed lobe by
/// lobe with epsilon acceleration; needs `x ≠ 0`.
pub fn bare_wire_mode_integral(k: f64, x: f64, y: f64, cfg: &QuadratureConfig) -> Result<f64, OracleError> {
    positive(k, "k")?;
    if x == 0.0 {
        return Err(OracleError::Rejected("the inner oscillatory integral needs x != 0".into()));
    }
    let k2 = k * k;
    let inner_cfg = inner_config(cfg);
    let failed = std::cell::Cell::new(None);
    let inner = |k2y: f64| {
        let a2 = k2y * k2y + k2;
        let e = integrate_cos_to_infinity(|k1: f64| 1.0 / (k1 * k1 + a2), x.abs(), &inner_cfg);
        if !e.converged {
            failed.set(Some(e.abs_err));
        }
        e.value
    };
    let est = if y == 0.0 {
        integrate_to_infinity(inner, 0.0, cfg)
    } else {
        integrate_cos_to_infinity(inner, y.abs(), cfg)
    };
    if let Some(abs_err) = failed.get() {
        return Err(OracleError::NoConvergence {
            what: "bare wire integral (inner)",
            abs_err,
        });
    }
    Ok(4.0 * check(est, "bare wire integral")?)
}

/// `∫ |s − t| (ξ/√π) e^{−ξ²t²} dt`, the `|z|` kernel smoothed by the
/// screening Gaussian.
pub fn gaussian_abs_convolution(s: f64, xi: f64, cfg: &QuadratureConfig) -> Result<f64, OracleError> {
    positive(xi, "xi")?;
    let t_max = s.abs() + 9.0 / xi;
    let f = |t: f64| (s - t).abs() * xi / PI.sqrt() * (-(xi * t) * (xi * t)).exp();
    check(integrate_panels(&f, &[-t_max, s, t_max], cfg), "gaussian convolution")
}

fn target_points(system: &ParticleSystem, targets: &EvalTargets) -> Vec<[f64; 3]> {
    match targets {
        EvalTargets::Sources => system.positions().to_vec(),
        EvalTargets::Points(p) => p.clone(),
    }
}

/// Slab k-space sum with every mode from [`slab_mode_integral`]:
/// `(2/L1L2) Σ_{k̄≠0} Σ_n q_n cos(k̄·(r − r_n)) ∫ e^{−k²/4ξ²}/k² e^{−iκ₃(z − z_n)} dκ₃`.
pub fn kspace_2p_quadrature(
    system: &ParticleSystem,
    xi: f64,
    grid: &KGrid,
    targets: &EvalTargets,
    cfg: &QuadratureConfig,
) -> Result<Vec<f64>, OracleError> {
    grid.require_mode(Periodicity::P2)?;
    let l = system.box_lengths();
    let mut out = Vec::new();
    for x in target_points(system, targets) {
        let mut sum = 0.0;
        for (y, &q) in system.positions().iter().zip(system.charges()) {
            let s = x[2] - y[2];
            let mut cache: HashMap<u64, f64> = HashMap::new();
            for k in &grid.vectors {
                let kn = (k[0] * k[0] + k[1] * k[1]).sqrt();
                let m = match cache.get(&kn.to_bits()) {
                    Some(&m) => m,
                    None => {
                        let m = slab_mode_integral(kn, s, xi, cfg)?;
                        cache.insert(kn.to_bits(), m);
                        m
                    }
                };
                sum += q * (k[0] * (x[0] - y[0]) + k[1] * (x[1] - y[1])).cos() * m;
            }
        }
        out.push(2.0 / (l[0] * l[1]) * sum);
    }
    Ok(out)
}

/// Wire k-space sum with every mode from [`wire_mode_integral`]:
/// `(1/πL3) Σ_{k₃≠0} Σ_n q_n cos(k₃(z − z_n)) I(|k₃|, x − x_n, y − y_n, ξ)`.
pub fn kspace_1p_quadrature(
    system: &ParticleSystem,
    xi: f64,
    grid: &KGrid,
    targets: &EvalTargets,
    cfg: &QuadratureConfig,
) -> Result<Vec<f64>, OracleError> {
    grid.require_mode(Periodicity::P1)?;
    let l3 = system.box_lengths()[2];
    let mut out = Vec::new();
    for x in target_points(system, targets) {
        let mut sum = 0.0;
        for (y, &q) in system.positions().iter().zip(system.charges()) {
            let mut cache: HashMap<u64, f64> = HashMap::new();
            for k in &grid.vectors {
                let kz = k[2].abs();
                let m = match cache.get(&kz.to_bits()) {
                    Some(&m) => m,
                    None => {
                        let m = wire_mode_integral(kz, x[0] - y[0], x[1] - y[1], xi, cfg)?;
                        cache.insert(kz.to_bits(), m);
                        m
                    }
                };
                sum += q * (k[2] * (x[2] - y[2])).cos() * m;
            }
        }
        out.push(sum / (PI * l3));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> QuadratureConfig {
        QuadratureConfig {
            abs_tol: 1e-14,
            rel_tol: 1e-12,
            max_subdivisions: 2000,
        }
    }

    #[test]
    fn shell_integral_saturates() {
        let (r0, xi) = (0.8, 1.3);
        let v = gaussian_shell_integral(r0, xi, 10.0 / xi + r0).unwrap();
        assert!((v - erf(xi * r0) / r0).abs() < 1e-14);
    }

    #[test]
    fn shell_integral_small_radius() {
        let xi = 1.7;
        let v = gaussian_shell_integral(1e-6, xi, 20.0).unwrap();
        assert!((v - std::f64::consts::FRAC_2_SQRT_PI * xi).abs() < 1e-10);
        assert_eq!(gaussian_shell_integral(0.0, xi, 20.0).unwrap(), std::f64::consts::FRAC_2_SQRT_PI * xi);
    }

    #[test]
    fn bare_slab_integral_by_quadrature() {
        // ∫ cos(κz)/(k̄² + κ²) dκ = (π/k̄) e^{−k̄|z|} at (k̄, z) = (1, 0.7)
        let e = integrate_cos_to_infinity(|t: f64| 1.0 / (1.0 + t * t), 0.7, &cfg());
        assert!((2.0 * e.value - PI * (-0.7f64).exp()).abs() < 1e-10);
    }

    #[test]
    fn convolution_closed_form() {
        let (s, xi) = (0.5, 1.0);
        let v = gaussian_abs_convolution(s, xi, &cfg()).unwrap();
        let closed = s * erf(xi * s) + (-(xi * s) * (xi * s)).exp() / (xi * PI.sqrt());
        assert!((v - closed).abs() < 1e-12);
    }
}
