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

//! Zero-wave-number terms of the slab and wire sums.

use std::f64::consts::PI;

use pewald_core::{ParticleSystem, Periodicity};
use pewald_specfun::{erf, expint_e1, expint_ein, EULER_GAMMA};

use crate::real::check_xi;
use crate::targets::{resolve, EvalTargets, Target};
use crate::EwaldError;

/// Per-term bracket of the wire zero mode at a source.
///
/// Only `Derived` is correct. The other two flip the sign of `E₁` or of
/// `γ` and exist so that tests can show the consistency checks reject them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ZeroModeVariant {
    /// `−γ − ln(ρ²ξ²) − E₁(ρ²ξ²) = −Ein(ρ²ξ²)`
    #[default]
    Derived,
    /// `−γ − ln(ρ²ξ²) + E₁(ρ²ξ²)`
    FlippedE1,
    /// `+γ − ln(ρ²ξ²) − E₁(ρ²ξ²)`
    FlippedGamma,
}

/// `−(2√π/L1L2) Σ_n q_n [e^{−ξ²s²}/ξ + √π s erf(ξs)]`, `s = z − z_n`.
pub fn zero_mode_2p(system: &ParticleSystem, xi: f64, targets: &EvalTargets) -> Result<Vec<f64>, EwaldError> {
    check_xi(xi)?;
    system.require_neutral()?;
    Ok(resolve(system, Periodicity::P2, targets)?
        .iter()
        .map(|t| zero_2p_at(system, xi, t))
        .collect())
}

pub(crate) fn zero_2p_at(system: &ParticleSystem, xi: f64, target: &Target) -> f64 {
    let l = system.box_lengths();
    let sqrt_pi = PI.sqrt();
    let mut sum = 0.0;
    for (y, &q) in system.positions().iter().zip(system.charges()) {
        let s = target.x[2] - y[2];
        sum += q * ((-(xi * s) * (xi * s)).exp() / xi + sqrt_pi * s * erf(xi * s));
    }
    -2.0 * sqrt_pi / (l[0] * l[1]) * sum
}

/// Wire zero mode.
///
/// At sources this is `(1/L3) Σ_{n≠m} q_n [−γ − ln(ρ_n²ξ²) − E₁(ρ_n²ξ²)]`;
/// at off-particle points `−(1/L3) Σ_n q_n [ln ρ_n² + E₁(ρ_n²ξ²)]`, which
/// fails with [`EwaldError::OnAxis`] when some `ρ_n = 0`; use
/// [`zero_mode_1p_source_form`] there.
pub fn zero_mode_1p(system: &ParticleSystem, xi: f64, targets: &EvalTargets) -> Result<Vec<f64>, EwaldError> {
    check_xi(xi)?;
    system.require_neutral()?;
    resolve(system, Periodicity::P1, targets)?
        .iter()
        .enumerate()
        .map(|(i, t)| match t.source {
            Some(_) => zero_1p_terms(system, xi, t, ZeroModeVariant::Derived),
            None => zero_1p_log_form(system, xi, i, t),
        })
        .collect()
}

/// The per-term form at any targets. Equal to the log form by neutrality
/// and finite when a target lies on the axis of a source.
pub fn zero_mode_1p_source_form(
    system: &ParticleSystem,
    xi: f64,
    targets: &EvalTargets,
) -> Result<Vec<f64>, EwaldError> {
    check_xi(xi)?;
    system.require_neutral()?;
    resolve(system, Periodicity::P1, targets)?
        .iter()
        .map(|t| zero_1p_terms(system, xi, t, ZeroModeVariant::Derived))
        .collect()
}

fn rho2(target: &Target, y: &[f64; 3]) -> f64 {
    let dx = target.x[0] - y[0];
    let dy = target.x[1] - y[1];
    dx * dx + dy * dy
}

pub(crate) fn zero_1p_log_form(
    system: &ParticleSystem,
    xi: f64,
    index: usize,
    target: &Target,
) -> Result<f64, EwaldError> {
    let l3 = system.box_lengths()[2];
    let mut sum = 0.0;
    for (n, (y, &q)) in system.positions().iter().zip(system.charges()).enumerate() {
        let r2 = rho2(target, y);
        if r2 == 0.0 {
            return Err(EwaldError::OnAxis { target: index, particle: n });
        }
        sum += q * (r2.ln() + expint_e1(r2 * xi * xi)?);
    }
    Ok(-sum / l3)
}

pub(crate) fn zero_1p_terms(
    system: &ParticleSystem,
    xi: f64,
    target: &Target,
    variant: ZeroModeVariant,
) -> Result<f64, EwaldError> {
    let l3 = system.box_lengths()[2];
    let mut sum = 0.0;
    for (n, (y, &q)) in system.positions().iter().zip(system.charges()).enumerate() {
        if target.source == Some(n) {
            continue;
        }
        let x = rho2(target, y) * xi * xi;
        let bracket = match variant {
            ZeroModeVariant::Derived => -expint_ein(x)?,
            ZeroModeVariant::FlippedE1 => -EULER_GAMMA - x.ln() + expint_e1(x)?,
            ZeroModeVariant::FlippedGamma => 2.0 * EULER_GAMMA - expint_ein(x)?,
        };
        sum += q * bracket;
    }
    Ok(sum / l3)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bracket_vanishes_on_axis() {
        // −γ − ln(x) − E₁(x) at ρξ = 1e-3
        let x: f64 = 1e-6;
        let b = -EULER_GAMMA - x.ln() - expint_e1(x).unwrap();
        assert!(b.abs() <= 5e-6);
        assert!((b + expint_ein(x).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn two_charges_at_known_distances() {
        // target at the origin, +1 at ρ = 1 and −1 at ρ = 2
        let s = ParticleSystem::new(vec![[1.0, 0.0, 0.3], [0.0, -2.0, -0.1]], vec![1.0, -1.0], [5.0, 5.0, 2.0]).unwrap();
        let phi = zero_mode_1p(&s, 1.0, &EvalTargets::Points(vec![[0.0; 3]])).unwrap();
        let expect = -((0.0 + expint_e1(1.0).unwrap()) - (4.0_f64.ln() + expint_e1(4.0).unwrap())) / 2.0;
        assert!((phi[0] - expect).abs() < 1e-15);
        let alt = zero_mode_1p_source_form(&s, 1.0, &EvalTargets::Points(vec![[0.0; 3]])).unwrap();
        assert!((phi[0] - alt[0]).abs() < 1e-14);
    }

    #[test]
    fn on_axis_point_needs_source_form() {
        let s = ParticleSystem::new(vec![[0.0, 0.0, 0.3], [0.5, 0.0, -0.1]], vec![1.0, -1.0], [2.0; 3]).unwrap();
        let pts = EvalTargets::Points(vec![[0.0, 0.0, -0.5]]);
        assert!(matches!(zero_mode_1p(&s, 1.0, &pts), Err(EwaldError::OnAxis { .. })));
        assert!(zero_mode_1p_source_form(&s, 1.0, &pts).unwrap()[0].is_finite());
    }

    #[test]
    fn coplanar_slab_is_zero() {
        let s = ParticleSystem::new(vec![[0.1, 0.2, 0.25], [-0.3, 0.1, 0.25]], vec![1.0, -1.0], [1.0; 3]).unwrap();
        let phi = zero_mode_2p(&s, 2.0, &EvalTargets::Points(vec![[0.0, 0.0, 0.25]])).unwrap();
        assert!(phi[0].abs() < 1e-15);
    }
}
