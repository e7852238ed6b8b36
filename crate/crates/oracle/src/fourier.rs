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

//! Fourier sums of the slab and wire potentials without an Ewald split.

use std::f64::consts::PI;

use pewald_core::{build_kgrid, EvalTargets, ParticleSystem, Periodicity};
use pewald_specfun::bessel_k0;

use crate::OracleError;

fn points<'a>(targets: &'a EvalTargets, what: &str) -> Result<&'a [[f64; 3]], OracleError> {
    match targets {
        EvalTargets::Points(p) => Ok(p),
        EvalTargets::Sources => Err(OracleError::Rejected(format!(
            "{what} is singular at the sources; pass off-particle points"
        ))),
    }
}

/// `(2π/L1L2) Σ_{k̄≠0} Σ_n q_n e^{−k̄|z − z_n|} cos(k̄·(r − r_n))/k̄ − (2π/L1L2) Σ_n q_n |z − z_n|`.
///
/// The modes decay like `e^{−k̄|z − z_n|}`, so targets in the plane of a
/// source are rejected.
pub fn pure_fourier_2p(system: &ParticleSystem, k_max: f64, targets: &EvalTargets) -> Result<Vec<f64>, OracleError> {
    system.require_neutral()?;
    let pts = points(targets, "the slab Fourier sum")?;
    let l = system.box_lengths();
    let area = l[0] * l[1];
    let grid = build_kgrid(l, Periodicity::P2, k_max)?;
    let eps = 1e-8 * l[0].min(l[1]);
    let mut out = Vec::with_capacity(pts.len());
    for (t, x) in pts.iter().enumerate() {
        let mut sum = 0.0;
        let mut zero = 0.0;
        for (n, (y, &q)) in system.positions().iter().zip(system.charges()).enumerate() {
            let s = (x[2] - y[2]).abs();
            if s < eps {
                return Err(OracleError::Rejected(format!("target {t} is in the plane of particle {n}")));
            }
            let d = [x[0] - y[0], x[1] - y[1]];
            for k in &grid.vectors {
                let kn = (k[0] * k[0] + k[1] * k[1]).sqrt();
                sum += q * (-kn * s).exp() * (k[0] * d[0] + k[1] * d[1]).cos() / kn;
            }
            zero += q * s;
        }
        out.push(2.0 * PI / area * (sum - zero));
    }
    Ok(out)
}

/// `(2/L3) Σ_{k₃≠0} Σ_n q_n cos(k₃(z − z_n)) K₀(|k₃|ρ_n) − (1/L3) Σ_n q_n ln ρ_n²`.
///
/// Targets on the axis of a source are rejected.
pub fn pure_fourier_1p(system: &ParticleSystem, k_max: f64, targets: &EvalTargets) -> Result<Vec<f64>, OracleError> {
    system.require_neutral()?;
    let pts = points(targets, "the wire Fourier sum")?;
    let l = system.box_lengths();
    let grid = build_kgrid(l, Periodicity::P1, k_max)?;
    let eps = 1e-8 * l[2];
    let mut out = Vec::with_capacity(pts.len());
    for (t, x) in pts.iter().enumerate() {
        let mut sum = 0.0;
        let mut log = 0.0;
        for (n, (y, &q)) in system.positions().iter().zip(system.charges()).enumerate() {
            let rho2 = (x[0] - y[0]).powi(2) + (x[1] - y[1]).powi(2);
            let rho = rho2.sqrt();
            if rho < eps {
                return Err(OracleError::Rejected(format!("target {t} is on the axis of particle {n}")));
            }
            let s = x[2] - y[2];
            for k in &grid.vectors {
                let kz = k[2].abs();
                // K₀ underflows long before the cutoff for distant targets
                if kz * rho < 700.0 {
                    sum += q * (k[2] * s).cos() * bessel_k0(kz * rho)?;
                }
            }
            log += q * rho2.ln();
        }
        out.push((2.0 * sum - log) / l[2]);
    }
    Ok(out)
}
