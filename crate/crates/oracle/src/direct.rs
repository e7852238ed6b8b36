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

//! Bare Coulomb image sums, accumulated shell by shell.

use pewald_core::{shell_indices, EvalTargets, ParticleSystem, Periodicity};

use crate::OracleError;

/// How image cells are grouped into shells.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShellOrder {
    /// Shell `s` holds the images whose integer index has max-norm `s`.
    Cubic,
    /// Shell `s` holds the images with `(s − 1) L_min < |p| ≤ s L_min`.
    Spherical,
}

/// A truncated sum with the size of its last increment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleReport {
    pub value: f64,
    /// Difference between the last two partial sums (or extrapolants).
    pub truncation_estimate: f64,
    pub shells_used: u32,
}

fn shells(box_lengths: [f64; 3], mode: Periodicity, layers: u32, order: ShellOrder) -> Vec<Vec<[f64; 3]>> {
    let shift = |n: [i64; 3]| [0, 1, 2].map(|i| n[i] as f64 * box_lengths[i]);
    match order {
        ShellOrder::Cubic => (0..=layers)
            .map(|s| shell_indices(mode, s).into_iter().map(shift).collect())
            .collect(),
        ShellOrder::Spherical => {
            let lmin = mode.min_periodic_length(&box_lengths);
            let axes = mode.periodic_axes();
            let radius = layers as f64 * lmin;
            let r = [0, 1, 2].map(|i| if axes[i] { (radius / box_lengths[i]).floor() as i64 } else { 0 });
            let mut out = vec![Vec::new(); layers as usize + 1];
            for i in -r[0]..=r[0] {
                for j in -r[1]..=r[1] {
                    for k in -r[2]..=r[2] {
                        let p = shift([i, j, k]);
                        let d = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
                        let s = (d / lmin - 1e-12).ceil().max(0.0) as usize;
                        if s <= layers as usize {
                            out[s].push(p);
                        }
                    }
                }
            }
            out
        }
    }
}

/// Partial sums of `Σ' q_n / |x − x_n − p|` after each shell `0..=layers`,
/// one vector per target. The self pair `(n = m, p = 0)` is omitted at
/// sources.
pub fn shell_partial_sums(
    system: &ParticleSystem,
    mode: Periodicity,
    layers: u32,
    targets: &EvalTargets,
    order: ShellOrder,
) -> Result<Vec<Vec<f64>>, OracleError> {
    system.require_neutral()?;
    let shells = shells(system.box_lengths(), mode, layers, order);
    let targets: Vec<([f64; 3], Option<usize>)> = match targets {
        EvalTargets::Sources => system.positions().iter().enumerate().map(|(m, &x)| (x, Some(m))).collect(),
        EvalTargets::Points(p) => p.iter().map(|&x| (x, None)).collect(),
    };
    let mut out = Vec::with_capacity(targets.len());
    for (t, &(x, source)) in targets.iter().enumerate() {
        let mut acc = 0.0;
        let mut partial = Vec::with_capacity(shells.len());
        for shell in &shells {
            let mut sum = 0.0;
            for p in shell {
                let is_origin = p == &[0.0; 3];
                for (n, (y, &q)) in system.positions().iter().zip(system.charges()).enumerate() {
                    if is_origin && source == Some(n) {
                        continue;
                    }
                    let d = [x[0] - y[0] - p[0], x[1] - y[1] - p[1], x[2] - y[2] - p[2]];
                    let r = (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]).sqrt();
                    if r == 0.0 {
                        return Err(OracleError::Overlap {
                            target: t,
                            particle: n,
                            shift: *p,
                        });
                    }
                    sum += q / r;
                }
            }
            acc += sum;
            partial.push(acc);
        }
        out.push(partial);
    }
    Ok(out)
}

fn report(partial: &[f64]) -> OracleReport {
    let n = partial.len();
    let value = partial[n - 1];
    let truncation_estimate = if n > 1 { (value - partial[n - 2]).abs() } else { 0.0 };
    OracleReport {
        value,
        truncation_estimate,
        shells_used: n as u32 - 1,
    }
}

/// Direct image sum in the default order: spherical for 3P, cubic
/// otherwise.
///
/// The 2P and 1P sums converge for neutral systems, but slowly: the
/// neglected tail after `M` shells decays like `1/M` (2P) and `1/M²` (1P).
/// The 3P sum is only conditionally convergent and its limit depends on the
/// order.
pub fn direct_sum(
    system: &ParticleSystem,
    mode: Periodicity,
    layers: u32,
    targets: &EvalTargets,
) -> Result<Vec<OracleReport>, OracleError> {
    let order = if mode == Periodicity::P3 {
        ShellOrder::Spherical
    } else {
        ShellOrder::Cubic
    };
    direct_sum_ordered(system, mode, layers, targets, order)
}

pub fn direct_sum_ordered(
    system: &ParticleSystem,
    mode: Periodicity,
    layers: u32,
    targets: &EvalTargets,
    order: ShellOrder,
) -> Result<Vec<OracleReport>, OracleError> {
    Ok(shell_partial_sums(system, mode, layers, targets, order)?
        .iter()
        .map(|p| report(p))
        .collect())
}

/// Richardson extrapolation of the cubic-shell partial sums in `h = 1/M`,
/// through the sums after `M/4`, `M/2` and `M` shells. Removes the `1/M`
/// and `1/M²` tail terms; the estimate compares against the two-point
/// extrapolant. Needs `layers ≥ 4`.
pub fn direct_sum_extrapolated(
    system: &ParticleSystem,
    mode: Periodicity,
    layers: u32,
    targets: &EvalTargets,
) -> Result<Vec<OracleReport>, OracleError> {
    if layers < 4 {
        return Err(OracleError::Rejected(format!("extrapolation needs at least 4 shells, got {layers}")));
    }
    let m = [layers / 4, layers / 2, layers].map(|m| m as usize);
    let h = m.map(|m| 1.0 / m as f64);
    Ok(shell_partial_sums(system, mode, layers, targets, ShellOrder::Cubic)?
        .iter()
        .map(|p| {
            let s = m.map(|m| p[m]);
            let mut quad = 0.0;
            for i in 0..3 {
                let mut w = 1.0;
                for j in 0..3 {
                    if j != i {
                        w *= h[j] / (h[j] - h[i]);
                    }
                }
                quad += w * s[i];
            }
            let lin = (h[1] * s[2] - h[2] * s[1]) / (h[1] - h[2]);
            OracleReport {
                value: quad,
                truncation_estimate: (quad - lin).abs(),
                shells_used: layers,
            }
        })
        .collect())
}
