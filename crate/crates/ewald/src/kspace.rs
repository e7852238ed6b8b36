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

//! Reciprocal-space sums. Each returns the real part; the `_complex`
//! variants also return the imaginary residue, which vanishes for a
//! negation-closed grid up to round-off.

use std::collections::HashMap;
use std::f64::consts::PI;

use pewald_core::{KGrid, ParticleSystem, Periodicity};
use pewald_specfun::{g_screened, incomplete_bessel_k0, QuadratureConfig};

use crate::real::check_xi;
use crate::targets::{resolve, EvalTargets, Target};
use crate::EwaldError;

/// Distinct wave numbers of a grid and, per vector, the index of its norm.
struct NormGroups {
    norms: Vec<f64>,
    group: Vec<usize>,
}

impl NormGroups {
    fn new(grid: &KGrid) -> Self {
        let mut seen: HashMap<u64, usize> = HashMap::new();
        let mut norms = Vec::new();
        let group = grid
            .norms()
            .map(|k| {
                *seen.entry(k.to_bits()).or_insert_with(|| {
                    norms.push(k);
                    norms.len() - 1
                })
            })
            .collect();
        Self { norms, group }
    }
}

fn dot(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub(crate) struct KSpace3<'a> {
    grid: &'a KGrid,
    coef: Vec<f64>,
    sf: Vec<(f64, f64)>,
}

impl<'a> KSpace3<'a> {
    pub fn new(system: &ParticleSystem, xi: f64, grid: &'a KGrid) -> Result<Self, EwaldError> {
        grid.require_mode(Periodicity::P3)?;
        let pref = 4.0 * PI / system.volume();
        let coef = grid
            .vectors
            .iter()
            .map(|k| {
                let k2 = dot(k, k);
                pref * (-k2 / (4.0 * xi * xi)).exp() / k2
            })
            .collect();
        // structure factor S(k) = Σ q_n e^{ik·x_n}
        let sf = grid
            .vectors
            .iter()
            .map(|k| {
                let mut re = 0.0;
                let mut im = 0.0;
                for (x, &q) in system.positions().iter().zip(system.charges()) {
                    let (s, c) = dot(k, x).sin_cos();
                    re += q * c;
                    im += q * s;
                }
                (re, im)
            })
            .collect();
        Ok(Self { grid, coef, sf })
    }

    pub fn at(&self, target: &Target) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for ((k, &c), &(sr, si)) in self.grid.vectors.iter().zip(&self.coef).zip(&self.sf) {
            let (s, co) = dot(k, &target.x).sin_cos();
            re += c * (co * sr + s * si);
            im += c * (co * si - s * sr);
        }
        (re, im)
    }
}

pub(crate) struct KSpace2<'a> {
    system: &'a ParticleSystem,
    grid: &'a KGrid,
    groups: NormGroups,
    xi: f64,
}

impl<'a> KSpace2<'a> {
    pub fn new(system: &'a ParticleSystem, xi: f64, grid: &'a KGrid) -> Result<Self, EwaldError> {
        grid.require_mode(Periodicity::P2)?;
        Ok(Self {
            system,
            grid,
            groups: NormGroups::new(grid),
            xi,
        })
    }

    pub fn at(&self, target: &Target) -> Result<(f64, f64), EwaldError> {
        let l = self.system.box_lengths();
        let pref = PI / (l[0] * l[1]);
        let mut kernel = vec![0.0; self.groups.norms.len()];
        let mut re = 0.0;
        let mut im = 0.0;
        for (y, &q) in self.system.positions().iter().zip(self.system.charges()) {
            let d = [target.x[0] - y[0], target.x[1] - y[1], 0.0];
            let s = target.x[2] - y[2];
            for (kern, &k) in kernel.iter_mut().zip(&self.groups.norms) {
                *kern = g_screened(k, s, self.xi)? / k;
            }
            let mut pr = 0.0;
            let mut pi = 0.0;
            for (k, &j) in self.grid.vectors.iter().zip(&self.groups.group) {
                let (sn, cs) = dot(k, &d).sin_cos();
                pr += kernel[j] * cs;
                pi -= kernel[j] * sn;
            }
            re += q * pr;
            im += q * pi;
        }
        Ok((pref * re, pref * im))
    }
}

pub(crate) struct KSpace1<'a> {
    system: &'a ParticleSystem,
    grid: &'a KGrid,
    groups: NormGroups,
    xi: f64,
    cfg: QuadratureConfig,
}

impl<'a> KSpace1<'a> {
    pub fn new(
        system: &'a ParticleSystem,
        xi: f64,
        grid: &'a KGrid,
        cfg: &QuadratureConfig,
    ) -> Result<Self, EwaldError> {
        grid.require_mode(Periodicity::P1)?;
        cfg.validate()?;
        Ok(Self {
            system,
            grid,
            groups: NormGroups::new(grid),
            xi,
            cfg: *cfg,
        })
    }

    pub fn at(&self, target: &Target) -> Result<(f64, f64), EwaldError> {
        let l3 = self.system.box_lengths()[2];
        let xi2 = self.xi * self.xi;
        let mut kernel = vec![0.0; self.groups.norms.len()];
        let mut re = 0.0;
        let mut im = 0.0;
        for (y, &q) in self.system.positions().iter().zip(self.system.charges()) {
            let dx = target.x[0] - y[0];
            let dy = target.x[1] - y[1];
            let v = (dx * dx + dy * dy) * xi2;
            let s = target.x[2] - y[2];
            // K₀(u, v) depends on |k₃| only, so ±k₃ share one quadrature
            for (kern, &k) in kernel.iter_mut().zip(&self.groups.norms) {
                *kern = incomplete_bessel_k0(k * k / (4.0 * xi2), v, &self.cfg)?;
            }
            let mut pr = 0.0;
            let mut pi = 0.0;
            for (k, &j) in self.grid.vectors.iter().zip(&self.groups.group) {
                let (sn, cs) = (k[2] * s).sin_cos();
                pr += kernel[j] * cs;
                pi -= kernel[j] * sn;
            }
            re += q * pr;
            im += q * pi;
        }
        Ok((re / l3, im / l3))
    }
}

fn prepare(system: &ParticleSystem, mode: Periodicity, xi: f64, targets: &EvalTargets) -> Result<Vec<Target>, EwaldError> {
    check_xi(xi)?;
    system.require_neutral()?;
    resolve(system, mode, targets)
}

/// `(4π/V) Σ_{k≠0} e^{−k²/4ξ²}/k² · Σ_n q_n e^{−ik·(x − x_n)}` as `(re, im)`.
pub fn kspace_sum_3p_complex(
    system: &ParticleSystem,
    xi: f64,
    grid: &KGrid,
    targets: &EvalTargets,
) -> Result<Vec<(f64, f64)>, EwaldError> {
    let t = prepare(system, Periodicity::P3, xi, targets)?;
    let ks = KSpace3::new(system, xi, grid)?;
    Ok(t.iter().map(|tg| ks.at(tg)).collect())
}

pub fn kspace_sum_3p(
    system: &ParticleSystem,
    xi: f64,
    grid: &KGrid,
    targets: &EvalTargets,
) -> Result<Vec<f64>, EwaldError> {
    Ok(kspace_sum_3p_complex(system, xi, grid, targets)?.into_iter().map(|c| c.0).collect())
}

/// `(π/L1L2) Σ_n q_n Σ_{k̄≠0} e^{−ik̄·(r − r_n)} g(k̄, z − z_n, ξ)/k̄` as `(re, im)`.
pub fn kspace_sum_2p_complex(
    system: &ParticleSystem,
    xi: f64,
    grid: &KGrid,
    targets: &EvalTargets,
) -> Result<Vec<(f64, f64)>, EwaldError> {
    let t = prepare(system, Periodicity::P2, xi, targets)?;
    let ks = KSpace2::new(system, xi, grid)?;
    t.iter().map(|tg| ks.at(tg)).collect()
}

pub fn kspace_sum_2p(
    system: &ParticleSystem,
    xi: f64,
    grid: &KGrid,
    targets: &EvalTargets,
) -> Result<Vec<f64>, EwaldError> {
    Ok(kspace_sum_2p_complex(system, xi, grid, targets)?.into_iter().map(|c| c.0).collect())
}

/// `(1/L3) Σ_{k₃≠0} Σ_n q_n e^{−ik₃(z − z_n)} K₀(k₃²/4ξ², ρ_n²ξ²)` as `(re, im)`.
pub fn kspace_sum_1p_complex(
    system: &ParticleSystem,
    xi: f64,
    grid: &KGrid,
    targets: &EvalTargets,
    cfg: &QuadratureConfig,
) -> Result<Vec<(f64, f64)>, EwaldError> {
    let t = prepare(system, Periodicity::P1, xi, targets)?;
    let ks = KSpace1::new(system, xi, grid, cfg)?;
    t.iter().map(|tg| ks.at(tg)).collect()
}

pub fn kspace_sum_1p(
    system: &ParticleSystem,
    xi: f64,
    grid: &KGrid,
    targets: &EvalTargets,
    cfg: &QuadratureConfig,
) -> Result<Vec<f64>, EwaldError> {
    Ok(kspace_sum_1p_complex(system, xi, grid, targets, cfg)?
        .into_iter()
        .map(|c| c.0)
        .collect())
}
