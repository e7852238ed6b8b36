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

use std::fmt;
use std::str::FromStr;

use crate::CoreError;

/// Relative charge-neutrality tolerance: `|Σq| ≤ tol · Σ|q|`.
pub const NEUTRALITY_TOLERANCE: f64 = 1e-12;

/// Which coordinate directions are periodic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Periodicity {
    /// Periodic in `z` only (wire).
    P1,
    /// Periodic in `x` and `y` (slab).
    P2,
    /// Periodic in all three directions.
    P3,
}

impl Periodicity {
    pub const ALL: [Periodicity; 3] = [Periodicity::P1, Periodicity::P2, Periodicity::P3];

    pub fn periodic_axes(self) -> [bool; 3] {
        match self {
            Periodicity::P1 => [false, false, true],
            Periodicity::P2 => [true, true, false],
            Periodicity::P3 => [true, true, true],
        }
    }

    pub fn dimension(self) -> usize {
        match self {
            Periodicity::P1 => 1,
            Periodicity::P2 => 2,
            Periodicity::P3 => 3,
        }
    }

    /// Smallest box length among the periodic directions.
    pub fn min_periodic_length(self, box_lengths: &[f64; 3]) -> f64 {
        let axes = self.periodic_axes();
        (0..3)
            .filter(|&i| axes[i])
            .map(|i| box_lengths[i])
            .fold(f64::INFINITY, f64::min)
    }
}

impl fmt::Display for Periodicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Periodicity::P1 => "1p",
            Periodicity::P2 => "2p",
            Periodicity::P3 => "3p",
        })
    }
}

impl FromStr for Periodicity {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "1p" | "p1" => Ok(Periodicity::P1),
            "2p" | "p2" => Ok(Periodicity::P2),
            "3p" | "p3" => Ok(Periodicity::P3),
            other => Err(CoreError::InvalidArgument(format!(
                "unknown periodicity '{other}', expected 1p, 2p or 3p"
            ))),
        }
    }
}

/// Point charges in an orthorhombic box `[−L1/2, L1/2] × [−L2/2, L2/2] × [−L3/2, L3/2]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ParticleSystem {
    positions: Vec<[f64; 3]>,
    charges: Vec<f64>,
    box_lengths: [f64; 3],
}

impl ParticleSystem {
    /// Checks shapes and finiteness. Neutrality is reported by
    /// [`validate_system`] and enforced by the evaluators.
    pub fn new(positions: Vec<[f64; 3]>, charges: Vec<f64>, box_lengths: [f64; 3]) -> Result<Self, CoreError> {
        if positions.is_empty() {
            return Err(CoreError::InvalidSystem("no particles".into()));
        }
        if positions.len() != charges.len() {
            return Err(CoreError::InvalidSystem(format!(
                "{} positions but {} charges",
                positions.len(),
                charges.len()
            )));
        }
        for (i, l) in box_lengths.iter().enumerate() {
            if !(*l > 0.0 && l.is_finite()) {
                return Err(CoreError::InvalidSystem(format!("box length L{} = {l} must be positive", i + 1)));
            }
        }
        for (n, (x, q)) in positions.iter().zip(&charges).enumerate() {
            if !x.iter().all(|c| c.is_finite()) || !q.is_finite() {
                return Err(CoreError::InvalidSystem(format!("particle {n} has a non-finite entry")));
            }
        }
        Ok(Self {
            positions,
            charges,
            box_lengths,
        })
    }

    pub fn positions(&self) -> &[[f64; 3]] {
        &self.positions
    }

    pub fn charges(&self) -> &[f64] {
        &self.charges
    }

    pub fn box_lengths(&self) -> [f64; 3] {
        self.box_lengths
    }

    pub fn len(&self) -> usize {
        self.charges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.charges.is_empty()
    }

    pub fn volume(&self) -> f64 {
        self.box_lengths.iter().product()
    }

    pub fn net_charge(&self) -> f64 {
        self.charges.iter().sum()
    }

    pub fn total_abs_charge(&self) -> f64 {
        self.charges.iter().map(|q| q.abs()).sum()
    }

    pub fn is_neutral(&self) -> bool {
        self.net_charge().abs() <= NEUTRALITY_TOLERANCE * self.total_abs_charge()
    }

    /// Error unless the system is neutral within [`NEUTRALITY_TOLERANCE`].
    pub fn require_neutral(&self) -> Result<(), CoreError> {
        if self.is_neutral() {
            Ok(())
        } else {
            Err(CoreError::NotNeutral {
                net: self.net_charge(),
                tolerance: NEUTRALITY_TOLERANCE * self.total_abs_charge(),
            })
        }
    }

    /// Copy with coordinates wrapped into the box along periodic directions.
    /// Free directions are left untouched.
    pub fn wrapped(&self, mode: Periodicity) -> Self {
        let axes = mode.periodic_axes();
        let l = self.box_lengths;
        let positions = self
            .positions
            .iter()
            .map(|x| {
                let mut y = *x;
                for i in 0..3 {
                    if axes[i] {
                        y[i] = wrap(y[i], l[i]);
                    }
                }
                y
            })
            .collect();
        Self {
            positions,
            charges: self.charges.clone(),
            box_lengths: self.box_lengths,
        }
    }

    /// Same particles with every charge negated.
    pub fn negated(&self) -> Self {
        Self {
            charges: self.charges.iter().map(|q| -q).collect(),
            ..self.clone()
        }
    }

    /// Same particles with every position shifted by `d` (no wrapping).
    pub fn translated(&self, d: [f64; 3]) -> Self {
        Self {
            positions: self
                .positions
                .iter()
                .map(|x| [x[0] + d[0], x[1] + d[1], x[2] + d[2]])
                .collect(),
            ..self.clone()
        }
    }
}

/// Maps `x` into `[−L/2, L/2)`.
pub(crate) fn wrap(x: f64, l: f64) -> f64 {
    let y = x - l * (x / l).round();
    if y >= 0.5 * l {
        y - l
    } else {
        y
    }
}

/// Diagnostics from [`validate_system`].
#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    /// True iff the system is charge neutral; the other findings are warnings.
    pub passed: bool,
    pub net_charge: f64,
    pub total_abs_charge: f64,
    /// `(particle, axis, coordinate)` for coordinates outside `[−L/2, L/2]`.
    pub out_of_box: Vec<(usize, usize, f64)>,
    /// Particle pairs closer than `1e-10 · min L` under the minimum-image
    /// convention of the periodic directions.
    pub coincident_pairs: Vec<(usize, usize)>,
}

impl ValidationReport {
    pub fn warnings(&self) -> Vec<String> {
        let mut w = Vec::new();
        for &(n, axis, c) in &self.out_of_box {
            w.push(format!("particle {n}: coordinate {} = {c} outside the box", ["x", "y", "z"][axis]));
        }
        for &(a, b) in &self.coincident_pairs {
            w.push(format!("coincident pair: particles {a} and {b}"));
        }
        w
    }
}

pub fn validate_system(system: &ParticleSystem, mode: Periodicity) -> ValidationReport {
    let l = system.box_lengths();
    let axes = mode.periodic_axes();
    let mut out_of_box = Vec::new();
    for (n, x) in system.positions().iter().enumerate() {
        for i in 0..3 {
            if x[i].abs() > 0.5 * l[i] {
                out_of_box.push((n, i, x[i]));
            }
        }
    }
    let eps = 1e-10 * l.iter().cloned().fold(f64::INFINITY, f64::min);
    let mut coincident_pairs = Vec::new();
    let pos = system.positions();
    for a in 0..pos.len() {
        for b in a + 1..pos.len() {
            let mut r2 = 0.0;
            for i in 0..3 {
                let mut d = pos[a][i] - pos[b][i];
                if axes[i] {
                    d = wrap(d, l[i]);
                }
                r2 += d * d;
            }
            if r2.sqrt() <= eps {
                coincident_pairs.push((a, b));
            }
        }
    }
    ValidationReport {
        passed: system.is_neutral(),
        net_charge: system.net_charge(),
        total_abs_charge: system.total_abs_charge(),
        out_of_box,
        coincident_pairs,
    }
}
