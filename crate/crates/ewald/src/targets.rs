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

pub use pewald_core::EvalTargets;
use pewald_core::{ParticleSystem, Periodicity};

use crate::EwaldError;

/// Off-particle targets closer than `COINCIDENCE_FACTOR · min L` to a
/// source are rejected.
pub const COINCIDENCE_FACTOR: f64 = 1e-10;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Target {
    pub x: [f64; 3],
    /// Index of the source this target sits on, if any.
    pub source: Option<usize>,
}

pub(crate) fn resolve(
    system: &ParticleSystem,
    mode: Periodicity,
    targets: &EvalTargets,
) -> Result<Vec<Target>, EwaldError> {
    match targets {
        EvalTargets::Sources => Ok(system
            .positions()
            .iter()
            .enumerate()
            .map(|(m, &x)| Target { x, source: Some(m) })
            .collect()),
        EvalTargets::Points(points) => {
            let l = system.box_lengths();
            let axes = mode.periodic_axes();
            let eps = COINCIDENCE_FACTOR * l.iter().cloned().fold(f64::INFINITY, f64::min);
            let mut out = Vec::with_capacity(points.len());
            for (t, x) in points.iter().enumerate() {
                if !x.iter().all(|c| c.is_finite()) {
                    return Err(pewald_core::CoreError::InvalidArgument(format!(
                        "target {t} has a non-finite coordinate"
                    ))
                    .into());
                }
                for (n, y) in system.positions().iter().enumerate() {
                    let d = min_image(x, y, &l, &axes);
                    let r = (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]).sqrt();
                    if r < eps {
                        return Err(EwaldError::CoincidentTarget {
                            target: t,
                            particle: n,
                            distance: r,
                        });
                    }
                }
                out.push(Target { x: *x, source: None });
            }
            Ok(out)
        }
    }
}

pub(crate) fn min_image(x: &[f64; 3], y: &[f64; 3], l: &[f64; 3], axes: &[bool; 3]) -> [f64; 3] {
    let mut d = [x[0] - y[0], x[1] - y[1], x[2] - y[2]];
    for i in 0..3 {
        if axes[i] {
            d[i] -= l[i] * (d[i] / l[i]).round();
        }
    }
    d
}
