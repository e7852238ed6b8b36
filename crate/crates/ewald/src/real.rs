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

use pewald_core::{build_image_vectors, CoreError, ImageVector, ParticleSystem, Periodicity};
use pewald_specfun::erfc;

use crate::targets::{resolve, EvalTargets, Target};
use crate::EwaldError;

const FRAC_2_SQRT_PI: f64 = std::f64::consts::FRAC_2_SQRT_PI;

/// Self correction `−(2ξ/√π) q`.
pub fn self_term(q: f64, xi: f64) -> f64 {
    -FRAC_2_SQRT_PI * xi * q
}

pub(crate) fn check_xi(xi: f64) -> Result<(), EwaldError> {
    if xi > 0.0 && xi.is_finite() {
        Ok(())
    } else {
        Err(CoreError::InvalidParams(format!("xi must be positive, got {xi}")).into())
    }
}

/// `Σ_n Σ_p q_n erfc(ξ|x − x_n + p|)/|x − x_n + p|` over the image shells
/// `0..=layers`, dropping pairs beyond `r_cut` and the self pair at sources.
pub fn real_space_sum(
    system: &ParticleSystem,
    mode: Periodicity,
    xi: f64,
    r_cut: f64,
    layers: u32,
    targets: &EvalTargets,
) -> Result<Vec<f64>, EwaldError> {
    check_xi(xi)?;
    system.require_neutral()?;
    let images = build_image_vectors(system.box_lengths(), mode, layers);
    resolve(system, mode, targets)?
        .iter()
        .enumerate()
        .map(|(t, tg)| real_space_at(system, &images, xi, r_cut, t, tg))
        .collect()
}

pub(crate) fn real_space_at(
    system: &ParticleSystem,
    images: &[ImageVector],
    xi: f64,
    r_cut: f64,
    t: usize,
    target: &Target,
) -> Result<f64, EwaldError> {
    let x = target.x;
    let mut sum = 0.0;
    for img in images {
        let p = img.shift;
        for (n, (y, &q)) in system.positions().iter().zip(system.charges()).enumerate() {
            if img.shell == 0 && target.source == Some(n) {
                continue;
            }
            let d = [x[0] - y[0] + p[0], x[1] - y[1] + p[1], x[2] - y[2] + p[2]];
            let r = (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]).sqrt();
            if r > r_cut {
                continue;
            }
            if r == 0.0 {
                return Err(EwaldError::OverlappingImage {
                    target: t,
                    particle: n,
                    shift: p,
                });
            }
            sum += q * erfc(xi * r) / r;
        }
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn self_term_values() {
        assert_eq!(self_term(0.0, 3.0), 0.0);
        let xi = std::f64::consts::PI.sqrt() / 2.0;
        assert!((self_term(1.0, xi) + 1.0).abs() < 1e-15);
    }

    #[test]
    fn single_surviving_pair() {
        let a = [0.1, 0.2, -0.1];
        let b = [-0.3, 0.0, 0.2];
        let s = ParticleSystem::new(vec![a, b], vec![1.0, -1.0], [1.0; 3]).unwrap();
        let xi = 1.3;
        let phi = real_space_sum(&s, Periodicity::P3, xi, f64::INFINITY, 0, &EvalTargets::Sources).unwrap();
        let d = ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2) + (a[2] - b[2]).powi(2)).sqrt();
        assert!((phi[0] + erfc(xi * d) / d).abs() < 1e-15);
    }

    #[test]
    fn overlapping_images_are_errors() {
        // the two particles are one box length apart along a periodic axis
        let s = ParticleSystem::new(vec![[0.5, 0.0, 0.0], [-0.5, 0.0, 0.0]], vec![1.0, -1.0], [1.0; 3]).unwrap();
        let err = real_space_sum(&s, Periodicity::P3, 1.0, 10.0, 1, &EvalTargets::Sources).unwrap_err();
        assert!(matches!(err, EwaldError::OverlappingImage { .. }));
    }
}
