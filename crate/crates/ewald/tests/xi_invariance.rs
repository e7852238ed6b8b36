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

mod common;

use common::{max_abs_diff, random_neutral};
use pewald::{ewald_potential, EvalTargets, EwaldOptions, ZeroModeVariant};
use pewald_core::{default_xi, EwaldParams, Periodicity};

fn totals(mode: Periodicity, sys: &pewald_core::ParticleSystem, xi: f64, t: &EvalTargets, opts: &EwaldOptions) -> Vec<f64> {
    let p = EwaldParams::with_defaults(xi, sys.box_lengths(), mode).unwrap();
    ewald_potential(sys, mode, &p, t, opts).unwrap().total
}

#[test]
fn totals_do_not_depend_on_xi() {
    let boxes = [[1.0, 1.0, 1.0], [1.0, 1.3, 0.8]];
    for mode in Periodicity::ALL {
        for (seed, b) in boxes.iter().enumerate() {
            let sys = random_neutral(8, *b, 11 + seed as u64);
            let xi0 = default_xi(*b, mode);
            let opts = EwaldOptions::default();
            let lo = totals(mode, &sys, 0.8 * xi0, &EvalTargets::Sources, &opts);
            let hi = totals(mode, &sys, 1.25 * xi0, &EvalTargets::Sources, &opts);
            let d = max_abs_diff(&lo, &hi);
            assert!(d <= 1e-8, "{mode}: {d:e}");
        }
    }
}

#[test]
fn components_do_depend_on_xi() {
    let b = [1.0; 3];
    let sys = random_neutral(8, b, 3);
    for mode in Periodicity::ALL {
        let xi0 = default_xi(b, mode);
        let get = |xi: f64| {
            let p = EwaldParams::with_defaults(xi, b, mode).unwrap();
            ewald_potential(&sys, mode, &p, &EvalTargets::Sources, &EwaldOptions::default()).unwrap()
        };
        let (a, c) = (get(0.7 * xi0), get(1.4 * xi0));
        let d = (a.components[0].real - c.components[0].real).abs();
        assert!(d > 1e-3, "{mode}: real part barely moved ({d:e})");
    }
}

#[test]
fn off_particle_points_are_xi_invariant() {
    let b = [1.0, 1.0, 1.0];
    let pts = EvalTargets::Points(vec![[0.31, -0.22, 0.05], [-0.4, 0.45, -0.3], [0.0, 0.0, 0.45]]);
    for mode in Periodicity::ALL {
        let sys = random_neutral(6, b, 5);
        let xi0 = default_xi(b, mode);
        let opts = EwaldOptions::default();
        let d = max_abs_diff(&totals(mode, &sys, 0.7 * xi0, &pts, &opts), &totals(mode, &sys, 1.4 * xi0, &pts, &opts));
        assert!(d <= 1e-8, "{mode}: {d:e}");
    }
}

#[test]
fn flipped_e1_breaks_xi_invariance() {
    let b = [1.0; 3];
    let sys = random_neutral(4, b, 21);
    let xi0 = default_xi(b, Periodicity::P1);
    let opts = EwaldOptions {
        zero_mode_variant: ZeroModeVariant::FlippedE1,
        ..Default::default()
    };
    let d = max_abs_diff(
        &totals(Periodicity::P1, &sys, 0.7 * xi0, &EvalTargets::Sources, &opts),
        &totals(Periodicity::P1, &sys, 1.4 * xi0, &EvalTargets::Sources, &opts),
    );
    assert!(d >= 1e-3, "{d:e}");
}

#[test]
fn flipped_gamma_is_a_constant_offset_at_sources() {
    // ξ-invariance cannot see this variant: it shifts source m by 2γ(−q_m)/L3
    let b = [1.0; 3];
    let sys = random_neutral(4, b, 21);
    let xi0 = default_xi(b, Periodicity::P1);
    let flipped = EwaldOptions {
        zero_mode_variant: ZeroModeVariant::FlippedGamma,
        ..Default::default()
    };
    let good = totals(Periodicity::P1, &sys, xi0, &EvalTargets::Sources, &EwaldOptions::default());
    let bad = totals(Periodicity::P1, &sys, xi0, &EvalTargets::Sources, &flipped);
    for ((g, f), q) in good.iter().zip(&bad).zip(sys.charges()) {
        let expect = -2.0 * pewald_specfun::EULER_GAMMA * q / b[2];
        assert!((f - g - expect).abs() < 1e-12);
    }
}
