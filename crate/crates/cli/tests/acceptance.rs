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

//! Acceptance suite. Prints one PASS/FAIL line per check and exits
//! nonzero unless the failures are exactly the known-unattainable set.

use std::f64::consts::PI;
use std::path::Path;
use std::process::Command;
use std::time::Instant;

use pewald::{ewald_potential, EvalTargets, EwaldOptions, ZeroModeVariant};
use pewald_core::{default_xi, EwaldParams, ParticleSystem, Periodicity};
use pewald_oracle::*;
use pewald_specfun::{
    bessel_k0, erfc, expint_e1, g_screened, incomplete_bessel_k0, zero_mode_limit_a, QuadratureConfig, EULER_GAMMA,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Checks that fail because the stated bound does not hold for the exact
/// functions. See the README.
const EXPECTED_FAILURES: [&str; 3] = ["2b", "10d", "10e"];

struct Report {
    failed: Vec<String>,
}

impl Report {
    fn check(&mut self, id: &str, what: &str, measured: f64, bound: f64, pass: bool) {
        let tag = if pass { "PASS" } else { "FAIL" };
        println!("{tag} {id:<4} {what}: {measured:.3e} (bound {bound:.1e})");
        if !pass {
            self.failed.push(id.to_string());
        }
    }

    fn at_most(&mut self, id: &str, what: &str, measured: f64, bound: f64) {
        self.check(id, what, measured, bound, measured <= bound);
    }

    fn at_least(&mut self, id: &str, what: &str, measured: f64, bound: f64) {
        self.check(id, what, measured, bound, measured >= bound);
    }
}

fn random_neutral(n: usize, b: [f64; 3], rng: &mut ChaCha8Rng) -> ParticleSystem {
    let positions: Vec<[f64; 3]> = (0..n).map(|_| b.map(|l| l * (rng.gen::<f64>() - 0.5))).collect();
    let mut charges: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let mean = charges.iter().sum::<f64>() / n as f64;
    charges.iter_mut().for_each(|q| *q -= mean);
    ParticleSystem::new(positions, charges, b).unwrap()
}

fn dipole(b: [f64; 3]) -> ParticleSystem {
    ParticleSystem::new(vec![[0.1, 0.2, -0.15], [-0.2, -0.1, 0.25]], vec![1.0, -1.0], b).unwrap()
}

fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

fn ewald_with(sys: &ParticleSystem, mode: Periodicity, xi: f64, t: &EvalTargets, opts: &EwaldOptions) -> Vec<f64> {
    let p = EwaldParams::with_defaults(xi, sys.box_lengths(), mode).unwrap();
    ewald_potential(sys, mode, &p, t, opts).unwrap().total
}

fn ewald(sys: &ParticleSystem, mode: Periodicity, t: &EvalTargets) -> Vec<f64> {
    ewald_with(sys, mode, default_xi(sys.box_lengths(), mode), t, &EwaldOptions::default())
}

fn xi_spread(sys: &ParticleSystem, mode: Periodicity, opts: &EwaldOptions) -> f64 {
    let xi0 = default_xi(sys.box_lengths(), mode);
    let runs: Vec<Vec<f64>> = [0.7, 1.0, 1.4]
        .iter()
        .map(|f| ewald_with(sys, mode, f * xi0, &EvalTargets::Sources, opts))
        .collect();
    max_diff(&runs[0], &runs[1]).max(max_diff(&runs[0], &runs[2])).max(max_diff(&runs[1], &runs[2]))
}

fn values(r: Vec<OracleReport>) -> Vec<f64> {
    r.into_iter().map(|r| r.value).collect()
}

fn off_points() -> EvalTargets {
    EvalTargets::Points(vec![[0.31, -0.27, 0.12], [-0.4, 0.35, -0.3], [0.05, 0.45, 0.41]])
}

fn nested() -> QuadratureConfig {
    QuadratureConfig {
        abs_tol: 1e-13,
        rel_tol: 1e-12,
        max_subdivisions: 4000,
    }
}

fn logspace(a: f64, b: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| a * (b / a).powf(i as f64 / (n - 1) as f64))
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn xi_invariance(r: &mut Report) {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for (id, mode) in [("1a", Periodicity::P1), ("1b", Periodicity::P2), ("1c", Periodicity::P3)] {
        let mut worst: f64 = 0.0;
        for i in 0..20 {
            let n = [2, 8, 16][i % 3];
            let b = [1.0, rng.gen_range(0.8..1.3), rng.gen_range(0.8..1.3)];
            let sys = random_neutral(n, b, &mut rng);
            worst = worst.max(xi_spread(&sys, mode, &EwaldOptions::default()));
        }
        r.at_most(id, &format!("xi-invariance {mode}, 20 systems"), worst, 1e-8);
    }
}

fn sign_variants(r: &mut Report) {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let sys = random_neutral(4, [1.0; 3], &mut rng);
    for (id, variant, name) in [
        ("2a", ZeroModeVariant::FlippedE1, "flipped E1 sign breaks xi-invariance"),
        ("2b", ZeroModeVariant::FlippedGamma, "flipped gamma sign breaks xi-invariance"),
    ] {
        let opts = EwaldOptions {
            zero_mode_variant: variant,
            ..EwaldOptions::default()
        };
        r.at_least(id, name, xi_spread(&sys, Periodicity::P1, &opts), 1e-3);
    }
    // the gamma flip is a xi-independent shift, which the direct sum does see
    let opts = EwaldOptions {
        zero_mode_variant: ZeroModeVariant::FlippedGamma,
        ..EwaldOptions::default()
    };
    let xi0 = default_xi(sys.box_lengths(), Periodicity::P1);
    let flipped = ewald_with(&sys, Periodicity::P1, xi0, &EvalTargets::Sources, &opts);
    let direct = values(direct_sum(&sys, Periodicity::P1, 2000, &EvalTargets::Sources).unwrap());
    println!("     note: flipped gamma sign is off the direct sum by {:.3e}", max_diff(&flipped, &direct));
}

fn oracle_1p(r: &mut Report) {
    let b = [1.0; 3];
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let random = random_neutral(4, b, &mut rng);
    for (id, sys, name) in [("3a", dipole(b), "dipole"), ("3b", random.clone(), "random-4")] {
        let e = ewald(&sys, Periodicity::P1, &EvalTargets::Sources);
        let d = values(direct_sum(&sys, Periodicity::P1, 2000, &EvalTargets::Sources).unwrap());
        r.at_most(id, &format!("1p Ewald vs direct sum (2000 shells), {name}"), max_diff(&e, &d), 1e-6);
    }
    let t = off_points();
    let e = ewald(&random, Periodicity::P1, &t);
    let f = pure_fourier_1p(&random, 2.0 * PI * 60.0, &t).unwrap();
    r.at_most("3c", "1p Ewald vs pure Fourier sum", max_diff(&e, &f), 1e-6);
}

fn oracle_2p(r: &mut Report) {
    let b = [1.0; 3];
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let random = random_neutral(4, b, &mut rng);
    for (id, sys, name) in [("4a", dipole(b), "dipole"), ("4b", random.clone(), "random-4")] {
        let e = ewald(&sys, Periodicity::P2, &EvalTargets::Sources);
        let d = values(direct_sum_extrapolated(&sys, Periodicity::P2, 200, &EvalTargets::Sources).unwrap());
        r.at_most(id, &format!("2p Ewald vs direct sum (200 shells), {name}"), max_diff(&e, &d), 1e-5);
        let raw = values(direct_sum(&sys, Periodicity::P2, 200, &EvalTargets::Sources).unwrap());
        println!("     note: without extrapolation the 200-shell sum is off by {:.3e}", max_diff(&e, &raw));
    }
    let t = off_points();
    let EvalTargets::Points(pts) = &t else { unreachable!() };
    let gap = pts
        .iter()
        .flat_map(|x| random.positions().iter().map(move |y| (x[2] - y[2]).abs()))
        .fold(f64::INFINITY, f64::min);
    let e = ewald(&random, Periodicity::P2, &t);
    let f = pure_fourier_2p(&random, 40.0 / gap, &t).unwrap();
    r.at_most("4c", "2p Ewald vs pure Fourier sum", max_diff(&e, &f), 1e-6);
}

fn far_field(r: &mut Report) {
    let b = [1.0, 1.2, 1.0];
    let mut rng = ChaCha8Rng::seed_from_u64(51);
    let sys = random_neutral(6, b, &mut rng);
    let xi = 1.0 / b[0];
    let dip: f64 = sys.positions().iter().zip(sys.charges()).map(|(x, q)| q * x[2]).sum();
    let limit = 2.0 * PI / (b[0] * b[1]) * dip;
    let z = b[2] / 2.0 + 5.0 / xi;
    let t = EvalTargets::Points(vec![[0.1, -0.2, z], [0.3, 0.4, -z]]);
    let phi = ewald_with(&sys, Periodicity::P2, xi, &t, &EwaldOptions::default());
    let err = (phi[0] - limit).abs().max((phi[1] + limit).abs());
    r.at_most("5", "2p far field equals the dipole limit", err, 1e-8);
}

fn gaussian_shell(r: &mut Report) {
    let mut rng = ChaCha8Rng::seed_from_u64(61);
    let mut worst: f64 = 0.0;
    for _ in 0..5 {
        let (r0, xi, b) = (rng.gen_range(0.05..2.0), rng.gen_range(0.5..3.0), rng.gen_range(0.5..4.0));
        let closed = gaussian_shell_integral(r0, xi, b).unwrap();
        let quad = gaussian_shell_quadrature(r0, xi, b, &nested()).unwrap();
        worst = worst.max((closed - quad).abs());
    }
    r.at_most("6a", "Gaussian shell closed form vs 3D quadrature", worst, 1e-8);
    let xi = 1.3;
    let v = gaussian_shell_integral(0.0, xi, 30.0).unwrap();
    r.at_most("6b", "Gaussian shell limit at r0 = 0", (v - 2.0 * xi / PI.sqrt()).abs(), 1e-10);
}

fn slab_limit(r: &mut Report) {
    let k = 1e-5;
    let mut worst: f64 = 0.0;
    for xi in [0.5, 1.0, 2.0] {
        for i in 0..31 {
            let z = -3.0 + 0.2 * i as f64;
            let q = (g_screened(k, z, xi).unwrap() - 2.0 * (-k * z.abs()).exp()) / k;
            worst = worst.max((q - zero_mode_limit_a(z, xi)).abs());
        }
    }
    r.at_most("7", "slab zero-mode limit vs difference quotient", worst, 1e-4);
}

fn wire_integrals(r: &mut Report) {
    let cfg = oracle_config();
    let mut worst: f64 = 0.0;
    for (k, x, y, xi) in [(2.0, 0.6, 0.8, 1.0), (2.0 * PI, 0.3, -0.2, 3.0), (1.0, 0.0, 0.5, 0.8), (4.0, 1.2, 0.4, 2.0), (0.5, -0.1, 0.1, 1.5)] {
        let quad = wire_mode_integral(k, x, y, xi, &nested()).unwrap();
        let closed = PI * incomplete_bessel_k0(k * k / (4.0 * xi * xi), (x * x + y * y) * xi * xi, &cfg).unwrap();
        worst = worst.max((quad - closed).abs());
    }
    r.at_most("8a", "incomplete K0 vs 2D Fourier quadrature", worst, 1e-7);
    let mut worst: f64 = 0.0;
    for (k, x, y) in [(1.0, 0.6, 0.8), (2.5, 0.3, 0.0), (0.7, 1.5, -0.9)] {
        let quad = bare_wire_mode_integral(k, x, y, &nested()).unwrap();
        let closed = 2.0 * PI * bessel_k0(k * (x * x + y * y).sqrt()).unwrap();
        worst = worst.max((quad - closed).abs());
    }
    r.at_most("8b", "bare 2D Fourier quadrature vs 2 pi K0", worst, 1e-8);
    let mut worst: f64 = 0.0;
    for u in logspace(1e-3, 50.0, 20) {
        worst = worst.max(rel(incomplete_bessel_k0(u, 0.0, &cfg).unwrap(), expint_e1(u).unwrap()));
    }
    r.at_most("8c", "K0(u, 0) = E1(u)", worst, 1e-12);
    for (id, u) in [("8d", 1e-3_f64), ("8e", 1e-4)] {
        let mut worst: f64 = 0.0;
        for v in [0.5, 1.0, 2.0] {
            let approx = 2.0 * bessel_k0(2.0 * (u * v).sqrt()).unwrap() - expint_e1(v).unwrap();
            worst = worst.max((incomplete_bessel_k0(u, v, &cfg).unwrap() - approx).abs());
        }
        r.at_most(id, &format!("small-u identity at u = {u:e}, error / u"), worst / u, 10.0);
    }
}

fn log_sums(r: &mut Report) {
    let sys = ParticleSystem::new(
        vec![[0.4, 0.1, 0.0], [-0.3, 0.3, 0.2], [0.1, -0.45, -0.1], [-0.2, -0.2, 0.3]],
        vec![0.9, -0.5, 0.35, -0.75],
        [1.0; 3],
    )
    .unwrap();
    let res = |s: f64| log_sum_multipole(&sys, [0.8 * s, -0.6 * s]).unwrap().residual().abs();
    let slope = (res(200.0) / res(20.0)).ln() / 10f64.ln();
    r.at_most("9a", "multipole residual slope over r in [20, 200]", slope, -2.8);
    let xi: f64 = 3.7;
    let rho2 = sys.positions().iter().map(|p| p[0] * p[0] + p[1] * p[1]);
    let (a, b) = rho2
        .zip(sys.charges())
        .fold((0.0, 0.0), |(a, b), (r2, q)| (a + q * (xi * xi * r2).ln(), b + q * r2.ln()));
    r.at_most("9b", "neutral log sum is scale free", (a - b).abs(), 1e-14);
    let wire = ParticleSystem::new(vec![[0.2, 0.1, 0.0], [-0.2, -0.1, 0.3]], vec![1.0, -1.0], [1.0; 3]).unwrap();
    let pot = |s: f64| {
        let t = EvalTargets::Points(vec![[0.6 * s, 0.8 * s, 0.1]]);
        pure_fourier_1p(&wire, 2.0 * PI * 10.0, &t).unwrap()[0].abs()
    };
    let slope = (pot(100.0) / pot(10.0)).ln() / 10f64.ln();
    r.at_most("9c", "1p far-field slope + 1", (slope + 1.0).abs(), 0.1);
}

fn special_functions(r: &mut Report) {
    let cfg = oracle_config();
    let worst = logspace(1e-3, 26.0, 100).map(|x| rel(erfc(x), erfc_quad(x, &cfg).unwrap())).fold(0.0, f64::max);
    r.at_most("10a", "erfc vs quadrature, relative", worst, 1e-14);
    let worst = logspace(1e-3, 100.0, 100)
        .map(|x| rel(bessel_k0(x).unwrap(), bessel_k0_quad(x, &cfg).unwrap()))
        .fold(0.0, f64::max);
    r.at_most("10b", "K0 vs quadrature, relative", worst, 1e-12);
    let worst = logspace(1e-3, 100.0, 100)
        .map(|x| rel(expint_e1(x).unwrap(), expint_e1_quad(x, &cfg).unwrap()))
        .fold(0.0, f64::max);
    r.at_most("10c", "E1 vs quadrature, relative", worst, 1e-12);
    let worst = logspace(1e-6, 1e-2, 20)
        .map(|x| (bessel_k0(x).unwrap() - (-(x / 2.0).ln() - EULER_GAMMA)).abs() / (x * x))
        .fold(0.0, f64::max);
    r.at_most("10d", "K0 small-x form, |K0 - (-ln(x/2) - gamma)| / x^2", worst, 0.05);
    let x: f64 = 20.0;
    let series = 1.0 - 1.0 / (8.0 * x) + 9.0 / (2.0 * (8.0 * x).powi(2));
    let quoted = bessel_k0(x).unwrap() * (PI * x / 2.0).sqrt() * x.exp();
    r.at_most("10e", "K0 large-x form with sqrt(pi x / 2) prefactor", (quoted - series).abs(), 1e-4);
    let standard = bessel_k0(x).unwrap() * (2.0 * x / PI).sqrt() * x.exp();
    println!("     note: with the sqrt(2x/pi) prefactor the error is {:.3e}", (standard - series).abs());
}

fn self_term(r: &mut Report) {
    let b = [1.0; 3];
    let sys = ParticleSystem::new(vec![[0.1, 0.05, -0.2], [-0.25, 0.1, 0.15]], vec![1.0, -1.0], b).unwrap();
    let at = ewald(&sys, Periodicity::P3, &EvalTargets::Sources);
    let delta = 1e-5 * b[0];
    let x = sys.positions()[0];
    let t = EvalTargets::Points(vec![[x[0] + delta, x[1], x[2]], [x[0] - delta, x[1], x[2]]]);
    let off = ewald(&sys, Periodicity::P3, &t);
    let limit = 0.5 * (off[0] + off[1]) - sys.charges()[0] / delta;
    r.at_most("11", "off-point limit vs at-source value", (limit - at[0]).abs(), 1e-5);
}

fn cli(r: &mut Report) {
    let root = Path::new(env!("CARGO_MANIFEST_DIR"));
    let run = |file: &str, mode: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_pewald"))
            .args([root.join("demo").join(file).to_str().unwrap(), "--mode", mode])
            .output()
            .unwrap();
        assert!(out.status.success());
        out.stdout
    };
    let mut mismatches = 0.0;
    let mut unstable = 0.0;
    for (file, mode, gold) in [("dipole_3p.txt", "3p", "dipole_3p.csv"), ("slab_2p.txt", "2p", "slab_2p.csv"), ("wire_1p.txt", "1p", "wire_1p.csv")] {
        let (a, b) = (run(file, mode), run(file, mode));
        if a != b {
            unstable += 1.0;
        }
        if a != std::fs::read(root.join("tests/golden").join(gold)).unwrap() {
            mismatches += 1.0;
        }
    }
    r.at_most("12a", "repeated CLI runs differing", unstable, 0.0);
    r.at_most("12b", "demo outputs differing from golden files", mismatches, 0.0);
}

fn main() {
    let mut report = Report { failed: Vec::new() };
    let suites: [(&str, fn(&mut Report)); 12] = [
        ("1", xi_invariance),
        ("2", sign_variants),
        ("3", oracle_1p),
        ("4", oracle_2p),
        ("5", far_field),
        ("6", gaussian_shell),
        ("7", slab_limit),
        ("8", wire_integrals),
        ("9", log_sums),
        ("10", special_functions),
        ("11", self_term),
        ("12", cli),
    ];
    for (name, suite) in suites {
        let start = Instant::now();
        suite(&mut report);
        println!("     criterion {name} took {:.2} s", start.elapsed().as_secs_f64());
    }
    let unexpected: Vec<&String> = report.failed.iter().filter(|id| !EXPECTED_FAILURES.contains(&id.as_str())).collect();
    let fixed: Vec<&&str> = EXPECTED_FAILURES.iter().filter(|id| !report.failed.iter().any(|f| f == *id)).collect();
    println!(
        "{} checks failed: {:?} (expected {:?})",
        report.failed.len(),
        report.failed,
        EXPECTED_FAILURES
    );
    if !unexpected.is_empty() || !fixed.is_empty() {
        println!("unexpected failures {unexpected:?}, unexpected passes {fixed:?}");
        std::process::exit(1);
    }
}
