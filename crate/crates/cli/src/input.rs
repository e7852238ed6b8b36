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

//! Particle and point files.
//!
//! A particle file starts with `box L1 L2 L3`, followed by one `x y z q`
//! row per particle. Blank lines and anything after `#` are ignored. Point
//! files hold `x y z` rows and no box line.

use std::path::Path;

use pewald_core::{validate_system, ParticleSystem, Periodicity};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::CliError;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("");
        let fields: Vec<&str> = l.split_whitespace().collect();
        (!fields.is_empty()).then_some((i + 1, fields))
    })
}

fn numbers<const N: usize>(fields: &[&str], origin: &str, line: usize) -> Result<[f64; N], CliError> {
    let err = |msg: String| CliError::Parse {
        path: origin.to_string(),
        line,
        msg,
    };
    if fields.len() != N {
        return Err(err(format!("expected {N} fields, found {}", fields.len())));
    }
    let mut out = [0.0f64; N];
    for (o, f) in out.iter_mut().zip(fields) {
        *o = f.parse().map_err(|_| err(format!("not a number: {f:?}")))?;
        if !o.is_finite() {
            return Err(err(format!("not finite: {f:?}")));
        }
    }
    Ok(out)
}

/// Parses particle file contents. `origin` names the source in errors.
pub fn parse_particles(text: &str, origin: &str) -> Result<ParticleSystem, CliError> {
    let mut lines = content_lines(text);
    let (line, head) = lines.next().ok_or_else(|| CliError::Parse {
        path: origin.to_string(),
        line: 1,
        msg: "missing box line".into(),
    })?;
    if head[0] != "box" {
        return Err(CliError::Parse {
            path: origin.to_string(),
            line,
            msg: format!("expected \"box L1 L2 L3\", found {:?}", head.join(" ")),
        });
    }
    let box_lengths: [f64; 3] = numbers(&head[1..], origin, line)?;
    let (mut positions, mut charges) = (Vec::new(), Vec::new());
    for (line, fields) in lines {
        let [x, y, z, q] = numbers(&fields, origin, line)?;
        positions.push([x, y, z]);
        charges.push(q);
    }
    Ok(ParticleSystem::new(positions, charges, box_lengths)?)
}

/// Parses `x y z` rows.
pub fn parse_points(text: &str, origin: &str) -> Result<Vec<[f64; 3]>, CliError> {
    content_lines(text).map(|(line, f)| numbers(&f, origin, line)).collect()
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

/// Reads a particle file, rejects charged systems and wraps the positions
/// into the box along the periodic directions.
///
/// Coincident particles and particles outside the box are accepted; they
/// are reported on stderr.
pub fn ingest_particles(path: &Path, mode: Periodicity) -> Result<ParticleSystem, CliError> {
    let sys = parse_particles(&read(path)?, &path.display().to_string())?;
    prepare(sys, mode)
}

pub(crate) fn prepare(sys: ParticleSystem, mode: Periodicity) -> Result<ParticleSystem, CliError> {
    sys.require_neutral()?;
    let report = validate_system(&sys, mode);
    for w in report.warnings() {
        eprintln!("warning: {w}");
    }
    Ok(sys.wrapped(mode))
}

pub fn ingest_points(path: &Path) -> Result<Vec<[f64; 3]>, CliError> {
    parse_points(&read(path)?, &path.display().to_string())
}

/// `n` particles uniform in the box with zero-sum charges, reproducible
/// from `seed`.
pub fn random_system(n: usize, box_lengths: [f64; 3], seed: u64) -> Result<ParticleSystem, CliError> {
    if n < 2 {
        return Err(CliError::Config("a generated system needs at least 2 particles".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let positions: Vec<[f64; 3]> = (0..n)
        .map(|_| box_lengths.map(|l| l * (rng.gen::<f64>() - 0.5)))
        .collect();
    let mut charges: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let mean = charges.iter().sum::<f64>() / n as f64;
    charges.iter_mut().for_each(|q| *q -= mean);
    Ok(ParticleSystem::new(positions, charges, box_lengths)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_a_dipole() {
        let sys = parse_particles("box 1 1 1\n0.25 0 0 1\n-0.25 0 0 -1\n", "t").unwrap();
        assert_eq!(sys.len(), 2);
        assert!(sys.is_neutral());
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# header\n\nbox 1 2 3  # lengths\n0 0 0 1 # a\n\n0.1 0 0 -1\n";
        let sys = parse_particles(text, "t").unwrap();
        assert_eq!(sys.box_lengths(), [1.0, 2.0, 3.0]);
        assert_eq!(sys.len(), 2);
    }

    #[test]
    fn short_row_names_its_line() {
        let err = parse_particles("box 1 1 1\n0 0 0 1\n0.5 0 0\n", "f.txt").unwrap_err();
        match err {
            CliError::Parse { line, .. } => assert_eq!(line, 3),
            e => panic!("{e}"),
        }
        assert!(err_text("box 1 1 1\n0 0 0 1\n0.5 0 0\n").starts_with("f.txt:3:"));
    }

    fn err_text(s: &str) -> String {
        parse_particles(s, "f.txt").unwrap_err().to_string()
    }

    #[test]
    fn missing_box_line() {
        assert!(err_text("0 0 0 1\n").contains("box"));
        assert!(err_text("").contains("box"));
    }

    #[test]
    fn charged_system_is_rejected() {
        let sys = parse_particles("box 1 1 1\n0.25 0 0 1\n-0.25 0 0 -0.999\n", "t").unwrap();
        let msg = prepare(sys, Periodicity::P3).unwrap_err().to_string();
        assert!(msg.contains("net charge 1.0e-3 exceeds tolerance"), "{msg}");
    }

    #[test]
    fn generated_systems_are_reproducible() {
        let a = random_system(6, [1.0; 3], 9).unwrap();
        let b = random_system(6, [1.0; 3], 9).unwrap();
        assert_eq!(a.positions(), b.positions());
        assert!(a.is_neutral());
    }
}
