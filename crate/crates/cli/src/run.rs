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

use std::io::Write;
use std::path::Path;
use std::time::Instant;

use pewald::{ewald_potential, EvalTargets, EwaldOptions};
use pewald_core::{default_layers, default_xi, EwaldParams, ParticleSystem, PotentialResult};
use serde::Serialize;

use crate::config::{Format, Input, RunConfig, Sweep, TargetSpec};
use crate::input::{ingest_particles, ingest_points, prepare, random_system};
use crate::CliError;

const UNITS: &str = "Gaussian units, potential in charge/length";

/// One row of a potential table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PotentialRow {
    pub xi: f64,
    pub index: usize,
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub total: f64,
    pub real: f64,
    pub kspace: f64,
    pub zero_mode: f64,
    #[serde(rename = "self")]
    pub self_term: f64,
}

/// One row of a convergence table; the reference row has error 0.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceRow {
    pub parameter: f64,
    pub max_abs_error: f64,
    pub wall_time: f64,
}

#[derive(Serialize)]
struct Document<'a, R> {
    units: &'static str,
    mode: String,
    records: &'a [R],
}

fn load(cfg: &RunConfig) -> Result<(ParticleSystem, EvalTargets), CliError> {
    let sys = match &cfg.input {
        Input::File(p) => ingest_particles(p, cfg.mode)?,
        Input::Random {
            particles,
            box_lengths,
            seed,
        } => prepare(random_system(*particles, *box_lengths, *seed)?, cfg.mode)?,
    };
    let targets = match &cfg.targets {
        TargetSpec::Sources => EvalTargets::Sources,
        TargetSpec::File(p) => EvalTargets::Points(ingest_points(p)?),
    };
    Ok((sys, targets))
}

fn params(cfg: &RunConfig, sys: &ParticleSystem, xi: f64, r_cut: Option<f64>, k_max: Option<f64>) -> Result<EwaldParams, CliError> {
    let b = sys.box_lengths();
    let mut p = EwaldParams::with_defaults(xi, b, cfg.mode)?;
    if let Some(r) = r_cut.or(cfg.r_cut.first().copied()) {
        p.r_cut = r;
        p.real_layers = default_layers(r, b, cfg.mode);
    }
    if let Some(k) = k_max.or(cfg.k_max.first().copied()) {
        p.k_max = k;
    }
    if let Some(l) = cfg.layers {
        p.real_layers = l;
    }
    p.validate()?;
    Ok(p)
}

fn evaluate(cfg: &RunConfig, sys: &ParticleSystem, targets: &EvalTargets, p: &EwaldParams) -> Result<PotentialResult, CliError> {
    Ok(ewald_potential(sys, cfg.mode, p, targets, &EwaldOptions::default())?)
}

/// Potential table, one block of rows per ξ value.
pub fn potential_rows(cfg: &RunConfig) -> Result<Vec<PotentialRow>, CliError> {
    cfg.validate()?;
    let (sys, targets) = load(cfg)?;
    let xis = if cfg.xi.is_empty() {
        vec![default_xi(sys.box_lengths(), cfg.mode)]
    } else {
        cfg.xi.clone()
    };
    let points: Vec<[f64; 3]> = match &targets {
        EvalTargets::Sources => sys.positions().to_vec(),
        EvalTargets::Points(p) => p.clone(),
    };
    let mut rows = Vec::new();
    for xi in xis {
        let res = evaluate(cfg, &sys, &targets, &params(cfg, &sys, xi, None, None)?)?;
        for (i, (c, x)) in res.components.iter().zip(&points).enumerate() {
            rows.push(PotentialRow {
                xi,
                index: i,
                x: x[0],
                y: x[1],
                z: x[2],
                total: res.total[i],
                real: c.real,
                kspace: c.kspace,
                zero_mode: c.zero_mode,
                self_term: c.self_term,
            });
        }
    }
    Ok(rows)
}

/// Error of each truncation setting against the tightest one.
pub fn convergence_rows(cfg: &RunConfig) -> Result<Vec<ConvergenceRow>, CliError> {
    cfg.validate()?;
    let sweep = match cfg.sweep {
        Some(s @ (Sweep::Rcut | Sweep::Kmax)) => s,
        _ => return Err(CliError::Config("a convergence run needs --sweep rcut or --sweep kmax".into())),
    };
    let (sys, targets) = load(cfg)?;
    let xi = cfg.xi.first().copied().unwrap_or_else(|| default_xi(sys.box_lengths(), cfg.mode));
    let values = if sweep == Sweep::Rcut { &cfg.r_cut } else { &cfg.k_max };
    let run = |v: f64| {
        let p = match sweep {
            Sweep::Rcut => params(cfg, &sys, xi, Some(v), None)?,
            _ => params(cfg, &sys, xi, None, Some(v))?,
        };
        let start = Instant::now();
        let res = evaluate(cfg, &sys, &targets, &p)?;
        Ok::<_, CliError>((res, start.elapsed().as_secs_f64()))
    };
    let tightest = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let (reference, _) = run(tightest)?;
    let mut rows = Vec::new();
    for &v in values {
        let (res, wall_time) = run(v)?;
        rows.push(ConvergenceRow {
            parameter: v,
            max_abs_error: if v == tightest { 0.0 } else { res.max_abs_diff(&reference) },
            wall_time,
        });
    }
    Ok(rows)
}

fn num(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn render_potential(rows: &[PotentialRow], cfg: &RunConfig) -> Result<String, CliError> {
    if cfg.format == Format::Json {
        return json(rows, cfg);
    }
    let mut s = format!("# {UNITS}; mode {}\nxi,index,x,y,z,total,real,kspace,zero_mode,self\n", cfg.mode);
    for r in rows {
        let vals = [r.x, r.y, r.z, r.total, r.real, r.kspace, r.zero_mode, r.self_term].map(num);
        s += &format!("{},{},{}\n", num(r.xi), r.index, vals.join(","));
    }
    Ok(s)
}

pub fn render_convergence(rows: &[ConvergenceRow], cfg: &RunConfig) -> Result<String, CliError> {
    if cfg.format == Format::Json {
        return json(rows, cfg);
    }
    let name = if cfg.sweep == Some(Sweep::Rcut) { "rcut" } else { "kmax" };
    let mut s = format!("# {UNITS}; mode {}; parameter {name}\nparameter,max_abs_error,wall_time\n", cfg.mode);
    for r in rows {
        s += &format!("{},{},{}\n", num(r.parameter), num(r.max_abs_error), num(r.wall_time));
    }
    Ok(s)
}

fn json<R: Serialize>(records: &[R], cfg: &RunConfig) -> Result<String, CliError> {
    let doc = Document {
        units: UNITS,
        mode: cfg.mode.to_string(),
        records,
    };
    Ok(serde_json::to_string_pretty(&doc)? + "\n")
}

/// Writes `text` to `path` by renaming a finished temporary file, so a
/// failed run never leaves partial output.
pub fn write_atomic(path: &Path, text: &str) -> Result<(), CliError> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| CliError::io(dir, e))?;
    tmp.write_all(text.as_bytes()).map_err(|e| CliError::io(path, e))?;
    tmp.persist(path).map_err(|e| CliError::io(path, e.error))?;
    Ok(())
}

/// Renders the potential table for `cfg` and writes it to the output.
pub fn run_potential(cfg: &RunConfig) -> Result<String, CliError> {
    let text = render_potential(&potential_rows(cfg)?, cfg)?;
    emit(cfg, text)
}

pub fn run_convergence(cfg: &RunConfig) -> Result<String, CliError> {
    let text = render_convergence(&convergence_rows(cfg)?, cfg)?;
    emit(cfg, text)
}

fn emit(cfg: &RunConfig, text: String) -> Result<String, CliError> {
    if let Some(p) = &cfg.out {
        write_atomic(p, &text)?;
    }
    Ok(text)
}

/// Dispatches on the sweep kind.
pub fn run(cfg: &RunConfig) -> Result<String, CliError> {
    match cfg.sweep {
        Some(Sweep::Rcut | Sweep::Kmax) => run_convergence(cfg),
        _ => run_potential(cfg),
    }
}
