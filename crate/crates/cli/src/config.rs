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

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, ValueEnum};
use pewald_core::Periodicity;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Parameter varied across a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Sweep {
    /// One potential table per ξ value.
    Xi,
    /// Error against the largest cutoff, per real-space cutoff.
    Rcut,
    /// Error against the largest k_max, per k-space cutoff.
    Kmax,
}

#[derive(Debug, Clone, PartialEq)]
pub enum TargetSpec {
    Sources,
    File(PathBuf),
}

impl FromStr for TargetSpec {
    type Err = std::convert::Infallible;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(if s == "sources" {
            TargetSpec::Sources
        } else {
            TargetSpec::File(PathBuf::from(s))
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Input {
    File(PathBuf),
    /// Random neutral system, see [`crate::random_system`].
    Random {
        particles: usize,
        box_lengths: [f64; 3],
        seed: u64,
    },
}

/// Everything a run depends on. Output is a pure function of this value
/// and the files it names.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub mode: Periodicity,
    pub input: Input,
    /// Empty means the box default.
    pub xi: Vec<f64>,
    pub r_cut: Vec<f64>,
    pub k_max: Vec<f64>,
    pub layers: Option<u32>,
    pub targets: TargetSpec,
    pub format: Format,
    /// `None` writes to stdout.
    pub out: Option<PathBuf>,
    pub sweep: Option<Sweep>,
}

impl RunConfig {
    pub fn new(mode: Periodicity, input: Input) -> Self {
        RunConfig {
            mode,
            input,
            xi: Vec::new(),
            r_cut: Vec::new(),
            k_max: Vec::new(),
            layers: None,
            targets: TargetSpec::Sources,
            format: Format::Csv,
            out: None,
            sweep: None,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let lists = [(Sweep::Xi, "xi", &self.xi), (Sweep::Rcut, "rcut", &self.r_cut), (Sweep::Kmax, "kmax", &self.k_max)];
        for (kind, name, values) in lists {
            if let Some(v) = values.iter().find(|v| !(**v > 0.0)) {
                return Err(CliError::Config(format!("--{name} values must be positive, got {v}")));
            }
            if self.sweep == Some(kind) {
                if values.is_empty() {
                    return Err(CliError::Config(format!("--sweep {name} needs a non-empty --{name} list")));
                }
            } else if values.len() > 1 {
                return Err(CliError::Config(format!("--{name} takes a list only with --sweep {name}")));
            }
        }
        Ok(())
    }
}

fn box3(s: &str) -> Result<[f64; 3], String> {
    let v = s
        .split(',')
        .map(|v| v.trim().parse::<f64>().map_err(|_| format!("not a number: {v:?}")))
        .collect::<Result<Vec<f64>, String>>()?;
    v.try_into().map_err(|_| "expected L1,L2,L3".to_string())
}

/// Ewald potentials of neutral point-charge systems with 1, 2 or 3 periodic
/// directions.
#[derive(Debug, Parser)]
#[command(name = "pewald", version)]
pub struct Args {
    /// Particle file; omit to generate a random system from --seed.
    pub input: Option<PathBuf>,
    #[arg(long, value_parser = Periodicity::from_str)]
    pub mode: Periodicity,
    /// Splitting parameter, or a comma-separated list with --sweep xi.
    #[arg(long, value_delimiter = ',')]
    pub xi: Vec<f64>,
    #[arg(long, value_delimiter = ',')]
    pub rcut: Vec<f64>,
    #[arg(long, value_delimiter = ',')]
    pub kmax: Vec<f64>,
    /// Image shells searched by the real-space sum.
    #[arg(long)]
    pub layers: Option<u32>,
    /// `sources` or a file of `x y z` rows.
    #[arg(long, default_value = "sources")]
    pub targets: TargetSpec,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub sweep: Option<Sweep>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Size of a generated system.
    #[arg(long, default_value_t = 8)]
    pub particles: usize,
    /// Box of a generated system.
    #[arg(long = "box", value_parser = box3, default_value = "1,1,1")]
    pub box_lengths: [f64; 3],
}

impl Args {
    pub fn into_config(self) -> RunConfig {
        let input = match self.input {
            Some(p) => Input::File(p),
            None => Input::Random {
                particles: self.particles,
                box_lengths: self.box_lengths,
                seed: self.seed,
            },
        };
        RunConfig {
            mode: self.mode,
            input,
            xi: self.xi,
            r_cut: self.rcut,
            k_max: self.kmax,
            layers: self.layers,
            targets: self.targets,
            format: self.format,
            out: self.out,
            sweep: self.sweep,
        }
    }
}
