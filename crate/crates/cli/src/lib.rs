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

//! Command-line front-end for the `pewald` Ewald sums: reads particle
//! files, evaluates potentials and truncation sweeps, and writes CSV or
//! JSON tables.

mod config;
mod error;
mod input;
mod run;

pub use config::{Args, Format, Input, RunConfig, Sweep, TargetSpec};
pub use error::CliError;
pub use input::{ingest_particles, ingest_points, parse_particles, parse_points, random_system};
pub use run::{
    convergence_rows, potential_rows, render_convergence, render_potential, run, run_convergence, run_potential,
    write_atomic, ConvergenceRow, PotentialRow,
};
