// Copyright 2026 The qrda Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! `qrda`: simulate SAR raw data, focus it classically or with the simulated
//! quantum circuit, sample the quantum output and report gate counts.

mod commands;
mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "qrda", version, about = "Quantum range-Doppler SAR focusing simulator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Simulate raw data for a scene.
    Simulate {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value = "out")]
        out: PathBuf,
    },
    /// Focus raw data with the classical and/or quantum engine.
    Focus {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        filters: FilterArgs,
        #[command(flatten)]
        modes: ModeArgs,
        /// classical, quantum or both.
        #[arg(long, default_value = "both")]
        engine: String,
        /// Write the state after every pipeline stage.
        #[arg(long)]
        dump_stages: bool,
        /// Write the filter phase tables as CSV.
        #[arg(long)]
        dump_filters: bool,
        /// Write the compiled circuit as text and its metadata as JSON.
        #[arg(long)]
        dump_circuit: bool,
        #[arg(long, default_value = "out")]
        out: PathBuf,
    },
    /// Measure the focused quantum state under several shot budgets.
    Sample {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        filters: FilterArgs,
        #[command(flatten)]
        modes: ModeArgs,
        /// Comma-separated shot budgets; default ceil(N/100), ceil(N/10), N, 100N.
        #[arg(long, value_delimiter = ',')]
        shots: Vec<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "out")]
        out: PathBuf,
    },
    /// Compile the circuit over a sweep of d and fit growth exponents.
    Complexity {
        /// Comma-separated sweep, at least three values.
        #[arg(long, value_delimiter = ',', default_value = "8,16,32,64")]
        d: Vec<usize>,
        /// fused or mcmt-explicit.
        #[arg(long, default_value = "fused")]
        mode: String,
        /// Leave out the state-preparation circuit.
        #[arg(long)]
        no_state_prep: bool,
        #[command(flatten)]
        filters: FilterArgs,
        #[arg(long, default_value = "out")]
        out: PathBuf,
    },
    /// Check quantum/classical equivalence and circuit identities.
    Selftest {
        #[arg(long, value_delimiter = ',', default_value = "8,16")]
        d: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest deviation accepted by every check.
        #[arg(long, default_value_t = 1e-9, allow_negative_numbers = true)]
        tolerance: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Preset name (table1, table1-scaled) or TOML scenario file.
    #[arg(long, default_value = "table1")]
    scenario: String,
    /// center, empty, a CSV of x,y,amplitude, or a PGM raster.
    #[arg(long, default_value = "center")]
    scene: String,
    /// Samples per dimension.
    #[arg(long)]
    d: Option<usize>,
    /// Raw data file (.bin or .csv) used instead of simulating the scene.
    #[arg(long)]
    raw: Option<PathBuf>,
}

#[derive(Args)]
struct FilterArgs {
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    sign_m: i8,
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    sign_a: i8,
    /// Migration filter form: literal or shift.
    #[arg(long, default_value = "literal")]
    rcmc: String,
    /// Use all-zero filter phases.
    #[arg(long)]
    identity_filters: bool,
}

#[derive(Args)]
struct ModeArgs {
    /// fused or mcmt-explicit.
    #[arg(long, default_value = "fused")]
    mode: String,
    /// inject or compiled.
    #[arg(long, default_value = "inject")]
    state_prep: String,
    /// direct or compiled.
    #[arg(long, default_value = "direct")]
    execution: String,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
