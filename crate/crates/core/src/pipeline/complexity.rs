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

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{compile_state_prep, CompileMode, PipelineModes, PipelinePlan};
use crate::diag_compile::StageLabel;
use crate::rda_classical::{build_filter_bank, FilterConvention, Step};
use crate::scene_raw::{RadarScenario, ScenarioConfig};
use crate::{Complex64, ComplexImage, Error, Result};

pub const DIAGONAL_SLOPE_RANGE: (f64, f64) = (0.9, 1.1);
pub const FWHT_SLOPE_RANGE: (f64, f64) = (0.9, 1.15);

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StageCounts {
    pub stage: &'static str,
    pub single_qubit: usize,
    pub two_qubit: usize,
}

/// Gate tally of one QFT block next to its closed form on `h` qubits:
/// `h (h + 1) / 2` H and controlled-phase gates, `floor(h / 2)` swaps.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QftBlock {
    pub stage: &'static str,
    pub qubits: usize,
    pub h_and_cp: usize,
    pub swaps: usize,
    pub expected_h_and_cp: usize,
    pub expected_swaps: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComplexityRow {
    pub d: usize,
    pub n_qubits: usize,
    pub pixels: usize,
    pub stages: Vec<StageCounts>,
    pub qft_blocks: Vec<QftBlock>,
    /// Two-qubit gates of the migration and azimuth diagonals together.
    pub diagonal_two_qubit: usize,
    pub core_single_qubit: usize,
    pub core_two_qubit: usize,
    pub state_prep_single_qubit: Option<usize>,
    pub state_prep_two_qubit: Option<usize>,
    pub total_single_qubit: usize,
    pub total_two_qubit: usize,
    /// Additions spent on Walsh coefficients for every diagonal stage.
    pub fwht_ops: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComplexityChecks {
    pub diagonal_slope_in_range: bool,
    pub fwht_slope_in_range: bool,
    pub qft_closed_form: bool,
    pub totals_match_stages: bool,
    pub monotone_in_d: bool,
}

impl ComplexityChecks {
    pub fn all(&self) -> bool {
        self.diagonal_slope_in_range
            && self.fwht_slope_in_range
            && self.qft_closed_form
            && self.totals_match_stages
            && self.monotone_in_d
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComplexityReport {
    pub compile_mode: CompileMode,
    pub rows: Vec<ComplexityRow>,
    /// Log-log slope of diagonal-stage two-qubit count against `N`.
    pub diagonal_slope: f64,
    /// Log-log slope of `fwht_ops / log2 N` against `N`.
    pub fwht_slope: f64,
    /// Largest `core_two_qubit / N` over the sweep.
    pub two_qubit_per_pixel: f64,
    pub checks: ComplexityChecks,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexityOptions {
    pub compile: CompileMode,
    /// Also compile a state-preparation circuit for a dense image.
    pub state_prep: bool,
    pub convention: FilterConvention,
}

impl Default for ComplexityOptions {
    fn default() -> Self {
        ComplexityOptions {
            compile: CompileMode::Fused,
            state_prep: true,
            convention: FilterConvention::default(),
        }
    }
}

/// Least-squares slope of `ys` against `xs`.
pub fn fit_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

fn in_range(v: f64, (lo, hi): (f64, f64)) -> bool {
    v >= lo && v <= hi
}

fn dense_image(d: usize) -> ComplexImage {
    let mut rng = ChaCha8Rng::seed_from_u64(d as u64);
    let data = (0..d * d)
        .map(|_| Complex64::from_polar(rng.gen_range(0.1..1.0), rng.gen_range(-3.0..3.0)))
        .collect();
    ComplexImage::from_vec(d, data).expect("dense image is valid")
}

fn row_for(d: usize, opts: &ComplexityOptions) -> Result<ComplexityRow> {
    let scenario = RadarScenario::new(&ScenarioConfig::table1(d))?;
    let bank = build_filter_bank(&scenario, opts.convention);
    let modes = PipelineModes {
        compile: opts.compile,
        ..Default::default()
    };
    let plan = PipelinePlan::from_filters(&bank, modes)?;
    let layout = plan.layout;

    let mut stages = Vec::new();
    let mut qft_blocks = Vec::new();
    let (mut core_single, mut core_two, mut diagonal_two, mut fwht_ops) = (0, 0, 0, 0);
    for stage in &plan.stages {
        let list = stage.compile(layout)?;
        let (single, two) = list.counts();
        core_single += single;
        core_two += two;
        fwht_ops += list.fwht_ops;
        if matches!(stage.step, Step::Rcmc | Step::AzimuthFilter) {
            diagonal_two += two;
        }
        if stage.label() == StageLabel::Qft {
            let h = layout.n() / 2;
            qft_blocks.push(QftBlock {
                stage: stage.step.as_str(),
                qubits: h,
                h_and_cp: list.count_named("H") + list.count_named("CP"),
                swaps: list.count_named("SWAP"),
                expected_h_and_cp: h * (h + 1) / 2,
                expected_swaps: h / 2,
            });
        }
        stages.push(StageCounts {
            stage: stage.step.as_str(),
            single_qubit: single,
            two_qubit: two,
        });
    }

    let prep = if opts.state_prep {
        Some(compile_state_prep(&dense_image(d))?.counts())
    } else {
        None
    };
    let (prep_single, prep_two) = prep.unwrap_or((0, 0));
    Ok(ComplexityRow {
        d,
        n_qubits: layout.n(),
        pixels: d * d,
        stages,
        qft_blocks,
        diagonal_two_qubit: diagonal_two,
        core_single_qubit: core_single,
        core_two_qubit: core_two,
        state_prep_single_qubit: prep.map(|p| p.0),
        state_prep_two_qubit: prep.map(|p| p.1),
        total_single_qubit: core_single + prep_single,
        total_two_qubit: core_two + prep_two,
        fwht_ops,
    })
}

/// Compiles (without executing) the focusing circuit of the `table1`
/// scenario at every `d` in `sweep` and fits growth exponents.
pub fn complexity_report(sweep: &[usize]) -> Result<ComplexityReport> {
    complexity_report_with(sweep, ComplexityOptions::default())
}

pub fn complexity_report_with(sweep: &[usize], opts: ComplexityOptions) -> Result<ComplexityReport> {
    for &d in sweep {
        if d < 4 || !d.is_power_of_two() {
            return Err(Error::validation("d", format!("{d} is not a power of two >= 4")));
        }
    }
    let mut ds = sweep.to_vec();
    ds.sort_unstable();
    ds.dedup();
    if ds.len() < 3 {
        return Err(Error::SweepTooShort {
            needed: 3,
            got: ds.len(),
        });
    }
    let rows = ds.iter().map(|&d| row_for(d, &opts)).collect::<Result<Vec<_>>>()?;

    let log_n: Vec<f64> = rows.iter().map(|r| (r.pixels as f64).ln()).collect();
    let diag: Vec<f64> = rows.iter().map(|r| (r.diagonal_two_qubit as f64).ln()).collect();
    let fwht: Vec<f64> = rows
        .iter()
        .map(|r| (r.fwht_ops as f64 / (r.pixels as f64).log2()).ln())
        .collect();
    let diagonal_slope = fit_slope(&log_n, &diag);
    let fwht_slope = fit_slope(&log_n, &fwht);
    let two_qubit_per_pixel = rows
        .iter()
        .map(|r| r.core_two_qubit as f64 / r.pixels as f64)
        .fold(0.0, f64::max);

    let checks = ComplexityChecks {
        diagonal_slope_in_range: in_range(diagonal_slope, DIAGONAL_SLOPE_RANGE),
        fwht_slope_in_range: in_range(fwht_slope, FWHT_SLOPE_RANGE),
        qft_closed_form: rows.iter().flat_map(|r| &r.qft_blocks).all(|b| {
            b.h_and_cp == b.expected_h_and_cp && b.swaps == b.expected_swaps
        }),
        totals_match_stages: rows.iter().all(|r| {
            r.stages.iter().map(|s| s.two_qubit).sum::<usize>() == r.core_two_qubit
                && r.stages.iter().map(|s| s.single_qubit).sum::<usize>() == r.core_single_qubit
        }),
        monotone_in_d: rows.windows(2).all(|w| {
            w[1].core_two_qubit > w[0].core_two_qubit && w[1].total_two_qubit > w[0].total_two_qubit
        }),
    };
    Ok(ComplexityReport {
        compile_mode: opts.compile,
        rows,
        diagonal_slope,
        fwht_slope,
        two_qubit_per_pixel,
        checks,
    })
}

impl ComplexityReport {
    /// Fixed-width text table, one line per `d`.
    pub fn table(&self) -> String {
        let mut out = format!(
            "{:>5} {:>6} {:>7} {:>10} {:>10} {:>10} {:>12}\n",
            "d", "qubits", "N", "diag-2q", "core-1q", "core-2q", "fwht-ops"
        );
        for r in &self.rows {
            out.push_str(&format!(
                "{:>5} {:>6} {:>7} {:>10} {:>10} {:>10} {:>12}\n",
                r.d, r.n_qubits, r.pixels, r.diagonal_two_qubit, r.core_single_qubit, r.core_two_qubit, r.fwht_ops
            ));
        }
        out.push_str(&format!(
            "diagonal slope {:.4}, fwht slope {:.4}, two-qubit gates per pixel {:.3}\n",
            self.diagonal_slope, self.fwht_slope, self.two_qubit_per_pixel
        ));
        out
    }
}
