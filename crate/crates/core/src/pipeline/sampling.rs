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

use serde::Serialize;

use super::{run_pipeline, PipelinePlan};
use crate::qsim::{sample, MeasurementHistogram, Statevector};
use crate::{ComplexImage, Error, Result};

/// Reconstruction from one shot budget.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ShotResult {
    pub shots: u64,
    #[serde(skip)]
    pub histogram: MeasurementHistogram,
    /// `sqrt(p_hat)` per pixel.
    #[serde(skip)]
    pub estimate: Vec<f64>,
    /// RMSE of `sqrt(p_hat)` against `|amps|`.
    pub rmse: f64,
    /// RMSE after min-max normalizing both images to `[0, 1]`.
    pub rmse_normalized: f64,
    /// Pixels seen at least once.
    pub nonzero: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SamplingReport {
    pub d: usize,
    pub seed: u64,
    /// `|amps|` of the sampled state.
    #[serde(skip)]
    pub reference: Vec<f64>,
    pub runs: Vec<ShotResult>,
}

/// `ceil(N/100), ceil(N/10), N, 100 N` for `N` pixels.
pub fn default_shot_budgets(pixels: usize) -> Vec<u64> {
    let n = pixels as u64;
    vec![n.div_ceil(100), n.div_ceil(10), n, 100 * n]
}

/// Rescales to `[0, 1]`; a constant image maps to zeros.
pub fn min_max_normalize(values: &[f64]) -> Vec<f64> {
    let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let span = hi - lo;
    values
        .iter()
        .map(|v| if span > 0.0 { (v - lo) / span } else { 0.0 })
        .collect()
}

fn rmse(a: &[f64], b: &[f64]) -> f64 {
    let sum: f64 = a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum();
    (sum / a.len() as f64).sqrt()
}

/// Samples an already prepared state once per budget, each with `seed`.
pub fn sample_budgets(state: &Statevector, shots: &[u64], seed: u64) -> Result<SamplingReport> {
    if shots.is_empty() {
        return Err(Error::validation("shots", "shot list is empty"));
    }
    let reference: Vec<f64> = state.amplitudes().iter().map(|z| z.norm()).collect();
    let reference_mm = min_max_normalize(&reference);
    let runs = shots
        .iter()
        .map(|&s| {
            let histogram = sample(state, s, seed)?;
            let estimate = histogram.magnitude_estimates();
            Ok(ShotResult {
                shots: s,
                rmse: rmse(&estimate, &reference),
                rmse_normalized: rmse(&min_max_normalize(&estimate), &reference_mm),
                nonzero: histogram.counts.len(),
                histogram,
                estimate,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SamplingReport {
        d: state.layout().d(),
        seed,
        reference,
        runs,
    })
}

/// Runs the pipeline on `raw`, then measures the final state under every
/// shot budget.
pub fn run_sampling_experiment(plan: &PipelinePlan, raw: &ComplexImage, shots: &[u64], seed: u64) -> Result<SamplingReport> {
    if shots.is_empty() {
        return Err(Error::validation("shots", "shot list is empty"));
    }
    let state = run_pipeline(plan, raw)?;
    sample_budgets(&state, shots, seed)
}
