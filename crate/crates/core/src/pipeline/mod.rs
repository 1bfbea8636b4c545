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

//! The quantum range-Doppler pipeline: state preparation, the seven-stage
//! focusing circuit, sampling and gate-count reporting.
//!
//! Stages run in this order on an `n = 2 log2 d` qubit register pair:
//! QFT on range, range filter, QFT on azimuth, migration diagonal, inverse
//! QFT on range, azimuth diagonal, inverse QFT on azimuth. The phase tables
//! are the ones the classical focuser multiplies by, so both paths compute
//! the same operator.

mod complexity;
mod plan;
mod sampling;
mod state_prep;

pub use complexity::{
    complexity_report, complexity_report_with, fit_slope, ComplexityChecks, ComplexityOptions, ComplexityReport,
    ComplexityRow, QftBlock, StageCounts, DIAGONAL_SLOPE_RANGE, FWHT_SLOPE_RANGE,
};
pub use plan::{
    plan_pipeline, run_pipeline, run_pipeline_traced, CompileMode, Execution, PipelineModes, PipelinePlan, Stage,
    StageOp, StatePrepMode,
};
pub use sampling::{default_shot_budgets, min_max_normalize, run_sampling_experiment, sample_budgets, SamplingReport, ShotResult};
pub use state_prep::compile_state_prep;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qsim::encode_amplitudes;
    use crate::rda_classical::{build_filter_bank, focus_classical, range_compress, FilterBank, FilterConvention, Step};
    use crate::scene_raw::{RadarScenario, ScenarioConfig};
    use crate::{max_diff_up_to_global_phase, Complex64, ComplexImage};

    fn random_image(d: usize, seed: u64) -> ComplexImage {
        let mut x = seed;
        let mut next = || {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (x >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        let data = (0..d * d).map(|_| Complex64::new(next(), next())).collect();
        ComplexImage::from_vec(d, data).unwrap()
    }

    fn setup(d: usize) -> (RadarScenario, FilterBank) {
        let s = RadarScenario::new(&ScenarioConfig::table1_scaled(d)).unwrap();
        let bank = build_filter_bank(&s, FilterConvention::default());
        (s, bank)
    }

    fn classical_state(raw: &ComplexImage, bank: &FilterBank) -> Vec<Complex64> {
        focus_classical(raw, bank).unwrap().normalized().unwrap().into_vec()
    }

    #[test]
    fn stage_order_and_count() {
        let (s, bank) = setup(8);
        let plan = plan_pipeline(&s, &bank, PipelineModes::default()).unwrap();
        let steps: Vec<Step> = plan.stages.iter().map(|st| st.step).collect();
        assert_eq!(steps, Step::ALL.to_vec());
        let json = plan.to_json();
        assert_eq!(json["stages"].as_array().unwrap().len(), 7);
        assert_eq!(json["stages"][3]["kind"], "diagonal");
    }

    #[test]
    fn grid_mismatch_is_an_error() {
        let (s, _) = setup(8);
        assert!(plan_pipeline(&s, &FilterBank::identity(16), PipelineModes::default()).is_err());
        let mut bad = FilterBank::identity(8);
        bad.hm.pop();
        assert!(PipelinePlan::from_filters(&bad, PipelineModes::default()).is_err());
    }

    #[test]
    fn identity_plan_returns_the_input_at_d4() {
        let raw = random_image(4, 8);
        let plan = PipelinePlan::from_filters(&FilterBank::identity(4), PipelineModes::default()).unwrap();
        let out = run_pipeline(&plan, &raw).unwrap();
        let want = encode_amplitudes(&raw).unwrap();
        for (a, b) in out.amplitudes().iter().zip(want.amplitudes()) {
            assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn matches_classical_focus() {
        for (d, seed) in [(8, 1), (16, 2), (32, 3)] {
            let (s, bank) = setup(d);
            let plan = plan_pipeline(&s, &bank, PipelineModes::default()).unwrap();
            let raw = random_image(d, seed);
            let out = run_pipeline(&plan, &raw).unwrap();
            let diff = max_diff_up_to_global_phase(&classical_state(&raw, &bank), out.amplitudes());
            assert!(diff <= 1e-9, "d={d}: {diff}");
        }
    }

    #[test]
    fn every_mode_agrees_at_d8() {
        let (s, bank) = setup(8);
        let raw = random_image(8, 21);
        let base = run_pipeline(&plan_pipeline(&s, &bank, PipelineModes::default()).unwrap(), &raw).unwrap();
        for compile in [CompileMode::Fused, CompileMode::McmtExplicit] {
            for state_prep in [StatePrepMode::Inject, StatePrepMode::Compiled] {
                for execution in [Execution::Direct, Execution::Compiled] {
                    let modes = PipelineModes {
                        compile,
                        state_prep,
                        execution,
                    };
                    let out = run_pipeline(&plan_pipeline(&s, &bank, modes).unwrap(), &raw).unwrap();
                    let diff = max_diff_up_to_global_phase(base.amplitudes(), out.amplitudes());
                    assert!(diff <= 1e-9, "{modes:?}: {diff}");
                }
            }
        }
    }

    #[test]
    fn range_compression_stage_matches_classical() {
        // after the range filter the range register is still in frequency;
        // undoing that transform gives the range-compressed image
        let (s, bank) = setup(8);
        let plan = plan_pipeline(&s, &bank, PipelineModes::default()).unwrap();
        let raw = random_image(8, 31);
        let (_, trace) = run_pipeline_traced(&plan, &raw).unwrap();
        let mut state = trace[1].1.clone();
        state.qft_register(crate::qsim::Register::Range, true).unwrap();
        let want = range_compress(&raw, &bank).unwrap().normalized().unwrap();
        for (a, b) in state.amplitudes().iter().zip(want.data()) {
            assert!((a - b).norm() < 1e-10);
        }
    }

    #[test]
    fn stages_preserve_norm() {
        let (s, bank) = setup(16);
        let modes = PipelineModes {
            compile: CompileMode::McmtExplicit,
            ..Default::default()
        };
        let plan = plan_pipeline(&s, &bank, modes).unwrap();
        let (initial, trace) = run_pipeline_traced(&plan, &random_image(16, 4)).unwrap();
        assert!((initial.norm_sqr() - 1.0).abs() < 1e-12);
        for (step, st) in trace {
            assert!((st.norm_sqr() - 1.0).abs() < 1e-10, "{step:?}");
        }
    }

    #[test]
    fn zero_phases_leave_the_state() {
        let raw = random_image(8, 5);
        let modes = PipelineModes {
            execution: Execution::Compiled,
            ..Default::default()
        };
        let plan = PipelinePlan::from_filters(&FilterBank::identity(8), modes).unwrap();
        let out = run_pipeline(&plan, &raw).unwrap();
        let want = encode_amplitudes(&raw).unwrap();
        assert!(max_diff_up_to_global_phase(want.amplitudes(), out.amplitudes()) < 1e-12);
    }

    #[test]
    fn compiled_circuit_has_labeled_spans() {
        let (s, bank) = setup(8);
        let plan = plan_pipeline(&s, &bank, PipelineModes::default()).unwrap();
        let list = plan.compile().unwrap();
        assert_eq!(list.spans().len(), 7);
        let (_, two) = list.counts_for(crate::diag_compile::StageLabel::Rcmc);
        assert_eq!(two, 64 - 2);
    }
}
