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

use serde::{Deserialize, Serialize};
use serde_json::json;

use super::state_prep::compile_state_prep;
use crate::diag_compile::{build_mcmt, compile_diagonal, xor_merge_xlayers, GateList, PhaseVector, StageLabel};
use crate::qsim::{encode_amplitudes, qft_gates, DiagonalTarget, Register, RegisterLayout, Statevector};
use crate::rda_classical::{FilterBank, FilterConvention, Step};
use crate::scene_raw::RadarScenario;
use crate::{ComplexImage, Error, Result};

/// How the two controlled-diagonal sequences are represented.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CompileMode {
    /// One diagonal over both registers per sequence.
    #[default]
    Fused,
    /// One multi-controlled diagonal per control value.
    McmtExplicit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StatePrepMode {
    /// Amplitudes written straight into the simulator.
    #[default]
    Inject,
    /// Multiplexed-rotation circuit run from `|0...0>`.
    Compiled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Execution {
    /// Diagonals applied as exact phase tables, transforms as QFT circuits.
    #[default]
    Direct,
    /// Every stage compiled to primitive gates first.
    Compiled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct PipelineModes {
    pub compile: CompileMode,
    pub state_prep: StatePrepMode,
    pub execution: Execution,
}

/// Operator applied by one stage.
#[derive(Debug, Clone, PartialEq)]
pub enum StageOp {
    Qft { register: Register, inverse: bool },
    /// Phase table on one register, or on the whole state when `None`.
    Diagonal { register: Option<Register>, phases: Vec<f64> },
    /// `phases[v]` acts on the other register when `control` holds `v`.
    ControlledDiagonals { control: Register, phases: Vec<Vec<f64>> },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Stage {
    pub step: Step,
    pub op: StageOp,
}

impl Stage {
    pub fn label(&self) -> StageLabel {
        match self.step {
            Step::RangeFilter => StageLabel::RangeCompression,
            Step::Rcmc => StageLabel::Rcmc,
            Step::AzimuthFilter => StageLabel::AzimuthCompression,
            _ => StageLabel::Qft,
        }
    }

    /// Executes the stage on `state` with exact phase tables.
    pub fn apply_direct(&self, state: &mut Statevector) -> Result<()> {
        match &self.op {
            StageOp::Qft { register, inverse } => state.qft_register(*register, *inverse),
            StageOp::Diagonal { register, phases } => {
                let target = register.map_or(DiagonalTarget::All, DiagonalTarget::Register);
                state.apply_phase_angles(phases, target)
            }
            StageOp::ControlledDiagonals { control, phases } => {
                for (v, angles) in phases.iter().enumerate() {
                    state.apply_controlled_phase_angles(*control, v, angles)?;
                }
                Ok(())
            }
        }
    }

    /// Compiles the stage to primitive gates on `layout.n()` qubits.
    pub fn compile(&self, layout: RegisterLayout) -> Result<GateList> {
        let mut out = GateList::new(layout.n());
        let label = self.label();
        match &self.op {
            StageOp::Qft { register, inverse } => {
                let qubits: Vec<usize> = layout.qubits(*register).collect();
                out.push_stage(label, qft_gates(&qubits, *inverse));
            }
            StageOp::Diagonal { register, phases } => {
                let qubits: Vec<usize> = match register {
                    Some(r) => layout.qubits(*r).collect(),
                    None => (0..layout.n()).collect(),
                };
                let list = compile_diagonal(&PhaseVector::new(phases.clone())?, &qubits)?;
                out.append_stage(label, list);
            }
            StageOp::ControlledDiagonals { control, phases } => {
                let targets: Vec<usize> = layout.qubits(control.other()).collect();
                let controls: Vec<usize> = layout.qubits(*control).collect();
                let mut body = GateList::new(layout.n());
                for (v, angles) in phases.iter().enumerate() {
                    let list = build_mcmt(&PhaseVector::new(angles.clone())?, &targets, &controls, v)?;
                    body.append_stage(label, list);
                }
                let merged = xor_merge_xlayers(&body);
                let (ops, secs) = (merged.fwht_ops, merged.fwht_seconds);
                let phase = merged.global_phase();
                out.push_stage(label, merged.gates().iter().copied());
                out.add_global_phase(phase);
                out.fwht_ops = ops;
                out.fwht_seconds = secs;
            }
        }
        Ok(out)
    }

    fn describe(&self) -> serde_json::Value {
        match &self.op {
            StageOp::Qft { register, inverse } => json!({
                "step": self.step.as_str(),
                "kind": if *inverse { "iqft" } else { "qft" },
                "register": register,
            }),
            StageOp::Diagonal { register, phases } => json!({
                "step": self.step.as_str(),
                "kind": "diagonal",
                "register": register.map_or("all".into(), |r| serde_json::to_value(r).unwrap()),
                "entries": phases.len(),
            }),
            StageOp::ControlledDiagonals { control, phases } => json!({
                "step": self.step.as_str(),
                "kind": "controlled-diagonals",
                "control": control,
                "factors": phases.len(),
            }),
        }
    }
}

/// The seven-stage focusing circuit plus the modes it runs under.
#[derive(Debug, Clone, PartialEq)]
pub struct PipelinePlan {
    pub layout: RegisterLayout,
    pub stages: Vec<Stage>,
    pub modes: PipelineModes,
    pub convention: FilterConvention,
}

/// Builds the plan for `scenario` from a filter bank sampled on its grids.
pub fn plan_pipeline(scenario: &RadarScenario, filters: &FilterBank, modes: PipelineModes) -> Result<PipelinePlan> {
    if filters.d != scenario.d {
        return Err(Error::Dimension {
            expected: scenario.d,
            actual: filters.d,
        });
    }
    PipelinePlan::from_filters(filters, modes)
}

impl PipelinePlan {
    /// Builds the plan from phase tables alone.
    pub fn from_filters(filters: &FilterBank, modes: PipelineModes) -> Result<Self> {
        let d = filters.d;
        let layout = RegisterLayout::for_side(d)?;
        for (name, len, want) in [
            ("hr", filters.hr.len(), d),
            ("hm", filters.hm.len(), d * d),
            ("ha", filters.ha.len(), d * d),
        ] {
            if len != want {
                return Err(Error::validation(name, format!("grid mismatch: {len} entries, expected {want}")));
            }
        }
        let (rcmc, azimuth) = match modes.compile {
            CompileMode::Fused => (
                StageOp::Diagonal {
                    register: None,
                    phases: filters.hm.clone(),
                },
                StageOp::Diagonal {
                    register: None,
                    phases: filters.ha.clone(),
                },
            ),
            CompileMode::McmtExplicit => (
                StageOp::ControlledDiagonals {
                    control: Register::Azimuth,
                    phases: (0..d).map(|k| filters.rcmc_column(k)).collect(),
                },
                StageOp::ControlledDiagonals {
                    control: Register::Range,
                    phases: (0..d).map(|i| filters.azimuth_row(i)).collect(),
                },
            ),
        };
        let qft = |register, inverse| StageOp::Qft { register, inverse };
        let ops = [
            qft(Register::Range, false),
            StageOp::Diagonal {
                register: Some(Register::Range),
                phases: filters.hr.clone(),
            },
            qft(Register::Azimuth, false),
            rcmc,
            qft(Register::Range, true),
            azimuth,
            qft(Register::Azimuth, true),
        ];
        let stages = Step::ALL.into_iter().zip(ops).map(|(step, op)| Stage { step, op }).collect();
        Ok(PipelinePlan {
            layout,
            stages,
            modes,
            convention: filters.convention,
        })
    }

    pub fn d(&self) -> usize {
        self.layout.d()
    }

    /// The focusing circuit as one gate list, one span per stage. State
    /// preparation is not included.
    pub fn compile(&self) -> Result<GateList> {
        let mut out = GateList::new(self.layout.n());
        for stage in &self.stages {
            out.append_stage(stage.label(), stage.compile(self.layout)?);
        }
        Ok(out)
    }

    /// Initial state for `raw` under the plan's state-preparation mode.
    pub fn prepare(&self, raw: &ComplexImage) -> Result<Statevector> {
        if raw.d() != self.d() {
            return Err(Error::Dimension {
                expected: self.d(),
                actual: raw.d(),
            });
        }
        match self.modes.state_prep {
            StatePrepMode::Inject => encode_amplitudes(raw),
            StatePrepMode::Compiled => {
                let mut state = Statevector::zero(self.layout);
                compile_state_prep(raw)?.apply(&mut state)?;
                Ok(state)
            }
        }
    }

    fn run_stage(&self, stage: &Stage, state: &mut Statevector) -> Result<()> {
        match self.modes.execution {
            Execution::Direct => stage.apply_direct(state),
            Execution::Compiled => stage.compile(self.layout)?.apply(state),
        }
    }

    /// Structural summary for export; phase tables are omitted.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "d": self.d(),
            "n_qubits": self.layout.n(),
            "modes": self.modes,
            "convention": self.convention,
            "stages": self.stages.iter().map(Stage::describe).collect::<Vec<_>>(),
        })
    }
}

/// Prepares `raw` and runs every stage.
pub fn run_pipeline(plan: &PipelinePlan, raw: &ComplexImage) -> Result<Statevector> {
    let mut state = plan.prepare(raw)?;
    for stage in &plan.stages {
        plan.run_stage(stage, &mut state)?;
    }
    Ok(state)
}

/// Like [`run_pipeline`], also returning the state after every stage.
pub fn run_pipeline_traced(plan: &PipelinePlan, raw: &ComplexImage) -> Result<(Statevector, Vec<(Step, Statevector)>)> {
    let mut state = plan.prepare(raw)?;
    let initial = state.clone();
    let mut trace = Vec::with_capacity(plan.stages.len());
    for stage in &plan.stages {
        plan.run_stage(stage, &mut state)?;
        trace.push((stage.step, state.clone()));
    }
    Ok((initial, trace))
}
