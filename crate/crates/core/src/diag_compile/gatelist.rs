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

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::qsim::{Gate, Statevector};
use crate::{Error, Result};

/// Which block of the circuit a run of gates belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StageLabel {
    StatePrep,
    Qft,
    RangeCompression,
    Rcmc,
    AzimuthCompression,
    Diagonal,
}

impl StageLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            StageLabel::StatePrep => "state-prep",
            StageLabel::Qft => "qft",
            StageLabel::RangeCompression => "range-compression",
            StageLabel::Rcmc => "rcmc",
            StageLabel::AzimuthCompression => "azimuth-compression",
            StageLabel::Diagonal => "diagonal",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StageSpan {
    pub label: StageLabel,
    pub start: usize,
    pub end: usize,
}

/// Ordered primitive gates with stage spans, a tracked global phase and
/// running gate counters.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct GateList {
    n_qubits: usize,
    gates: Vec<Gate>,
    spans: Vec<StageSpan>,
    global_phase: f64,
    single: usize,
    two: usize,
    /// Additions spent computing Walsh coefficients.
    pub fwht_ops: u64,
    /// Wall time of that preprocessing.
    pub fwht_seconds: f64,
}

#[derive(Serialize)]
struct Metadata<'a> {
    n_qubits: usize,
    gates: usize,
    single_qubit: usize,
    two_qubit: usize,
    by_name: BTreeMap<&'static str, usize>,
    global_phase: f64,
    fwht_ops: u64,
    fwht_seconds: f64,
    stages: Vec<StageMeta<'a>>,
}

#[derive(Serialize)]
struct StageMeta<'a> {
    label: &'a str,
    start: usize,
    end: usize,
    single_qubit: usize,
    two_qubit: usize,
}

impl GateList {
    pub fn new(n_qubits: usize) -> Self {
        GateList {
            n_qubits,
            ..Default::default()
        }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn spans(&self) -> &[StageSpan] {
        &self.spans
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn global_phase(&self) -> f64 {
        self.global_phase
    }

    pub fn add_global_phase(&mut self, phase: f64) {
        self.global_phase += phase;
    }

    /// Appends a gate. The qubit must be below `n_qubits`.
    pub fn push(&mut self, gate: Gate) {
        assert!(gate.max_qubit() < self.n_qubits, "{gate} exceeds {} qubits", self.n_qubits);
        if gate.is_two_qubit() {
            self.two += 1;
        } else {
            self.single += 1;
        }
        self.gates.push(gate);
    }

    /// Appends all of `other` as one stage, carrying over its global phase
    /// and preprocessing cost. The width grows if `other` is wider.
    pub fn append_stage(&mut self, label: StageLabel, other: GateList) {
        self.n_qubits = self.n_qubits.max(other.n_qubits);
        let start = self.gates.len();
        for g in other.gates {
            self.push(g);
        }
        self.spans.push(StageSpan {
            label,
            start,
            end: self.gates.len(),
        });
        self.global_phase += other.global_phase;
        self.fwht_ops += other.fwht_ops;
        self.fwht_seconds += other.fwht_seconds;
    }

    /// Appends raw gates as a labeled stage.
    pub fn push_stage(&mut self, label: StageLabel, gates: impl IntoIterator<Item = Gate>) {
        let start = self.gates.len();
        for g in gates {
            self.push(g);
        }
        self.spans.push(StageSpan {
            label,
            start,
            end: self.gates.len(),
        });
    }

    /// `(single-qubit, two-qubit)` counters.
    pub fn counts(&self) -> (usize, usize) {
        (self.single, self.two)
    }

    /// Counts from scratch; always equals [`counts`](Self::counts).
    pub fn recount(&self) -> (usize, usize) {
        count(&self.gates)
    }

    /// `(single, two)` summed over every span with `label`.
    pub fn counts_for(&self, label: StageLabel) -> (usize, usize) {
        self.spans
            .iter()
            .filter(|s| s.label == label)
            .map(|s| count(&self.gates[s.start..s.end]))
            .fold((0, 0), |a, b| (a.0 + b.0, a.1 + b.1))
    }

    pub fn count_named(&self, name: &str) -> usize {
        self.gates.iter().filter(|g| g.name() == name).count()
    }

    /// Applies every gate, then the tracked global phase.
    pub fn apply(&self, state: &mut Statevector) -> Result<()> {
        state.apply_gates(&self.gates)?;
        if self.global_phase != 0.0 {
            let ph = Complex64::from_polar(1.0, self.global_phase);
            let amps: Vec<_> = state.amplitudes().iter().map(|z| z * ph).collect();
            *state = Statevector::from_amplitudes(state.layout(), amps)?;
        }
        Ok(())
    }

    /// One gate per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for g in &self.gates {
            writeln!(out, "{g}").unwrap();
        }
        out
    }

    /// Parses the line format; blank lines and `#` comments are skipped.
    pub fn from_text(n_qubits: usize, text: &str) -> Result<Self> {
        let mut list = GateList::new(n_qubits);
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            let g: Gate = line.parse()?;
            if g.max_qubit() >= n_qubits {
                return Err(Error::QubitIndex {
                    index: g.max_qubit(),
                    n: n_qubits,
                });
            }
            list.push(g);
        }
        Ok(list)
    }

    pub fn metadata_json(&self) -> serde_json::Value {
        let mut by_name = BTreeMap::new();
        for g in &self.gates {
            *by_name.entry(g.name()).or_insert(0) += 1;
        }
        let stages = self
            .spans
            .iter()
            .map(|s| {
                let (single_qubit, two_qubit) = count(&self.gates[s.start..s.end]);
                StageMeta {
                    label: s.label.as_str(),
                    start: s.start,
                    end: s.end,
                    single_qubit,
                    two_qubit,
                }
            })
            .collect();
        serde_json::to_value(Metadata {
            n_qubits: self.n_qubits,
            gates: self.gates.len(),
            single_qubit: self.single,
            two_qubit: self.two,
            by_name,
            global_phase: self.global_phase,
            fwht_ops: self.fwht_ops,
            fwht_seconds: self.fwht_seconds,
            stages,
        })
        .expect("metadata serializes")
    }

    /// Rebuilds a list from gates and spans, recomputing counters.
    pub(crate) fn from_parts(n_qubits: usize, gates: Vec<Gate>, spans: Vec<StageSpan>, template: &GateList) -> Self {
        let (single, two) = count(&gates);
        GateList {
            n_qubits,
            gates,
            spans,
            global_phase: template.global_phase,
            single,
            two,
            fwht_ops: template.fwht_ops,
            fwht_seconds: template.fwht_seconds,
        }
    }
}

fn count(gates: &[Gate]) -> (usize, usize) {
    gates.iter().fold((0, 0), |(s, t), g| if g.is_two_qubit() { (s, t + 1) } else { (s + 1, t) })
}
