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

use std::f64::consts::{FRAC_PI_2, PI};

use crate::diag_compile::{compile_diagonal, multiplexed_rotation, GateList, PhaseVector, StageLabel};
use crate::qsim::Gate;
use crate::{ComplexImage, Result};

const PEEPHOLE_TOL: f64 = 1e-12;

/// Replaces entries marked `None` with the first defined value, so that
/// branches of zero weight add no Walsh terms.
fn fill_undefined(values: &[Option<f64>]) -> Vec<f64> {
    let fill = values.iter().flatten().next().copied().unwrap_or(0.0);
    values.iter().map(|v| v.unwrap_or(fill)).collect()
}

/// A lone RY on a qubit still in `|0>` is replaced by X or H where it
/// produces the same state.
fn peephole_fresh(list: GateList) -> GateList {
    if let [Gate::Ry(q, theta)] = list.gates() {
        let (q, theta) = (*q, *theta);
        let mut out = GateList::new(list.n_qubits());
        if (theta - PI).abs() < PEEPHOLE_TOL {
            out.push(Gate::X(q));
            return out;
        }
        if (theta - FRAC_PI_2).abs() < PEEPHOLE_TOL {
            out.push(Gate::H(q));
            return out;
        }
    }
    list
}

/// Ancilla-free state preparation: a binary tree of multiplexed RY
/// rotations sets the magnitudes, one diagonal over all qubits sets the
/// phases. Running the result on `|0...0>` reproduces
/// [`encode_amplitudes`](crate::qsim::encode_amplitudes) of `img`.
pub fn compile_state_prep(img: &ComplexImage) -> Result<GateList> {
    let amps = img.normalized()?.into_vec();
    let n = amps.len().trailing_zeros() as usize;
    let weights: Vec<f64> = amps.iter().map(|z| z.norm_sqr()).collect();
    let mut out = GateList::new(n);

    for t in 0..n {
        let block = 1usize << (n - t);
        let half = block / 2;
        let angles: Vec<Option<f64>> = (0..1usize << t)
            .map(|p| {
                let lo: f64 = weights[p * block..p * block + half].iter().sum();
                let hi: f64 = weights[p * block + half..(p + 1) * block].iter().sum();
                (lo + hi > 0.0).then(|| 2.0 * hi.sqrt().atan2(lo.sqrt()))
            })
            .collect();
        let controls: Vec<usize> = (0..t).collect();
        let level = multiplexed_rotation(&fill_undefined(&angles), t, &controls, Gate::Ry)?;
        out.append_stage(StageLabel::StatePrep, peephole_fresh(level));
    }

    let phases: Vec<Option<f64>> = amps.iter().map(|z| (z.norm() > 0.0).then(|| z.arg())).collect();
    let qubits: Vec<usize> = (0..n).collect();
    let diag = compile_diagonal(&PhaseVector::new(fill_undefined(&phases))?, &qubits)?;
    out.append_stage(StageLabel::StatePrep, diag);
    Ok(out)
}
