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

use super::{compile_diagonal, GateList, PhaseVector, StageSpan};
use crate::qsim::{Gate, Register};
use crate::{Error, Result};

/// Controlled diagonal `U ⊗ |value><value| + I ⊗ (1 - |value><value|)`:
/// `u` acts on `targets` when `controls` (most significant first) hold
/// `value`.
///
/// Built as an X layer flipping every control whose bit of `value` is 0,
/// the diagonal controlled on all-ones, and the same X layer again. The
/// all-ones-controlled diagonal is compiled as one diagonal over
/// `targets ++ controls` that is zero outside the all-ones control block.
pub fn build_mcmt(u: &PhaseVector, targets: &[usize], controls: &[usize], value: usize) -> Result<GateList> {
    let k = controls.len();
    if value >= 1 << k {
        return Err(Error::validation(
            "control value",
            format!("{value} does not fit in {k} control qubits"),
        ));
    }
    if u.m() != targets.len() {
        return Err(Error::Dimension {
            expected: u.m(),
            actual: targets.len(),
        });
    }
    if let Some(q) = targets.iter().find(|q| controls.contains(q)) {
        return Err(Error::RepeatedQubit(*q));
    }

    let all_ones = (1 << k) - 1;
    let mut theta = vec![0.0; u.len() << k];
    for (t, &phase) in u.theta().iter().enumerate() {
        theta[(t << k) | all_ones] = phase;
    }
    let qubits: Vec<usize> = targets.iter().chain(controls).copied().collect();
    let core = compile_diagonal(&PhaseVector::new(theta)?, &qubits)?;

    let flips: Vec<Gate> = controls
        .iter()
        .enumerate()
        .filter(|(t, _)| (value >> (k - 1 - t)) & 1 == 0)
        .map(|(_, &q)| Gate::X(q))
        .collect();
    let mut out = GateList::new(core.n_qubits());
    for g in &flips {
        out.push(*g);
    }
    let phase = core.global_phase();
    let (ops, secs) = (core.fwht_ops, core.fwht_seconds);
    for g in core.gates() {
        out.push(*g);
    }
    for g in &flips {
        out.push(*g);
    }
    out.add_global_phase(phase);
    out.fwht_ops = ops;
    out.fwht_seconds = secs;
    Ok(out)
}

/// Collapses a full sequence of controlled diagonals (one per value of the
/// control register) into one diagonal over both registers.
///
/// With `control == Azimuth` entry `l * d + k` is the phase of `U^k` at `l`;
/// with `control == Range` entry `i * d + j` is the phase of `U^i` at `j`.
pub fn fuse_controlled_sequence(sequence: &[(usize, PhaseVector)], control: Register) -> Result<PhaseVector> {
    let d = sequence.len();
    if d < 2 || !d.is_power_of_two() {
        return Err(Error::validation(
            "sequence",
            format!("need one factor per control value, got {d}"),
        ));
    }
    let mut seen = vec![false; d];
    let mut out = vec![0.0; d * d];
    for (value, u) in sequence {
        if *value >= d || seen[*value] {
            return Err(Error::validation("sequence", format!("control value {value} repeated or out of range")));
        }
        seen[*value] = true;
        if u.len() != d {
            return Err(Error::Dimension {
                expected: d,
                actual: u.len(),
            });
        }
        for (t, &phase) in u.theta().iter().enumerate() {
            let idx = match control {
                Register::Azimuth => t * d + value,
                Register::Range => value * d + t,
            };
            out[idx] += phase;
        }
    }
    PhaseVector::new(out)
}

/// Replaces every run of consecutive X gates by one X per qubit that is
/// flipped an odd number of times in the run. Runs never cross stage spans.
pub fn xor_merge_xlayers(list: &GateList) -> GateList {
    let n = list.n_qubits();
    let gates = list.gates();
    let mut out = Vec::with_capacity(gates.len());
    let mut spans = Vec::with_capacity(list.spans().len());

    let merge = |range: std::ops::Range<usize>, out: &mut Vec<Gate>| {
        let mut parity = vec![false; n];
        let mut pending = false;
        let flush = |parity: &mut Vec<bool>, out: &mut Vec<Gate>| {
            for (q, p) in parity.iter_mut().enumerate() {
                if *p {
                    out.push(Gate::X(q));
                    *p = false;
                }
            }
        };
        for g in &gates[range] {
            match g {
                Gate::X(q) => {
                    parity[*q] ^= true;
                    pending = true;
                }
                other => {
                    if pending {
                        flush(&mut parity, out);
                        pending = false;
                    }
                    out.push(*other);
                }
            }
        }
        flush(&mut parity, out);
    };

    let mut cursor = 0;
    for span in list.spans() {
        if span.start > cursor {
            merge(cursor..span.start, &mut out);
        }
        let start = out.len();
        merge(span.start..span.end, &mut out);
        spans.push(StageSpan {
            label: span.label,
            start,
            end: out.len(),
        });
        cursor = span.end;
    }
    if cursor < gates.len() {
        merge(cursor..gates.len(), &mut out);
    }
    GateList::from_parts(n, out, spans, list)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diag_compile::StageLabel;
    use crate::qsim::{RegisterLayout, Statevector};
    use num_complex::Complex64;

    fn lcg(seed: u64) -> impl FnMut() -> f64 {
        let mut x = seed;
        move || {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (x >> 11) as f64 / (1u64 << 53) as f64
        }
    }

    fn dense(list: &GateList, layout: RegisterLayout) -> Vec<Vec<Complex64>> {
        (0..layout.dim())
            .map(|col| {
                let mut amps = vec![Complex64::new(0.0, 0.0); layout.dim()];
                amps[col] = Complex64::new(1.0, 0.0);
                let mut s = Statevector::from_amplitudes(layout, amps).unwrap();
                list.apply(&mut s).unwrap();
                s.into_amplitudes()
            })
            .collect()
    }

    #[test]
    fn all_ones_value_has_no_x_layer() {
        let u = PhaseVector::new(vec![0.0, 0.4, 0.1, -0.3]).unwrap();
        let g = build_mcmt(&u, &[0, 1], &[2, 3], 3).unwrap();
        assert_eq!(g.count_named("X"), 0);
    }

    #[test]
    fn zero_value_flips_every_control_twice() {
        let u = PhaseVector::new(vec![0.0, 0.4, 0.1, -0.3]).unwrap();
        let g = build_mcmt(&u, &[0, 1], &[2, 3], 0).unwrap();
        assert_eq!(g.count_named("X"), 4);
        assert_eq!(g.gates()[..2], [Gate::X(2), Gate::X(3)]);
        assert!(build_mcmt(&u, &[0, 1], &[2, 3], 4).is_err());
    }

    #[test]
    fn mcmt_matches_projector_sum_at_d8() {
        let layout = RegisterLayout::for_side(8).unwrap();
        let mut rnd = lcg(99);
        let theta: Vec<f64> = (0..8).map(|_| (rnd() - 0.5) * 6.0).collect();
        let u = PhaseVector::new(theta.clone()).unwrap();
        let g = build_mcmt(&u, &[0, 1, 2], &[3, 4, 5], 5).unwrap();
        let m = dense(&g, layout);
        for col in 0..64 {
            let (l, k) = (col >> 3, col & 7);
            let want = if k == 5 {
                Complex64::from_polar(1.0, theta[l])
            } else {
                Complex64::new(1.0, 0.0)
            };
            for row in 0..64 {
                let w = if row == col { want } else { Complex64::new(0.0, 0.0) };
                assert!((m[col][row] - w).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn fuse_identity_and_two_by_two() {
        let seq: Vec<_> = (0..4).map(|i| (i, PhaseVector::zeros(2))).collect();
        let f = fuse_controlled_sequence(&seq, Register::Azimuth).unwrap();
        assert!(f.theta().iter().all(|t| *t == 0.0));

        let half_pi = std::f64::consts::FRAC_PI_2;
        let seq = vec![
            (0, PhaseVector::new(vec![0.0, half_pi]).unwrap()),
            (1, PhaseVector::zeros(1)),
        ];
        let f = fuse_controlled_sequence(&seq, Register::Azimuth).unwrap();
        assert_eq!(f.theta(), &[0.0, 0.0, half_pi, 0.0]);
        let f = fuse_controlled_sequence(&seq, Register::Range).unwrap();
        assert_eq!(f.theta(), &[0.0, half_pi, 0.0, 0.0]);
    }

    #[test]
    fn fuse_rejects_bad_sequences() {
        let seq = vec![(0, PhaseVector::zeros(1)), (0, PhaseVector::zeros(1))];
        assert!(fuse_controlled_sequence(&seq, Register::Range).is_err());
        let seq = vec![(0, PhaseVector::zeros(1)), (1, PhaseVector::zeros(2))];
        assert!(fuse_controlled_sequence(&seq, Register::Range).is_err());
        let seq = vec![(0, PhaseVector::zeros(1))];
        assert!(fuse_controlled_sequence(&seq, Register::Range).is_err());
    }

    #[test]
    fn xor_merge_cancels_and_combines() {
        let mut l = GateList::new(3);
        l.push_stage(StageLabel::Rcmc, [Gate::X(0), Gate::X(1), Gate::X(0), Gate::X(1), Gate::H(2)]);
        let m = xor_merge_xlayers(&l);
        assert_eq!(m.gates(), &[Gate::H(2)]);

        let mut l = GateList::new(3);
        // i = 0 layer (all flips) followed by i = d - 1 layer (none)
        l.push_stage(StageLabel::Rcmc, [Gate::X(0), Gate::X(1), Gate::X(2), Gate::H(0)]);
        assert_eq!(xor_merge_xlayers(&l).count_named("X"), 3);
    }

    #[test]
    fn merged_sequence_equals_unmerged_at_d8() {
        let layout = RegisterLayout::for_side(8).unwrap();
        let mut rnd = lcg(4);
        let mut list = GateList::new(6);
        let mut body = GateList::new(6);
        for value in [2usize, 3] {
            let theta: Vec<f64> = (0..8).map(|_| rnd() * 3.0).collect();
            let g = build_mcmt(&PhaseVector::new(theta).unwrap(), &[0, 1, 2], &[3, 4, 5], value).unwrap();
            body.append_stage(StageLabel::Rcmc, g);
        }
        let gates: Vec<Gate> = body.gates().to_vec();
        list.push_stage(StageLabel::Rcmc, gates);
        list.add_global_phase(body.global_phase());
        let merged = xor_merge_xlayers(&list);
        assert!(merged.count_named("X") < list.count_named("X"));
        assert!(merged.len() <= list.len());
        let (a, b) = (dense(&list, layout), dense(&merged, layout));
        for c in 0..64 {
            for r in 0..64 {
                assert!((a[c][r] - b[c][r]).norm() < 1e-12);
            }
        }
    }
}
