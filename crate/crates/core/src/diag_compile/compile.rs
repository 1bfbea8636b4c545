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

use std::time::Instant;

use super::{walsh_coefficients, GateList, PhaseVector};
use crate::qsim::Gate;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TermOrdering {
    /// Gray-code walk; one CNOT between consecutive rotations.
    Gray,
    /// Every term conjugated by its own CNOT ladder. Reference only.
    Naive,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CompileOptions {
    /// Walsh coefficients with `|a_j|` at or below this are dropped.
    pub zero_threshold: f64,
    pub ordering: TermOrdering,
}

impl Default for CompileOptions {
    fn default() -> Self {
        CompileOptions {
            zero_threshold: 1e-14,
            ordering: TermOrdering::Gray,
        }
    }
}

/// Emits a rotation multiplexed over `controls`: on control value `p` the
/// target receives the rotation angle `sum_r coeff(r) (-1)^{popcount(r & p)}`,
/// where bit `t` of `r` and `p` refers to `controls[t]`.
///
/// The walk keeps a running parity set folded into the target by CNOTs, emits
/// `rotation(target, coeff(r))` once the set equals `r`, and returns to the
/// empty set at the end.
fn walk(
    out: &mut GateList,
    target: usize,
    controls: &[usize],
    coeff: impl Fn(usize) -> f64,
    opts: CompileOptions,
    rotation: impl Fn(usize, f64) -> Gate,
) {
    let h = controls.len();
    let mut current = 0usize;
    let flip = |out: &mut GateList, from: usize, to: usize| {
        let mut diff = from ^ to;
        while diff != 0 {
            let t = diff.trailing_zeros() as usize;
            out.push(Gate::Cx {
                control: controls[t],
                target,
            });
            diff &= diff - 1;
        }
    };
    for k in 0..1usize << h {
        let r = match opts.ordering {
            TermOrdering::Gray => k ^ (k >> 1),
            TermOrdering::Naive => k,
        };
        let a = coeff(r);
        if a.abs() <= opts.zero_threshold {
            continue;
        }
        flip(out, current, r);
        out.push(rotation(target, a));
        current = r;
        if opts.ordering == TermOrdering::Naive {
            flip(out, current, 0);
            current = 0;
        }
    }
    flip(out, current, 0);
}

/// Compiles `diag(e^{i theta})` on `targets` with default options.
pub fn compile_diagonal(theta: &PhaseVector, targets: &[usize]) -> Result<GateList> {
    compile_diagonal_with(theta, targets, CompileOptions::default())
}

pub fn compile_diagonal_with(theta: &PhaseVector, targets: &[usize], opts: CompileOptions) -> Result<GateList> {
    let m = theta.m();
    if targets.len() != m {
        return Err(Error::Dimension {
            expected: m,
            actual: targets.len(),
        });
    }
    for (k, q) in targets.iter().enumerate() {
        if targets[..k].contains(q) {
            return Err(Error::RepeatedQubit(*q));
        }
    }
    let width = targets.iter().max().map_or(0, |q| q + 1);
    let mut out = GateList::new(width);

    let started = Instant::now();
    let walsh = walsh_coefficients(theta);
    out.fwht_seconds = started.elapsed().as_secs_f64();
    out.fwht_ops = walsh.ops;
    out.add_global_phase(walsh.global_phase());

    // bit p of an index belongs to targets[m - 1 - p]
    let qubit_of_bit = |p: usize| targets[m - 1 - p];
    for p in 0..m {
        let controls: Vec<usize> = (p + 1..m).map(qubit_of_bit).collect();
        let coeff = |r: usize| walsh.coeffs[(r << (p + 1)) | (1 << p)];
        walk(&mut out, qubit_of_bit(p), &controls, coeff, opts, |q, a| Gate::Rz(q, -2.0 * a));
    }
    Ok(out)
}

/// Uniformly controlled rotation: for control value `p` (bit `t` of `p` on
/// `controls[t]`, most significant first) apply `rotation(target, angles[p])`.
/// `rotation` must build a rotation about an axis that CNOT conjugation
/// negates (RY or RZ).
pub fn multiplexed_rotation(
    angles: &[f64],
    target: usize,
    controls: &[usize],
    rotation: impl Fn(usize, f64) -> Gate,
) -> Result<GateList> {
    let k = controls.len();
    let theta = PhaseVector::new(angles.to_vec())?;
    if theta.m() != k {
        return Err(Error::Dimension {
            expected: 1 << k,
            actual: angles.len(),
        });
    }
    let walsh = walsh_coefficients(&theta);
    let width = controls.iter().chain(std::iter::once(&target)).max().map_or(0, |q| q + 1);
    let mut out = GateList::new(width);
    out.fwht_ops = walsh.ops;
    // local bit t of the walk is index bit t, i.e. controls[k - 1 - t]
    let by_bit: Vec<usize> = (0..k).map(|t| controls[k - 1 - t]).collect();
    walk(&mut out, target, &by_bit, |r| walsh.coeffs[r], CompileOptions::default(), rotation);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qsim::{RegisterLayout, Statevector};
    use num_complex::Complex64;

    fn lcg(seed: u64) -> impl FnMut() -> f64 {
        let mut x = seed;
        move || {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (x >> 11) as f64 / (1u64 << 53) as f64
        }
    }

    /// Dense matrix of a gate list on `n` qubits, built column by column.
    fn dense(list: &GateList, n: usize) -> Vec<Vec<Complex64>> {
        let layout = RegisterLayout { n_r: n - n / 2, n_a: n / 2 };
        (0..1 << n)
            .map(|col| {
                let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n];
                amps[col] = Complex64::new(1.0, 0.0);
                let mut s = Statevector::from_amplitudes(layout, amps).unwrap();
                list.apply(&mut s).unwrap();
                s.into_amplitudes()
            })
            .collect()
    }

    fn assert_is_diag(list: &GateList, theta: &[f64], tol: f64) {
        let n = theta.len().trailing_zeros() as usize;
        let m = dense(list, n);
        for c in 0..theta.len() {
            for r in 0..theta.len() {
                let want = if r == c {
                    Complex64::from_polar(1.0, theta[c])
                } else {
                    Complex64::new(0.0, 0.0)
                };
                assert!((m[c][r] - want).norm() < tol, "entry ({r},{c})");
            }
        }
    }

    #[test]
    fn zero_phases_emit_nothing() {
        let list = compile_diagonal(&PhaseVector::zeros(4), &[0, 1, 2, 3]).unwrap();
        assert!(list.is_empty());
        assert_eq!(list.global_phase(), 0.0);
    }

    #[test]
    fn one_qubit_is_a_single_rz() {
        let phi = 0.9;
        let theta = PhaseVector::new(vec![0.0, phi]).unwrap();
        let list = compile_diagonal(&theta, &[0]).unwrap();
        assert_eq!(list.gates(), &[Gate::Rz(0, phi)]);
        assert!((list.global_phase() - phi / 2.0).abs() < 1e-15);
    }

    #[test]
    fn six_qubits_dense_check_and_gray_saves_cnots() {
        let mut rnd = lcg(17);
        let theta: Vec<f64> = (0..64).map(|_| (rnd() - 0.5) * 8.0).collect();
        let pv = PhaseVector::new(theta.clone()).unwrap();
        let targets: Vec<usize> = (0..6).collect();
        let gray = compile_diagonal(&pv, &targets).unwrap();
        assert_is_diag(&gray, &theta, 1e-10);
        assert!(gray.len() <= 2 * 64);
        assert_eq!(gray.count_named("RZ"), 63);
        assert_eq!(gray.count_named("CX"), 62);
        let naive = compile_diagonal_with(
            &pv,
            &targets,
            CompileOptions {
                ordering: TermOrdering::Naive,
                ..Default::default()
            },
        )
        .unwrap();
        assert_is_diag(&naive, &theta, 1e-10);
        assert!(gray.count_named("CX") < naive.count_named("CX"));
    }

    #[test]
    fn permuted_targets() {
        let mut rnd = lcg(5);
        let theta: Vec<f64> = (0..16).map(|_| rnd() * 6.0).collect();
        let list = compile_diagonal(&PhaseVector::new(theta.clone()).unwrap(), &[3, 1, 0, 2]).unwrap();
        let mut expect = vec![0.0; 16];
        // index bit for qubit q is 3 - q; targets[0] = 3 is the top bit of x
        for x in 0..16 {
            let bits = [(x >> 3) & 1, (x >> 2) & 1, (x >> 1) & 1, x & 1];
            let k = bits[0] | bits[1] << 2 | bits[2] << 3 | bits[3] << 1;
            expect[k] = theta[x];
        }
        assert_is_diag(&list, &expect, 1e-10);
    }

    #[test]
    fn rejects_mismatched_targets() {
        let pv = PhaseVector::zeros(3);
        assert!(compile_diagonal(&pv, &[0, 1]).is_err());
        assert!(compile_diagonal(&pv, &[0, 1, 1]).is_err());
    }

    #[test]
    fn multiplexed_ry_matches_per_branch_rotation() {
        let angles = [0.3, -1.2, 2.0, 0.7];
        let list = multiplexed_rotation(&angles, 2, &[0, 1], Gate::Ry).unwrap();
        let layout = RegisterLayout { n_r: 2, n_a: 1 };
        for p in 0..4 {
            let mut amps = vec![Complex64::new(0.0, 0.0); 8];
            amps[p << 1] = Complex64::new(1.0, 0.0);
            let mut s = Statevector::from_amplitudes(layout, amps).unwrap();
            list.apply(&mut s).unwrap();
            let (c, sn) = ((angles[p] / 2.0).cos(), (angles[p] / 2.0).sin());
            assert!((s.amplitudes()[p << 1] - Complex64::new(c, 0.0)).norm() < 1e-12);
            assert!((s.amplitudes()[(p << 1) | 1] - Complex64::new(sn, 0.0)).norm() < 1e-12);
        }
    }
}
