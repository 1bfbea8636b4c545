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

use crate::{Error, Result};

/// Real phases `theta_x` of the diagonal `diag(e^{i theta_x})` on `m` qubits.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PhaseVector {
    theta: Vec<f64>,
}

impl PhaseVector {
    pub fn new(theta: Vec<f64>) -> Result<Self> {
        if theta.is_empty() || !theta.len().is_power_of_two() {
            return Err(Error::validation(
                "phase vector",
                format!("length {} is not a power of two", theta.len()),
            ));
        }
        if let Some(k) = theta.iter().position(|t| !t.is_finite()) {
            return Err(Error::validation("phase vector", format!("entry {k} is not finite")));
        }
        Ok(PhaseVector { theta })
    }

    pub fn zeros(m: usize) -> Self {
        PhaseVector {
            theta: vec![0.0; 1 << m],
        }
    }

    pub fn m(&self) -> usize {
        self.theta.len().trailing_zeros() as usize
    }

    pub fn len(&self) -> usize {
        self.theta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.theta.is_empty()
    }

    pub fn theta(&self) -> &[f64] {
        &self.theta
    }
}

/// Walsh-series coefficients of a phase vector together with the number of
/// additions and subtractions the transform took.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WalshCoefficients {
    pub coeffs: Vec<f64>,
    pub ops: u64,
}

impl WalshCoefficients {
    pub fn m(&self) -> usize {
        self.coeffs.len().trailing_zeros() as usize
    }

    /// The global-phase term `a_0`.
    pub fn global_phase(&self) -> f64 {
        self.coeffs[0]
    }

    /// Evaluates `sum_j a_j w_j(x)` for every `x` by the inverse transform.
    pub fn reconstruct(&self) -> Vec<f64> {
        let mut v = self.coeffs.clone();
        fwht(&mut v);
        v
    }
}

/// Unnormalized in-place fast Walsh-Hadamard transform. Returns the number
/// of additions and subtractions performed (`m 2^m`).
pub fn fwht(data: &mut [f64]) -> u64 {
    let len = data.len();
    assert!(len.is_power_of_two(), "FWHT length must be a power of two");
    let mut ops = 0u64;
    let mut h = 1;
    while h < len {
        for base in (0..len).step_by(2 * h) {
            for k in base..base + h {
                let (x, y) = (data[k], data[k + h]);
                data[k] = x + y;
                data[k + h] = x - y;
            }
        }
        ops += len as u64;
        h *= 2;
    }
    ops
}

/// `a = FWHT(theta) / 2^m`, so that `theta(x) = sum_j a_j (-1)^{popcount(j & x)}`.
pub fn walsh_coefficients(theta: &PhaseVector) -> WalshCoefficients {
    let mut coeffs = theta.theta().to_vec();
    let ops = fwht(&mut coeffs);
    let scale = 1.0 / coeffs.len() as f64;
    coeffs.iter_mut().for_each(|a| *a *= scale);
    WalshCoefficients { coeffs, ops }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn walsh(j: usize, x: usize) -> f64 {
        if (j & x).count_ones() % 2 == 0 {
            1.0
        } else {
            -1.0
        }
    }

    #[test]
    fn constant_has_only_the_global_term() {
        let w = walsh_coefficients(&PhaseVector::new(vec![0.3; 16]).unwrap());
        assert!((w.coeffs[0] - 0.3).abs() < 1e-15);
        assert!(w.coeffs[1..].iter().all(|a| a.abs() < 1e-15));
    }

    #[test]
    fn scaled_walsh_function_is_one_term() {
        let theta: Vec<f64> = (0..8).map(|x| 0.7 * walsh(1, x)).collect();
        let w = walsh_coefficients(&PhaseVector::new(theta).unwrap());
        for (j, a) in w.coeffs.iter().enumerate() {
            let want = if j == 1 { 0.7 } else { 0.0 };
            assert!((a - want).abs() < 1e-15, "a_{j} = {a}");
        }
    }

    #[test]
    fn reconstruction_against_brute_force_sum() {
        let theta: Vec<f64> = (0..64).map(|k| ((k * 37 % 64) as f64 * 0.173).sin() * 3.0).collect();
        let w = walsh_coefficients(&PhaseVector::new(theta.clone()).unwrap());
        for x in 0..64 {
            let sum: f64 = (0..64).map(|j| w.coeffs[j] * walsh(j, x)).sum();
            assert!((sum - theta[x]).abs() < 1e-11);
        }
        assert_eq!(w.ops, 6 * 64);
    }

    #[test]
    fn rejects_bad_length() {
        assert!(PhaseVector::new(vec![0.0; 6]).is_err());
        assert!(PhaseVector::new(vec![]).is_err());
        assert!(PhaseVector::new(vec![f64::INFINITY, 0.0]).is_err());
    }

    proptest! {
        #[test]
        fn round_trip(theta in prop::collection::vec(-10.0f64..10.0, 32)) {
            let w = walsh_coefficients(&PhaseVector::new(theta.clone()).unwrap());
            for (a, b) in w.reconstruct().iter().zip(&theta) {
                prop_assert!((a - b).abs() < 1e-12);
            }
        }
    }
}
