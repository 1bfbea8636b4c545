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

use rand::distributions::{Distribution, WeightedIndex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::Statevector;
use crate::{Error, Result};

/// Outcome counts of `shots` computational-basis measurements.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementHistogram {
    pub shots: u64,
    /// Number of possible outcomes, `2^n`.
    pub outcomes: usize,
    pub counts: BTreeMap<usize, u64>,
}

impl MeasurementHistogram {
    pub fn frequency(&self, index: usize) -> f64 {
        self.counts.get(&index).copied().unwrap_or(0) as f64 / self.shots as f64
    }

    /// Estimated probability of every outcome.
    pub fn frequencies(&self) -> Vec<f64> {
        let mut p = vec![0.0; self.outcomes];
        for (&k, &c) in &self.counts {
            p[k] = c as f64 / self.shots as f64;
        }
        p
    }

    /// Square roots of the estimated probabilities, i.e. pixel magnitudes.
    pub fn magnitude_estimates(&self) -> Vec<f64> {
        self.frequencies().into_iter().map(f64::sqrt).collect()
    }
}

/// Draws `shots` independent outcomes from `|amps|^2`. The same seed always
/// gives the same histogram.
pub fn sample(state: &Statevector, shots: u64, seed: u64) -> Result<MeasurementHistogram> {
    if shots == 0 {
        return Err(Error::validation("shots", "must be at least 1"));
    }
    let probs = state.probabilities();
    let dist = WeightedIndex::new(&probs).map_err(|e| Error::validation("state", e.to_string()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts = BTreeMap::new();
    for _ in 0..shots {
        *counts.entry(dist.sample(&mut rng)).or_insert(0u64) += 1;
    }
    Ok(MeasurementHistogram {
        shots,
        outcomes: probs.len(),
        counts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qsim::RegisterLayout;
    use num_complex::Complex64;

    #[test]
    fn basis_state_always_lands_on_itself() {
        let layout = RegisterLayout::for_qubits(4).unwrap();
        let mut amps = vec![Complex64::new(0.0, 0.0); 16];
        amps[5] = Complex64::new(0.0, 1.0);
        let s = Statevector::from_amplitudes(layout, amps).unwrap();
        let h = sample(&s, 1000, 1).unwrap();
        assert_eq!(h.counts.len(), 1);
        assert_eq!(h.counts[&5], 1000);
    }

    #[test]
    fn uniform_two_qubits_within_three_sigma() {
        let layout = RegisterLayout::for_qubits(2).unwrap();
        let s = Statevector::from_amplitudes(layout, vec![Complex64::new(0.5, 0.0); 4]).unwrap();
        let shots = 1_000_000;
        let h = sample(&s, shots, 42).unwrap();
        assert_eq!(h.counts.values().sum::<u64>(), shots);
        let sigma = (0.25f64 * 0.75 / shots as f64).sqrt();
        for k in 0..4 {
            assert!((h.frequency(k) - 0.25).abs() <= 3.0 * sigma, "outcome {k}");
        }
    }

    #[test]
    fn large_sample_concentrates_on_every_outcome() {
        let layout = RegisterLayout::for_qubits(4).unwrap();
        let raw: Vec<_> = (0..16).map(|k| Complex64::new(1.0 + k as f64, 0.5)).collect();
        let norm = raw.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let s = Statevector::from_amplitudes(layout, raw.iter().map(|z| z / norm).collect()).unwrap();
        let shots = 1_000_000;
        let h = sample(&s, shots, 7).unwrap();
        for (k, p) in s.probabilities().into_iter().enumerate() {
            let sigma = (p * (1.0 - p) / shots as f64).sqrt();
            assert!((h.frequency(k) - p).abs() <= 5.0 * sigma, "outcome {k}");
        }
    }

    #[test]
    fn seeded_and_rejects_zero_shots() {
        let layout = RegisterLayout::for_qubits(2).unwrap();
        let s = Statevector::from_amplitudes(layout, vec![Complex64::new(0.5, 0.0); 4]).unwrap();
        assert_eq!(sample(&s, 500, 9).unwrap(), sample(&s, 500, 9).unwrap());
        assert!(sample(&s, 0, 9).is_err());
    }
}
