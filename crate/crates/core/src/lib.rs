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

//! Range-Doppler focusing of SAR raw data on a classical FFT pipeline and on
//! an exactly simulated quantum circuit.
//!
//! The crate is organized bottom-up:
//!
//! * [`scene_raw`] builds radar scenarios and simulates point-scatterer raw data.
//! * [`rda_classical`] holds the frequency-domain reference filters and the
//!   classical range-Doppler focuser.
//! * [`qsim`] is a statevector simulator with a two-register (range, azimuth)
//!   layout.
//! * [`diag_compile`] turns diagonal phase unitaries into primitive gates
//!   through Walsh series and builds multi-controlled diagonals.
//! * [`pipeline`] assembles the quantum range-Doppler circuit, runs it, samples
//!   it and reports gate counts.
//! * [`io`] reads and writes the on-disk formats.

pub mod diag_compile;
pub mod error;
pub mod image;
pub mod io;
pub mod pipeline;
pub mod qsim;
pub mod rda_classical;
pub mod scene_raw;

pub use error::{Error, Result};
pub use image::{AxisDomain, ComplexImage};

pub use num_complex::Complex64;

/// True when `d` is a power of two and at least 2.
pub fn is_pow2(d: usize) -> bool {
    d >= 2 && d.is_power_of_two()
}

/// Aligns `candidate` to `reference` by the global phase of the largest
/// reference amplitude and returns the largest absolute difference.
pub fn max_diff_up_to_global_phase(reference: &[Complex64], candidate: &[Complex64]) -> f64 {
    assert_eq!(reference.len(), candidate.len(), "length mismatch");
    let pivot = reference
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.norm_sqr().total_cmp(&b.1.norm_sqr()))
        .map(|(k, _)| k)
        .unwrap_or(0);
    let (r, c) = (reference[pivot], candidate[pivot]);
    let phase = if r.norm() > 0.0 && c.norm() > 0.0 {
        let z = r * c.conj();
        z / z.norm()
    } else {
        Complex64::new(1.0, 0.0)
    };
    reference
        .iter()
        .zip(candidate)
        .map(|(r, c)| (r - c * phase).norm())
        .fold(0.0, f64::max)
}
