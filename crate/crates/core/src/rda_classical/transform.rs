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

use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::{AxisDomain, ComplexImage};

/// Transform direction. `Forward` uses the kernel `exp(+2 pi i l k / d)`,
/// the same convention as the quantum Fourier transform; `Inverse` is its
/// adjoint. Both are scaled by `1 / sqrt(d)` and therefore unitary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

/// Unitary DFT of length `d` applied along either image axis.
pub struct UnitaryDft {
    d: usize,
    scale: f64,
    plus: Arc<dyn Fft<f64>>,
    minus: Arc<dyn Fft<f64>>,
}

impl UnitaryDft {
    pub fn new(d: usize) -> Self {
        let mut planner = FftPlanner::new();
        // rustfft's "inverse" is the +i kernel
        let plus = planner.plan_fft_inverse(d);
        let minus = planner.plan_fft_forward(d);
        UnitaryDft {
            d,
            scale: 1.0 / (d as f64).sqrt(),
            plus,
            minus,
        }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    fn plan(&self, dir: Direction) -> &Arc<dyn Fft<f64>> {
        match dir {
            Direction::Forward => &self.plus,
            Direction::Inverse => &self.minus,
        }
    }

    /// Transforms a single length-`d` vector in place.
    pub fn apply(&self, buf: &mut [Complex64], dir: Direction) {
        assert_eq!(buf.len(), self.d);
        self.plan(dir).process(buf);
        buf.iter_mut().for_each(|z| *z *= self.scale);
    }

    /// Transforms every column, i.e. along the range index.
    pub fn range(&self, img: &mut ComplexImage, dir: Direction) {
        let d = self.d;
        assert_eq!(img.d(), d);
        let mut col = vec![Complex64::new(0.0, 0.0); d];
        for j in 0..d {
            for i in 0..d {
                col[i] = img.get(i, j);
            }
            self.apply(&mut col, dir);
            for i in 0..d {
                img.set(i, j, col[i]);
            }
        }
        img.range_axis = match dir {
            Direction::Forward => AxisDomain::Frequency,
            Direction::Inverse => AxisDomain::Time,
        };
    }

    /// Transforms every row, i.e. along the azimuth index.
    pub fn azimuth(&self, img: &mut ComplexImage, dir: Direction) {
        let d = self.d;
        assert_eq!(img.d(), d);
        let plan = self.plan(dir);
        for row in img.data_mut().chunks_exact_mut(d) {
            plan.process(row);
            row.iter_mut().for_each(|z| *z *= self.scale);
        }
        img.azimuth_axis = match dir {
            Direction::Forward => AxisDomain::Frequency,
            Direction::Inverse => AxisDomain::Time,
        };
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn naive(x: &[Complex64], sign: f64) -> Vec<Complex64> {
        let d = x.len();
        (0..d)
            .map(|l| {
                x.iter()
                    .enumerate()
                    .map(|(i, v)| v * Complex64::from_polar(1.0, sign * 2.0 * PI * (l * i) as f64 / d as f64))
                    .sum::<Complex64>()
                    / (d as f64).sqrt()
            })
            .collect()
    }

    #[test]
    fn forward_is_the_plus_i_kernel() {
        let x: Vec<_> = (0..8).map(|k| Complex64::new(k as f64, (k * k) as f64 * 0.1)).collect();
        let t = UnitaryDft::new(8);
        let mut y = x.clone();
        t.apply(&mut y, Direction::Forward);
        for (a, b) in y.iter().zip(naive(&x, 1.0)) {
            assert!((a - b).norm() < 1e-12);
        }
        t.apply(&mut y, Direction::Inverse);
        for (a, b) in y.iter().zip(&x) {
            assert!((a - b).norm() < 1e-12);
        }
    }
}
