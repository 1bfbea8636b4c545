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

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::{is_pow2, Error, Result};

/// Whether an image axis currently holds time samples or frequency bins.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
pub enum AxisDomain {
    #[default]
    Time,
    Frequency,
}

/// Square `d x d` complex image, row-major. Rows run along range (fast time),
/// columns along azimuth (slow time).
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexImage {
    d: usize,
    data: Vec<Complex64>,
    pub range_axis: AxisDomain,
    pub azimuth_axis: AxisDomain,
}

impl ComplexImage {
    pub fn zeros(d: usize) -> Result<Self> {
        Self::from_vec(d, vec![Complex64::new(0.0, 0.0); d * d])
    }

    pub fn from_vec(d: usize, data: Vec<Complex64>) -> Result<Self> {
        if !is_pow2(d) {
            return Err(Error::validation("d", format!("{d} is not a power of two >= 2")));
        }
        if data.len() != d * d {
            return Err(Error::Dimension {
                expected: d * d,
                actual: data.len(),
            });
        }
        if let Some(k) = data.iter().position(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(Error::validation("data", format!("entry {k} is not finite")));
        }
        Ok(ComplexImage {
            d,
            data,
            range_axis: AxisDomain::Time,
            azimuth_axis: AxisDomain::Time,
        })
    }

    /// Embeds a `rows x cols` block into the smallest square power-of-two
    /// image that holds it, zero-filling the rest.
    pub fn zero_padded(rows: usize, cols: usize, data: &[Complex64]) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension {
                expected: rows * cols,
                actual: data.len(),
            });
        }
        let d = rows.max(cols).max(2).next_power_of_two();
        let mut img = Self::zeros(d)?;
        for i in 0..rows {
            for j in 0..cols {
                img.data[i * d + j] = data[i * cols + j];
            }
        }
        Ok(img)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [Complex64] {
        &mut self.data
    }

    pub fn into_vec(self) -> Vec<Complex64> {
        self.data
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.d + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.data[row * self.d + col] = value;
    }

    pub fn energy(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn magnitudes(&self) -> Vec<f64> {
        self.data.iter().map(|z| z.norm()).collect()
    }

    /// Flat index and value of the largest-magnitude pixel.
    pub fn argmax(&self) -> (usize, f64) {
        argmax_norm(&self.data)
    }

    /// Copy scaled to unit energy, or `ZeroNorm` for an all-zero image.
    pub fn normalized(&self) -> Result<Self> {
        let e = self.energy();
        if e == 0.0 {
            return Err(Error::ZeroNorm);
        }
        let s = 1.0 / e.sqrt();
        let mut out = self.clone();
        out.data.iter_mut().for_each(|z| *z *= s);
        Ok(out)
    }
}

pub(crate) fn argmax_norm(v: &[Complex64]) -> (usize, f64) {
    v.iter()
        .enumerate()
        .map(|(k, z)| (k, z.norm()))
        .fold((0, f64::NEG_INFINITY), |best, cur| if cur.1 > best.1 { cur } else { best })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_power_of_two() {
        assert!(ComplexImage::zeros(6).is_err());
        assert!(ComplexImage::zeros(1).is_err());
        assert!(ComplexImage::zeros(8).is_ok());
    }

    #[test]
    fn rejects_non_finite() {
        let mut v = vec![Complex64::new(0.0, 0.0); 4];
        v[3] = Complex64::new(f64::NAN, 0.0);
        assert!(ComplexImage::from_vec(2, v).is_err());
    }

    #[test]
    fn zero_padding_goes_to_square_power_of_two() {
        let data: Vec<_> = (0..15).map(|k| Complex64::new(k as f64, 0.0)).collect();
        let img = ComplexImage::zero_padded(3, 5, &data).unwrap();
        assert_eq!(img.d(), 8);
        assert_eq!(img.get(2, 4), Complex64::new(14.0, 0.0));
        assert_eq!(img.get(3, 0), Complex64::new(0.0, 0.0));
        assert_eq!(img.get(0, 5), Complex64::new(0.0, 0.0));
    }
}
