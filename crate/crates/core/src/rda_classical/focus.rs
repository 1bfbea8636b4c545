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

use super::{Direction, FilterBank, UnitaryDft};
use crate::{ComplexImage, Error, Result};

/// One stage of the range-Doppler operator product, in execution order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    RangeFft,
    RangeFilter,
    AzimuthFft,
    Rcmc,
    RangeIfft,
    AzimuthFilter,
    AzimuthIfft,
}

impl Step {
    pub const ALL: [Step; 7] = [
        Step::RangeFft,
        Step::RangeFilter,
        Step::AzimuthFft,
        Step::Rcmc,
        Step::RangeIfft,
        Step::AzimuthFilter,
        Step::AzimuthIfft,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Step::RangeFft => "range-fft",
            Step::RangeFilter => "range-filter",
            Step::AzimuthFft => "azimuth-fft",
            Step::Rcmc => "rcmc",
            Step::RangeIfft => "range-ifft",
            Step::AzimuthFilter => "azimuth-filter",
            Step::AzimuthIfft => "azimuth-ifft",
        }
    }
}

fn check(raw: &ComplexImage, filters: &FilterBank) -> Result<()> {
    if raw.d() != filters.d {
        return Err(Error::Dimension {
            expected: filters.d,
            actual: raw.d(),
        });
    }
    Ok(())
}

fn apply_step(img: &mut ComplexImage, step: Step, filters: &FilterBank, dft: &UnitaryDft) {
    let d = filters.d;
    match step {
        Step::RangeFft => dft.range(img, Direction::Forward),
        Step::AzimuthFft => dft.azimuth(img, Direction::Forward),
        Step::RangeIfft => dft.range(img, Direction::Inverse),
        Step::AzimuthIfft => dft.azimuth(img, Direction::Inverse),
        Step::RangeFilter => {
            for (l, row) in img.data_mut().chunks_exact_mut(d).enumerate() {
                let h = filters.hr_at(l);
                row.iter_mut().for_each(|z| *z *= h);
            }
        }
        Step::Rcmc => {
            for (k, z) in img.data_mut().iter_mut().enumerate() {
                *z *= filters.hm_at(k / d, k % d);
            }
        }
        Step::AzimuthFilter => {
            for (k, z) in img.data_mut().iter_mut().enumerate() {
                *z *= filters.ha_at(k / d, k % d);
            }
        }
    }
}

/// Runs the steps in order and returns the image after each one.
pub fn focus_steps(raw: &ComplexImage, filters: &FilterBank) -> Result<Vec<(Step, ComplexImage)>> {
    check(raw, filters)?;
    let dft = UnitaryDft::new(raw.d());
    let mut img = raw.clone();
    let mut out = Vec::with_capacity(Step::ALL.len());
    for step in Step::ALL {
        apply_step(&mut img, step, filters, &dft);
        out.push((step, img.clone()));
    }
    Ok(out)
}

/// Focuses raw data: range transform, range matched filter, azimuth
/// transform, migration correction, inverse range transform, azimuth
/// matched filter, inverse azimuth transform.
pub fn focus_classical(raw: &ComplexImage, filters: &FilterBank) -> Result<ComplexImage> {
    check(raw, filters)?;
    let dft = UnitaryDft::new(raw.d());
    let mut img = raw.clone();
    for step in Step::ALL {
        apply_step(&mut img, step, filters, &dft);
    }
    Ok(img)
}

/// Range compression only: range transform, range filter, inverse range
/// transform.
pub fn range_compress(raw: &ComplexImage, filters: &FilterBank) -> Result<ComplexImage> {
    check(raw, filters)?;
    let dft = UnitaryDft::new(raw.d());
    let mut img = raw.clone();
    for step in [Step::RangeFft, Step::RangeFilter, Step::RangeIfft] {
        apply_step(&mut img, step, filters, &dft);
    }
    Ok(img)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rda_classical::{build_filter_bank, FilterConvention};
    use crate::scene_raw::{RadarScenario, ScenarioConfig};
    use num_complex::Complex64;

    fn random_image(d: usize, seed: u64) -> ComplexImage {
        let mut x = seed;
        let mut next = || {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (x >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        let data = (0..d * d).map(|_| Complex64::new(next(), next())).collect();
        ComplexImage::from_vec(d, data).unwrap()
    }

    #[test]
    fn zero_in_zero_out() {
        let s = RadarScenario::new(&ScenarioConfig::table1(8)).unwrap();
        let bank = build_filter_bank(&s, FilterConvention::default());
        let out = focus_classical(&ComplexImage::zeros(8).unwrap(), &bank).unwrap();
        assert_eq!(out.energy(), 0.0);
    }

    #[test]
    fn identity_filters_give_back_the_input() {
        let img = random_image(16, 3);
        let out = focus_classical(&img, &FilterBank::identity(16)).unwrap();
        for (a, b) in out.data().iter().zip(img.data()) {
            assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn energy_is_conserved() {
        let s = RadarScenario::new(&ScenarioConfig::table1(32)).unwrap();
        let bank = build_filter_bank(&s, FilterConvention::default());
        let img = random_image(32, 9);
        let out = focus_classical(&img, &bank).unwrap();
        assert!((out.energy() - img.energy()).abs() / img.energy() < 1e-10);
    }

    #[test]
    fn dimension_mismatch() {
        let img = random_image(8, 1);
        assert!(matches!(
            focus_classical(&img, &FilterBank::identity(16)),
            Err(Error::Dimension { .. })
        ));
    }

    #[test]
    fn steps_end_at_the_focused_image() {
        let s = RadarScenario::new(&ScenarioConfig::table1(8)).unwrap();
        let bank = build_filter_bank(&s, FilterConvention::default());
        let img = random_image(8, 5);
        let steps = focus_steps(&img, &bank).unwrap();
        assert_eq!(steps.len(), 7);
        assert_eq!(steps[6].1, focus_classical(&img, &bank).unwrap());
    }
}
