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

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::scene_raw::{AxisGrids, RadarScenario};
use crate::{Error, Result};

/// Form of the range-cell-migration filter phase.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RcmcModel {
    /// `pi r0 c f_eta^2 / (2 v^2 f_tau)` with `f_tau` the baseband bin.
    #[default]
    Literal,
    /// `pi r0 c f_eta^2 / (2 v^2) * (1 / (f0 + f_tau) - 1 / f0)`: the part of
    /// the exact two-dimensional point-target phase that varies with
    /// `f_tau`, i.e. the migration shift and its higher-order terms. The
    /// `f_tau`-independent remainder is left to the azimuth filter.
    Shift,
}

/// Sign applied to the phase of the migration and azimuth filters, and the
/// migration filter form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterConvention {
    pub sign_m: i8,
    pub sign_a: i8,
    #[serde(default)]
    pub rcmc: RcmcModel,
}

impl Default for FilterConvention {
    fn default() -> Self {
        FilterConvention {
            sign_m: 1,
            sign_a: 1,
            rcmc: RcmcModel::Literal,
        }
    }
}

impl FilterConvention {
    pub fn new(sign_m: i8, sign_a: i8) -> Result<Self> {
        for (name, s) in [("sign_m", sign_m), ("sign_a", sign_a)] {
            if s != 1 && s != -1 {
                return Err(Error::validation(name, format!("must be +1 or -1, got {s}")));
            }
        }
        Ok(FilterConvention {
            sign_m,
            sign_a,
            rcmc: RcmcModel::Literal,
        })
    }

    pub fn with_rcmc(self, rcmc: RcmcModel) -> Self {
        FilterConvention { rcmc, ..self }
    }
}

/// Maps a phase given in cycles to radians in `(-pi, pi]`.
fn wrap_cycles(cycles: f64) -> f64 {
    let frac = cycles - cycles.round();
    2.0 * PI * frac
}

/// Unit-modulus reference filters sampled on the scenario grids.
///
/// Phases are stored in radians, wrapped to `(-pi, pi]`. `hm` is indexed by
/// (range-frequency bin, azimuth-frequency bin) and `ha` by (range sample,
/// azimuth-frequency bin), both row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FilterBank {
    pub d: usize,
    pub hr: Vec<f64>,
    pub hm: Vec<f64>,
    pub ha: Vec<f64>,
    pub convention: FilterConvention,
}

impl FilterBank {
    /// All-zero phases: every filter is the identity.
    pub fn identity(d: usize) -> Self {
        FilterBank {
            d,
            hr: vec![0.0; d],
            hm: vec![0.0; d * d],
            ha: vec![0.0; d * d],
            convention: FilterConvention::default(),
        }
    }

    pub fn hr_at(&self, l: usize) -> Complex64 {
        Complex64::from_polar(1.0, self.hr[l])
    }

    pub fn hm_at(&self, l: usize, j: usize) -> Complex64 {
        Complex64::from_polar(1.0, self.hm[l * self.d + j])
    }

    pub fn ha_at(&self, i: usize, j: usize) -> Complex64 {
        Complex64::from_polar(1.0, self.ha[i * self.d + j])
    }

    /// Controlled-diagonal factor of the migration stage for azimuth bin `k`:
    /// the phases applied down range-frequency column `k`.
    pub fn rcmc_column(&self, k: usize) -> Vec<f64> {
        (0..self.d).map(|l| self.hm[l * self.d + k]).collect()
    }

    /// Controlled-diagonal factor of the azimuth stage for range row `i`.
    pub fn azimuth_row(&self, i: usize) -> Vec<f64> {
        self.ha[i * self.d..(i + 1) * self.d].to_vec()
    }
}

pub(crate) fn range_filter_phases(s: &RadarScenario, g: &AxisGrids) -> Vec<f64> {
    g.f_tau.iter().map(|f| wrap_cycles(f * f / (2.0 * s.alpha))).collect()
}

pub(crate) fn rcmc_filter_phases(s: &RadarScenario, g: &AxisGrids, sign: i8, model: RcmcModel) -> Vec<f64> {
    let d = g.d();
    let mut out = vec![0.0; d * d];
    let k = s.r0_ref * s.c / (4.0 * s.v * s.v);
    for (l, &ft) in g.f_tau.iter().enumerate() {
        // the zero range-frequency bin has no defined migration phase; leave it at 0
        if ft == 0.0 {
            continue;
        }
        let scale = match model {
            RcmcModel::Literal => 1.0 / ft,
            RcmcModel::Shift => -ft / (s.f0 * (s.f0 + ft)),
        };
        for (j, &fe) in g.f_eta.iter().enumerate() {
            out[l * d + j] = wrap_cycles(sign as f64 * k * fe * fe * scale);
        }
    }
    out
}

pub(crate) fn azimuth_filter_phases(s: &RadarScenario, g: &AxisGrids, sign: i8) -> Vec<f64> {
    let d = g.d();
    let mut out = vec![0.0; d * d];
    let q = s.c * s.c / (8.0 * s.v * s.v * s.f0);
    for (i, &tau) in g.tau.iter().enumerate() {
        let carrier = tau * s.f0;
        let carrier = carrier - carrier.floor();
        for (j, &fe) in g.f_eta.iter().enumerate() {
            out[i * d + j] = wrap_cycles(sign as f64 * (carrier - tau * q * fe * fe));
        }
    }
    out
}

/// `H_r(f_tau) = exp(i pi f_tau^2 / alpha)` on every range-frequency bin.
/// The pulse-support box is not applied, so every entry has unit modulus.
pub fn build_range_filter(s: &RadarScenario, g: &AxisGrids) -> Vec<Complex64> {
    to_complex(&range_filter_phases(s, g))
}

/// Range-cell-migration filter `exp(i pi r0 c f_eta^2 / (2 v^2 f_tau))`,
/// using the scenario reference range for every bin.
pub fn build_rcmc_filter(s: &RadarScenario, g: &AxisGrids, convention: FilterConvention) -> Vec<Complex64> {
    to_complex(&rcmc_filter_phases(s, g, convention.sign_m, convention.rcmc))
}

/// Azimuth compression filter
/// `exp(i (4 pi r0(tau) f0 / c - pi r0(tau) c f_eta^2 / (2 v^2 f0)))` with
/// `r0(tau) = c tau / 2` for each fast-time row.
pub fn build_azimuth_filter(s: &RadarScenario, g: &AxisGrids, convention: FilterConvention) -> Vec<Complex64> {
    to_complex(&azimuth_filter_phases(s, g, convention.sign_a))
}

pub fn build_filter_bank(s: &RadarScenario, convention: FilterConvention) -> FilterBank {
    let g = s.grids();
    FilterBank {
        d: s.d,
        hr: range_filter_phases(s, &g),
        hm: rcmc_filter_phases(s, &g, convention.sign_m, convention.rcmc),
        ha: azimuth_filter_phases(s, &g, convention.sign_a),
        convention,
    }
}

fn to_complex(phases: &[f64]) -> Vec<Complex64> {
    phases.iter().map(|&p| Complex64::from_polar(1.0, p)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scene_raw::ScenarioConfig;

    fn scenario(d: usize) -> RadarScenario {
        RadarScenario::new(&ScenarioConfig::table1(d)).unwrap()
    }

    #[test]
    fn range_filter_is_even_and_one_at_dc() {
        let s = scenario(16);
        let g = s.grids();
        let hr = build_range_filter(&s, &g);
        assert!((hr[0] - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        for k in 1..8 {
            assert!((hr[k] - hr[16 - k]).norm() < 1e-12, "bin {k}");
        }
        assert!(hr.iter().all(|z| (z.norm() - 1.0).abs() < 1e-15));
    }

    #[test]
    fn range_filter_phase_at_one_megahertz() {
        let s = scenario(16);
        let g = AxisGrids {
            tau: vec![0.0],
            eta: vec![0.0],
            f_tau: vec![1.0e6],
            f_eta: vec![0.0],
        };
        let hr = build_range_filter(&s, &g);
        // pi * 1e12 / 9.25e13 by hand
        let expected = Complex64::from_polar(1.0, PI * 1.0e12 / 9.25e13);
        assert!((hr[0] - expected).norm() < 1e-14);
    }

    #[test]
    fn rcmc_is_one_at_zero_doppler_and_dc() {
        let s = scenario(16);
        let g = s.grids();
        let hm = build_rcmc_filter(&s, &g, FilterConvention::default());
        for l in 0..16 {
            assert!((hm[l * 16] - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        }
        for j in 0..16 {
            assert_eq!(hm[j], Complex64::new(1.0, 0.0));
        }
        assert!(hm.iter().all(|z| (z.norm() - 1.0).abs() < 1e-14));
    }

    #[test]
    fn azimuth_filter_one_at_origin() {
        let s = scenario(16);
        let g = AxisGrids {
            tau: vec![0.0, 1.0e-7],
            eta: vec![0.0, 0.0],
            f_tau: vec![0.0, 0.0],
            f_eta: vec![0.0, 3.0],
        };
        let ha = build_azimuth_filter(&s, &g, FilterConvention::default());
        assert!((ha[0] - Complex64::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn azimuth_filter_matches_slant_range_form() {
        // r0(tau) = c tau / 2 substituted into the slant-range form must give
        // the fast-time form entry for entry
        let s = scenario(16);
        let taus = [0.0, 1.0e-8, 2.5e-7, 7.0e-7];
        let fes = [-5.0, 0.0, 1.5, 6.0];
        let g = AxisGrids {
            tau: taus.to_vec(),
            eta: vec![0.0; 4],
            f_tau: vec![0.0; 4],
            f_eta: fes.to_vec(),
        };
        let ha = build_azimuth_filter(&s, &g, FilterConvention::default());
        for (i, &tau) in taus.iter().enumerate() {
            let r0 = s.c * tau / 2.0;
            for (j, &fe) in fes.iter().enumerate() {
                let phase = 4.0 * PI * r0 * s.f0 / s.c - PI * r0 * s.c * fe * fe / (2.0 * s.v * s.v * s.f0);
                let want = Complex64::from_polar(1.0, phase);
                assert!((ha[i * 4 + j] - want).norm() < 1e-12, "({i},{j})");
            }
        }
    }

    #[test]
    fn sign_flags_conjugate() {
        let s = scenario(8);
        let g = s.grids();
        let plus = build_rcmc_filter(&s, &g, FilterConvention::new(1, 1).unwrap());
        let minus = build_rcmc_filter(&s, &g, FilterConvention::new(-1, -1).unwrap());
        for (a, b) in plus.iter().zip(&minus) {
            assert!((a - b.conj()).norm() < 1e-12);
        }
        assert!(FilterConvention::new(0, 1).is_err());
    }

    #[test]
    fn shift_model_is_a_range_delay() {
        // to first order in f_tau the shift phase is -k f_eta^2 f_tau / f0^2,
        // a delay of c r0 f_eta^2 / (4 v^2 f0^2)
        let s = scenario(16);
        let fe = 6.0;
        let g = AxisGrids {
            tau: vec![0.0; 2],
            eta: vec![0.0; 2],
            f_tau: vec![0.0, 1.0e3],
            f_eta: vec![0.0, fe],
        };
        let conv = FilterConvention::default().with_rcmc(RcmcModel::Shift);
        let hm = build_rcmc_filter(&s, &g, conv);
        assert_eq!(hm[0], Complex64::new(1.0, 0.0));
        assert!((hm[2] - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        let delay = s.c * s.r0_ref * fe * fe / (4.0 * s.v * s.v * s.f0 * s.f0);
        let want = Complex64::from_polar(1.0, -2.0 * PI * 1.0e3 * delay);
        assert!((hm[3] - want).norm() < 1e-9);
    }

    #[test]
    fn convention_defaults_to_literal() {
        assert_eq!(FilterConvention::default().rcmc, RcmcModel::Literal);
        assert_eq!(FilterConvention::new(-1, 1).unwrap().rcmc, RcmcModel::Literal);
        let json = r#"{"sign_m":1,"sign_a":-1}"#;
        let c: FilterConvention = serde_json::from_str(json).unwrap();
        assert_eq!(c.rcmc, RcmcModel::Literal);
    }

    #[test]
    fn bank_dependencies() {
        let s = scenario(8);
        let bank = build_filter_bank(&s, FilterConvention::default());
        assert_eq!(bank.hr.len(), 8);
        assert_eq!(bank.hm.len(), 64);
        assert_eq!(bank.rcmc_column(3)[5], bank.hm[5 * 8 + 3]);
        assert_eq!(bank.azimuth_row(2)[7], bank.ha[2 * 8 + 7]);
    }
}
