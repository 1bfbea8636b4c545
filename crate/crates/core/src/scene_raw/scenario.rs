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

use crate::{is_pow2, Error, Result};

pub const SPEED_OF_LIGHT: f64 = 2.997_924_58e8;

/// Axis-aligned rectangle on the ground plane `z = 0`, meters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GroundRect {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
}

impl GroundRect {
    pub fn contains(&self, x: f64, y: f64) -> bool {
        x >= self.x_min && x <= self.x_max && y >= self.y_min && y <= self.y_max
    }
}

/// User-facing parameter set. Field names follow the configuration file keys.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    /// Platform speed along azimuth, m/s.
    pub v: f64,
    /// Total flight time, s.
    pub t_flight: f64,
    /// Range bandwidth, Hz.
    pub bandwidth: f64,
    /// Pulse length, s.
    pub pulse_length: f64,
    /// Carrier frequency, Hz.
    pub f0: f64,
    /// Reference slant range, m.
    pub r0_ref: f64,
    /// Range width of the scene, m.
    pub delta_r: f64,
    /// Samples per dimension.
    pub d: usize,
    #[serde(default = "default_sensor_start")]
    pub sensor_start: [f64; 3],
    #[serde(default)]
    pub ground: Option<GroundRect>,
}

fn default_sensor_start() -> [f64; 3] {
    [0.0, 0.0, 500.0e3]
}

impl ScenarioConfig {
    /// The published simulation parameters at `d` samples per dimension.
    pub fn table1(d: usize) -> Self {
        ScenarioConfig {
            v: 1.0e4,
            t_flight: 1.0,
            bandwidth: 7.4e6,
            pulse_length: 8.0e-8,
            f0: 3.8e8,
            r0_ref: 5.8e5,
            delta_r: 5.0e3,
            d,
            sensor_start: default_sensor_start(),
            ground: Some(GroundRect {
                x_min: 0.0,
                x_max: 10.0e3,
                y_min: 290.0e3,
                y_max: 300.0e3,
            }),
        }
    }

    /// Same platform and waveform, with flight time and scene width resized
    /// so that `d` samples cover the azimuth Doppler band and the scene's
    /// echo window without aliasing.
    ///
    /// The azimuth chirp rate is `K_a = 2 v^2 f0 / (c r0)`; choosing
    /// `T_f = sqrt(d / K_a)` makes the Doppler bandwidth `K_a T_f` equal to
    /// the pulse repetition frequency `d / T_f`.
    pub fn table1_scaled(d: usize) -> Self {
        let mut cfg = Self::table1(d);
        let k_a = 2.0 * cfg.v * cfg.v * cfg.f0 / (SPEED_OF_LIGHT * cfg.r0_ref);
        cfg.t_flight = (d as f64 / k_a).sqrt();
        cfg.delta_r = SPEED_OF_LIGHT * (d as f64 / cfg.bandwidth - cfg.pulse_length) / 2.0;
        cfg.ground = None;
        cfg
    }

    pub fn preset(name: &str, d: usize) -> Option<Self> {
        match name {
            "table1" => Some(Self::table1(d)),
            "table1-scaled" => Some(Self::table1_scaled(d)),
            _ => None,
        }
    }
}

/// Validated radar geometry and waveform.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadarScenario {
    pub v: f64,
    pub t_flight: f64,
    pub bandwidth: f64,
    pub pulse_length: f64,
    pub f0: f64,
    pub r0_ref: f64,
    pub delta_r: f64,
    /// Chirp rate `B_r / T`, Hz/s.
    pub alpha: f64,
    pub c: f64,
    pub sensor_start: [f64; 3],
    pub d: usize,
    pub ground: GroundRect,
}

impl RadarScenario {
    pub fn new(cfg: &ScenarioConfig) -> Result<Self> {
        if !is_pow2(cfg.d) {
            return Err(Error::validation("d", format!("{} is not a power of two >= 2", cfg.d)));
        }
        for (name, value) in [
            ("v", cfg.v),
            ("t_flight", cfg.t_flight),
            ("bandwidth", cfg.bandwidth),
            ("pulse_length", cfg.pulse_length),
            ("f0", cfg.f0),
            ("r0_ref", cfg.r0_ref),
            ("delta_r", cfg.delta_r),
        ] {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::validation(name, format!("must be finite and positive, got {value}")));
            }
        }
        if cfg.sensor_start.iter().any(|x| !x.is_finite()) {
            return Err(Error::validation("sensor_start", "must be finite"));
        }
        let height = cfg.sensor_start[2];
        if height >= cfg.r0_ref {
            return Err(Error::validation(
                "r0_ref",
                format!("{} m does not reach the ground from height {height} m", cfg.r0_ref),
            ));
        }
        let ground = match cfg.ground {
            Some(g) => g,
            None => {
                let ground_range = |r: f64| (r * r - height * height).max(0.0).sqrt() + cfg.sensor_start[1];
                GroundRect {
                    x_min: cfg.sensor_start[0],
                    x_max: cfg.sensor_start[0] + cfg.v * cfg.t_flight,
                    y_min: ground_range(cfg.r0_ref - cfg.delta_r / 2.0),
                    y_max: ground_range(cfg.r0_ref + cfg.delta_r / 2.0),
                }
            }
        };
        if !(ground.x_min < ground.x_max && ground.y_min < ground.y_max) {
            return Err(Error::validation("ground", "rectangle is empty"));
        }
        Ok(RadarScenario {
            v: cfg.v,
            t_flight: cfg.t_flight,
            bandwidth: cfg.bandwidth,
            pulse_length: cfg.pulse_length,
            f0: cfg.f0,
            r0_ref: cfg.r0_ref,
            delta_r: cfg.delta_r,
            alpha: cfg.bandwidth / cfg.pulse_length,
            c: SPEED_OF_LIGHT,
            sensor_start: cfg.sensor_start,
            d: cfg.d,
            ground,
        })
    }

    /// Total number of pixels, `d^2`.
    pub fn pixels(&self) -> usize {
        self.d * self.d
    }

    /// Qubits needed to amplitude-encode one `d x d` image.
    pub fn qubits(&self) -> usize {
        2 * self.d.trailing_zeros() as usize
    }

    /// Fast-time sample spacing (critical sampling).
    pub fn dtau(&self) -> f64 {
        1.0 / self.bandwidth
    }

    /// Slow-time sample spacing.
    pub fn deta(&self) -> f64 {
        self.t_flight / self.d as f64
    }

    pub fn grids(&self) -> AxisGrids {
        AxisGrids::new(self)
    }
}

/// Sample positions of both time axes and the bins of their spectra.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AxisGrids {
    /// Fast time, s. Centered on the reference round-trip delay.
    pub tau: Vec<f64>,
    /// Slow time, s. Zero at mid-flight.
    pub eta: Vec<f64>,
    /// Range frequency per bin, Hz.
    pub f_tau: Vec<f64>,
    /// Azimuth frequency per bin, Hz.
    pub f_eta: Vec<f64>,
}

impl AxisGrids {
    pub fn new(s: &RadarScenario) -> Self {
        let d = s.d;
        let half = (d / 2) as f64;
        let (dtau, deta) = (s.dtau(), s.deta());
        let tau_center = 2.0 * s.r0_ref / s.c;
        AxisGrids {
            tau: (0..d).map(|i| tau_center + (i as f64 - half) * dtau).collect(),
            eta: (0..d).map(|j| (j as f64 - half) * deta).collect(),
            f_tau: dft_bins(d, dtau),
            f_eta: dft_bins(d, deta),
        }
    }

    pub fn d(&self) -> usize {
        self.tau.len()
    }
}

/// Bin `k` maps to `k / (d dx)` below Nyquist and `(k - d) / (d dx)` above.
pub(crate) fn dft_bins(d: usize, dx: f64) -> Vec<f64> {
    let span = d as f64 * dx;
    (0..d)
        .map(|k| {
            let k = if k < d / 2 { k as f64 } else { k as f64 - d as f64 };
            k / span
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table1_at_128() {
        let s = RadarScenario::new(&ScenarioConfig::table1(128)).unwrap();
        assert_eq!(s.pixels(), 16384);
        assert_eq!(s.qubits(), 14);
    }

    #[test]
    fn chirp_rate_from_bandwidth_and_pulse() {
        let s = RadarScenario::new(&ScenarioConfig::table1(128)).unwrap();
        // 7.4e6 / 8.0e-8 computed by hand
        assert!((s.alpha - 9.25e13).abs() / 9.25e13 < 1e-15);
        assert!((s.alpha * s.pulse_length - s.bandwidth).abs() / s.bandwidth < 1e-15);
    }

    #[test]
    fn rejects_bad_d() {
        let err = RadarScenario::new(&ScenarioConfig::table1(100)).unwrap_err();
        assert!(err.to_string().contains('d'));
        assert!(RadarScenario::new(&ScenarioConfig::table1(1)).is_err());
    }

    #[test]
    fn rejects_non_positive_field_by_name() {
        let mut cfg = ScenarioConfig::table1(16);
        cfg.f0 = 0.0;
        let err = RadarScenario::new(&cfg).unwrap_err().to_string();
        assert!(err.contains("f0"), "{err}");
        let mut cfg = ScenarioConfig::table1(16);
        cfg.t_flight = -1.0;
        let err = RadarScenario::new(&cfg).unwrap_err().to_string();
        assert!(err.contains("t_flight"), "{err}");
    }

    #[test]
    fn grids_follow_dft_bin_convention() {
        let s = RadarScenario::new(&ScenarioConfig::table1(8)).unwrap();
        let g = s.grids();
        let span = 8.0 / s.bandwidth;
        assert_eq!(g.f_tau[0], 0.0);
        assert!((g.f_tau[3] - 3.0 / span).abs() < 1e-6);
        assert!((g.f_tau[4] + 4.0 / span).abs() < 1e-6);
        assert!((g.f_tau[7] + 1.0 / span).abs() < 1e-6);
        assert!(((g.tau[1] - g.tau[0]) - 1.0 / s.bandwidth).abs() < 1e-18);
        assert!(((g.eta[1] - g.eta[0]) - s.t_flight / 8.0).abs() < 1e-15);
        assert!((g.tau[4] - 2.0 * s.r0_ref / s.c).abs() < 1e-18);
    }

    #[test]
    fn scaled_preset_samples_the_doppler_band() {
        let s = RadarScenario::new(&ScenarioConfig::table1_scaled(64)).unwrap();
        let k_a = 2.0 * s.v * s.v * s.f0 / (s.c * s.r0_ref);
        let prf = s.d as f64 / s.t_flight;
        assert!((k_a * s.t_flight - prf).abs() / prf < 1e-12);
        let window = s.d as f64 * s.dtau();
        assert!((2.0 * s.delta_r / s.c + s.pulse_length - window).abs() < 1e-15);
    }
}
