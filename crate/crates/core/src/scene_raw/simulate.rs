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

use super::{RadarScenario, Scatterer, Scene};
use crate::{ComplexImage, Result};

/// Raw data plus the scatterers that produced no sample inside the window.
#[derive(Debug, Clone)]
pub struct RawSimulation {
    pub image: ComplexImage,
    pub unobserved: Vec<usize>,
}

/// Slant range of the closest approach and slow time at which it happens.
fn closest_approach(s: &RadarScenario, p: &Scatterer) -> (f64, f64) {
    let [sx, sy, sz] = s.sensor_start;
    let r0 = ((p.y - sy).powi(2) + sz * sz).sqrt();
    let eta_c = (p.x - sx) / s.v - s.t_flight / 2.0;
    (r0, eta_c)
}

/// Exact hyperbolic sensor-to-scatterer distance at slow time `eta`.
pub fn range_history(s: &RadarScenario, p: &Scatterer, eta: f64) -> f64 {
    let (r0, eta_c) = closest_approach(s, p);
    let dx = s.v * (eta - eta_c);
    (r0 * r0 + dx * dx).sqrt()
}

/// `exp(-i 2 pi cycles)` keeping only the fractional part of `cycles`.
#[inline]
fn cis_cycles(cycles: f64) -> Complex64 {
    let frac = cycles - cycles.floor();
    Complex64::from_polar(1.0, -2.0 * PI * frac)
}

/// Samples the monostatic chirp echo of every scatterer on the scenario grid,
/// with a unit antenna pattern and a box pulse envelope.
pub fn simulate_raw(s: &RadarScenario, scene: &Scene) -> Result<RawSimulation> {
    let g = s.grids();
    let d = s.d;
    let mut image = ComplexImage::zeros(d)?;
    let half_t = s.pulse_length / 2.0;
    let mut unobserved = Vec::new();

    for (k, p) in scene.scatterers().iter().enumerate() {
        let mut hits = 0usize;
        for (j, &eta) in g.eta.iter().enumerate() {
            let r = range_history(s, p, eta);
            let delay = 2.0 * r / s.c;
            let carrier = cis_cycles(2.0 * s.f0 * r / s.c) * p.amplitude;
            // the envelope spans at most a few samples; locate them directly
            let center = (delay - g.tau[0]) * s.bandwidth;
            let lo = (center - half_t * s.bandwidth).floor().max(0.0) as usize;
            let hi = ((center + half_t * s.bandwidth).ceil() as isize).min(d as isize - 1);
            if hi < 0 || lo >= d {
                continue;
            }
            for i in lo..=hi as usize {
                let u = g.tau[i] - delay;
                if u.abs() > half_t {
                    continue;
                }
                let chirp = Complex64::from_polar(1.0, PI * s.alpha * u * u);
                let idx = i * d + j;
                image.data_mut()[idx] += chirp * carrier;
                hits += 1;
            }
        }
        if hits == 0 {
            log::warn!("scatterer {k} at ({}, {}) has no echo inside the fast-time window", p.x, p.y);
            unobserved.push(k);
        }
    }
    Ok(RawSimulation { image, unobserved })
}
