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

use super::{GroundRect, RadarScenario};
use crate::{Error, Result};

/// Point scatterer on the ground plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Scatterer {
    pub x: f64,
    pub y: f64,
    pub amplitude: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Scene {
    scatterers: Vec<Scatterer>,
}

impl Scene {
    /// Validates every scatterer against `ground`.
    pub fn new(scatterers: Vec<Scatterer>, ground: &GroundRect) -> Result<Self> {
        for (k, s) in scatterers.iter().enumerate() {
            if !(s.amplitude.is_finite() && s.amplitude >= 0.0) {
                return Err(Error::validation(
                    "amplitude",
                    format!("scatterer {k} has amplitude {}", s.amplitude),
                ));
            }
            if !ground.contains(s.x, s.y) {
                return Err(Error::validation(
                    "position",
                    format!("scatterer {k} at ({}, {}) lies outside the ground rectangle", s.x, s.y),
                ));
            }
        }
        Ok(Scene { scatterers })
    }

    pub fn empty() -> Self {
        Scene::default()
    }

    /// Maps a grayscale raster onto a uniform grid over the ground rectangle.
    ///
    /// Intensities in `[0, 1]` become amplitudes. Raster rows run along
    /// ground range (`y`) and columns along azimuth (`x`), so the focused
    /// image comes out with the same orientation. Zero pixels are skipped.
    pub fn from_intensities(width: usize, height: usize, intensity: &[f64], ground: &GroundRect) -> Result<Self> {
        if intensity.len() != width * height {
            return Err(Error::Dimension {
                expected: width * height,
                actual: intensity.len(),
            });
        }
        let dx = (ground.x_max - ground.x_min) / width as f64;
        let dy = (ground.y_max - ground.y_min) / height as f64;
        let mut scatterers = Vec::new();
        for row in 0..height {
            for col in 0..width {
                let a = intensity[row * width + col];
                if !(0.0..=1.0).contains(&a) {
                    return Err(Error::validation("intensity", format!("pixel ({row}, {col}) = {a} outside [0, 1]")));
                }
                if a > 0.0 {
                    scatterers.push(Scatterer {
                        x: ground.x_min + (col as f64 + 0.5) * dx,
                        y: ground.y_min + (row as f64 + 0.5) * dy,
                        amplitude: a,
                    });
                }
            }
        }
        Scene::new(scatterers, ground)
    }

    /// A single unit scatterer whose closest approach falls on the center
    /// sample of both axes.
    pub fn center_point(scenario: &RadarScenario) -> Self {
        Scene {
            scatterers: vec![scenario_center(scenario)],
        }
    }

    pub fn scatterers(&self) -> &[Scatterer] {
        &self.scatterers
    }

    pub fn len(&self) -> usize {
        self.scatterers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scatterers.is_empty()
    }
}

/// Ground point at slant range `r0_ref` with closest approach at mid-flight.
pub(crate) fn scenario_center(s: &RadarScenario) -> Scatterer {
    ground_point(s, s.r0_ref, 0.0, 1.0)
}

/// Ground point at slant range `r0` and closest-approach slow time `eta_c`.
pub(crate) fn ground_point(s: &RadarScenario, r0: f64, eta_c: f64, amplitude: f64) -> Scatterer {
    let [sx, sy, sz] = s.sensor_start;
    Scatterer {
        x: sx + s.v * (eta_c + s.t_flight / 2.0),
        y: sy + (r0 * r0 - sz * sz).sqrt(),
        amplitude,
    }
}

impl Scene {
    /// Scatterer placed so that its ideal focused response lands on pixel
    /// `(row, col)` of the output grid.
    pub fn point_at_pixel(scenario: &RadarScenario, row: usize, col: usize, amplitude: f64) -> Scatterer {
        let g = scenario.grids();
        ground_point(scenario, scenario.c * g.tau[row] / 2.0, g.eta[col], amplitude)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scene_raw::ScenarioConfig;

    fn rect() -> GroundRect {
        GroundRect {
            x_min: 0.0,
            x_max: 10.0,
            y_min: 0.0,
            y_max: 4.0,
        }
    }

    #[test]
    fn rejects_out_of_rectangle_and_negative() {
        let bad = vec![Scatterer {
            x: 11.0,
            y: 1.0,
            amplitude: 1.0,
        }];
        assert!(Scene::new(bad, &rect()).is_err());
        let neg = vec![Scatterer {
            x: 1.0,
            y: 1.0,
            amplitude: -0.5,
        }];
        assert!(Scene::new(neg, &rect()).is_err());
    }

    #[test]
    fn raster_maps_to_cell_centers() {
        let scene = Scene::from_intensities(2, 2, &[0.0, 0.5, 1.0, 0.0], &rect()).unwrap();
        assert_eq!(scene.len(), 2);
        assert_eq!(
            scene.scatterers()[0],
            Scatterer {
                x: 7.5,
                y: 1.0,
                amplitude: 0.5
            }
        );
        assert_eq!(scene.scatterers()[1].y, 3.0);
    }

    #[test]
    fn center_point_lies_in_its_ground_rectangle() {
        let s = RadarScenario::new(&ScenarioConfig::table1_scaled(64)).unwrap();
        let p = scenario_center(&s);
        assert!(s.ground.contains(p.x, p.y));
    }
}
