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

//! Radar scenarios, point-scatterer scenes and monostatic raw-data simulation.

mod scenario;
mod scene;
mod simulate;

pub use scenario::{AxisGrids, GroundRect, RadarScenario, ScenarioConfig, SPEED_OF_LIGHT};
pub use scene::{Scatterer, Scene};
pub use simulate::{range_history, simulate_raw, RawSimulation};

/// Validates a parameter set and derives the chirp rate.
pub fn build_scenario(config: &ScenarioConfig) -> crate::Result<RadarScenario> {
    RadarScenario::new(config)
}
