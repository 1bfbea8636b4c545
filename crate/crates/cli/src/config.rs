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

use std::path::Path;

use qrda::pipeline::{CompileMode, Execution, PipelineModes, StatePrepMode};
use qrda::rda_classical::{FilterConvention, RcmcModel};
use qrda::scene_raw::{RadarScenario, ScenarioConfig, Scene};
use qrda::{io, Error, Result};

pub const DEFAULT_D: usize = 128;
pub const PRESET_SIDES: [usize; 5] = [8, 16, 32, 64, 128];

fn invalid(field: &str, reason: impl Into<String>) -> Error {
    Error::Validation {
        field: field.into(),
        reason: reason.into(),
    }
}

/// Resolves `--scenario`: a preset name, or a TOML file of scenario keys.
/// A file may name a `preset` and override any of its keys. `d` comes from
/// the flag, then the file, then [`DEFAULT_D`].
pub fn load_scenario(spec: &str, d_flag: Option<usize>) -> Result<RadarScenario> {
    let cfg = if let Some(cfg) = ScenarioConfig::preset(spec, d_flag.unwrap_or(DEFAULT_D)) {
        cfg
    } else {
        let path = Path::new(spec);
        if !path.is_file() {
            return Err(invalid(
                "scenario",
                format!("'{spec}' is neither a preset (table1, table1-scaled) nor a readable file"),
            ));
        }
        from_toml(&std::fs::read_to_string(path)?, d_flag)?
    };
    if ScenarioConfig::preset(spec, cfg.d).is_some() && !PRESET_SIDES.contains(&cfg.d) {
        log::warn!("preset '{spec}' is tabulated for d in {PRESET_SIDES:?}; using d = {}", cfg.d);
    }
    RadarScenario::new(&cfg)
}

fn from_toml(text: &str, d_flag: Option<usize>) -> Result<ScenarioConfig> {
    let mut table: toml::Table = text.parse().map_err(|e: toml::de::Error| Error::Parse(e.to_string()))?;
    let d = match (d_flag, table.get("d")) {
        (Some(d), _) => d,
        (None, Some(v)) => v
            .as_integer()
            .and_then(|i| usize::try_from(i).ok())
            .ok_or_else(|| invalid("d", "must be a positive integer"))?,
        (None, None) => DEFAULT_D,
    };
    table.insert("d".into(), toml::Value::Integer(d as i64));
    if let Some(name) = table.remove("preset") {
        let name = name.as_str().ok_or_else(|| invalid("preset", "must be a string"))?;
        let base = ScenarioConfig::preset(name, d).ok_or_else(|| invalid("preset", format!("unknown preset '{name}'")))?;
        let mut merged = match toml::Value::try_from(base).map_err(|e| Error::Parse(e.to_string()))? {
            toml::Value::Table(t) => t,
            _ => unreachable!("a struct serializes to a table"),
        };
        merged.extend(table);
        table = merged;
    }
    toml::Value::Table(table)
        .try_into()
        .map_err(|e: toml::de::Error| Error::Parse(e.to_string()))
}

/// `--scene`: `center`, `empty`, a CSV of `x,y,amplitude`, or a PGM raster.
pub fn load_scene(spec: &str, scenario: &RadarScenario) -> Result<Scene> {
    match spec {
        "center" => Ok(Scene::center_point(scenario)),
        "empty" => Ok(Scene::empty()),
        path => {
            if !Path::new(path).is_file() {
                return Err(invalid("scene", format!("file '{path}' not found")));
            }
            let ext = Path::new(path).extension().and_then(|e| e.to_str()).map(str::to_ascii_lowercase);
            match ext.as_deref() {
                Some("csv") => io::read_scene_csv(path, &scenario.ground),
                Some("pgm") => io::read_scene_pgm(path, &scenario.ground),
                _ => Err(invalid("scene", format!("'{path}' is not center, empty, a .csv or a .pgm"))),
            }
        }
    }
}

pub fn convention(sign_m: i8, sign_a: i8, rcmc: &str) -> Result<FilterConvention> {
    let model = match rcmc {
        "literal" => RcmcModel::Literal,
        "shift" => RcmcModel::Shift,
        other => return Err(invalid("rcmc", format!("'{other}' is not literal or shift"))),
    };
    Ok(FilterConvention::new(sign_m, sign_a)?.with_rcmc(model))
}

pub fn modes(mode: &str, state_prep: &str, execution: &str) -> Result<PipelineModes> {
    let compile = match mode {
        "fused" => CompileMode::Fused,
        "mcmt-explicit" => CompileMode::McmtExplicit,
        other => return Err(invalid("mode", format!("'{other}' is not fused or mcmt-explicit"))),
    };
    let state_prep = match state_prep {
        "inject" => StatePrepMode::Inject,
        "compiled" => StatePrepMode::Compiled,
        other => return Err(invalid("state-prep", format!("'{other}' is not inject or compiled"))),
    };
    let execution = match execution {
        "direct" => Execution::Direct,
        "compiled" => Execution::Compiled,
        other => return Err(invalid("execution", format!("'{other}' is not direct or compiled"))),
    };
    Ok(PipelineModes {
        compile,
        state_prep,
        execution,
    })
}
