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

use qrda::rda_classical::{build_filter_bank, focus_steps, FilterBank, FilterConvention, RcmcModel, Step};
use qrda::scene_raw::{simulate_raw, RadarScenario, ScenarioConfig, Scene, SPEED_OF_LIGHT};
use qrda::ComplexImage;

/// The table1 preset scaled to d = 64 with the carrier lowered to 30 MHz, which puts
/// about two range cells of migration into the data.
fn migrating_scenario() -> RadarScenario {
    let d = 64;
    let mut cfg = ScenarioConfig::table1_scaled(d);
    cfg.f0 = 3.0e7;
    let k_a = 2.0 * cfg.v * cfg.v * cfg.f0 / (SPEED_OF_LIGHT * cfg.r0_ref);
    cfg.t_flight = (d as f64 / k_a).sqrt();
    RadarScenario::new(&cfg).unwrap()
}

fn point_raw(s: &RadarScenario, row: usize, col: usize) -> ComplexImage {
    let scene = Scene::new(vec![Scene::point_at_pixel(s, row, col, 1.0)], &s.ground).unwrap();
    simulate_raw(s, &scene).unwrap().image
}

fn after(raw: &ComplexImage, bank: &FilterBank, step: Step) -> ComplexImage {
    focus_steps(raw, bank)
        .unwrap()
        .into_iter()
        .find(|(s, _)| *s == step)
        .unwrap()
        .1
}

/// Spread of the energy-weighted row centroid over Doppler columns holding
/// at least a tenth of the strongest column's energy.
fn centroid_spread(img: &ComplexImage) -> f64 {
    let d = img.d();
    let col_energy: Vec<f64> = (0..d).map(|j| (0..d).map(|i| img.get(i, j).norm_sqr()).sum()).collect();
    let strongest = col_energy.iter().copied().fold(0.0, f64::max);
    let rows: Vec<f64> = (0..d)
        .filter(|&j| col_energy[j] >= 0.1 * strongest)
        .map(|j| (0..d).map(|i| i as f64 * img.get(i, j).norm_sqr()).sum::<f64>() / col_energy[j])
        .collect();
    let hi = rows.iter().copied().fold(f64::MIN, f64::max);
    let lo = rows.iter().copied().fold(f64::MAX, f64::min);
    hi - lo
}

#[test]
fn migration_correction_straightens_the_range_walk() {
    let s = migrating_scenario();
    let raw = point_raw(&s, 32, 32);
    let bank = build_filter_bank(&s, FilterConvention::default().with_rcmc(RcmcModel::Shift));
    let none = FilterBank {
        hm: vec![0.0; bank.hm.len()],
        ..bank.clone()
    };
    // range-Doppler domain: range compressed, azimuth still in frequency
    let before = centroid_spread(&after(&raw, &none, Step::RangeIfft));
    let corrected = centroid_spread(&after(&raw, &bank, Step::RangeIfft));
    println!("centroid spread before {before:.3}, after {corrected:.3}");
    assert!(before >= 1.0, "test scene must migrate, spread {before}");
    assert!(corrected <= before, "{corrected} > {before}");
    assert!(corrected < 0.75 * before);
}

#[test]
fn azimuth_filter_concentrates_a_centered_point() {
    let s = RadarScenario::new(&ScenarioConfig::table1_scaled(64)).unwrap();
    let raw = point_raw(&s, 32, 32);
    let bank = build_filter_bank(&s, FilterConvention::default().with_rcmc(RcmcModel::Shift));
    let focused = after(&raw, &bank, Step::AzimuthIfft);
    let row: Vec<f64> = (0..64).map(|j| focused.get(32, j).norm_sqr()).collect();
    let peak = row[32];
    let total: f64 = row.iter().sum();
    assert_eq!(row.iter().copied().fold(0.0, f64::max), peak);
    assert!(peak / total > 0.9, "peak fraction {}", peak / total);

    // the opposite azimuth sign leaves the chirp spread out
    let wrong = build_filter_bank(&s, FilterConvention::new(1, -1).unwrap().with_rcmc(RcmcModel::Shift));
    let smeared = after(&raw, &wrong, Step::AzimuthIfft);
    assert!(smeared.get(32, 32).norm_sqr() / smeared.energy() < 0.1);
}
