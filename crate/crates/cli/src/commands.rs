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

use std::fmt;
use std::fs;
use std::path::Path;

use serde_json::{json, Value};

use qrda::diag_compile::{compile_diagonal, PhaseVector};
use qrda::io;
use qrda::pipeline::{
    complexity_report_with, default_shot_budgets, min_max_normalize, plan_pipeline, run_pipeline, run_pipeline_traced,
    run_sampling_experiment, CompileMode, ComplexityOptions, Execution, PipelineModes, StatePrepMode,
};
use qrda::qsim::{qft_gates, RegisterLayout, Statevector};
use qrda::rda_classical::{build_filter_bank, focus_classical, FilterBank, FilterConvention};
use qrda::scene_raw::{simulate_raw, RadarScenario, ScenarioConfig};
use qrda::{max_diff_up_to_global_phase, Complex64, ComplexImage};

use crate::config;
use crate::{Command, FilterArgs, InputArgs, ModeArgs};

#[derive(Debug)]
pub enum CliError {
    /// Bad input, configuration or file: exit code 2.
    Input(qrda::Error),
    /// A numerical self-check failed: exit code 3.
    Check(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Check(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(e) => write!(f, "{e}"),
            CliError::Check(msg) => write!(f, "self-test failed: {msg}"),
        }
    }
}

impl From<qrda::Error> for CliError {
    fn from(e: qrda::Error) -> Self {
        CliError::Input(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.into())
    }
}

type Result<T, E = CliError> = std::result::Result<T, E>;

pub fn run(command: Command) -> Result<()> {
    match command {
        Command::Simulate { input, out } => simulate(&input, &out),
        Command::Focus {
            input,
            filters,
            modes,
            engine,
            dump_stages,
            dump_filters,
            dump_circuit,
            out,
        } => focus(
            &input,
            &filters,
            &modes,
            &engine,
            Dumps {
                stages: dump_stages,
                filters: dump_filters,
                circuit: dump_circuit,
            },
            &out,
        ),
        Command::Sample {
            input,
            filters,
            modes,
            shots,
            seed,
            out,
        } => sample(&input, &filters, &modes, &shots, seed, &out),
        Command::Complexity {
            d,
            mode,
            no_state_prep,
            filters,
            out,
        } => complexity(&d, &mode, !no_state_prep, &filters, &out),
        Command::Selftest { d, seed, tolerance, out } => selftest(&d, seed, tolerance, out.as_deref()),
    }
}

fn write_json(path: &Path, value: &Value) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value).map_err(qrda::Error::from)?;
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}

fn prepare_out(out: &Path) -> Result<()> {
    fs::create_dir_all(out)?;
    Ok(())
}

fn read_raw(path: &Path) -> Result<ComplexImage> {
    if !path.is_file() {
        return Err(qrda::Error::Validation {
            field: "raw".into(),
            reason: format!("file '{}' not found", path.display()),
        }
        .into());
    }
    let is_csv = path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv"));
    Ok(if is_csv {
        io::read_image_csv(path)?
    } else {
        io::read_image_binary(path)?
    })
}

fn peak(values: &[f64], d: usize) -> [usize; 2] {
    let k = (0..values.len()).max_by(|a, b| values[*a].total_cmp(&values[*b])).unwrap_or(0);
    [k / d, k % d]
}

/// Scenario plus raw data, read from `--raw` or simulated from `--scene`.
struct Input {
    scenario: RadarScenario,
    raw: ComplexImage,
    source: Value,
}

fn load_input(args: &InputArgs) -> Result<Input> {
    if let Some(path) = &args.raw {
        let raw = read_raw(path)?;
        let scenario = config::load_scenario(&args.scenario, Some(args.d.unwrap_or(raw.d())))?;
        if raw.d() != scenario.d {
            return Err(qrda::Error::Validation {
                field: "d".into(),
                reason: format!("raw file {} has d = {}, configuration has d = {}", path.display(), raw.d(), scenario.d),
            }
            .into());
        }
        return Ok(Input {
            scenario,
            raw,
            source: json!({ "raw": path.display().to_string() }),
        });
    }
    let scenario = config::load_scenario(&args.scenario, args.d)?;
    let scene = config::load_scene(&args.scene, &scenario)?;
    if scene.is_empty() {
        log::warn!("scene is empty; raw data will be all zero");
    }
    let sim = simulate_raw(&scenario, &scene)?;
    Ok(Input {
        scenario,
        raw: sim.image,
        source: json!({ "scene": args.scene, "scatterers": scene.len(), "unobserved": sim.unobserved }),
    })
}

fn filter_bank(scenario: &RadarScenario, args: &FilterArgs) -> Result<FilterBank> {
    let conv = config::convention(args.sign_m, args.sign_a, &args.rcmc)?;
    Ok(if args.identity_filters {
        FilterBank {
            convention: conv,
            ..FilterBank::identity(scenario.d)
        }
    } else {
        build_filter_bank(scenario, conv)
    })
}

fn simulate(input: &InputArgs, out: &Path) -> Result<()> {
    let Input { scenario, raw, source } = load_input(input)?;
    prepare_out(out)?;
    let d = scenario.d;
    io::write_image_binary(out.join("raw.bin"), &raw)?;
    io::write_image_csv(out.join("raw.csv"), &raw)?;
    let scale = io::write_magnitude_pgm(out.join("raw_magnitude.pgm"), &raw.magnitudes(), d)?;
    write_json(
        &out.join("simulate.json"),
        &json!({
            "d": d,
            "samples": raw.len(),
            "qubits": scenario.qubits(),
            "source": source,
            "pgm_scale": scale,
            "scenario": scenario,
            "files": ["raw.bin", "raw.csv", "raw_magnitude.pgm"],
        }),
    )?;
    println!("simulated {} complex samples (d = {d}) into {}", raw.len(), out.display());
    Ok(())
}

struct Dumps {
    stages: bool,
    filters: bool,
    circuit: bool,
}

fn focus(input: &InputArgs, filters: &FilterArgs, modes: &ModeArgs, engine: &str, dumps: Dumps, out: &Path) -> Result<()> {
    let (run_classical, run_quantum) = match engine {
        "classical" => (true, false),
        "quantum" => (false, true),
        "both" => (true, true),
        other => {
            return Err(qrda::Error::Validation {
                field: "engine".into(),
                reason: format!("'{other}' is not classical, quantum or both"),
            }
            .into())
        }
    };
    let Input { scenario, raw, source } = load_input(input)?;
    let bank = filter_bank(&scenario, filters)?;
    let pipeline_modes = config::modes(&modes.mode, &modes.state_prep, &modes.execution)?;
    prepare_out(out)?;
    let d = scenario.d;
    let mut report = json!({
        "engine": engine,
        "d": d,
        "source": source,
        "convention": bank.convention,
        "identity_filters": filters.identity_filters,
    });

    let classical = if run_classical {
        let img = focus_classical(&raw, &bank)?;
        io::write_image_binary(out.join("focused_classical.bin"), &img)?;
        io::write_image_csv(out.join("focused_classical.csv"), &img)?;
        let mags = img.magnitudes();
        let scale = io::write_magnitude_pgm(out.join("focused_classical.pgm"), &mags, d)?;
        report["classical"] = json!({ "peak": peak(&mags, d), "pgm_scale": scale });
        Some(img)
    } else {
        None
    };

    if run_quantum {
        let plan = plan_pipeline(&scenario, &bank, pipeline_modes)?;
        let state = if dumps.stages {
            let (initial, trace) = run_pipeline_traced(&plan, &raw)?;
            io::write_statevector(out.join("stage_0_initial.state"), &initial)?;
            for (k, (step, st)) in trace.iter().enumerate() {
                io::write_statevector(out.join(format!("stage_{}_{}.state", k + 1, step.as_str())), st)?;
            }
            trace.last().map(|(_, s)| s.clone()).expect("plan has stages")
        } else {
            run_pipeline(&plan, &raw)?
        };
        let img = state.to_image();
        io::write_image_binary(out.join("focused_quantum.bin"), &img)?;
        io::write_statevector(out.join("focused_quantum.state"), &state)?;
        let mags = img.magnitudes();
        let scale = io::write_magnitude_pgm(out.join("focused_quantum.pgm"), &mags, d)?;
        report["quantum"] = json!({ "peak": peak(&mags, d), "pgm_scale": scale, "plan": plan.to_json() });
        if let Some(c) = &classical {
            let reference = c.normalized()?;
            let delta = max_diff_up_to_global_phase(reference.data(), state.amplitudes());
            report["max_delta"] = json!(delta);
            println!("max |quantum - classical| after normalization: {delta:.3e}");
        }
        if dumps.circuit {
            let list = plan.compile()?;
            fs::write(out.join("circuit.txt"), list.to_text())?;
            write_json(&out.join("circuit.json"), &list.metadata_json())?;
        }
    }
    if dumps.filters {
        io::write_filter_bank_csv(out.join("filters.csv"), &bank)?;
    }
    write_json(&out.join("focus.json"), &report)?;
    println!("focused d = {d} with engine {engine} into {}", out.display());
    Ok(())
}

fn sample(input: &InputArgs, filters: &FilterArgs, modes: &ModeArgs, shots: &[u64], seed: u64, out: &Path) -> Result<()> {
    let Input { scenario, raw, source } = load_input(input)?;
    let bank = filter_bank(&scenario, filters)?;
    let plan = plan_pipeline(&scenario, &bank, config::modes(&modes.mode, &modes.state_prep, &modes.execution)?)?;
    let d = scenario.d;
    let budgets = if shots.is_empty() {
        default_shot_budgets(d * d)
    } else {
        shots.to_vec()
    };
    if budgets.contains(&0) {
        return Err(qrda::Error::Validation {
            field: "shots".into(),
            reason: "every budget must be positive".into(),
        }
        .into());
    }
    let report = run_sampling_experiment(&plan, &raw, &budgets, seed)?;
    prepare_out(out)?;

    let reference_scale = io::write_magnitude_pgm(out.join("reference.pgm"), &report.reference, d)?;
    let mut outputs = Vec::new();
    for run in &report.runs {
        let s = run.shots;
        let (hist, raw_img, norm_img) = (
            format!("hist_{s}.csv"),
            format!("sample_{s}.pgm"),
            format!("sample_{s}_normalized.pgm"),
        );
        io::write_histogram_csv(out.join(&hist), &run.histogram)?;
        // raw sqrt(p_hat) on the reference's gray scale, clipped
        io::write_gray_pgm(out.join(&raw_img), &run.estimate, d, reference_scale)?;
        io::write_gray_pgm(out.join(&norm_img), &min_max_normalize(&run.estimate), d, u16::MAX as f64)?;
        outputs.push(json!({
            "shots": s,
            "histogram": hist,
            "image": raw_img,
            "image_normalized": norm_img,
            "rmse": run.rmse,
            "rmse_normalized": run.rmse_normalized,
            "nonzero_pixels": run.nonzero,
        }));
        println!("shots {s:>10}: rmse {:.4e}, min-max rmse {:.4e}", run.rmse, run.rmse_normalized);
    }
    write_json(
        &out.join("index.json"),
        &json!({
            "d": d,
            "seed": seed,
            "source": source,
            "reference": "reference.pgm",
            "reference_scale": reference_scale,
            "outputs": outputs,
        }),
    )?;
    Ok(())
}

fn complexity(sweep: &[usize], mode: &str, state_prep: bool, filters: &FilterArgs, out: &Path) -> Result<()> {
    let compile = config::modes(mode, "inject", "direct")?.compile;
    let opts = ComplexityOptions {
        compile,
        state_prep,
        convention: config::convention(filters.sign_m, filters.sign_a, &filters.rcmc)?,
    };
    let report = complexity_report_with(sweep, opts)?;
    prepare_out(out)?;
    write_json(
        &out.join("complexity.json"),
        &serde_json::to_value(&report).map_err(qrda::Error::from)?,
    )?;
    let table = report.table();
    fs::write(out.join("complexity.txt"), &table)?;
    print!("{table}");
    Ok(())
}

struct Check {
    name: String,
    value: f64,
    ok: bool,
}

fn random_image(d: usize, seed: u64) -> ComplexImage {
    use rand_free::Lcg;
    let mut g = Lcg(seed ^ (d as u64) << 32);
    let data = (0..d * d).map(|_| Complex64::new(g.next(), g.next())).collect();
    ComplexImage::from_vec(d, data).expect("random image is valid")
}

/// Small deterministic generator for self-test inputs.
mod rand_free {
    pub struct Lcg(pub u64);

    impl Lcg {
        pub fn next(&mut self) -> f64 {
            self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (self.0 >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        }
    }
}

fn selftest(sweep: &[usize], seed: u64, tolerance: f64, out: Option<&Path>) -> Result<()> {
    let mut checks = Vec::new();
    let mut push = |name: String, value: f64| {
        checks.push(Check {
            name,
            value,
            ok: value <= tolerance,
        })
    };
    for &d in sweep {
        let scenario = RadarScenario::new(&ScenarioConfig::table1_scaled(d))?;
        let bank = build_filter_bank(&scenario, FilterConvention::default());
        let raw = random_image(d, seed);
        let reference = focus_classical(&raw, &bank)?.normalized()?;
        let mut variants = vec![(PipelineModes::default(), "fused")];
        if d <= 16 {
            variants.push((
                PipelineModes {
                    compile: CompileMode::McmtExplicit,
                    ..Default::default()
                },
                "mcmt-explicit",
            ));
            variants.push((
                PipelineModes {
                    execution: Execution::Compiled,
                    state_prep: StatePrepMode::Compiled,
                    ..Default::default()
                },
                "compiled",
            ));
        }
        for (modes, label) in variants {
            let state = run_pipeline(&plan_pipeline(&scenario, &bank, modes)?, &raw)?;
            push(
                format!("d={d} {label} vs classical"),
                max_diff_up_to_global_phase(reference.data(), state.amplitudes()),
            );
        }

        // QFT block closed form
        let layout = RegisterLayout::for_side(d)?;
        let h = layout.n() / 2;
        let qubits: Vec<usize> = (0..h).collect();
        let gates = qft_gates(&qubits, false);
        let one_qubit_and_cp = gates.iter().filter(|g| matches!(g.name(), "H" | "CP")).count();
        let swaps = gates.iter().filter(|g| g.name() == "SWAP").count();
        let mismatch = one_qubit_and_cp.abs_diff(h * (h + 1) / 2) + swaps.abs_diff(h / 2);
        push(format!("d={d} QFT gate count off by"), mismatch as f64);

        // compiled diagonal against its phase table
        let theta: Vec<f64> = (0..layout.dim()).map(|k| bank.ha[k] + 0.25 * bank.hm[k]).collect();
        let all: Vec<usize> = (0..layout.n()).collect();
        let list = compile_diagonal(&PhaseVector::new(theta.clone())?, &all)?;
        let mut st = Statevector::from_amplitudes(layout, reference.data().to_vec())?;
        list.apply(&mut st)?;
        let want: Vec<Complex64> = reference
            .data()
            .iter()
            .zip(&theta)
            .map(|(z, t)| z * Complex64::from_polar(1.0, *t))
            .collect();
        push(
            format!("d={d} compiled diagonal"),
            max_diff_up_to_global_phase(&want, st.amplitudes()),
        );
    }

    let mut failed = Vec::new();
    for c in &checks {
        let verdict = if c.ok { "ok" } else { "FAILED" };
        println!("{:<32} {:>10.3e}  {verdict}", c.name, c.value);
        if !c.ok {
            failed.push(c.name.clone());
        }
    }
    if let Some(out) = out {
        prepare_out(out)?;
        let rows: Vec<Value> = checks
            .iter()
            .map(|c| json!({ "check": c.name, "value": c.value, "ok": c.ok }))
            .collect();
        write_json(
            &out.join("selftest.json"),
            &json!({ "tolerance": tolerance, "seed": seed, "checks": rows }),
        )?;
    }
    if failed.is_empty() {
        println!("selftest passed ({} checks)", checks.len());
        Ok(())
    } else {
        Err(CliError::Check(failed.join(", ")))
    }
}
