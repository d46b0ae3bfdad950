use std::path::Path;

use gaussprobe::channel::{channel_symplectic, ChannelConfig};
use gaussprobe::closed_forms::{self as cf, limit_table, LimitChannel};
use gaussprobe::fock::run_fock_panel;
use gaussprobe::optimize::{conjecture_probe, optimize_probe, scaling_exponent, OptimizerConfig};
use gaussprobe::phase_space::complex_to_real;
use gaussprobe::probe::{OneModeProbeParams, TwoModeProbeParams};
use gaussprobe::qfi::qfi_unitary;
use gaussprobe::validate::{oracle_panel, ORACLE_TOL};
use gaussprobe::Exec;
use serde::Serialize;
use serde_json::Value;

use crate::config::{self, channel_spec, ProbeInput};
use crate::error::{CliError, CliResult};
use crate::output::{csv, json, num};

pub const CLOSED_FORM_LABELS: [&str; 14] = [
    "eq19", "eq20", "eq21", "eq28", "eq29", "eq30", "eq32", "eq33", "eq34", "eq36", "eq37", "eq38", "appC-st", "appC-mix",
];

const SWEEP_HEADER: [&str; 7] = ["value", "r_term", "q_term", "eigen_term", "disp_term", "total", "status"];

fn require(path: Option<&Path>) -> CliResult<&Path> {
    path.ok_or_else(|| CliError::parse("this command needs --config PATH"))
}

fn optimizer(mut cfg: OptimizerConfig, seed: Option<u64>) -> OptimizerConfig {
    if let Some(s) = seed {
        cfg.seed = s;
    }
    cfg.exec = Exec::Parallel;
    cfg
}

pub fn qfi(path: Option<&Path>) -> CliResult<String> {
    let cfg: config::QfiConfig = config::load(require(path)?)?;
    let channel = channel_spec(&cfg.channel)?;
    let probe = cfg.probe.probe_state().map_err(CliError::physics)?;
    json(&qfi_unitary(&probe, &channel).map_err(CliError::physics)?)
}

#[derive(Serialize)]
struct ClosedFormValue<'a> {
    label: &'a str,
    value: f64,
}

pub fn closed_form(label: &str, path: Option<&Path>) -> CliResult<String> {
    if !CLOSED_FORM_LABELS.contains(&label) {
        return Err(CliError::parse(format!("unknown label '{label}'; known: {}", CLOSED_FORM_LABELS.join(", "))));
    }
    let cfg: config::ClosedFormConfig = match path {
        Some(p) => config::load(p)?,
        None => serde_json::from_value(serde_json::json!({}))?,
    };
    let probe = if cfg.probe.is_null() { serde_json::json!({}) } else { cfg.probe.clone() };
    let chi = cfg.chi;
    let value = if matches!(label, "eq19" | "eq20" | "eq21") {
        let p: OneModeProbeParams = serde_json::from_value(probe)?;
        match label {
            "eq19" => cf::qfi_one_mode_combined(&p, cfg.omega_p, cfg.omega_s, chi),
            "eq20" => cf::qfi_phase(&p),
            _ => cf::qfi_squeeze1(&p, chi),
        }
    } else {
        let p: TwoModeProbeParams = serde_json::from_value(probe)?;
        let h = (p.lambda1, p.lambda2, p.r1, p.r2, p.d1_mag, p.d2_mag);
        match label {
            "eq28" => cf::qfi_twomode_squeeze_separable(&p, chi),
            "eq29" => cf::h_max_twomode_squeeze_separable(h.0, h.1, h.2, h.3, h.4, h.5),
            "eq30" => cf::qfi_twomode_squeeze_bs(&p, chi),
            "eq32" => cf::h_max_twomode_squeeze_bs(h.0, h.1, h.2, h.3, h.4, h.5),
            "eq33" => cf::h_max_twomode_squeeze_bs_negative(h.0, h.1, h.2, h.3, h.4, h.5),
            "eq34" => cf::bs_advantage_twomode_squeeze(h.2, h.3, h.4, h.5),
            "eq36" => cf::qfi_mix_separable(&p, chi),
            "eq37" => cf::h_max_mix_separable(h.0, h.1, h.2, h.3, h.4, h.5),
            "eq38" => cf::qfi_mix_bs(&p, chi),
            "appC-st" => cf::qfi_twomode_squeeze_full(&p, chi),
            _ => cf::qfi_mix_full(&p, chi),
        }
    };
    json(&ClosedFormValue { label, value })
}

fn set_parameter(spec: &config::SweepSpec, x: f64) -> CliResult<(ProbeInput, ChannelConfig)> {
    let (mut probe, mut channel) = (spec.probe.clone(), spec.channel.clone());
    let (target, key) = match spec.parameter.strip_prefix("channel.") {
        Some(k) => (&mut channel, k),
        None => (&mut probe, spec.parameter.as_str()),
    };
    target
        .as_object_mut()
        .ok_or_else(|| CliError::parse("sweep probe and channel must be JSON objects"))?
        .insert(key.to_string(), Value::from(x));
    Ok((serde_json::from_value(probe)?, serde_json::from_value(channel)?))
}

pub fn sweep(path: Option<&Path>) -> CliResult<String> {
    let spec: config::SweepSpec = config::load(require(path)?)?;
    if spec.grid.is_empty() {
        return Err(CliError::parse("sweep grid is empty"));
    }
    if let Some(x) = spec.grid.iter().find(|x| !x.is_finite()) {
        return Err(CliError::parse(format!("sweep grid value {x} is not finite")));
    }
    let mut inputs = Vec::with_capacity(spec.grid.len());
    for &x in &spec.grid {
        let (probe, channel) = set_parameter(&spec, x)?;
        inputs.push((x, probe, channel_spec(&channel)?));
    }
    let rows = Exec::Parallel.map(&inputs, |(x, probe, channel)| {
        let h = probe.probe_state().and_then(|p| qfi_unitary(&p, channel));
        let mut row = vec![num(*x)];
        match h {
            Ok(h) => {
                row.extend([h.r_term, h.q_term, h.eigen_term, h.disp_term, h.total].map(num));
                row.push("ok".into());
            }
            Err(e) => {
                eprintln!("sweep value {}: {e}", num(*x));
                row.extend(std::iter::repeat_n(String::new(), 5));
                row.push("error".into());
            }
        }
        row
    });
    csv(&SWEEP_HEADER, &rows)
}

pub fn optimize(path: Option<&Path>, seed: Option<u64>) -> CliResult<String> {
    let cfg: config::OptimizeConfig = config::load(require(path)?)?;
    let channel = channel_spec(&cfg.channel)?;
    let res = optimize_probe(&channel, cfg.family, &cfg.budget, &optimizer(cfg.optimizer, seed))
        .map_err(CliError::physics)?;
    json(&res)
}

pub fn scaling(path: Option<&Path>, seed: Option<u64>) -> CliResult<String> {
    let cfg: config::ScalingConfig = config::load(require(path)?)?;
    let channel = channel_spec(&cfg.channel)?;
    let opt = optimizer(cfg.optimizer, seed);
    if cfg.conjecture {
        json(&conjecture_probe(&channel, cfg.family, &cfg.grid, &opt).map_err(CliError::physics)?)
    } else {
        json(&scaling_exponent(&channel, cfg.family, cfg.strategy, &cfg.grid, &opt).map_err(CliError::physics)?)
    }
}

pub fn ellipse(path: Option<&Path>) -> CliResult<String> {
    let cfg: config::EllipseConfig = config::load(require(path)?)?;
    let channel = channel_spec(&cfg.channel)?;
    if !cfg.epsilon.is_finite() {
        return Err(CliError::parse("epsilon is not finite"));
    }
    let before = cfg.probe.gaussian_state().map_err(CliError::physics)?;
    let after = channel_symplectic(&channel, cfg.epsilon)
        .and_then(|s| s.apply_to_state(&before))
        .map_err(CliError::physics)?;
    let n = before.modes();
    let mut rows = Vec::new();
    for (stage, state) in [("before", &before), ("after", &after)] {
        let sigma = complex_to_real(state).map_err(CliError::physics)?.covariance;
        let mut blocks = vec![("sigma", 0, 2 * n)];
        if n == 2 {
            blocks.push(("x1x2", 0, 2));
            blocks.push(("p1p2", 2, 2));
        }
        for (name, start, len) in blocks {
            for i in 0..len {
                for j in 0..len {
                    rows.push(vec![
                        stage.to_string(),
                        name.to_string(),
                        i.to_string(),
                        j.to_string(),
                        num(sigma[(start + i, start + j)]),
                    ]);
                }
            }
        }
    }
    csv(&["stage", "block", "row", "col", "value"], &rows)
}

pub fn limits(path: Option<&Path>) -> CliResult<String> {
    let ns = match path {
        Some(p) => config::load::<config::LimitsConfig>(p)?.n,
        None => vec![1.0, 2.0, 3.0, 4.0, 5.0],
    };
    if let Some(n) = ns.iter().find(|n| !(n.is_finite() && **n >= 0.0)) {
        return Err(CliError::parse(format!("photon number {n} must be finite and non-negative")));
    }
    let mut rows = Vec::new();
    for &n in &ns {
        for c in LimitChannel::ALL {
            let t = limit_table(c);
            rows.push(vec![num(n), c.label().to_string(), num((t.heisenberg)(n)), num((t.shotnoise)(n))]);
        }
    }
    csv(&["n", "channel", "heisenberg", "shot_noise"], &rows)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Panel {
    Oracle,
    Fock,
    All,
}

/// Returns the report and whether every check passed.
pub fn validate(panel: Panel, draws: usize, seed: u64, scale: f64) -> CliResult<(String, bool)> {
    let mut out = String::new();
    let mut ok = true;
    if matches!(panel, Panel::Oracle | Panel::All) {
        let res = oracle_panel(draws, seed, scale, Exec::Parallel).map_err(CliError::physics)?;
        out += &format!("oracle panel: {draws} draws per family, seed {seed}, tolerance {ORACLE_TOL:e}\n");
        out += &format!("{:<10} {:>14} {:>8}\n", "family", "max_rel_err", "status");
        for r in &res {
            out += &format!("{:<10} {:>14.3e} {:>8}\n", r.label, r.max_rel_err, if r.pass { "pass" } else { "FAIL" });
            ok &= r.pass;
        }
    }
    if matches!(panel, Panel::Fock | Panel::All) {
        let res = run_fock_panel().map_err(CliError::physics)?;
        if !out.is_empty() {
            out.push('\n');
        }
        out += &format!("fock panel: {} cases\n", res.len());
        out += &format!("{:<26} {:>6} {:>18} {:>18} {:>12} {:>8}\n", "case", "cutoff", "fock", "symplectic", "rel_err", "status");
        for r in &res {
            out += &format!(
                "{:<26} {:>6} {:>18} {:>18} {:>12.3e} {:>8}\n",
                r.name,
                r.cutoff,
                num(r.fock),
                num(r.unitary),
                r.rel_err,
                if r.pass { "pass" } else { "FAIL" }
            );
            ok &= r.pass;
        }
    }
    out += if ok { "all checks passed\n" } else { "some checks FAILED\n" };
    Ok((out, ok))
}
