use std::fs;
use std::path::Path;

use gaussprobe::channel::{ChannelConfig, ChannelSpec};
use gaussprobe::optimize::{EnergyBudget, Family, OptimizerConfig, Strategy};
use gaussprobe::phase_space::GaussianState;
use gaussprobe::probe::{OneModeProbeParams, ProbeParams, ProbeState, TwoModeProbeParams};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::Value;

use crate::error::{CliError, CliResult};

pub const SCHEMA: u64 = 1;

/// Reads a config document, checks `"schema": 1` and strips it.
pub fn load_value(path: &Path) -> CliResult<Value> {
    let text = fs::read_to_string(path).map_err(|e| CliError::parse(format!("{}: {e}", path.display())))?;
    let mut v: Value = serde_json::from_str(&text)?;
    let obj = v.as_object_mut().ok_or_else(|| CliError::parse("config must be a JSON object"))?;
    match obj.remove("schema") {
        Some(s) if s.as_u64() == Some(SCHEMA) => Ok(v),
        Some(s) => Err(CliError::parse(format!("unsupported schema {s}, expected {SCHEMA}"))),
        None => Err(CliError::parse("config lacks \"schema\": 1")),
    }
}

pub fn load<T: DeserializeOwned>(path: &Path) -> CliResult<T> {
    Ok(serde_json::from_value(load_value(path)?)?)
}

/// A probe given by family parameters or by explicit moments.
#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum ProbeInput {
    OneMode(OneModeProbeParams),
    TwoMode(TwoModeProbeParams),
    State { state: GaussianState },
}

impl ProbeInput {
    pub fn probe_state(&self) -> gaussprobe::Result<ProbeState> {
        match self {
            ProbeInput::OneMode(p) => ProbeParams::OneMode(*p).probe(),
            ProbeInput::TwoMode(p) => ProbeParams::TwoMode(*p).probe(),
            ProbeInput::State { state } => ProbeState::from_state(state),
        }
    }

    pub fn gaussian_state(&self) -> gaussprobe::Result<GaussianState> {
        match self {
            ProbeInput::State { state } => Ok(state.clone()),
            _ => self.probe_state()?.state(),
        }
    }
}

pub fn channel_spec(c: &ChannelConfig) -> CliResult<ChannelSpec> {
    c.clone().into_spec().map_err(CliError::config)
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QfiConfig {
    pub probe: ProbeInput,
    pub channel: ChannelConfig,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    /// A probe field such as `lambda1`, or `channel.chi`.
    pub parameter: String,
    pub grid: Vec<f64>,
    pub probe: Value,
    pub channel: Value,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClosedFormConfig {
    #[serde(default)]
    pub probe: Value,
    #[serde(default)]
    pub chi: f64,
    #[serde(default)]
    pub omega_p: f64,
    #[serde(default)]
    pub omega_s: f64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptimizeConfig {
    pub channel: ChannelConfig,
    pub family: Family,
    pub budget: EnergyBudget,
    #[serde(default)]
    pub optimizer: OptimizerConfig,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScalingConfig {
    pub channel: ChannelConfig,
    pub family: Family,
    #[serde(default = "default_strategy")]
    pub strategy: Strategy,
    pub grid: Vec<f64>,
    #[serde(default)]
    pub optimizer: OptimizerConfig,
    /// Run the all-energy-into-squeezing check instead of the fit.
    #[serde(default)]
    pub conjecture: bool,
}

fn default_strategy() -> Strategy {
    Strategy::OptimalSqueezing
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EllipseConfig {
    pub probe: ProbeInput,
    pub channel: ChannelConfig,
    pub epsilon: f64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LimitsConfig {
    pub n: Vec<f64>,
}
