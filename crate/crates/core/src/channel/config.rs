use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::phase_space::GeneratorW;

use super::catalog::{
    combined_channel, custom_channel, mix_channel, phase_channel, squeeze_channel, squeeze_on_mode_channel,
    twomode_squeeze_channel, ChannelKind, ChannelSpec,
};

/// Channel JSON: `{"kind", "chi", "omega_p", "omega_s", "custom_W"}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChannelConfig {
    pub kind: String,
    #[serde(default)]
    pub chi: f64,
    #[serde(default)]
    pub omega_p: f64,
    #[serde(default)]
    pub omega_s: f64,
    #[serde(rename = "custom_W", default, skip_serializing_if = "Option::is_none")]
    pub custom_w: Option<GeneratorW>,
}

impl ChannelConfig {
    pub fn into_spec(self) -> Result<ChannelSpec> {
        let kind: ChannelKind = self.kind.parse()?;
        for (name, v) in [("chi", self.chi), ("omega_p", self.omega_p), ("omega_s", self.omega_s)] {
            if !v.is_finite() {
                return Err(Error::InvalidInput(format!("{name} is not finite")));
            }
        }
        let spec = match kind {
            ChannelKind::Phase => phase_channel(),
            ChannelKind::Squeeze => squeeze_channel(self.chi),
            ChannelKind::SqueezeMode1 => squeeze_on_mode_channel(0, self.chi)?,
            ChannelKind::SqueezeMode2 => squeeze_on_mode_channel(1, self.chi)?,
            ChannelKind::Beamsplit => mix_channel(self.chi),
            ChannelKind::TwoModeSqueeze => twomode_squeeze_channel(self.chi),
            ChannelKind::CombinedOneMode => combined_channel(self.omega_p, self.omega_s, self.chi),
            ChannelKind::Custom => custom_channel(
                self.custom_w
                    .ok_or_else(|| Error::InvalidInput("custom channel needs custom_W".into()))?,
            ),
        };
        Ok(spec)
    }

    pub fn from_spec(spec: &ChannelSpec) -> Self {
        Self {
            kind: spec.kind.name().to_string(),
            chi: spec.chi,
            omega_p: spec.omega_p,
            omega_s: spec.omega_s,
            custom_w: (spec.kind == ChannelKind::Custom).then(|| spec.generator().clone()),
        }
    }
}
