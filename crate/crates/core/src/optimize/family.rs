//! Search-space layouts: map an unconstrained real vector onto a feasible probe.

use std::f64::consts::FRAC_PI_4;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::channel::{ChannelKind, ChannelSpec};
use crate::error::{Error, Result};
use crate::probe::{OneModeProbeParams, ProbeParams, TwoModeProbeParams};

/// Value of an energy coordinate that effectively switches that share off.
pub(crate) const OFF: f64 = -30.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    OneMode,
    TwoModeRestricted,
    /// The restricted family without the beam splitter (`θ = 0`).
    TwoModeSeparable,
    /// One-mode probe in mode 1 of a two-mode channel, mode 2 in vacuum.
    OneModeOnTwoMode,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::OneMode => "one-mode",
            Family::TwoModeRestricted => "two-mode-restricted",
            Family::TwoModeSeparable => "two-mode-separable",
            Family::OneModeOnTwoMode => "one-mode-on-two-mode",
        }
    }

    pub fn channel_modes(self) -> usize {
        match self {
            Family::OneMode => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        [Family::OneMode, Family::TwoModeRestricted, Family::TwoModeSeparable, Family::OneModeOnTwoMode]
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidFamily(format!("unknown probe family '{s}'")))
    }
}

/// Which energy shares may be non-zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Constraint {
    #[default]
    Free,
    SqueezingOnly,
    CoherentOnly,
}

impl Constraint {
    pub fn name(self) -> &'static str {
        match self {
            Constraint::Free => "free",
            Constraint::SqueezingOnly => "squeezing-only",
            Constraint::CoherentOnly => "coherent-only",
        }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Constraint {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        [Constraint::Free, Constraint::SqueezingOnly, Constraint::CoherentOnly]
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown energy constraint '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Coord {
    Angle,
    Share,
    Energy,
}

/// Energy fractions of one mode.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModeSplit {
    pub n: f64,
    pub f_d: f64,
    pub f_th: f64,
}

impl ModeSplit {
    pub fn of(lambda: f64, r: f64, d_mag: f64) -> Self {
        let n_d = d_mag * d_mag;
        let n_th = (lambda - 1.0) / 2.0;
        let n = n_d + n_th + lambda * r.sinh().powi(2);
        if n <= 0.0 {
            return Self { n: 0.0, f_d: 0.0, f_th: 0.0 };
        }
        Self { n, f_d: n_d / n, f_th: n_th / n }
    }
}

fn softplus(u: f64) -> f64 {
    if u > 30.0 {
        u
    } else {
        u.exp().ln_1p()
    }
}

fn sigmoid(s: f64) -> f64 {
    1.0 / (1.0 + (-s).exp())
}

/// Full coordinate vectors:
/// one-mode `[θ, φ_d, u_d, u_th]`;
/// two-mode `[θ, ψ, φ₁, φ₂, φ_d1, φ_d2, s, u_d1, u_th1, u_d2, u_th2]`.
#[derive(Debug, Clone)]
pub(crate) struct Layout {
    pub family: Family,
    pub constraint: Constraint,
    pub free: Vec<usize>,
    pub n_total: f64,
}

const ONE_KINDS: [Coord; 4] = [Coord::Angle, Coord::Angle, Coord::Energy, Coord::Energy];
const TWO_KINDS: [Coord; 11] = [
    Coord::Angle,
    Coord::Angle,
    Coord::Angle,
    Coord::Angle,
    Coord::Angle,
    Coord::Angle,
    Coord::Share,
    Coord::Energy,
    Coord::Energy,
    Coord::Energy,
    Coord::Energy,
];

impl Layout {
    pub fn new(family: Family, constraint: Constraint, n_total: f64) -> Self {
        let free = match (family, constraint) {
            (Family::TwoModeRestricted, Constraint::Free) => (0..11).collect(),
            (Family::TwoModeRestricted, Constraint::SqueezingOnly) => vec![0, 1, 2, 3, 6],
            (Family::TwoModeRestricted, Constraint::CoherentOnly) => vec![4, 5, 6],
            (Family::TwoModeSeparable, Constraint::Free) => (1..11).collect(),
            (Family::TwoModeSeparable, Constraint::SqueezingOnly) => vec![1, 2, 3, 6],
            (Family::TwoModeSeparable, Constraint::CoherentOnly) => vec![4, 5, 6],
            (_, Constraint::Free) => vec![0, 1, 2, 3],
            (_, Constraint::SqueezingOnly) => vec![0],
            (_, Constraint::CoherentOnly) => vec![1],
        };
        Self { family, constraint, free, n_total }
    }

    fn kinds(&self) -> &'static [Coord] {
        match self.family {
            Family::TwoModeRestricted | Family::TwoModeSeparable => &TWO_KINDS,
            _ => &ONE_KINDS,
        }
    }

    pub fn free_kinds(&self) -> Vec<Coord> {
        let k = self.kinds();
        self.free.iter().map(|&i| k[i]).collect()
    }

    pub fn full_dim(&self) -> usize {
        self.kinds().len()
    }

    pub fn project(&self, full: &[f64]) -> Vec<f64> {
        self.free.iter().map(|&i| full[i]).collect()
    }

    fn expand(&self, x: &[f64]) -> Vec<f64> {
        let mut full = vec![0.0; self.full_dim()];
        for (&i, &v) in self.free.iter().zip(x) {
            full[i] = v;
        }
        full
    }

    /// `(n_d, n_th)` for a mode holding `n` photons.
    fn shares(&self, n: f64, u_d: f64, u_th: f64) -> (f64, f64) {
        match self.constraint {
            Constraint::SqueezingOnly => (0.0, 0.0),
            Constraint::CoherentOnly => (n, 0.0),
            Constraint::Free => {
                let (wd, wt) = (softplus(u_d), softplus(u_th));
                let total = wd + wt + softplus(0.0);
                (n * wd / total, n * wt / total)
            }
        }
    }

    fn one_mode(&self, n: f64, theta: f64, phi_d: f64, u_d: f64, u_th: f64) -> Result<OneModeProbeParams> {
        let (n_d, n_th) = self.shares(n, u_d, u_th);
        OneModeProbeParams::from_energy(n, n_d, n_th, theta, phi_d)
    }

    pub fn decode(&self, x: &[f64]) -> Result<ProbeParams> {
        let v = self.expand(x);
        let n = self.n_total;
        match self.family {
            Family::OneMode => Ok(ProbeParams::OneMode(self.one_mode(n, v[0], v[1], v[2], v[3])?)),
            Family::OneModeOnTwoMode => {
                let p = self.one_mode(n, v[0], v[1], v[2], v[3])?;
                Ok(ProbeParams::TwoMode(TwoModeProbeParams {
                    lambda1: p.lambda1,
                    r1: p.r,
                    phi1: p.theta,
                    d1_mag: p.d_mag,
                    phi_d1: p.phi_d,
                    ..TwoModeProbeParams::default()
                }))
            }
            Family::TwoModeRestricted | Family::TwoModeSeparable => {
                let n1 = n * sigmoid(v[6]);
                let n2 = (n - n1).max(0.0);
                let a = self.one_mode(n1, 0.0, 0.0, v[7], v[8])?;
                let b = self.one_mode(n2, 0.0, 0.0, v[9], v[10])?;
                Ok(ProbeParams::TwoMode(TwoModeProbeParams {
                    lambda1: a.lambda1,
                    lambda2: b.lambda1,
                    r1: a.r,
                    r2: b.r,
                    theta: v[0],
                    psi: v[1],
                    phi1: v[2],
                    phi2: v[3],
                    d1_mag: a.d_mag,
                    d2_mag: b.d_mag,
                    phi_d1: v[4],
                    phi_d2: v[5],
                }))
            }
        }
    }

    /// Known analytic optima for the catalogue channels, as full vectors.
    pub fn warm_starts(&self, channel: &ChannelSpec) -> Vec<Vec<f64>> {
        let chi = channel.chi;
        let h = chi / 2.0;
        let family = match self.family {
            Family::TwoModeSeparable => Family::TwoModeRestricted,
            f => f,
        };
        match (family, channel.kind) {
            (Family::OneMode, ChannelKind::Phase) => vec![vec![0.0, 2.0 * FRAC_PI_4, OFF, OFF]],
            (Family::OneMode, ChannelKind::Squeeze) => vec![vec![FRAC_PI_4 - h, FRAC_PI_4 + h, OFF, OFF]],
            (Family::OneMode, ChannelKind::CombinedOneMode) => {
                vec![vec![-h - FRAC_PI_4, h - FRAC_PI_4, OFF, OFF], vec![FRAC_PI_4 - h, FRAC_PI_4 + h, OFF, OFF]]
            }
            (Family::TwoModeRestricted, ChannelKind::TwoModeSqueeze) => vec![vec![
                0.0,
                0.0,
                FRAC_PI_4 - h,
                FRAC_PI_4 - h,
                FRAC_PI_4 + h,
                FRAC_PI_4 + h,
                0.0,
                OFF,
                OFF,
                OFF,
                OFF,
            ]],
            (Family::TwoModeRestricted, ChannelKind::Beamsplit) => vec![vec![
                0.0,
                0.0,
                FRAC_PI_4 - h,
                -FRAC_PI_4 + h,
                FRAC_PI_4 + h,
                -FRAC_PI_4 - h,
                0.0,
                OFF,
                OFF,
                OFF,
                OFF,
            ]],
            _ => vec![],
        }
    }

    /// Default simplex edge per free coordinate.
    pub fn steps(&self) -> Vec<f64> {
        self.free_kinds()
            .iter()
            .map(|k| match k {
                Coord::Angle => 0.4,
                Coord::Share => 1.0,
                Coord::Energy => 2.0,
            })
            .collect()
    }
}

pub(crate) fn check_family(family: Family, channel: &ChannelSpec) -> Result<()> {
    if channel.modes() != family.channel_modes() {
        return Err(Error::InvalidFamily(format!(
            "{family} probes need a {}-mode channel, got {} modes",
            family.channel_modes(),
            channel.modes()
        )));
    }
    Ok(())
}

