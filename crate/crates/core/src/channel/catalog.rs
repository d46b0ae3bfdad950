use std::fmt;
use std::str::FromStr;

use crate::engine::exp_generator;
use crate::error::{Error, Result};
use crate::linalg::{c, cis, re, CMat, I};
use crate::phase_space::{GeneratorW, SymplecticMatrix};

use super::matrices::{lift, mode_mixing, rotation, squeezing, two_mode_squeezing};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChannelKind {
    /// One-mode phase change `R(ε)`.
    Phase,
    /// One-mode squeezing `S(ε, χ)`.
    Squeeze,
    /// One-mode squeezing of mode 1 inside a two-mode system.
    SqueezeMode1,
    /// One-mode squeezing of mode 2 inside a two-mode system.
    SqueezeMode2,
    /// Mode mixing `B(ε, χ)`.
    Beamsplit,
    /// Two-mode squeezing `S_T(ε, χ)`.
    TwoModeSqueeze,
    /// `θ → ω_p ε`, `r → ω_s ε` on one mode.
    CombinedOneMode,
    Custom,
}

impl ChannelKind {
    pub const ALL: [ChannelKind; 8] = [
        ChannelKind::Phase,
        ChannelKind::Squeeze,
        ChannelKind::SqueezeMode1,
        ChannelKind::SqueezeMode2,
        ChannelKind::Beamsplit,
        ChannelKind::TwoModeSqueeze,
        ChannelKind::CombinedOneMode,
        ChannelKind::Custom,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ChannelKind::Phase => "phase",
            ChannelKind::Squeeze => "squeeze",
            ChannelKind::SqueezeMode1 => "squeeze1-mode1",
            ChannelKind::SqueezeMode2 => "squeeze1-mode2",
            ChannelKind::Beamsplit => "beamsplit",
            ChannelKind::TwoModeSqueeze => "two-mode-squeeze",
            ChannelKind::CombinedOneMode => "combined-one-mode",
            ChannelKind::Custom => "custom",
        }
    }
}

impl fmt::Display for ChannelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ChannelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let k = match s {
            "phase" => ChannelKind::Phase,
            "squeeze" => ChannelKind::Squeeze,
            "squeeze1-mode1" => ChannelKind::SqueezeMode1,
            "squeeze1-mode2" => ChannelKind::SqueezeMode2,
            "beamsplit" | "mix" => ChannelKind::Beamsplit,
            "two-mode-squeeze" => ChannelKind::TwoModeSqueeze,
            "combined-one-mode" | "combined" => ChannelKind::CombinedOneMode,
            "custom" => ChannelKind::Custom,
            other => return Err(Error::InvalidInput(format!("unknown channel kind '{other}'"))),
        };
        Ok(k)
    }
}

/// A one-parameter Gaussian unitary group `S_ε = e^{iKWε}`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelSpec {
    pub kind: ChannelKind,
    pub chi: f64,
    pub omega_p: f64,
    pub omega_s: f64,
    generator: GeneratorW,
}

impl ChannelSpec {
    /// Per-unit-ε generator.
    pub fn generator(&self) -> &GeneratorW {
        &self.generator
    }

    pub fn modes(&self) -> usize {
        self.generator.modes()
    }

    /// `P_ε = iKW`.
    pub fn ikw(&self) -> CMat {
        self.generator.ikw()
    }
}

fn one_mode_w(omega_p: f64, omega_s: f64, chi: f64) -> GeneratorW {
    GeneratorW::quadratic(
        CMat::from_element(1, 1, re(-omega_p)),
        CMat::from_element(1, 1, I * cis(chi) * omega_s),
    )
    .expect("1×1 blocks are Hermitian/symmetric")
}

fn two_mode_w(theta_b: f64, chi_b: f64, r: [f64; 2], chi_r: [f64; 2], r_t: f64, chi_t: f64) -> GeneratorW {
    let x = CMat::from_row_slice(
        2,
        2,
        &[re(0.0), -I * cis(chi_b) * theta_b, I * cis(-chi_b) * theta_b, re(0.0)],
    );
    let t = I * cis(chi_t) * r_t;
    let y = CMat::from_row_slice(2, 2, &[I * cis(chi_r[0]) * r[0], t, t, I * cis(chi_r[1]) * r[1]]);
    GeneratorW::quadratic(x, y).expect("two-mode blocks are Hermitian/symmetric")
}

fn spec(kind: ChannelKind, chi: f64, omega_p: f64, omega_s: f64, generator: GeneratorW) -> ChannelSpec {
    ChannelSpec { kind, chi, omega_p, omega_s, generator }
}

pub fn phase_channel() -> ChannelSpec {
    spec(ChannelKind::Phase, 0.0, 1.0, 0.0, one_mode_w(1.0, 0.0, 0.0))
}

pub fn squeeze_channel(chi: f64) -> ChannelSpec {
    spec(ChannelKind::Squeeze, chi, 0.0, 1.0, one_mode_w(0.0, 1.0, chi))
}

pub fn combined_channel(omega_p: f64, omega_s: f64, chi: f64) -> ChannelSpec {
    spec(ChannelKind::CombinedOneMode, chi, omega_p, omega_s, one_mode_w(omega_p, omega_s, chi))
}

pub fn mix_channel(chi: f64) -> ChannelSpec {
    spec(ChannelKind::Beamsplit, chi, 0.0, 0.0, two_mode_w(1.0, chi, [0.0; 2], [0.0; 2], 0.0, 0.0))
}

pub fn twomode_squeeze_channel(chi: f64) -> ChannelSpec {
    spec(ChannelKind::TwoModeSqueeze, chi, 0.0, 0.0, two_mode_w(0.0, 0.0, [0.0; 2], [0.0; 2], 1.0, chi))
}

/// One-mode squeezing of `mode` (0 or 1) inside a two-mode system.
pub fn squeeze_on_mode_channel(mode: usize, chi: f64) -> Result<ChannelSpec> {
    let (kind, r, c) = match mode {
        0 => (ChannelKind::SqueezeMode1, [1.0, 0.0], [chi, 0.0]),
        1 => (ChannelKind::SqueezeMode2, [0.0, 1.0], [0.0, chi]),
        _ => return Err(Error::InvalidInput(format!("mode {mode} out of range for two modes"))),
    };
    Ok(spec(kind, chi, 0.0, 1.0, two_mode_w(0.0, 0.0, r, c, 0.0, 0.0)))
}

pub fn custom_channel(generator: GeneratorW) -> ChannelSpec {
    spec(ChannelKind::Custom, 0.0, 0.0, 0.0, generator)
}

/// `c(x) = cosh √x`, `s(x) = sinh(√x)/√x` continued to `x < 0`.
fn cosh_sinhc(x: f64) -> (f64, f64) {
    if x.abs() < 1e-6 {
        (1.0 + x / 2.0 + x * x / 24.0, 1.0 + x / 6.0 + x * x / 120.0)
    } else if x > 0.0 {
        let k = x.sqrt();
        (k.cosh(), k.sinh() / k)
    } else {
        let k = (-x).sqrt();
        (k.cos(), k.sin() / k)
    }
}

/// `e^{iKWε}`: closed forms for cataloged kinds, generic exponential otherwise.
pub fn channel_symplectic(spec: &ChannelSpec, eps: f64) -> Result<SymplecticMatrix> {
    let chi = spec.chi;
    let s = match spec.kind {
        ChannelKind::Phase => rotation(eps),
        ChannelKind::Squeeze => squeezing(eps, chi),
        ChannelKind::SqueezeMode1 => lift(&squeezing(eps, chi), 0, 2),
        ChannelKind::SqueezeMode2 => lift(&squeezing(eps, chi), 1, 2),
        ChannelKind::Beamsplit => mode_mixing(eps, chi),
        ChannelKind::TwoModeSqueeze => two_mode_squeezing(eps, chi),
        ChannelKind::CombinedOneMode => {
            // (iKW)² = (ω_s² − ω_p²) I
            let (wp, ws) = (spec.omega_p, spec.omega_s);
            let (ch, shc) = cosh_sinhc((ws * ws - wp * wp) * eps * eps);
            let alpha = re(ch) + c(0.0, -wp) * eps * shc;
            let beta = -cis(chi) * ws * eps * shc;
            SymplecticMatrix::from_blocks(CMat::from_element(1, 1, alpha), CMat::from_element(1, 1, beta))?
        }
        ChannelKind::Custom => return channel_symplectic_generic(spec, eps),
    };
    Ok(s)
}

/// Always goes through the matrix exponential.
pub fn channel_symplectic_generic(spec: &ChannelSpec, eps: f64) -> Result<SymplecticMatrix> {
    exp_generator(&spec.generator.scaled(eps))
}
