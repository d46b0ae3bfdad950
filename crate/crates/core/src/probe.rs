//! Probe states: Williamson factors plus displacement, and the one-mode and
//! restricted two-mode parametric families.

use serde::{Deserialize, Serialize};

use crate::channel::matrices::{asymmetric_rotation, lift, mode_mixing, rotation, squeezing};
use crate::engine::williamson;
use crate::error::{Error, Result};
use crate::linalg::{cis, conj_pair, CVec};
use crate::phase_space::{validate_state, GaussianState, SymplecticMatrix, WilliamsonForm};

/// `σ₀ = S₀ D₀ S₀†` and `d₀`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbeState {
    pub williamson: WilliamsonForm,
    /// `d̃₀`; the full vector is `(d̃₀, conj d̃₀)`.
    pub d_tilde: CVec,
}

impl ProbeState {
    pub fn new(s0: SymplecticMatrix, eigenvalues: Vec<f64>, d_tilde: CVec) -> Result<Self> {
        if d_tilde.len() != s0.modes() {
            return Err(Error::InvalidDimension("displacement does not match modes".into()));
        }
        if let Some(l) = eigenvalues.iter().find(|&&l| !(l >= 1.0 - 1e-9)) {
            return Err(Error::InvalidInput(format!("symplectic eigenvalue {l} < 1")));
        }
        Ok(Self { williamson: WilliamsonForm::new(s0, eigenvalues)?, d_tilde })
    }

    /// Decomposes an arbitrary valid state.
    pub fn from_state(state: &GaussianState) -> Result<Self> {
        validate_state(state).into_result()?;
        let w = williamson(&state.covariance())?;
        Ok(Self { williamson: w, d_tilde: state.d_tilde().clone() })
    }

    pub fn modes(&self) -> usize {
        self.williamson.modes()
    }

    pub fn s0(&self) -> &SymplecticMatrix {
        &self.williamson.symplectic
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.williamson.eigenvalues
    }

    pub fn displacement(&self) -> CVec {
        conj_pair(&self.d_tilde)
    }

    pub fn state(&self) -> Result<GaussianState> {
        let sigma = self.williamson.reconstruct();
        let n = self.modes();
        let x = sigma.view((0, 0), (n, n)).into_owned();
        let y = sigma.view((0, n), (n, n)).into_owned();
        let x = (&x + x.adjoint()) * crate::linalg::re(0.5);
        let y = (&y + y.transpose()) * crate::linalg::re(0.5);
        GaussianState::from_blocks(self.d_tilde.clone(), x, y)
    }
}

/// One-mode probe `D(d̃) R(θ) S(r) ρ_th(λ₁) (…)†` with `d̃ = |d| e^{iφ_d}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct OneModeProbeParams {
    pub lambda1: f64,
    pub r: f64,
    pub theta: f64,
    pub d_mag: f64,
    pub phi_d: f64,
}

impl Default for OneModeProbeParams {
    fn default() -> Self {
        Self { lambda1: 1.0, r: 0.0, theta: 0.0, d_mag: 0.0, phi_d: 0.0 }
    }
}

impl OneModeProbeParams {
    pub fn probe(&self) -> Result<ProbeState> {
        check_lambda(self.lambda1)?;
        let s0 = rotation(self.theta).compose(&squeezing(self.r, 0.0));
        ProbeState::new(s0, vec![self.lambda1], CVec::from_element(1, cis(self.phi_d) * self.d_mag))
    }

    /// `n = n_d + n_th + (1 + 2n_th) sinh² r`.
    pub fn mean_photon_number(&self) -> f64 {
        let n_th = (self.lambda1 - 1.0) / 2.0;
        self.d_mag * self.d_mag + n_th + self.lambda1 * self.r.sinh().powi(2)
    }

    /// Places `n − n_d − n_th` photons into squeezing (r ≥ 0).
    pub fn from_energy(n: f64, n_d: f64, n_th: f64, theta: f64, phi_d: f64) -> Result<Self> {
        Ok(Self {
            lambda1: 1.0 + 2.0 * n_th,
            r: squeezing_for_energy(n, n_d, n_th)?,
            theta,
            d_mag: n_d.sqrt(),
            phi_d,
        })
    }
}

/// Restricted two-mode probe
/// `S₀ = R₁(φ₁) R₂(φ₂) B(θ) R_as(ψ) S₁(r₁) S₂(r₂)`, `D₀ = diag(λ₁, λ₂, λ₁, λ₂)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct TwoModeProbeParams {
    pub lambda1: f64,
    pub lambda2: f64,
    pub r1: f64,
    pub r2: f64,
    pub theta: f64,
    pub psi: f64,
    pub phi1: f64,
    pub phi2: f64,
    pub d1_mag: f64,
    pub d2_mag: f64,
    pub phi_d1: f64,
    pub phi_d2: f64,
}

impl Default for TwoModeProbeParams {
    fn default() -> Self {
        Self {
            lambda1: 1.0,
            lambda2: 1.0,
            r1: 0.0,
            r2: 0.0,
            theta: 0.0,
            psi: 0.0,
            phi1: 0.0,
            phi2: 0.0,
            d1_mag: 0.0,
            d2_mag: 0.0,
            phi_d1: 0.0,
            phi_d2: 0.0,
        }
    }
}

impl TwoModeProbeParams {
    pub fn symplectic(&self) -> SymplecticMatrix {
        lift(&rotation(self.phi1), 0, 2)
            .compose(&lift(&rotation(self.phi2), 1, 2))
            .compose(&mode_mixing(self.theta, 0.0))
            .compose(&asymmetric_rotation(self.psi))
            .compose(&lift(&squeezing(self.r1, 0.0), 0, 2))
            .compose(&lift(&squeezing(self.r2, 0.0), 1, 2))
    }

    pub fn probe(&self) -> Result<ProbeState> {
        check_lambda(self.lambda1)?;
        check_lambda(self.lambda2)?;
        let d = CVec::from_vec(vec![cis(self.phi_d1) * self.d1_mag, cis(self.phi_d2) * self.d2_mag]);
        ProbeState::new(self.symplectic(), vec![self.lambda1, self.lambda2], d)
    }

    /// `n = Σ_i n_{d_i} + n_{th i} + λ_i sinh² r_i`.
    pub fn mean_photon_number(&self) -> f64 {
        let mode = |l: f64, r: f64, d: f64| d * d + (l - 1.0) / 2.0 + l * r.sinh().powi(2);
        mode(self.lambda1, self.r1, self.d1_mag) + mode(self.lambda2, self.r2, self.d2_mag)
    }
}

/// Either probe parametrization.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum ProbeParams {
    OneMode(OneModeProbeParams),
    TwoMode(TwoModeProbeParams),
}

impl ProbeParams {
    pub fn probe(&self) -> Result<ProbeState> {
        match self {
            ProbeParams::OneMode(p) => p.probe(),
            ProbeParams::TwoMode(p) => p.probe(),
        }
    }

    pub fn mean_photon_number(&self) -> f64 {
        match self {
            ProbeParams::OneMode(p) => p.mean_photon_number(),
            ProbeParams::TwoMode(p) => p.mean_photon_number(),
        }
    }

    /// Per-mode `(λ, r, |d|)`.
    pub fn modes(&self) -> Vec<(f64, f64, f64)> {
        match self {
            ProbeParams::OneMode(p) => vec![(p.lambda1, p.r, p.d_mag)],
            ProbeParams::TwoMode(p) => vec![(p.lambda1, p.r1, p.d1_mag), (p.lambda2, p.r2, p.d2_mag)],
        }
    }
}

fn check_lambda(l: f64) -> Result<()> {
    if l.is_finite() && l >= 1.0 - 1e-9 {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("symplectic eigenvalue {l} must be ≥ 1")))
    }
}

/// `r = arcsinh √((n − n_d − n_th)/(1 + 2n_th))`.
pub fn squeezing_for_energy(n: f64, n_d: f64, n_th: f64) -> Result<f64> {
    if !(n_d >= 0.0 && n_th >= 0.0 && n.is_finite()) {
        return Err(Error::InvalidInput("energies must be finite and non-negative".into()));
    }
    let rest = n - n_d - n_th;
    if rest < -1e-12 {
        return Err(Error::InvalidInput(format!("n = {n} is below n_d + n_th = {}", n_d + n_th)));
    }
    Ok((rest.max(0.0) / (1.0 + 2.0 * n_th)).sqrt().asinh())
}
