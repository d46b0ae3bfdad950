//! Quantum Fisher information from Williamson factors.

use serde::{Deserialize, Serialize};

use crate::channel::ChannelSpec;
use crate::error::{Error, Result};
use crate::linalg::{assemble_blocks, k_matrix, max_abs_diff, CMat, CVec};
use crate::phase_space::{SymplecticMatrix, WilliamsonForm};
use crate::probe::ProbeState;

const PURE_TOL: f64 = 1e-9;

/// Total QFI and its four contributions.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct QfiBreakdown {
    pub r_term: f64,
    pub q_term: f64,
    pub eigen_term: f64,
    pub disp_term: f64,
    pub total: f64,
}

impl QfiBreakdown {
    pub fn new(r_term: f64, q_term: f64, eigen_term: f64, disp_term: f64) -> Self {
        Self { r_term, q_term, eigen_term, disp_term, total: r_term + q_term + eigen_term + disp_term }
    }
}

/// Blocks of `P = [[R, Q], [conj Q, conj R]]`.
#[derive(Debug, Clone, PartialEq)]
pub struct PMatrix {
    pub r: CMat,
    pub q: CMat,
}

impl PMatrix {
    fn from_full(p: &CMat) -> Self {
        let n = p.nrows() / 2;
        Self { r: p.view((0, 0), (n, n)).into_owned(), q: p.view((0, n), (n, n)).into_owned() }
    }

    pub fn full(&self) -> CMat {
        assemble_blocks(&self.r, &self.q)
    }

    /// Entrywise max of `PK + KP†`.
    pub fn lie_residual(&self) -> f64 {
        let p = self.full();
        let k = k_matrix(self.r.nrows());
        max_abs_diff(&(&p * &k + &k * p.adjoint()), &CMat::zeros(p.nrows(), p.ncols()))
    }
}

/// The four temperature factors for a pair of symplectic eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TemperatureFactors {
    /// `λᵢ²/(1+λᵢ²)`
    pub f1: f64,
    /// `(λᵢ+λⱼ)²/(λᵢλⱼ+1)`
    pub f2: f64,
    /// `(λᵢ−λⱼ)²/(λᵢλⱼ−1)`, zero for a pure pair
    pub f3: f64,
    /// `1/λᵢ`
    pub f4: f64,
}

#[inline]
fn f2(li: f64, lj: f64) -> f64 {
    (li + lj).powi(2) / (li * lj + 1.0)
}

#[inline]
fn f3(li: f64, lj: f64) -> f64 {
    let den = li * lj - 1.0;
    if den < PURE_TOL {
        0.0
    } else {
        (li - lj).powi(2) / den
    }
}

pub fn temperature_factors(li: f64, lj: f64) -> Result<TemperatureFactors> {
    for l in [li, lj] {
        if !(l >= 1.0 - PURE_TOL) || !l.is_finite() {
            return Err(Error::InvalidInput(format!("symplectic eigenvalue {l} < 1")));
        }
    }
    Ok(TemperatureFactors { f1: li * li / (1.0 + li * li), f2: f2(li, lj), f3: f3(li, lj), f4: 1.0 / li })
}

fn check_modes(probe: &ProbeState, channel: &ChannelSpec) -> Result<()> {
    if probe.modes() != channel.modes() {
        return Err(Error::InvalidInput(format!(
            "probe has {} modes but channel acts on {}",
            probe.modes(),
            channel.modes()
        )));
    }
    Ok(())
}

/// `P = S₀⁻¹ (iKW) S₀`.
pub fn p_matrix(probe: &ProbeState, channel: &ChannelSpec) -> Result<PMatrix> {
    check_modes(probe, channel)?;
    let s0 = probe.s0().full();
    let s0_inv = probe.s0().inverse().full();
    Ok(PMatrix::from_full(&(s0_inv * channel.ikw() * s0)))
}

fn block_terms(p: &PMatrix, lambda: &[f64]) -> (f64, f64) {
    let n = lambda.len();
    let (mut rt, mut qt) = (0.0, 0.0);
    for i in 0..n {
        for j in 0..n {
            let (li, lj) = (lambda[i], lambda[j]);
            rt += f3(li, lj) * p.r[(i, j)].norm_sqr();
            qt += f2(li, lj) * p.q[(i, j)].norm_sqr();
        }
    }
    (rt, qt)
}

/// `2 v† σ⁻¹ v` with `σ⁻¹ = S⁻† D⁻¹ S⁻¹`.
fn disp_term(w: &WilliamsonForm, v: &CVec) -> f64 {
    let n = w.modes();
    let u = w.symplectic.inverse().full() * v;
    2.0 * u.iter().enumerate().map(|(k, z)| z.norm_sqr() / w.eigenvalues[k % n]).sum::<f64>()
}

/// QFI of a one-parameter Gaussian unitary group on `probe`; independent of ε.
pub fn qfi_unitary(probe: &ProbeState, channel: &ChannelSpec) -> Result<QfiBreakdown> {
    let p = p_matrix(probe, channel)?;
    let (rt, qt) = block_terms(&p, probe.eigenvalues());
    let g = channel.generator();
    let v = channel.ikw() * probe.displacement() + g.gamma();
    let dt = disp_term(&probe.williamson, &v);
    if !(rt.is_finite() && qt.is_finite() && dt.is_finite()) {
        return Err(Error::NumericalInstability("non-finite QFI term".into()));
    }
    Ok(QfiBreakdown::new(rt, qt, 0.0, dt))
}

/// Inputs for the general QFI formula at a fixed ε.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneralQfiInputs {
    pub eigenvalues: Vec<f64>,
    pub eigenvalues_dot: Vec<f64>,
    /// Second derivatives; required wherever `λᵢ = 1`.
    pub eigenvalues_ddot: Option<Vec<f64>>,
    pub symplectic: SymplecticMatrix,
    /// Full 2N×2N derivative `Ṡ`.
    pub symplectic_dot: CMat,
    /// Full `d`; only used for dimension checks.
    pub displacement: CVec,
    pub displacement_dot: CVec,
}

/// General QFI with `P = S⁻¹Ṡ`; `σ⁻¹` is built from the Williamson factors.
pub fn qfi_general(inp: &GeneralQfiInputs) -> Result<QfiBreakdown> {
    let n = inp.symplectic.modes();
    let dims_ok = inp.eigenvalues.len() == n
        && inp.eigenvalues_dot.len() == n
        && inp.eigenvalues_ddot.as_ref().is_none_or(|v| v.len() == n)
        && inp.symplectic_dot.shape() == (2 * n, 2 * n)
        && inp.displacement.len() == 2 * n
        && inp.displacement_dot.len() == 2 * n;
    if !dims_ok {
        return Err(Error::InvalidDimension("general QFI inputs have inconsistent sizes".into()));
    }
    let w = WilliamsonForm::new(inp.symplectic.clone(), inp.eigenvalues.clone())?;
    let p = PMatrix::from_full(&(inp.symplectic.inverse().full() * &inp.symplectic_dot));
    let (rt, qt) = block_terms(&p, &inp.eigenvalues);
    let mut et = 0.0;
    for i in 0..n {
        let l = inp.eigenvalues[i];
        if l < 1.0 - PURE_TOL {
            return Err(Error::InvalidInput(format!("symplectic eigenvalue {l} < 1")));
        }
        if (l - 1.0).abs() < PURE_TOL {
            let dd = inp.eigenvalues_ddot.as_ref().ok_or_else(|| {
                Error::DegenerateInput(format!("λ_{} = 1 requires the second derivative", i + 1))
            })?;
            et += dd[i];
        } else {
            et += inp.eigenvalues_dot[i].powi(2) / (l * l - 1.0);
        }
    }
    let dt = disp_term(&w, &inp.displacement_dot);
    Ok(QfiBreakdown::new(rt, qt, et, dt))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::{phase_channel, squeeze_channel};
    use crate::linalg::c;
    use crate::probe::OneModeProbeParams;

    fn one(lambda1: f64, r: f64, d_mag: f64) -> ProbeState {
        OneModeProbeParams { lambda1, r, theta: 0.0, d_mag, phi_d: 0.0 }.probe().unwrap()
    }

    #[test]
    fn p_matrix_identity_probe_phase() {
        let p = p_matrix(&one(1.0, 0.0, 0.0), &phase_channel()).unwrap();
        assert!((p.r[(0, 0)] - c(0.0, -1.0)).norm() < 1e-15);
        assert!(p.q[(0, 0)].norm() < 1e-15);
    }

    #[test]
    fn p_matrix_identity_probe_squeeze() {
        let p = p_matrix(&one(1.0, 0.0, 0.0), &squeeze_channel(0.0)).unwrap();
        assert!(p.r[(0, 0)].norm() < 1e-15);
        assert!((p.q[(0, 0)].norm() - 1.0).abs() < 1e-15);
        assert!(p.lie_residual() < 1e-15);
    }

    #[test]
    fn coherent_and_thermal_displaced() {
        assert!((qfi_unitary(&one(1.0, 0.0, 1.0), &phase_channel()).unwrap().total - 4.0).abs() < 1e-12);
        assert!((qfi_unitary(&one(2.0, 0.0, 1.0), &phase_channel()).unwrap().total - 2.0).abs() < 1e-12);
    }

    #[test]
    fn squeezed_vacuum_phase() {
        let h = qfi_unitary(&one(1.0, -0.88, 0.0), &phase_channel()).unwrap();
        assert!((h.total - 2.0 * 1.76f64.sinh().powi(2)).abs() < 1e-12);
        assert_eq!(h.eigen_term, 0.0);
        assert_eq!(h.total, h.r_term + h.q_term + h.eigen_term + h.disp_term);
    }

    #[test]
    fn vacuum_phase_is_zero() {
        assert_eq!(qfi_unitary(&one(1.0, 0.0, 0.0), &phase_channel()).unwrap().total, 0.0);
    }

    #[test]
    fn mode_mismatch_rejected() {
        let err = p_matrix(&one(1.0, 0.0, 0.0), &crate::channel::mix_channel(0.0));
        assert!(matches!(err, Err(Error::InvalidInput(_))));
    }

    #[test]
    fn factors_pure_pair() {
        let f = temperature_factors(1.0, 1.0).unwrap();
        assert_eq!((f.f1, f.f2, f.f3, f.f4), (0.5, 2.0, 0.0, 1.0));
        let f = temperature_factors(3.0, 1.0).unwrap();
        assert!((f.f3 - 2.0).abs() < 1e-15 && (f.f2 - 4.0).abs() < 1e-15);
        assert!(temperature_factors(0.9, 1.0).is_err());
    }

    #[test]
    fn general_needs_second_derivative_when_pure() {
        let inp = GeneralQfiInputs {
            eigenvalues: vec![1.0],
            eigenvalues_dot: vec![0.0],
            eigenvalues_ddot: None,
            symplectic: SymplecticMatrix::identity(1),
            symplectic_dot: CMat::zeros(2, 2),
            displacement: CVec::zeros(2),
            displacement_dot: CVec::zeros(2),
        };
        assert!(matches!(qfi_general(&inp), Err(Error::DegenerateInput(_))));
        let ok = GeneralQfiInputs { eigenvalues_ddot: Some(vec![0.0]), ..inp };
        assert_eq!(qfi_general(&ok).unwrap().total, 0.0);
    }
}
