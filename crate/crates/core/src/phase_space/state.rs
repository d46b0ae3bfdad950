use std::fmt;

use nalgebra::SymmetricEigen;

use crate::error::{Error, Result};
use crate::linalg::{
    assemble_blocks, conj_pair, hermitian_residual, k_matrix, max_abs, symmetric_residual, CMat,
    CVec,
};

/// Commutation matrix `K = diag(I, -I)` for `modes` bosonic modes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KMatrix {
    modes: usize,
}

impl KMatrix {
    pub fn modes(&self) -> usize {
        self.modes
    }

    pub fn matrix(&self) -> CMat {
        k_matrix(self.modes)
    }

    pub fn diagonal(&self) -> Vec<f64> {
        (0..2 * self.modes)
            .map(|i| if i < self.modes { 1.0 } else { -1.0 })
            .collect()
    }
}

pub fn make_k(modes: usize) -> Result<KMatrix> {
    if modes == 0 {
        return Err(Error::InvalidDimension("K requires at least one mode".into()));
    }
    Ok(KMatrix { modes })
}

/// Tolerances used by state validation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Accept symplectic eigenvalues down to `1 - physicality`.
    pub physicality: f64,
    /// Relative residual allowed for Hermiticity / symmetry / pairing checks.
    pub structure: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self { physicality: 1e-9, structure: 1e-12 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    /// Covariance not Hermitian (or X block not Hermitian).
    NotHermitian { residual: f64 },
    /// Y block not symmetric.
    NotSymmetric { residual: f64 },
    /// Lower half of the displacement is not the conjugate of the upper half.
    ConjugatePair { residual: f64 },
    /// Covariance lacks the `[[X, Y], [conj Y, conj X]]` layout.
    BlockStructure { residual: f64 },
    /// Covariance not positive definite.
    NotPositiveDefinite { min_eigenvalue: f64 },
    /// A symplectic eigenvalue below one.
    Unphysical { min_symplectic_eigenvalue: f64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotHermitian { residual } => write!(f, "covariance not Hermitian (residual {residual:e})"),
            Violation::NotSymmetric { residual } => write!(f, "Y block not symmetric (residual {residual:e})"),
            Violation::ConjugatePair { residual } => {
                write!(f, "displacement breaks conjugate-pair structure (residual {residual:e})")
            }
            Violation::BlockStructure { residual } => {
                write!(f, "covariance breaks block-conjugation structure (residual {residual:e})")
            }
            Violation::NotPositiveDefinite { min_eigenvalue } => {
                write!(f, "covariance not positive definite (min eigenvalue {min_eigenvalue})")
            }
            Violation::Unphysical { min_symplectic_eigenvalue } => {
                write!(f, "symplectic eigenvalue {min_symplectic_eigenvalue} below 1")
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            let msg: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
            Err(Error::Structure(msg.join("; ")))
        }
    }
}

/// First and second moments of an N-mode Gaussian state in complex form.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianState {
    modes: usize,
    d_tilde: CVec,
    sigma_x: CMat,
    sigma_y: CMat,
}

impl GaussianState {
    /// Builds a state from its independent blocks. Only dimensions are
    /// checked here; see [`validate_state`] for physics.
    pub fn from_blocks(d_tilde: CVec, sigma_x: CMat, sigma_y: CMat) -> Result<Self> {
        let n = d_tilde.len();
        if n == 0 {
            return Err(Error::InvalidDimension("state needs at least one mode".into()));
        }
        if sigma_x.shape() != (n, n) || sigma_y.shape() != (n, n) {
            return Err(Error::InvalidDimension(format!(
                "covariance blocks {:?}/{:?} do not match {} modes",
                sigma_x.shape(),
                sigma_y.shape(),
                n
            )));
        }
        Ok(Self { modes: n, d_tilde, sigma_x, sigma_y })
    }

    /// Builds a state from full 2N moments; rejects anything failing
    /// [`validate_moments`].
    pub fn from_moments(d: &CVec, sigma: &CMat) -> Result<Self> {
        validate_moments(d, sigma)?.into_result()?;
        let n = d.len() / 2;
        Self::from_blocks(
            d.rows(0, n).into_owned(),
            sigma.view((0, 0), (n, n)).into_owned(),
            sigma.view((0, n), (n, n)).into_owned(),
        )
    }

    pub fn vacuum(modes: usize) -> Self {
        Self::thermal(&vec![1.0; modes])
    }

    /// Product of thermal states with the given symplectic eigenvalues.
    pub fn thermal(eigenvalues: &[f64]) -> Self {
        let n = eigenvalues.len();
        Self {
            modes: n,
            d_tilde: CVec::zeros(n),
            sigma_x: CMat::from_fn(n, n, |i, j| if i == j { eigenvalues[i].into() } else { 0.0.into() }),
            sigma_y: CMat::zeros(n, n),
        }
    }

    pub fn modes(&self) -> usize {
        self.modes
    }

    pub fn d_tilde(&self) -> &CVec {
        &self.d_tilde
    }

    pub fn sigma_x(&self) -> &CMat {
        &self.sigma_x
    }

    pub fn sigma_y(&self) -> &CMat {
        &self.sigma_y
    }

    /// Full displacement `(d̃, conj d̃)ᵀ`.
    pub fn displacement(&self) -> CVec {
        conj_pair(&self.d_tilde)
    }

    /// Full covariance `[[X, Y], [conj Y, conj X]]`.
    pub fn covariance(&self) -> CMat {
        assemble_blocks(&self.sigma_x, &self.sigma_y)
    }

    pub fn with_displacement(mut self, d_tilde: CVec) -> Result<Self> {
        if d_tilde.len() != self.modes {
            return Err(Error::InvalidDimension("displacement length".into()));
        }
        self.d_tilde = d_tilde;
        Ok(self)
    }
}

/// Symplectic spectrum of a Hermitian 2N×2N covariance: the positive
/// half of the spectrum of `σ^{1/2} K σ^{1/2}` (equivalently of `Kσ`).
pub(crate) fn symplectic_spectrum(sigma: &CMat) -> Result<Vec<f64>> {
    let n2 = sigma.nrows();
    let eig = SymmetricEigen::new(sigma.clone());
    let min = eig.eigenvalues.iter().cloned().fold(f64::INFINITY, f64::min);
    if min <= 0.0 {
        return Err(Error::InvalidInput(format!("covariance not positive definite (min eigenvalue {min})")));
    }
    let root = &eig.eigenvectors
        * CMat::from_diagonal(&eig.eigenvalues.map(|x| x.sqrt().into()))
        * eig.eigenvectors.adjoint();
    let m = crate::linalg::k_mul(&root);
    let m = &root * m;
    let m = (&m + m.adjoint()) * crate::linalg::re(0.5);
    let mut ev: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().cloned().collect();
    ev.sort_by(|a, b| b.partial_cmp(a).unwrap());
    ev.truncate(n2 / 2);
    Ok(ev)
}

/// Checks full (redundant) moments: pairing, block layout, Hermiticity,
/// positivity and symplectic eigenvalues ≥ 1.
pub fn validate_moments(d: &CVec, sigma: &CMat) -> Result<ValidationReport> {
    validate_moments_with(d, sigma, &Tolerances::default())
}

pub fn validate_moments_with(d: &CVec, sigma: &CMat, tol: &Tolerances) -> Result<ValidationReport> {
    let n2 = d.len();
    if n2 == 0 || n2 % 2 != 0 || sigma.shape() != (n2, n2) {
        return Err(Error::InvalidDimension(format!(
            "displacement length {} / covariance {:?} inconsistent",
            n2,
            sigma.shape()
        )));
    }
    let n = n2 / 2;
    let mut report = ValidationReport::default();
    let scale = 1.0_f64.max(max_abs(sigma));

    let dscale = 1.0_f64.max(d.iter().map(|z| z.norm()).fold(0.0, f64::max));
    let pair = (0..n).map(|k| (d[k].conj() - d[k + n]).norm()).fold(0.0, f64::max);
    if pair > tol.structure * dscale {
        report.violations.push(Violation::ConjugatePair { residual: pair });
    }

    let x = sigma.view((0, 0), (n, n)).into_owned();
    let y = sigma.view((0, n), (n, n)).into_owned();
    let assembled = assemble_blocks(&x, &y);
    let block = crate::linalg::max_abs_diff(&assembled, sigma);
    if block > tol.structure * scale {
        report.violations.push(Violation::BlockStructure { residual: block });
    }
    let herm = hermitian_residual(sigma);
    if herm > tol.structure * scale {
        report.violations.push(Violation::NotHermitian { residual: herm });
    }
    let sym = symmetric_residual(&y);
    if sym > tol.structure * scale {
        report.violations.push(Violation::NotSymmetric { residual: sym });
    }
    if !report.is_valid() {
        return Ok(report);
    }
    check_physicality(sigma, tol, &mut report);
    Ok(report)
}

fn check_physicality(sigma: &CMat, tol: &Tolerances, report: &mut ValidationReport) {
    let herm = (sigma + sigma.adjoint()) * crate::linalg::re(0.5);
    match symplectic_spectrum(&herm) {
        Ok(ev) => {
            let min = ev.iter().cloned().fold(f64::INFINITY, f64::min);
            if min < 1.0 - tol.physicality {
                report.violations.push(Violation::Unphysical { min_symplectic_eigenvalue: min });
            }
        }
        Err(_) => {
            let min = SymmetricEigen::new(herm).eigenvalues.iter().cloned().fold(f64::INFINITY, f64::min);
            report.violations.push(Violation::NotPositiveDefinite { min_eigenvalue: min });
        }
    }
}

pub fn validate_state(state: &GaussianState) -> ValidationReport {
    validate_state_with(state, &Tolerances::default())
}

pub fn validate_state_with(state: &GaussianState, tol: &Tolerances) -> ValidationReport {
    let mut report = ValidationReport::default();
    let scale = 1.0_f64.max(max_abs(&state.sigma_x)).max(max_abs(&state.sigma_y));
    let herm = hermitian_residual(&state.sigma_x);
    if herm > tol.structure * scale {
        report.violations.push(Violation::NotHermitian { residual: herm });
    }
    let sym = symmetric_residual(&state.sigma_y);
    if sym > tol.structure * scale {
        report.violations.push(Violation::NotSymmetric { residual: sym });
    }
    if report.is_valid() {
        check_physicality(&state.covariance(), tol, &mut report);
    }
    report
}

/// Mean total boson number `Σ_k [(σ_kk − 1)/2 + |d̃_k|²]`.
pub fn mean_photon_number(state: &GaussianState) -> f64 {
    (0..state.modes)
        .map(|k| (state.sigma_x[(k, k)].re - 1.0) / 2.0 + state.d_tilde[k].norm_sqr())
        .sum()
}
