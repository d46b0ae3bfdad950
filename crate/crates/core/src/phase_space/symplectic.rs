use crate::error::{Error, Result};
use crate::linalg::{
    assemble_blocks, conj_pair, hermitian_residual, k_matrix, k_mul, max_abs_diff,
    symmetric_residual, CMat, CVec, C64, I,
};

use super::state::GaussianState;

/// Complex-form symplectic matrix `[[α, β], [conj β, conj α]]` with `SKS† = K`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymplecticMatrix {
    alpha: CMat,
    beta: CMat,
}

impl SymplecticMatrix {
    /// Wraps blocks without checking `SKS† = K`; see [`Self::symplectic_residual`].
    pub fn from_blocks(alpha: CMat, beta: CMat) -> Result<Self> {
        if !alpha.is_square() || alpha.shape() != beta.shape() || alpha.nrows() == 0 {
            return Err(Error::InvalidDimension(format!(
                "symplectic blocks {:?}/{:?}",
                alpha.shape(),
                beta.shape()
            )));
        }
        Ok(Self { alpha, beta })
    }

    /// Extracts `α`, `β` from a full 2N×2N matrix, rejecting matrices that
    /// lack the block-conjugation layout (relative tolerance `tol`).
    pub fn from_full(m: &CMat, tol: f64) -> Result<Self> {
        if !m.is_square() || m.nrows() % 2 != 0 || m.nrows() == 0 {
            return Err(Error::InvalidDimension(format!("{:?} is not 2N×2N", m.shape())));
        }
        let n = m.nrows() / 2;
        let s = Self {
            alpha: m.view((0, 0), (n, n)).into_owned(),
            beta: m.view((0, n), (n, n)).into_owned(),
        };
        let scale = 1.0_f64.max(crate::linalg::max_abs(m));
        let res = max_abs_diff(&s.full(), m);
        if res > tol * scale {
            return Err(Error::Structure(format!("block-conjugation residual {res:e}")));
        }
        Ok(s)
    }

    pub fn identity(modes: usize) -> Self {
        Self { alpha: CMat::identity(modes, modes), beta: CMat::zeros(modes, modes) }
    }

    pub fn modes(&self) -> usize {
        self.alpha.nrows()
    }

    pub fn alpha(&self) -> &CMat {
        &self.alpha
    }

    pub fn beta(&self) -> &CMat {
        &self.beta
    }

    pub fn full(&self) -> CMat {
        assemble_blocks(&self.alpha, &self.beta)
    }

    /// `self · other`, computed on blocks.
    pub fn compose(&self, other: &SymplecticMatrix) -> SymplecticMatrix {
        let (a1, b1) = (&self.alpha, &self.beta);
        let (a2, b2) = (&other.alpha, &other.beta);
        SymplecticMatrix {
            alpha: a1 * a2 + b1 * b2.map(|z| z.conj()),
            beta: a1 * b2 + b1 * a2.map(|z| z.conj()),
        }
    }

    /// `S⁻¹ = K S† K`, i.e. blocks `(α†, −βᵀ)`.
    pub fn inverse(&self) -> SymplecticMatrix {
        SymplecticMatrix { alpha: self.alpha.adjoint(), beta: -self.beta.transpose() }
    }

    /// Entrywise max of `SKS† − K`.
    pub fn symplectic_residual(&self) -> f64 {
        let s = self.full();
        let k = k_matrix(self.modes());
        max_abs_diff(&(&s * &k * s.adjoint()), &k)
    }

    pub fn apply_vec(&self, v: &CVec) -> CVec {
        self.full() * v
    }

    /// `S σ S†` and `S d` (no shift).
    pub fn apply_to_state(&self, state: &GaussianState) -> Result<GaussianState> {
        if state.modes() != self.modes() {
            return Err(Error::InvalidDimension("mode mismatch".into()));
        }
        let s = self.full();
        let sigma = &s * state.covariance() * s.adjoint();
        let d = &s * state.displacement();
        let n = self.modes();
        let x = sigma.view((0, 0), (n, n)).into_owned();
        let y = sigma.view((0, n), (n, n)).into_owned();
        GaussianState::from_blocks(d.rows(0, n).into_owned(), hermitize(&x), symmetrize(&y))
    }
}

fn hermitize(m: &CMat) -> CMat {
    (m + m.adjoint()) * C64::new(0.5, 0.0)
}

fn symmetrize(m: &CMat) -> CMat {
    (m + m.transpose()) * C64::new(0.5, 0.0)
}

/// Generator of a Gaussian unitary: Hermitian `W = [[X, Y], [conj Y, conj X]]`
/// and linear term `γ = (γ̃, conj γ̃)ᵀ`.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorW {
    x: CMat,
    y: CMat,
    gamma_tilde: CVec,
}

impl GeneratorW {
    pub fn new(x: CMat, y: CMat, gamma_tilde: CVec) -> Result<Self> {
        let n = x.nrows();
        if n == 0 || x.shape() != (n, n) || y.shape() != (n, n) || gamma_tilde.len() != n {
            return Err(Error::InvalidDimension("generator blocks inconsistent".into()));
        }
        let scale = 1.0_f64.max(crate::linalg::max_abs(&x)).max(crate::linalg::max_abs(&y));
        let h = hermitian_residual(&x);
        if h > 1e-12 * scale {
            return Err(Error::Structure(format!("X block not Hermitian (residual {h:e})")));
        }
        let s = symmetric_residual(&y);
        if s > 1e-12 * scale {
            return Err(Error::Structure(format!("Y block not symmetric (residual {s:e})")));
        }
        Ok(Self { x, y, gamma_tilde })
    }

    /// Purely quadratic generator (γ = 0).
    pub fn quadratic(x: CMat, y: CMat) -> Result<Self> {
        let n = x.nrows();
        Self::new(x, y, CVec::zeros(n))
    }

    pub fn zero(modes: usize) -> Self {
        Self { x: CMat::zeros(modes, modes), y: CMat::zeros(modes, modes), gamma_tilde: CVec::zeros(modes) }
    }

    pub fn modes(&self) -> usize {
        self.x.nrows()
    }

    pub fn x(&self) -> &CMat {
        &self.x
    }

    pub fn y(&self) -> &CMat {
        &self.y
    }

    pub fn gamma_tilde(&self) -> &CVec {
        &self.gamma_tilde
    }

    pub fn w(&self) -> CMat {
        assemble_blocks(&self.x, &self.y)
    }

    pub fn gamma(&self) -> CVec {
        conj_pair(&self.gamma_tilde)
    }

    /// `iKW`, the Lie-algebra element generated by `W`.
    pub fn ikw(&self) -> CMat {
        k_mul(&self.w()) * I
    }

    pub fn is_quadratic(&self) -> bool {
        self.gamma_tilde.iter().all(|z| *z == C64::new(0.0, 0.0))
    }

    /// `W·t`, `γ·t`.
    pub fn scaled(&self, t: f64) -> Self {
        let t = C64::new(t, 0.0);
        Self { x: &self.x * t, y: &self.y * t, gamma_tilde: &self.gamma_tilde * t }
    }
}

/// `σ = S · diag(λ, λ) · S†`.
#[derive(Debug, Clone, PartialEq)]
pub struct WilliamsonForm {
    pub symplectic: SymplecticMatrix,
    pub eigenvalues: Vec<f64>,
}

impl WilliamsonForm {
    pub fn new(symplectic: SymplecticMatrix, eigenvalues: Vec<f64>) -> Result<Self> {
        if eigenvalues.len() != symplectic.modes() {
            return Err(Error::InvalidDimension("eigenvalue count does not match modes".into()));
        }
        Ok(Self { symplectic, eigenvalues })
    }

    pub fn modes(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn diagonal(&self) -> CMat {
        let n = self.modes();
        CMat::from_fn(2 * n, 2 * n, |i, j| {
            if i == j {
                C64::new(self.eigenvalues[i % n], 0.0)
            } else {
                C64::new(0.0, 0.0)
            }
        })
    }

    pub fn reconstruct(&self) -> CMat {
        let s = self.symplectic.full();
        &s * self.diagonal() * s.adjoint()
    }
}
