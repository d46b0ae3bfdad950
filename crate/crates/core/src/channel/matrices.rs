//! Closed-form symplectic matrices of the elementary Gaussian unitaries,
//! complex form (blocks) and real form `(x_1..x_N, p_1..p_N)`.

use nalgebra::DMatrix;

use crate::linalg::{cis, re, CMat};
use crate::phase_space::SymplecticMatrix;

fn sm(alpha: CMat, beta: CMat) -> SymplecticMatrix {
    SymplecticMatrix::from_blocks(alpha, beta).expect("square blocks of equal size")
}

/// `R(θ) = exp(−iθ a†a)`.
pub fn rotation(theta: f64) -> SymplecticMatrix {
    sm(CMat::from_element(1, 1, cis(-theta)), CMat::zeros(1, 1))
}

/// `S(r, χ) = exp(−r/2 (e^{iχ} a†² − e^{−iχ} a²))`.
pub fn squeezing(r: f64, chi: f64) -> SymplecticMatrix {
    sm(CMat::from_element(1, 1, re(r.cosh())), CMat::from_element(1, 1, -cis(chi) * r.sinh()))
}

/// `B(θ, χ) = exp(θ (e^{iχ} a1†a2 − e^{−iχ} a2†a1))`.
pub fn mode_mixing(theta: f64, chi: f64) -> SymplecticMatrix {
    let (s, c) = theta.sin_cos();
    let alpha = CMat::from_row_slice(2, 2, &[re(c), cis(chi) * s, -cis(-chi) * s, re(c)]);
    sm(alpha, CMat::zeros(2, 2))
}

/// `S_T(r, χ) = exp(−r (e^{iχ} a1†a2† − e^{−iχ} a1 a2))`.
pub fn two_mode_squeezing(r: f64, chi: f64) -> SymplecticMatrix {
    let off = -cis(chi) * r.sinh();
    let beta = CMat::from_row_slice(2, 2, &[re(0.0), off, off, re(0.0)]);
    sm(CMat::identity(2, 2) * re(r.cosh()), beta)
}

/// Embeds a one-mode matrix acting on `mode` into `modes` modes.
pub fn lift(one: &SymplecticMatrix, mode: usize, modes: usize) -> SymplecticMatrix {
    assert!(one.modes() == 1 && mode < modes);
    let mut alpha = CMat::identity(modes, modes);
    let mut beta = CMat::zeros(modes, modes);
    alpha[(mode, mode)] = one.alpha()[(0, 0)];
    beta[(mode, mode)] = one.beta()[(0, 0)];
    sm(alpha, beta)
}

/// `R_as(ψ) = R_1(ψ) R_2(−ψ)`.
pub fn asymmetric_rotation(psi: f64) -> SymplecticMatrix {
    let alpha = CMat::from_row_slice(2, 2, &[cis(-psi), re(0.0), re(0.0), cis(psi)]);
    sm(alpha, CMat::zeros(2, 2))
}

pub fn rotation_real(theta: f64) -> DMatrix<f64> {
    let (s, c) = theta.sin_cos();
    DMatrix::from_row_slice(2, 2, &[c, s, -s, c])
}

pub fn squeezing_real(r: f64, chi: f64) -> DMatrix<f64> {
    let (sc, cc) = chi.sin_cos();
    let (ch, sh) = (r.cosh(), r.sinh());
    DMatrix::from_row_slice(2, 2, &[ch - cc * sh, -sc * sh, -sc * sh, ch + cc * sh])
}

pub fn mode_mixing_real(theta: f64, chi: f64) -> DMatrix<f64> {
    let (s, c) = theta.sin_cos();
    let (sc, cc) = chi.sin_cos();
    DMatrix::from_row_slice(
        4,
        4,
        &[
            c, cc * s, 0.0, -sc * s,
            -cc * s, c, -sc * s, 0.0,
            0.0, sc * s, c, cc * s,
            sc * s, 0.0, -cc * s, c,
        ],
    )
}

pub fn two_mode_squeezing_real(r: f64, chi: f64) -> DMatrix<f64> {
    let (ch, sh) = (r.cosh(), r.sinh());
    let (sc, cc) = chi.sin_cos();
    DMatrix::from_row_slice(
        4,
        4,
        &[
            ch, -cc * sh, 0.0, -sc * sh,
            -cc * sh, ch, -sc * sh, 0.0,
            0.0, -sc * sh, ch, cc * sh,
            -sc * sh, 0.0, cc * sh, ch,
        ],
    )
}
