//! Small dense complex linear-algebra helpers shared by the phase-space modules.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

pub type C64 = Complex64;
pub type CMat = DMatrix<C64>;
pub type CVec = DVector<C64>;

pub const I: C64 = C64::new(0.0, 1.0);

#[inline]
pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

#[inline]
pub fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}

/// e^{iφ}
#[inline]
pub fn cis(phi: f64) -> C64 {
    C64::from_polar(1.0, phi)
}

/// Block matrix `[[a, b], [conj(b), conj(a)]]`.
pub fn assemble_blocks(a: &CMat, b: &CMat) -> CMat {
    let n = a.nrows();
    let mut m = CMat::zeros(2 * n, 2 * n);
    m.view_mut((0, 0), (n, n)).copy_from(a);
    m.view_mut((0, n), (n, n)).copy_from(b);
    m.view_mut((n, 0), (n, n)).copy_from(&b.map(|z| z.conj()));
    m.view_mut((n, n), (n, n)).copy_from(&a.map(|z| z.conj()));
    m
}

/// `(v, conj(v))ᵀ`
pub fn conj_pair(v: &CVec) -> CVec {
    let n = v.len();
    CVec::from_fn(2 * n, |i, _| if i < n { v[i] } else { v[i - n].conj() })
}

/// Left multiplication by K = diag(I, -I), without forming K.
pub fn k_mul(m: &CMat) -> CMat {
    let n = m.nrows() / 2;
    let mut out = m.clone();
    for i in n..2 * n {
        for j in 0..m.ncols() {
            out[(i, j)] = -out[(i, j)];
        }
    }
    out
}

pub fn k_mul_vec(v: &CVec) -> CVec {
    let n = v.len() / 2;
    CVec::from_fn(v.len(), |i, _| if i < n { v[i] } else { -v[i] })
}

pub fn k_matrix(modes: usize) -> CMat {
    CMat::from_fn(2 * modes, 2 * modes, |i, j| {
        if i != j {
            C64::new(0.0, 0.0)
        } else if i < modes {
            C64::new(1.0, 0.0)
        } else {
            C64::new(-1.0, 0.0)
        }
    })
}

/// Largest entrywise modulus of `a - b`.
pub fn max_abs_diff(a: &CMat, b: &CMat) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

pub fn max_abs(a: &CMat) -> f64 {
    a.iter().map(|x| x.norm()).fold(0.0, f64::max)
}

/// Sum of squared moduli of all entries.
pub fn frobenius_sq(a: &CMat) -> f64 {
    a.iter().map(|x| x.norm_sqr()).sum()
}

/// Residual of `m - m†`, entrywise max.
pub fn hermitian_residual(m: &CMat) -> f64 {
    max_abs_diff(m, &m.adjoint())
}

pub fn symmetric_residual(m: &CMat) -> f64 {
    max_abs_diff(m, &m.transpose())
}

/// The fixed unitary taking the ladder vector to the quadrature vector,
/// `L = (1/√2) [[I, I], [-iI, iI]]`, ordered `(x_1..x_N, p_1..p_N)`.
pub fn ladder_to_quadrature(modes: usize) -> CMat {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let mut l = CMat::zeros(2 * modes, 2 * modes);
    for k in 0..modes {
        l[(k, k)] = re(s);
        l[(k, k + modes)] = re(s);
        l[(k + modes, k)] = c(0.0, -s);
        l[(k + modes, k + modes)] = c(0.0, s);
    }
    l
}
