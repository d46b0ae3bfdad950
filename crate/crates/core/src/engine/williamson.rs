use nalgebra::SymmetricEigen;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_residual, k_mul, max_abs, max_abs_diff, re, CMat, C64};
use crate::phase_space::{GaussianState, SymplecticMatrix, WilliamsonForm};

/// Williamson decomposition `σ = S · diag(λ, λ) · S†`, eigenvalues descending.
///
/// Uses the positive eigenvectors `v_k` of `σ^{1/2} K σ^{1/2}`; the columns
/// `σ^{1/2} v_k / √λ_k` give the `(α, conj β)` half of `S` and the other half
/// follows from the block structure.
pub fn williamson(sigma: &CMat) -> Result<WilliamsonForm> {
    let n2 = sigma.nrows();
    if n2 == 0 || n2 % 2 != 0 || !sigma.is_square() {
        return Err(Error::InvalidDimension(format!("covariance {:?} is not 2N×2N", sigma.shape())));
    }
    let scale = 1.0_f64.max(max_abs(sigma));
    if hermitian_residual(sigma) > 1e-9 * scale {
        return Err(Error::InvalidInput("covariance is not Hermitian".into()));
    }
    let n = n2 / 2;
    let sym = (sigma + sigma.adjoint()) * re(0.5);
    let eig = SymmetricEigen::new(sym);
    let min = eig.eigenvalues.iter().cloned().fold(f64::INFINITY, f64::min);
    if !(min > 0.0) {
        return Err(Error::InvalidInput(format!("covariance not positive definite (min eigenvalue {min:e})")));
    }
    let root = &eig.eigenvectors
        * CMat::from_diagonal(&eig.eigenvalues.map(|x| re(x.sqrt())))
        * eig.eigenvectors.adjoint();
    let m = &root * k_mul(&root);
    let m = (&m + m.adjoint()) * re(0.5);
    let me = SymmetricEigen::new(m);

    let mut order: Vec<usize> = (0..n2).filter(|&i| me.eigenvalues[i] > 0.0).collect();
    if order.len() != n {
        return Err(Error::DecompositionFailure(format!(
            "expected {n} positive symplectic eigenvalues, found {}",
            order.len()
        )));
    }
    order.sort_by(|&a, &b| me.eigenvalues[b].total_cmp(&me.eigenvalues[a]));

    let mut alpha = CMat::zeros(n, n);
    let mut beta = CMat::zeros(n, n);
    let mut lambdas = Vec::with_capacity(n);
    for (k, &idx) in order.iter().enumerate() {
        let lam = me.eigenvalues[idx];
        let col = &root * me.eigenvectors.column(idx) * C64::new(1.0 / lam.sqrt(), 0.0);
        for i in 0..n {
            alpha[(i, k)] = col[i];
            beta[(i, k)] = col[i + n].conj();
        }
        lambdas.push(lam);
    }
    let form = WilliamsonForm::new(SymplecticMatrix::from_blocks(alpha, beta)?, lambdas)?;
    let res = max_abs_diff(&form.reconstruct(), sigma) / scale;
    if !(res <= 1e-8) {
        return Err(Error::DecompositionFailure(format!("reconstruction residual {res:e}")));
    }
    Ok(form)
}

pub fn williamson_state(state: &GaussianState) -> Result<WilliamsonForm> {
    williamson(&state.covariance())
}
