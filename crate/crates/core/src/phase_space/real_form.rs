use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::linalg::{ladder_to_quadrature, CMat, CVec, C64};

use super::state::GaussianState;
use super::symplectic::SymplecticMatrix;

const IMAG_RESIDUE_TOL: f64 = 1e-9;

/// Real-form moments in `(x_1..x_N, p_1..p_N)` ordering.
#[derive(Debug, Clone, PartialEq)]
pub struct RealMoments {
    pub displacement: DVector<f64>,
    pub covariance: DMatrix<f64>,
}

fn real_part_checked(m: &CMat) -> Result<DMatrix<f64>> {
    let scale = 1.0_f64.max(m.iter().map(|z| z.norm()).fold(0.0, f64::max));
    let residue = m.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
    if residue > IMAG_RESIDUE_TOL * scale {
        return Err(Error::Structure(format!("imaginary residue {residue:e} in real-form result")));
    }
    Ok(m.map(|z| z.re))
}

/// `d_Re = L d`, `σ_Re = L σ L†`.
pub fn complex_to_real(state: &GaussianState) -> Result<RealMoments> {
    let l = ladder_to_quadrature(state.modes());
    let d = &l * state.displacement();
    let sigma = &l * state.covariance() * l.adjoint();
    let d = real_part_checked(&CMat::from_column_slice(d.len(), 1, d.as_slice()))?;
    let mut covariance = real_part_checked(&sigma)?;
    covariance = (&covariance + covariance.transpose()) * 0.5;
    Ok(RealMoments { displacement: d.column(0).into_owned(), covariance })
}

/// Inverse of [`complex_to_real`]: `d = L† d_Re`, `σ = L† σ_Re L`.
pub fn real_to_complex(displacement: &DVector<f64>, covariance: &DMatrix<f64>) -> Result<GaussianState> {
    let n2 = displacement.len();
    if n2 == 0 || n2 % 2 != 0 || covariance.shape() != (n2, n2) {
        return Err(Error::InvalidDimension(format!(
            "real displacement length {} / covariance {:?}",
            n2,
            covariance.shape()
        )));
    }
    let scale = 1.0_f64.max(covariance.amax());
    let asym = (covariance - covariance.transpose()).amax();
    if asym > 1e-12 * scale {
        return Err(Error::Structure(format!("real covariance not symmetric (residual {asym:e})")));
    }
    let n = n2 / 2;
    let l = ladder_to_quadrature(n);
    let d = l.adjoint() * displacement.map(|x| C64::new(x, 0.0));
    let sigma = l.adjoint() * covariance.map(|x| C64::new(x, 0.0)) * &l;
    let x = sigma.view((0, 0), (n, n)).into_owned();
    let y = sigma.view((0, n), (n, n)).into_owned();
    let x = (&x + x.adjoint()) * C64::new(0.5, 0.0);
    let y = (&y + y.transpose()) * C64::new(0.5, 0.0);
    GaussianState::from_blocks(CVec::from_iterator(n, d.iter().take(n).cloned()), x, y)
}

/// `S_Re = L S L†`.
pub fn symplectic_to_real(s: &SymplecticMatrix) -> Result<DMatrix<f64>> {
    let l = ladder_to_quadrature(s.modes());
    real_part_checked(&(&l * s.full() * l.adjoint()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{cis, re};
    use crate::phase_space::validate_state;

    #[test]
    fn vacuum_is_form_invariant() {
        let r = complex_to_real(&GaussianState::vacuum(2)).unwrap();
        assert_eq!(r.displacement, DVector::zeros(4));
        assert!((r.covariance - DMatrix::identity(4, 4)).amax() < 1e-15);
        let back = real_to_complex(&DVector::zeros(2), &DMatrix::identity(2, 2)).unwrap();
        assert!(crate::linalg::max_abs_diff(&back.covariance(), &CMat::identity(2, 2)) < 1e-15);
    }

    #[test]
    fn squeezer_real_form_at_zero_angle() {
        let r: f64 = 0.7;
        let s = SymplecticMatrix::from_blocks(
            CMat::from_element(1, 1, re(r.cosh())),
            CMat::from_element(1, 1, -cis(0.0) * r.sinh()),
        )
        .unwrap();
        let sr = symplectic_to_real(&s).unwrap();
        let expected = DMatrix::from_row_slice(2, 2, &[(-r).exp(), 0.0, 0.0, r.exp()]);
        assert!((sr - expected).amax() < 1e-14);
    }

    #[test]
    fn non_symmetric_real_covariance_rejected() {
        let m = DMatrix::from_row_slice(2, 2, &[1.0, 0.2, 0.0, 1.0]);
        assert!(matches!(real_to_complex(&DVector::zeros(2), &m), Err(Error::Structure(_))));
    }

    #[test]
    fn random_real_covariance_is_valid_state() {
        // σ_Re = M Mᵀ + I is above vacuum for any real M.
        let m = DMatrix::from_row_slice(
            4,
            4,
            &[0.3, -0.2, 0.5, 0.1, 0.0, 0.7, -0.4, 0.2, 0.9, 0.1, 0.0, -0.3, 0.2, 0.2, 0.6, 0.4],
        );
        let sigma = &m * m.transpose() + DMatrix::identity(4, 4);
        let d = DVector::from_vec(vec![0.1, -0.3, 1.2, 0.0]);
        let state = real_to_complex(&d, &sigma).unwrap();
        assert!(validate_state(&state).is_valid());
    }
}
