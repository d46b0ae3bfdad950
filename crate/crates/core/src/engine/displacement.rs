use nalgebra::SVD;

use crate::error::{Error, Result};
use crate::linalg::{CMat, CVec, C64};
use crate::phase_space::GeneratorW;

use super::expm::expm_pade13;

const INVERTIBILITY_CUTOFF: f64 = 1e-10;
const SERIES_MAX_TERMS: usize = 200;

fn is_invertible(a: &CMat) -> bool {
    let sv = SVD::new(a.clone(), false, false).singular_values;
    let max = sv.iter().cloned().fold(0.0, f64::max);
    let min = sv.iter().cloned().fold(f64::INFINITY, f64::min);
    max > 0.0 && min > INVERTIBILITY_CUTOFF * max
}

/// `b = (iKW)⁻¹ (e^{iKW} − I) γ`; requires invertible `iKW`.
pub fn displacement_shift_closed_form(w: &GeneratorW) -> Result<CVec> {
    let a = w.ikw();
    let n = a.nrows();
    let rhs = (expm_pade13(&a) - CMat::identity(n, n)) * w.gamma();
    a.lu()
        .solve(&rhs)
        .ok_or_else(|| Error::NumericalInstability("iKW is singular; use the series path".into()))
}

/// `b = Σ_n (iKW)ⁿ/(n+1)! γ`, truncated once a term drops below 1e-16‖b‖.
pub fn displacement_shift_series(w: &GeneratorW) -> Result<CVec> {
    let a = w.ikw();
    let mut term = w.gamma();
    let mut sum = term.clone();
    if term.norm() == 0.0 {
        return Ok(sum);
    }
    for k in 1..SERIES_MAX_TERMS {
        term = &a * term * C64::new(1.0 / (k as f64 + 1.0), 0.0);
        sum += &term;
        if term.norm() < 1e-16 * sum.norm() {
            return Ok(sum);
        }
    }
    Err(Error::NumericalInstability(format!(
        "displacement series did not converge in {SERIES_MAX_TERMS} terms"
    )))
}

/// Displacement `b = (∫₀¹ e^{iKWt} dt) γ` of the Gaussian unitary generated by `(W, γ)`.
pub fn displacement_shift(w: &GeneratorW) -> Result<CVec> {
    if w.is_quadratic() {
        return Ok(CVec::zeros(2 * w.modes()));
    }
    if is_invertible(&w.ikw()) {
        displacement_shift_closed_form(w)
    } else {
        displacement_shift_series(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{c, re};

    #[test]
    fn no_quadratic_part_gives_gamma() {
        let g = CVec::from_vec(vec![c(0.3, -1.2)]);
        let w = GeneratorW::new(CMat::zeros(1, 1), CMat::zeros(1, 1), g).unwrap();
        let b = displacement_shift(&w).unwrap();
        assert!((b[0] - c(0.3, -1.2)).norm() < 1e-15);
        assert!((b[1] - c(0.3, 1.2)).norm() < 1e-15);
    }

    #[test]
    fn zero_gamma_gives_zero() {
        let w = GeneratorW::quadratic(CMat::from_element(1, 1, re(0.4)), CMat::from_element(1, 1, c(0.0, 0.7))).unwrap();
        assert_eq!(displacement_shift(&w).unwrap(), CVec::zeros(2));
        assert_eq!(displacement_shift_series(&w).unwrap(), CVec::zeros(2));
    }

    #[test]
    fn singular_generator_uses_series() {
        // X = 0, Y = 0 makes iKW = 0, which is singular.
        let w = GeneratorW::new(CMat::zeros(2, 2), CMat::zeros(2, 2), CVec::from_vec(vec![re(1.0), re(2.0)])).unwrap();
        assert!(displacement_shift_closed_form(&w).is_err());
        let b = displacement_shift(&w).unwrap();
        assert!((b[1] - re(2.0)).norm() < 1e-15);
    }
}
