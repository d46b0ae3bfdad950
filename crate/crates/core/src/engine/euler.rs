use crate::error::{Error, Result};
use crate::linalg::{max_abs_diff, re, CMat};
use crate::phase_space::SymplecticMatrix;

/// `S = blkdiag(U1, conj U1) · [[cosh M, −sinh M], [−sinh M, cosh M]] · blkdiag(U2, conj U2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct EulerFactors {
    pub u1: CMat,
    pub squeezings: Vec<f64>,
    pub u2: CMat,
}

fn check_unitary(u: &CMat, n: usize, name: &str) -> Result<()> {
    if u.shape() != (n, n) {
        return Err(Error::InvalidDimension(format!("{name} is {:?}, expected {n}×{n}", u.shape())));
    }
    let res = max_abs_diff(&(u * u.adjoint()), &CMat::identity(n, n));
    if res > 1e-10 {
        return Err(Error::InvalidInput(format!("{name} is not unitary (residual {res:e})")));
    }
    Ok(())
}

pub fn euler_compose(f: &EulerFactors) -> Result<SymplecticMatrix> {
    let n = f.squeezings.len();
    if n == 0 {
        return Err(Error::InvalidDimension("no modes".into()));
    }
    check_unitary(&f.u1, n, "U1")?;
    check_unitary(&f.u2, n, "U2")?;
    let ch = CMat::from_fn(n, n, |i, j| if i == j { re(f.squeezings[i].cosh()) } else { re(0.0) });
    let sh = CMat::from_fn(n, n, |i, j| if i == j { re(-f.squeezings[i].sinh()) } else { re(0.0) });
    let left = SymplecticMatrix::from_blocks(f.u1.clone(), CMat::zeros(n, n))?;
    let mid = SymplecticMatrix::from_blocks(ch, sh)?;
    let right = SymplecticMatrix::from_blocks(f.u2.clone(), CMat::zeros(n, n))?;
    Ok(left.compose(&mid).compose(&right))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::c;

    #[test]
    fn trivial_factors_give_identity() {
        let f = EulerFactors { u1: CMat::identity(2, 2), squeezings: vec![0.0, 0.0], u2: CMat::identity(2, 2) };
        let s = euler_compose(&f).unwrap();
        assert!(max_abs_diff(&s.full(), &CMat::identity(4, 4)) < 1e-15);
    }

    #[test]
    fn single_squeezer_sign() {
        let r = 0.7_f64;
        let f = EulerFactors { u1: CMat::identity(1, 1), squeezings: vec![r], u2: CMat::identity(1, 1) };
        let s = euler_compose(&f).unwrap();
        assert!((s.alpha()[(0, 0)] - re(r.cosh())).norm() < 1e-15);
        assert!((s.beta()[(0, 0)] + re(r.sinh())).norm() < 1e-15);
    }

    #[test]
    fn rejects_non_unitary() {
        let f = EulerFactors { u1: CMat::from_element(1, 1, c(2.0, 0.0)), squeezings: vec![0.1], u2: CMat::identity(1, 1) };
        assert!(matches!(euler_compose(&f), Err(Error::InvalidInput(_))));
    }
}
