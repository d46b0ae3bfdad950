use crate::error::{Error, Result};
use crate::linalg::{max_abs, CMat, C64};
use crate::phase_space::{GeneratorW, SymplecticMatrix};

const PADE13: [f64; 14] = [
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
];

const THETA13: f64 = 5.371920351148152;

fn one_norm(a: &CMat) -> f64 {
    (0..a.ncols()).map(|j| a.column(j).iter().map(|z| z.norm()).sum::<f64>()).fold(0.0, f64::max)
}

/// Matrix exponential by scaling and squaring with a degree-13 Padé approximant.
pub fn expm_pade13(a: &CMat) -> CMat {
    let n = a.nrows();
    let norm = one_norm(a);
    let s = if norm > THETA13 { (norm / THETA13).log2().ceil() as i32 } else { 0 };
    let a = a * C64::new(2f64.powi(-s), 0.0);
    let b = |k: usize| C64::new(PADE13[k], 0.0);
    let id = CMat::identity(n, n);
    let a2 = &a * &a;
    let a4 = &a2 * &a2;
    let a6 = &a4 * &a2;
    let u_inner = &a6 * (&a6 * b(13) + &a4 * b(11) + &a2 * b(9)) + &a6 * b(7) + &a4 * b(5) + &a2 * b(3) + &id * b(1);
    let u = &a * u_inner;
    let v = &a6 * (&a6 * b(12) + &a4 * b(10) + &a2 * b(8)) + &a6 * b(6) + &a4 * b(4) + &a2 * b(2) + &id * b(0);
    let p = &v + &u;
    let q = &v - &u;
    let mut r = q.lu().solve(&p).expect("Padé denominator is invertible for scaled input");
    for _ in 0..s {
        r = &r * &r;
    }
    r
}

/// Independent exponential used to cross-check [`expm_pade13`].
pub fn expm_reference(a: &CMat) -> CMat {
    a.exp()
}

/// `S = e^{iKW}` assembled on the `(α, β)` blocks.
pub fn exp_generator(w: &GeneratorW) -> Result<SymplecticMatrix> {
    let n = w.modes();
    let full = expm_pade13(&w.ikw());
    let s = SymplecticMatrix::from_blocks(
        full.view((0, 0), (n, n)).into_owned(),
        full.view((0, n), (n, n)).into_owned(),
    )?;
    let scale = 1.0_f64.max(max_abs(&full)).powi(2);
    let res = s.symplectic_residual();
    if !res.is_finite() || res > 1e-9 * scale {
        return Err(Error::NumericalInstability(format!(
            "exponential lost symplecticity (residual {res:e}); reduce the generator norm"
        )));
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{cis, max_abs_diff, re, I};

    fn one_mode(theta: f64, r: f64, chi: f64) -> GeneratorW {
        let x = CMat::from_element(1, 1, re(-theta));
        let y = CMat::from_element(1, 1, I * cis(chi) * r);
        GeneratorW::quadratic(x, y).unwrap()
    }

    #[test]
    fn zero_generator_gives_identity() {
        let s = exp_generator(&GeneratorW::zero(3)).unwrap();
        assert!(max_abs_diff(&s.full(), &CMat::identity(6, 6)) < 1e-15);
    }

    #[test]
    fn phase_rotation() {
        let theta = 0.83;
        let s = exp_generator(&one_mode(theta, 0.0, 0.0)).unwrap();
        assert!((s.alpha()[(0, 0)] - cis(-theta)).norm() < 1e-14);
        assert!(s.beta()[(0, 0)].norm() < 1e-15);
    }

    #[test]
    fn one_mode_squeezing_blocks() {
        let (r, chi): (f64, f64) = (0.64, 1.3);
        let s = exp_generator(&one_mode(0.0, r, chi)).unwrap();
        assert!((s.alpha()[(0, 0)] - re(r.cosh())).norm() < 1e-14);
        assert!((s.beta()[(0, 0)] + cis(chi) * r.sinh()).norm() < 1e-14);
    }

    #[test]
    fn pade_matches_reference_on_large_norm() {
        let g = one_mode(2.5, 3.0, 0.4);
        let a = g.ikw();
        let p = expm_pade13(&a);
        let r = expm_reference(&a);
        assert!(max_abs_diff(&p, &r) < 1e-10 * max_abs(&r));
    }
}
