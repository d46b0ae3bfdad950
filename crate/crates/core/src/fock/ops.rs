//! Truncated ladder-operator algebra on a padded product Fock space.

use crate::linalg::{c, C64};

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum Mono {
    Create(usize),
    Annihilate(usize),
    /// `a_i† a_j†`
    CreateCreate(usize, usize),
    /// `a_i a_j`
    AnnihAnnih(usize, usize),
    /// `a_i† a_j`
    CreateAnnih(usize, usize),
}

/// Product basis `|n_1 … n_N⟩`, `n_m < dim`, mode 1 most significant.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Space {
    pub modes: usize,
    pub dim: usize,
}

impl Space {
    pub fn len(&self) -> usize {
        self.dim.pow(self.modes as u32)
    }

    fn stride(&self, m: usize) -> usize {
        self.dim.pow((self.modes - 1 - m) as u32)
    }

    pub fn occupation(&self, idx: usize, m: usize) -> usize {
        (idx / self.stride(m)) % self.dim
    }

    pub fn index(&self, occ: &[usize]) -> usize {
        occ.iter().enumerate().map(|(m, &n)| n * self.stride(m)).sum()
    }

    /// Adds `a_m† ` (`up`) or `a_m` to basis state `idx`; `None` if it leaves the space.
    fn step(&self, idx: usize, m: usize, up: bool) -> Option<(usize, f64)> {
        let n = self.occupation(idx, m);
        if up {
            (n + 1 < self.dim).then(|| (idx + self.stride(m), ((n + 1) as f64).sqrt()))
        } else {
            (n > 0).then(|| (idx - self.stride(m), (n as f64).sqrt()))
        }
    }

    fn apply_mono(&self, mono: Mono, coef: C64, v: &[C64], out: &mut [C64]) {
        for (idx, &x) in v.iter().enumerate() {
            if x == C64::new(0.0, 0.0) {
                continue;
            }
            let hit = match mono {
                Mono::Create(m) => self.step(idx, m, true),
                Mono::Annihilate(m) => self.step(idx, m, false),
                Mono::CreateCreate(i, j) => self
                    .step(idx, j, true)
                    .and_then(|(k, a)| self.step(k, i, true).map(|(l, b)| (l, a * b))),
                Mono::AnnihAnnih(i, j) => self
                    .step(idx, j, false)
                    .and_then(|(k, a)| self.step(k, i, false).map(|(l, b)| (l, a * b))),
                Mono::CreateAnnih(i, j) => self
                    .step(idx, j, false)
                    .and_then(|(k, a)| self.step(k, i, true).map(|(l, b)| (l, a * b))),
            };
            if let Some((k, w)) = hit {
                out[k] += coef * x * w;
            }
        }
    }

    fn mono_norm(&self, mono: Mono) -> f64 {
        let d = (self.dim - 1) as f64;
        match mono {
            Mono::Create(_) | Mono::Annihilate(_) => d.sqrt(),
            _ => d,
        }
    }
}

/// Anti-Hermitian operator `A = Σ c_k m_k`; `U = e^A`.
#[derive(Debug, Clone, Default)]
pub(crate) struct Generator {
    pub terms: Vec<(C64, Mono)>,
}

impl Generator {
    pub fn push(&mut self, coef: C64, mono: Mono) {
        if coef.norm() > 0.0 {
            self.terms.push((coef, mono));
        }
    }

    fn apply(&self, space: &Space, v: &[C64]) -> Vec<C64> {
        let mut out = vec![c(0.0, 0.0); v.len()];
        for &(coef, mono) in &self.terms {
            space.apply_mono(mono, coef, v, &mut out);
        }
        out
    }

    /// `e^A v` by Taylor series over steps of operator norm ≤ 1/2.
    pub fn exp_apply(&self, space: &Space, v: &[C64]) -> Vec<C64> {
        let bound: f64 = self.terms.iter().map(|(c, m)| c.norm() * space.mono_norm(*m)).sum();
        let steps = (2.0 * bound).ceil().max(1.0) as usize;
        let scale = c(1.0 / steps as f64, 0.0);
        let scaled = Generator { terms: self.terms.iter().map(|&(c, m)| (c * scale, m)).collect() };
        let mut x = v.to_vec();
        for _ in 0..steps {
            let norm0 = x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            let mut term = x.clone();
            let mut acc = x.clone();
            for k in 1..60 {
                term = scaled.apply(space, &term);
                let inv = 1.0 / k as f64;
                term.iter_mut().for_each(|z| *z *= inv);
                acc.iter_mut().zip(&term).for_each(|(a, t)| *a += t);
                let tn = term.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
                if tn <= 1e-18 * norm0.max(1e-300) {
                    break;
                }
            }
            x = acc;
        }
        x
    }
}

/// `e^{−iθ a_m† a_m}` applied exactly.
pub(crate) fn rotate(space: &Space, m: usize, theta: f64, v: &mut [C64]) {
    for (idx, z) in v.iter_mut().enumerate() {
        let n = space.occupation(idx, m) as f64;
        *z *= C64::from_polar(1.0, -theta * n);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn displacement_of_vacuum_is_coherent() {
        let space = Space { modes: 1, dim: 60 };
        let alpha = c(0.6, -0.8);
        let mut g = Generator::default();
        g.push(alpha, Mono::Create(0));
        g.push(-alpha.conj(), Mono::Annihilate(0));
        let mut v = vec![c(0.0, 0.0); 60];
        v[0] = c(1.0, 0.0);
        let out = g.exp_apply(&space, &v);
        let mut fact = 1.0;
        for (k, z) in out.iter().take(25).enumerate() {
            if k > 0 {
                fact *= k as f64;
            }
            let p = (-1.0f64).exp() / fact;
            assert!((z.norm_sqr() - p).abs() < 1e-12, "{k}");
        }
    }

    #[test]
    fn two_mode_indexing() {
        let s = Space { modes: 2, dim: 7 };
        let idx = s.index(&[3, 5]);
        assert_eq!((s.occupation(idx, 0), s.occupation(idx, 1)), (3, 5));
    }
}
