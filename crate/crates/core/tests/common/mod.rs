#![allow(dead_code)]

use gaussprobe::linalg::{c, CMat, CVec, C64};
use gaussprobe::phase_space::{GaussianState, GeneratorW, SymplecticMatrix};
use gaussprobe::engine::exp_generator;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn cplx(g: &mut ChaCha8Rng, scale: f64) -> C64 {
    c(g.random_range(-scale..scale), g.random_range(-scale..scale))
}

pub fn hermitian(g: &mut ChaCha8Rng, n: usize, scale: f64) -> CMat {
    let a = CMat::from_fn(n, n, |_, _| cplx(g, scale));
    (&a + a.adjoint()) * c(0.5, 0.0)
}

pub fn symmetric(g: &mut ChaCha8Rng, n: usize, scale: f64) -> CMat {
    let a = CMat::from_fn(n, n, |_, _| cplx(g, scale));
    (&a + a.transpose()) * c(0.5, 0.0)
}

pub fn generator(g: &mut ChaCha8Rng, n: usize, scale: f64, linear: bool) -> GeneratorW {
    let gamma = if linear { CVec::from_fn(n, |_, _| cplx(g, scale)) } else { CVec::zeros(n) };
    GeneratorW::new(hermitian(g, n, scale), symmetric(g, n, scale), gamma).unwrap()
}

pub fn symplectic(g: &mut ChaCha8Rng, n: usize, scale: f64) -> SymplecticMatrix {
    exp_generator(&generator(g, n, scale, false)).unwrap()
}

pub fn unitary(g: &mut ChaCha8Rng, n: usize) -> CMat {
    (hermitian(g, n, 2.0) * c(0.0, 1.0)).exp()
}

pub fn state(g: &mut ChaCha8Rng, n: usize) -> GaussianState {
    let lambdas: Vec<f64> = (0..n).map(|_| g.random_range(1.0..5.0)).collect();
    let s = symplectic(g, n, 0.6);
    let d = CVec::from_fn(n, |_, _| cplx(g, 2.0));
    s.apply_to_state(&GaussianState::thermal(&lambdas)).unwrap().with_displacement(d).unwrap()
}

pub fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}
