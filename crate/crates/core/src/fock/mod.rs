//! Brute-force QFI in a truncated Fock basis, independent of the symplectic path.

mod ops;
mod panel;

use nalgebra::SymmetricEigen;

use crate::channel::ChannelSpec;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::linalg::{c, cis, CMat, C64};
use crate::probe::ProbeParams;

pub use panel::{fock_panel, run_case, run_fock_panel, FockCase, FockCaseResult};

use ops::{rotate, Generator, Mono, Space};

pub const LEAK_TOL: f64 = 1e-8;
pub const DEFAULT_STEP: f64 = 1e-4;
pub const MAX_CUTOFF_ONE_MODE: usize = 128;
pub const MAX_CUTOFF_TWO_MODE: usize = 40;

/// Density matrix on `cutoff^modes` number states.
#[derive(Debug, Clone)]
pub struct FockDensity {
    pub cutoff: usize,
    pub modes: usize,
    pub matrix: CMat,
    /// Largest weight found outside the cutoff box along the preparation.
    pub leakage: f64,
}

impl FockDensity {
    pub fn trace(&self) -> f64 {
        self.matrix.diagonal().iter().map(|z| z.re).sum()
    }

    pub fn populations(&self) -> Vec<f64> {
        self.matrix.diagonal().iter().map(|z| z.re).collect()
    }
}

/// Thermal populations `n^k/(1+n)^{k+1}` down to `1e-15`, capped at `limit` levels.
fn thermal_weights(lambda: f64, limit: usize) -> (Vec<f64>, f64) {
    let n = (lambda - 1.0) / 2.0;
    if n <= 0.0 {
        return (vec![1.0], 0.0);
    }
    let q = n / (1.0 + n);
    let mut w = Vec::new();
    let mut p = 1.0 / (1.0 + n);
    while w.len() < limit && p > 1e-15 {
        w.push(p);
        p *= q;
    }
    let tail = q.powi(w.len() as i32);
    (w, tail)
}

fn squeeze_gen(m: usize, r: f64) -> Generator {
    let mut g = Generator::default();
    g.push(c(-r / 2.0, 0.0), Mono::CreateCreate(m, m));
    g.push(c(r / 2.0, 0.0), Mono::AnnihAnnih(m, m));
    g
}

fn displace_gen(d: &[C64]) -> Generator {
    let mut g = Generator::default();
    for (m, &z) in d.iter().enumerate() {
        g.push(z, Mono::Create(m));
        g.push(-z.conj(), Mono::Annihilate(m));
    }
    g
}

fn mixer_gen(theta: f64) -> Generator {
    let mut g = Generator::default();
    g.push(c(theta, 0.0), Mono::CreateAnnih(0, 1));
    g.push(c(-theta, 0.0), Mono::CreateAnnih(1, 0));
    g
}

/// `iεĜ` with `Ĝ = a†Xa + ½(a†Y a†ᵀ + h.c.) − iγ̃·a† + h.c.`
fn channel_gen(channel: &ChannelSpec, eps: f64) -> Generator {
    let w = channel.generator();
    let n = w.modes();
    let ie = c(0.0, eps);
    let mut g = Generator::default();
    for i in 0..n {
        for j in 0..n {
            g.push(ie * w.x()[(i, j)], Mono::CreateAnnih(i, j));
            g.push(ie * w.y()[(i, j)] * 0.5, Mono::CreateCreate(i, j));
            g.push(ie * w.y()[(i, j)].conj() * 0.5, Mono::AnnihAnnih(i, j));
        }
        let gt = w.gamma_tilde()[i];
        g.push(ie * c(0.0, -1.0) * gt, Mono::Create(i));
        g.push(ie * c(0.0, 1.0) * gt.conj(), Mono::Annihilate(i));
    }
    g
}

enum Step {
    Rotate(usize, f64),
    Exp(Generator),
}

struct Prep {
    modes: usize,
    lambdas: Vec<f64>,
    /// Applied first to last.
    steps: Vec<Step>,
}

fn preparation(probe: &ProbeParams) -> Prep {
    match probe {
        ProbeParams::OneMode(p) => Prep {
            modes: 1,
            lambdas: vec![p.lambda1],
            steps: vec![
                Step::Exp(squeeze_gen(0, p.r)),
                Step::Rotate(0, p.theta),
                Step::Exp(displace_gen(&[cis(p.phi_d) * p.d_mag])),
            ],
        },
        ProbeParams::TwoMode(p) => Prep {
            modes: 2,
            lambdas: vec![p.lambda1, p.lambda2],
            steps: vec![
                Step::Exp(squeeze_gen(1, p.r2)),
                Step::Exp(squeeze_gen(0, p.r1)),
                Step::Rotate(0, p.psi),
                Step::Rotate(1, -p.psi),
                Step::Exp(mixer_gen(p.theta)),
                Step::Rotate(1, p.phi2),
                Step::Rotate(0, p.phi1),
                Step::Exp(displace_gen(&[cis(p.phi_d1) * p.d1_mag, cis(p.phi_d2) * p.d2_mag])),
            ],
        },
    }
}

struct Ensemble {
    space: Space,
    cutoff: usize,
    weights: Vec<f64>,
    kets: Vec<Vec<C64>>,
    leakage: f64,
}

impl Ensemble {
    fn outside(&self, kets: &[Vec<C64>]) -> f64 {
        let s = self.space;
        self.weights
            .iter()
            .zip(kets)
            .map(|(p, k)| {
                p * k
                    .iter()
                    .enumerate()
                    .filter(|(idx, _)| (0..s.modes).any(|m| s.occupation(*idx, m) >= self.cutoff))
                    .map(|(_, z)| z.norm_sqr())
                    .sum::<f64>()
            })
            .sum()
    }

    fn density(&self, kets: &[Vec<C64>]) -> CMat {
        let s = self.space;
        let box_idx: Vec<usize> = (0..s.len())
            .filter(|&idx| (0..s.modes).all(|m| s.occupation(idx, m) < self.cutoff))
            .collect();
        let dim = box_idx.len();
        let mut rho = CMat::zeros(dim, dim);
        for (p, k) in self.weights.iter().zip(kets) {
            let v: Vec<C64> = box_idx.iter().map(|&i| k[i]).collect();
            for a in 0..dim {
                let va = v[a] * *p;
                if va == c(0.0, 0.0) {
                    continue;
                }
                for b in 0..dim {
                    rho[(a, b)] += va * v[b].conj();
                }
            }
        }
        rho
    }
}

fn check_cutoff(cutoff: usize, modes: usize) -> Result<()> {
    let cap = if modes == 1 { MAX_CUTOFF_ONE_MODE } else { MAX_CUTOFF_TWO_MODE };
    if cutoff < 8 || cutoff > cap {
        return Err(Error::InvalidInput(format!("cutoff {cutoff} outside [8, {cap}] for {modes} mode(s)")));
    }
    Ok(())
}

fn prepare(probe: &ProbeParams, cutoff: usize) -> Result<Ensemble> {
    let prep = preparation(probe);
    check_cutoff(cutoff, prep.modes)?;
    for &l in &prep.lambdas {
        if !(l >= 1.0 - 1e-12) {
            return Err(Error::InvalidInput(format!("symplectic eigenvalue {l} must be ≥ 1")));
        }
    }
    let space = Space { modes: prep.modes, dim: 2 * cutoff };
    let per_mode: Vec<(Vec<f64>, f64)> = prep.lambdas.iter().map(|&l| thermal_weights(l, cutoff)).collect();
    let thermal_tail: f64 = per_mode.iter().map(|(_, t)| t).sum();
    if thermal_tail > LEAK_TOL {
        return Err(Error::CutoffTooSmall { cutoff, leakage: thermal_tail });
    }
    let mut weights = Vec::new();
    let mut occs = Vec::new();
    match prep.modes {
        1 => {
            for (k, &p) in per_mode[0].0.iter().enumerate() {
                weights.push(p);
                occs.push(vec![k]);
            }
        }
        _ => {
            for (k1, &p1) in per_mode[0].0.iter().enumerate() {
                for (k2, &p2) in per_mode[1].0.iter().enumerate() {
                    if p1 * p2 > 1e-15 {
                        weights.push(p1 * p2);
                        occs.push(vec![k1, k2]);
                    }
                }
            }
        }
    }
    let mut ens = Ensemble { space, cutoff, weights, kets: Vec::new(), leakage: thermal_tail };
    let mut kets: Vec<Vec<C64>> = occs
        .iter()
        .map(|occ| {
            let mut v = vec![c(0.0, 0.0); space.len()];
            v[space.index(occ)] = c(1.0, 0.0);
            v
        })
        .collect();
    for step in &prep.steps {
        kets = Exec::Parallel.map(&kets, |k| {
            let mut k = k.clone();
            match step {
                Step::Rotate(m, t) => rotate(&space, *m, *t, &mut k),
                Step::Exp(g) => k = g.exp_apply(&space, &k),
            }
            k
        });
        ens.leakage = ens.leakage.max(ens.outside(&kets));
    }
    if ens.leakage > LEAK_TOL {
        return Err(Error::CutoffTooSmall { cutoff, leakage: ens.leakage });
    }
    ens.kets = kets;
    Ok(ens)
}

/// Thermal state conjugated by the probe's truncated unitaries.
pub fn build_fock_state(probe: &ProbeParams, cutoff: usize) -> Result<FockDensity> {
    let ens = prepare(probe, cutoff)?;
    let matrix = ens.density(&ens.kets);
    Ok(FockDensity { cutoff, modes: ens.space.modes, matrix, leakage: ens.leakage })
}

/// `H = 2 Σ |⟨j|∂ρ|k⟩|²/(p_j + p_k)` with `∂ρ` from a central difference at `±h`.
pub fn fock_qfi(probe: &ProbeParams, channel: &ChannelSpec, cutoff: usize, h: f64) -> Result<f64> {
    let ens = prepare(probe, cutoff)?;
    if channel.modes() != ens.space.modes {
        return Err(Error::InvalidDimension(format!(
            "{}-mode probe on a {}-mode channel",
            ens.space.modes,
            channel.modes()
        )));
    }
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::InvalidInput("finite-difference step must be positive".into()));
    }
    let evolve = |eps: f64| {
        let g = channel_gen(channel, eps);
        Exec::Parallel.map(&ens.kets, |k| g.exp_apply(&ens.space, k))
    };
    let plus = evolve(h);
    let minus = evolve(-h);
    let leak = ens.outside(&plus).max(ens.outside(&minus));
    if leak > LEAK_TOL {
        return Err(Error::CutoffTooSmall { cutoff, leakage: leak });
    }
    let rho = ens.density(&ens.kets);
    let drho = (ens.density(&plus) - ens.density(&minus)) / c(2.0 * h, 0.0);
    let eig = SymmetricEigen::new(rho);
    let p = eig.eigenvalues;
    if p.iter().any(|&x| x < -1e-10) {
        return Err(Error::CutoffTooSmall { cutoff, leakage: -p.min() });
    }
    let v = eig.eigenvectors;
    let m = v.adjoint() * drho * &v;
    let mut total = 0.0;
    for j in 0..p.len() {
        for k in 0..p.len() {
            let s = p[j] + p[k];
            if s >= 1e-12 {
                total += m[(j, k)].norm_sqr() / s;
            }
        }
    }
    Ok(2.0 * total)
}

/// Smallest cutoff from `start`, doubling, for which the state passes the leakage rule.
pub fn select_cutoff(probe: &ProbeParams, channel: &ChannelSpec, start: usize) -> Result<usize> {
    let modes = preparation(probe).modes;
    let cap = if modes == 1 { MAX_CUTOFF_ONE_MODE } else { MAX_CUTOFF_TWO_MODE };
    let mut d = start.max(8);
    loop {
        let d_try = d.min(cap);
        match prepare(probe, d_try) {
            Ok(ens) => {
                let g = channel_gen(channel, DEFAULT_STEP);
                let ev = Exec::Parallel.map(&ens.kets, |k| g.exp_apply(&ens.space, k));
                if ens.outside(&ev) <= LEAK_TOL {
                    return Ok(d_try);
                }
            }
            Err(Error::CutoffTooSmall { .. }) => {}
            Err(e) => return Err(e),
        }
        if d_try == cap {
            return Err(Error::CutoffTooSmall { cutoff: cap, leakage: f64::NAN });
        }
        d *= 2;
    }
}
