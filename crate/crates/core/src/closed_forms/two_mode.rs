use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use super::{f1, f2, f3};
use crate::probe::TwoModeProbeParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwoModeChannel {
    TwoModeSqueeze,
    Mix,
}

#[inline]
fn sq(x: f64) -> f64 {
    x * x
}

/// Angle combinations for two-mode squeezing: `(φ_χ, φ_1χ, φ_2χ)`.
fn st_angles(p: &TwoModeProbeParams, chi: f64) -> (f64, f64, f64) {
    (p.phi1 + p.phi2 + chi, p.phi1 - p.phi_d2 + chi, p.phi2 - p.phi_d1 + chi)
}

/// Angle combinations for mode mixing: `(φ_χ, φ_1χ, φ_2χ)`.
fn mix_angles(p: &TwoModeProbeParams, chi: f64) -> (f64, f64, f64) {
    (p.phi1 - p.phi2 + chi, p.phi1 + p.phi_d2 + chi, p.phi2 + p.phi_d1 - chi)
}

/// `(4/λ)(e^{2r} a_c² + e^{−2r} a_s²)` with `a_f = u f(x) + v f(y)`.
fn disp_pair(scale: f64, lambda: f64, r: f64, u: f64, x: f64, v: f64, y: f64) -> f64 {
    scale / lambda * ((2.0 * r).exp() * sq(u * x.cos() + v * y.cos()) + (-2.0 * r).exp() * sq(u * x.sin() + v * y.sin()))
}

/// Two-mode squeezing channel, full restricted-probe expression.
pub fn qfi_twomode_squeeze_full(p: &TwoModeProbeParams, chi: f64) -> f64 {
    let (pc, p1, p2) = st_angles(p, chi);
    let (l1, l2, r1, r2, psi) = (p.lambda1, p.lambda2, p.r1, p.r2, p.psi);
    let (st, ct) = p.theta.sin_cos();
    let (s2t, c2t) = (2.0 * p.theta).sin_cos();
    let (spc, cpc) = pc.sin_cos();
    let entangling = 2.0
        * c2t
        * c2t
        * (f2(l1, l2) * (cpc * cpc * sq((r1 - r2).cosh()) + spc * spc * sq((r1 + r2).cosh()))
            + f3(l1, l2) * (cpc * cpc * sq((r1 - r2).sinh()) + spc * spc * sq((r1 + r2).sinh())));
    let local = 4.0
        * s2t
        * s2t
        * (f1(l1) * (sq((pc + 2.0 * psi).cos()) + sq((pc + 2.0 * psi).sin()) * sq((2.0 * r1).cosh()))
            + f1(l2) * (sq((pc - 2.0 * psi).cos()) + sq((pc - 2.0 * psi).sin()) * sq((2.0 * r2).cosh())));
    let d1 = disp_pair(4.0, l1, r1, p.d1_mag * st, p2 + psi, -p.d2_mag * ct, p1 + psi);
    let d2 = disp_pair(4.0, l2, r2, p.d1_mag * ct, p2 - psi, p.d2_mag * st, p1 - psi);
    entangling + local + d1 + d2
}

/// Mode-mixing channel, full restricted-probe expression.
pub fn qfi_mix_full(p: &TwoModeProbeParams, chi: f64) -> f64 {
    let (pc, p1, p2) = mix_angles(p, chi);
    let (l1, l2, r1, r2, psi) = (p.lambda1, p.lambda2, p.r1, p.r2, p.psi);
    let (st, ct) = p.theta.sin_cos();
    let (s2t, c2t) = (2.0 * p.theta).sin_cos();
    let (spc, cpc) = pc.sin_cos();
    let (s2p, c2p) = (2.0 * psi).sin_cos();
    let a = c2t * spc * s2p - cpc * c2p;
    let b = c2t * spc * c2p + cpc * s2p;
    let local = 4.0 * s2t * s2t * spc * spc * (f1(l1) * sq((2.0 * r1).sinh()) + f1(l2) * sq((2.0 * r2).sinh()));
    let plus = 2.0 * f2(l1, l2) * (a * a * sq((r1 - r2).sinh()) + b * b * sq((r1 + r2).sinh()));
    let minus = 2.0 * f3(l1, l2) * (a * a * sq((r1 - r2).cosh()) + b * b * sq((r1 + r2).cosh()));
    let d1 = disp_pair(4.0, l1, r1, p.d1_mag * st, p2 + psi, p.d2_mag * ct, p1 + psi);
    let d2 = disp_pair(4.0, l2, r2, p.d1_mag * ct, p2 - psi, -p.d2_mag * st, p1 - psi);
    local + plus + minus + d1 + d2
}

/// Two-mode squeezing, probe without beam splitter (`θ = 0`, `ψ = 0`).
pub fn qfi_twomode_squeeze_separable(p: &TwoModeProbeParams, chi: f64) -> f64 {
    let (pc, p1, p2) = st_angles(p, chi);
    let (l1, l2, r1, r2) = (p.lambda1, p.lambda2, p.r1, p.r2);
    let (s, c) = pc.sin_cos();
    2.0 * f2(l1, l2) * (c * c * sq((r1 - r2).cosh()) + s * s * sq((r1 + r2).cosh()))
        + 2.0 * f3(l1, l2) * (c * c * sq((r1 - r2).sinh()) + s * s * sq((r1 + r2).sinh()))
        + 4.0 * sq(p.d2_mag) / l1 * ((2.0 * r1).exp() * sq(p1.cos()) + (-2.0 * r1).exp() * sq(p1.sin()))
        + 4.0 * sq(p.d1_mag) / l2 * ((2.0 * r2).exp() * sq(p2.cos()) + (-2.0 * r2).exp() * sq(p2.sin()))
}

/// Two-mode squeezing, balanced beam splitter in the preparation (`θ = π/4`).
pub fn qfi_twomode_squeeze_bs(p: &TwoModeProbeParams, chi: f64) -> f64 {
    let (pc, p1, p2) = st_angles(p, chi);
    let (l1, l2, r1, r2, psi) = (p.lambda1, p.lambda2, p.r1, p.r2, p.psi);
    4.0 * f1(l1) * (sq((pc + 2.0 * psi).cos()) + sq((pc + 2.0 * psi).sin()) * sq((2.0 * r1).cosh()))
        + 4.0 * f1(l2) * (sq((pc - 2.0 * psi).cos()) + sq((pc - 2.0 * psi).sin()) * sq((2.0 * r2).cosh()))
        + disp_pair(2.0, l1, r1, p.d1_mag, p2 + psi, -p.d2_mag, p1 + psi)
        + disp_pair(2.0, l2, r2, p.d1_mag, p2 - psi, p.d2_mag, p1 - psi)
}

/// Mode mixing, probe without beam splitter (`θ = 0`, `ψ = 0`).
pub fn qfi_mix_separable(p: &TwoModeProbeParams, chi: f64) -> f64 {
    let (pc, p1, p2) = mix_angles(p, chi);
    let (l1, l2, r1, r2) = (p.lambda1, p.lambda2, p.r1, p.r2);
    let (s, c) = pc.sin_cos();
    2.0 * f2(l1, l2) * (c * c * sq((r1 - r2).sinh()) + s * s * sq((r1 + r2).sinh()))
        + 2.0 * f3(l1, l2) * (c * c * sq((r1 - r2).cosh()) + s * s * sq((r1 + r2).cosh()))
        + 4.0 * sq(p.d2_mag) / l1 * ((2.0 * r1).exp() * sq(p1.cos()) + (-2.0 * r1).exp() * sq(p1.sin()))
        + 4.0 * sq(p.d1_mag) / l2 * ((2.0 * r2).exp() * sq(p2.cos()) + (-2.0 * r2).exp() * sq(p2.sin()))
}

/// Mode mixing, balanced beam splitter in the preparation (`θ = π/4`).
pub fn qfi_mix_bs(p: &TwoModeProbeParams, chi: f64) -> f64 {
    let (pc, p1, p2) = mix_angles(p, chi);
    let (l1, l2, r1, r2, psi) = (p.lambda1, p.lambda2, p.r1, p.r2, p.psi);
    let (s, c) = pc.sin_cos();
    let (s2p, c2p) = (2.0 * psi).sin_cos();
    4.0 * s * s * (f1(l1) * sq((2.0 * r1).sinh()) + f1(l2) * sq((2.0 * r2).sinh()))
        + 2.0
            * c
            * c
            * (f2(l1, l2) * (c2p * c2p * sq((r1 - r2).sinh()) + s2p * s2p * sq((r1 + r2).sinh()))
                + f3(l1, l2) * (c2p * c2p * sq((r1 - r2).cosh()) + s2p * s2p * sq((r1 + r2).cosh())))
        + disp_pair(2.0, l1, r1, p.d1_mag, p2 + psi, p.d2_mag, p1 + psi)
        + disp_pair(2.0, l2, r2, p.d1_mag, p2 - psi, -p.d2_mag, p1 - psi)
}

/// Maximum of [`qfi_twomode_squeeze_separable`] over angles (`r₁, r₂ > 0`).
pub fn h_max_twomode_squeeze_separable(l1: f64, l2: f64, r1: f64, r2: f64, d1: f64, d2: f64) -> f64 {
    2.0 * f2(l1, l2) * sq((r1 + r2).cosh())
        + 2.0 * f3(l1, l2) * sq((r1 + r2).sinh())
        + 4.0 * d2 * d2 / l1 * (2.0 * r1).exp()
        + 4.0 * d1 * d1 / l2 * (2.0 * r2).exp()
}

/// Beam-splitter probe at `φ_χ = π/2`, `ψ = φ_1χ = φ_2χ = 0`.
pub fn h_max_twomode_squeeze_bs(l1: f64, l2: f64, r1: f64, r2: f64, d1: f64, d2: f64) -> f64 {
    4.0 * f1(l1) * sq((2.0 * r1).cosh())
        + 4.0 * f1(l2) * sq((2.0 * r2).cosh())
        + 2.0 / l1 * sq(d1 - d2) * (2.0 * r1).exp()
        + 2.0 / l2 * sq(d1 + d2) * (2.0 * r2).exp()
}

/// Beam-splitter probe at `φ_χ = 0`, `ψ = φ_1χ = φ_2χ = π/4` (for `r₁ ≤ 0 ≤ r₂`).
pub fn h_max_twomode_squeeze_bs_negative(l1: f64, l2: f64, r1: f64, r2: f64, d1: f64, d2: f64) -> f64 {
    4.0 * f1(l1) * sq((2.0 * r1).cosh())
        + 4.0 * f1(l2) * sq((2.0 * r2).cosh())
        + 2.0 / l1 * sq(d1 - d2) * (-2.0 * r1).exp()
        + 2.0 / l2 * sq(d1 + d2) * (2.0 * r2).exp()
}

/// Maximum of [`qfi_mix_separable`] over angles (`r₁, r₂ > 0`).
pub fn h_max_mix_separable(l1: f64, l2: f64, r1: f64, r2: f64, d1: f64, d2: f64) -> f64 {
    2.0 * f2(l1, l2) * sq((r1 + r2).sinh())
        + 2.0 * f3(l1, l2) * sq((r1 + r2).cosh())
        + 4.0 * d2 * d2 / l1 * (2.0 * r1).exp()
        + 4.0 * d1 * d1 / l2 * (2.0 * r2).exp()
}

/// Gain of the beam-splitter probe over the separable one for pure modes.
pub fn bs_advantage_twomode_squeeze(r1: f64, r2: f64, d1: f64, d2: f64) -> f64 {
    4.0 * (2.0 * (r1 + r2)).cosh() * sq((r2 - r1).sinh())
        + 4.0 * (d2 * d2 + 2.0 * d1 * d2 - d1 * d1) * (r1 + r2).exp() * (r2 - r1).sinh()
}

/// One-mode probe (second mode vacuum) on a two-mode channel.
pub fn qfi_onemode_probe_on_twomode(kind: TwoModeChannel, lambda1: f64, r1: f64, d1_mag: f64) -> f64 {
    let base = 2.0 * lambda1 * (2.0 * r1).cosh() + 4.0 * d1_mag * d1_mag;
    match kind {
        TwoModeChannel::TwoModeSqueeze => base + 2.0,
        TwoModeChannel::Mix => base - 2.0,
    }
}

/// QFI of the `χ`-independent optimal probe for mode mixing.
pub fn universal_mix_probe_qfi(r: f64, d1_mag: f64, d2_mag: f64) -> f64 {
    4.0 * sq((2.0 * r).sinh())
        + 4.0 * ((d1_mag * d1_mag + d2_mag * d2_mag) * (2.0 * r).cosh() + 2.0 * d1_mag * d2_mag * (2.0 * r).sinh())
}

/// Pure, `r₁ = r₂ = r`, `θ = ψ = π/4`, phases summing to `−π/2`.
pub fn universal_mix_probe(r: f64, d1_mag: f64, d2_mag: f64) -> TwoModeProbeParams {
    TwoModeProbeParams {
        r1: r,
        r2: r,
        theta: FRAC_PI_4,
        psi: FRAC_PI_4,
        d1_mag,
        d2_mag,
        phi_d2: -FRAC_PI_2,
        ..Default::default()
    }
}
