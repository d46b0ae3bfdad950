use super::f1;
use crate::probe::OneModeProbeParams;

/// QFI of the combined phase/squeezing channel (`θ → ω_p ε`, `r → ω_s ε`).
pub fn qfi_one_mode_combined(p: &OneModeProbeParams, omega_p: f64, omega_s: f64, chi: f64) -> f64 {
    let OneModeProbeParams { lambda1: l, r, theta, d_mag: d, phi_d } = *p;
    let a = 2.0 * theta + chi;
    let (sa, ca) = a.sin_cos();
    let c2r = (2.0 * r).cosh();
    let sq = 4.0
        * f1(l)
        * (omega_s.powi(2) * (ca * ca + c2r * c2r * sa * sa) + omega_p.powi(2) * (2.0 * r).sinh().powi(2)
            - omega_s * omega_p * sa * (4.0 * r).sinh());
    let u = theta - phi_d + chi;
    let v = theta + phi_d;
    let disp = 4.0 * d * d / l
        * ((2.0 * r).exp() * (omega_s * u.cos() - omega_p * v.sin()).powi(2)
            + (-2.0 * r).exp() * (omega_s * u.sin() + omega_p * v.cos()).powi(2));
    sq + disp
}

/// Phase channel `R(ε)`.
pub fn qfi_phase(p: &OneModeProbeParams) -> f64 {
    let OneModeProbeParams { lambda1: l, r, theta, d_mag: d, phi_d } = *p;
    let s = (theta + phi_d).sin();
    let c = (theta + phi_d).cos();
    4.0 * f1(l) * (2.0 * r).sinh().powi(2) + 4.0 * d * d / l * ((2.0 * r).exp() * s * s + (-2.0 * r).exp() * c * c)
}

/// One-mode squeezing channel `S(ε, χ)`.
pub fn qfi_squeeze1(p: &OneModeProbeParams, chi: f64) -> f64 {
    let OneModeProbeParams { lambda1: l, r, theta, d_mag: d, phi_d } = *p;
    let (sa, ca) = (2.0 * theta + chi).sin_cos();
    let (su, cu) = (theta - phi_d + chi).sin_cos();
    4.0 * f1(l) * (ca * ca + (2.0 * r).cosh().powi(2) * sa * sa)
        + 4.0 * d * d / l * ((2.0 * r).exp() * cu * cu + (-2.0 * r).exp() * su * su)
}

/// Maximum over angles of the combined-channel QFI.
pub fn h_max_combined(lambda1: f64, r: f64, d_mag: f64, omega_p: f64, omega_s: f64) -> f64 {
    4.0 * f1(lambda1) * (omega_s * (2.0 * r).cosh() + omega_p * (2.0 * r).sinh()).powi(2)
        + 4.0 * d_mag * d_mag / lambda1 * (2.0 * r).exp() * (omega_s + omega_p).powi(2)
}

/// [`h_max_combined`] written in terms of `n`, `n_d`, `n_th`.
pub fn h_max_combined_energy(n: f64, n_d: f64, n_th: f64, omega_p: f64, omega_s: f64) -> f64 {
    let a = (n - n_d - n_th).max(0.0).sqrt() * (n + 1.0 - n_d + n_th).sqrt();
    let b = 2.0 * n - 2.0 * n_d + 1.0;
    let first = 2.0 * (omega_s * b + 2.0 * omega_p * a).powi(2) / (1.0 + 2.0 * n_th * (1.0 + n_th));
    let second = 4.0 * n_d * (b + 2.0 * a) / (1.0 + 2.0 * n_th).powi(2) * (omega_s + omega_p).powi(2);
    first + second
}

/// All energy in squeezing.
pub fn heisenberg_combined(n: f64, omega_p: f64, omega_s: f64) -> f64 {
    2.0 * (omega_s * (2.0 * n + 1.0) + 2.0 * omega_p * (n * (1.0 + n)).sqrt()).powi(2)
}

/// All energy in displacement.
pub fn shot_noise_combined(n: f64, omega_p: f64, omega_s: f64) -> f64 {
    2.0 * omega_s * omega_s + 4.0 * n * (omega_s + omega_p).powi(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_4;

    fn p(lambda1: f64, r: f64, theta: f64, d_mag: f64, phi_d: f64) -> OneModeProbeParams {
        OneModeProbeParams { lambda1, r, theta, d_mag, phi_d }
    }

    #[test]
    fn squeezed_and_displaced_phase_values() {
        assert!((qfi_phase(&p(1.0, -0.88, 0.0, 0.0, 0.0)) - 15.90).abs() < 0.05);
        assert!((qfi_phase(&p(2.0, -0.88, 0.0, 0.0, 0.0)) - 25.45).abs() < 0.05);
    }

    #[test]
    fn phase_heisenberg_at_one_photon() {
        let h = qfi_phase(&p(1.0, 1f64.asinh(), 0.0, 0.0, 0.0));
        assert!((h - 16.0).abs() < 1e-12);
    }

    #[test]
    fn squeeze_vacuum_optimally_rotated() {
        let chi = 0.3;
        let h = qfi_squeeze1(&p(1.0, 1f64.asinh(), FRAC_PI_4 - chi / 2.0, 0.0, 0.0), chi);
        assert!((h - 18.0).abs() < 1e-12);
    }

    #[test]
    fn combined_reduces_to_special_cases() {
        let q = p(1.7, 0.4, 0.3, 0.9, -1.2);
        assert!((qfi_one_mode_combined(&q, 1.0, 0.0, 0.5) - qfi_phase(&q)).abs() < 1e-12);
        assert!((qfi_one_mode_combined(&q, 0.0, 1.0, 0.5) - qfi_squeeze1(&q, 0.5)).abs() < 1e-12);
    }

    #[test]
    fn combined_optimal_angles() {
        let (l, r, d, wp, ws, chi) = (1.8, 0.6, 0.7, 0.8, 1.3, 0.4);
        let q = p(l, r, -chi / 2.0 - FRAC_PI_4, d, chi / 2.0 - FRAC_PI_4);
        let h = qfi_one_mode_combined(&q, wp, ws, chi);
        assert!((h - h_max_combined(l, r, d, wp, ws)).abs() < 1e-10);
    }

    #[test]
    fn energy_form_matches_parameter_form() {
        let (n, n_d, n_th, wp, ws) = (3.0, 0.4, 0.6, 0.7, 1.1);
        let r = crate::probe::squeezing_for_energy(n, n_d, n_th).unwrap();
        let a = h_max_combined(1.0 + 2.0 * n_th, r, n_d.sqrt(), wp, ws);
        let b = h_max_combined_energy(n, n_d, n_th, wp, ws);
        assert!((a - b).abs() < 1e-10 * a);
        assert!((h_max_combined_energy(n, 0.0, 0.0, wp, ws) - heisenberg_combined(n, wp, ws)).abs() < 1e-10);
        assert!((h_max_combined_energy(n, n, 0.0, wp, ws) - shot_noise_combined(n, wp, ws)).abs() < 1e-10);
    }
}
