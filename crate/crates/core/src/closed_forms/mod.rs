//! Analytic QFI expressions for the cataloged channels and probe families.

mod limits;
mod one_mode;
mod temperature;
mod two_mode;

pub use crate::probe::{OneModeProbeParams, TwoModeProbeParams};
pub use limits::{limit_table, LimitChannel, LimitTable};
pub use one_mode::{
    h_max_combined, h_max_combined_energy, heisenberg_combined, qfi_one_mode_combined, qfi_phase,
    qfi_squeeze1, shot_noise_combined,
};
pub use temperature::{optimal_temperature_residual, optimal_temperature_roots, TemperatureChannel};
pub use two_mode::{
    bs_advantage_twomode_squeeze, h_max_mix_separable, h_max_twomode_squeeze_bs,
    h_max_twomode_squeeze_bs_negative, h_max_twomode_squeeze_separable, qfi_mix_bs, qfi_mix_full,
    qfi_mix_separable, qfi_onemode_probe_on_twomode, qfi_twomode_squeeze_bs, qfi_twomode_squeeze_full,
    qfi_twomode_squeeze_separable, universal_mix_probe, universal_mix_probe_qfi, TwoModeChannel,
};

/// `λ²/(1+λ²)`
#[inline]
pub(crate) fn f1(l: f64) -> f64 {
    l * l / (1.0 + l * l)
}

/// `(λ₁+λ₂)²/(λ₁λ₂+1)`
#[inline]
pub(crate) fn f2(l1: f64, l2: f64) -> f64 {
    (l1 + l2).powi(2) / (l1 * l2 + 1.0)
}

/// `(λ₁−λ₂)²/(λ₁λ₂−1)`, zero for a pure pair.
#[inline]
pub(crate) fn f3(l1: f64, l2: f64) -> f64 {
    let den = l1 * l2 - 1.0;
    if den < 1e-9 {
        0.0
    } else {
        (l1 - l2).powi(2) / den
    }
}
