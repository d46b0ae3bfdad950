//! Cross-checks of every closed form against the general QFI on random probes.

use std::f64::consts::{FRAC_PI_4, PI};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::channel::{combined_channel, mix_channel, phase_channel, squeeze_channel, twomode_squeeze_channel, ChannelSpec};
use crate::closed_forms::{
    qfi_mix_bs, qfi_mix_full, qfi_mix_separable, qfi_one_mode_combined, qfi_phase, qfi_squeeze1,
    qfi_twomode_squeeze_bs, qfi_twomode_squeeze_full, qfi_twomode_squeeze_separable,
};
use crate::error::Result;
use crate::exec::Exec;
use crate::probe::{OneModeProbeParams, ProbeParams, TwoModeProbeParams};
use crate::qfi::qfi_unitary;

pub const ORACLE_TOL: f64 = 1e-9;

/// Closed-form families checked by the oracle panel, by label.
pub const ORACLE_FAMILIES: [&str; 9] = ["eq19", "eq20", "eq21", "eq28", "eq30", "eq36", "eq38", "appC-st", "appC-mix"];

#[derive(Debug, Clone, Serialize)]
pub struct OracleFamilyResult {
    pub label: String,
    pub draws: usize,
    pub max_rel_err: f64,
    pub worst_draw: usize,
    pub pass: bool,
}

struct Draw {
    probe: ProbeParams,
    channel: ChannelSpec,
    closed: f64,
}

fn one_mode(g: &mut ChaCha8Rng) -> OneModeProbeParams {
    OneModeProbeParams {
        lambda1: g.random_range(1.0..4.0),
        r: g.random_range(-1.0..1.0),
        theta: g.random_range(-PI..PI),
        d_mag: g.random_range(0.0..2.0),
        phi_d: g.random_range(-PI..PI),
    }
}

fn two_mode(g: &mut ChaCha8Rng, theta: Option<f64>) -> TwoModeProbeParams {
    let mut a = || g.random_range(-PI..PI);
    let (psi, phi1, phi2, phi_d1, phi_d2, th) = (a(), a(), a(), a(), a(), a());
    TwoModeProbeParams {
        lambda1: g.random_range(1.0..4.0),
        lambda2: g.random_range(1.0..4.0),
        r1: g.random_range(-1.0..1.0),
        r2: g.random_range(-1.0..1.0),
        theta: theta.unwrap_or(th),
        // θ = 0 slices are written for ψ = 0; ψ then only shifts φ₁, φ₂.
        psi: if theta == Some(0.0) { 0.0 } else { psi },
        phi1,
        phi2,
        d1_mag: g.random_range(0.0..2.0),
        d2_mag: g.random_range(0.0..2.0),
        phi_d1,
        phi_d2,
    }
}

fn draw(label: &str, g: &mut ChaCha8Rng) -> Draw {
    let chi = g.random_range(-PI..PI);
    match label {
        "eq19" => {
            let p = one_mode(g);
            let (wp, ws) = (g.random_range(-2.0..2.0), g.random_range(-2.0..2.0));
            Draw { probe: ProbeParams::OneMode(p), channel: combined_channel(wp, ws, chi), closed: qfi_one_mode_combined(&p, wp, ws, chi) }
        }
        "eq20" => {
            let p = one_mode(g);
            Draw { probe: ProbeParams::OneMode(p), channel: phase_channel(), closed: qfi_phase(&p) }
        }
        "eq21" => {
            let p = one_mode(g);
            Draw { probe: ProbeParams::OneMode(p), channel: squeeze_channel(chi), closed: qfi_squeeze1(&p, chi) }
        }
        "eq28" => {
            let p = two_mode(g, Some(0.0));
            Draw { probe: ProbeParams::TwoMode(p), channel: twomode_squeeze_channel(chi), closed: qfi_twomode_squeeze_separable(&p, chi) }
        }
        "eq30" => {
            let p = two_mode(g, Some(FRAC_PI_4));
            Draw { probe: ProbeParams::TwoMode(p), channel: twomode_squeeze_channel(chi), closed: qfi_twomode_squeeze_bs(&p, chi) }
        }
        "eq36" => {
            let p = two_mode(g, Some(0.0));
            Draw { probe: ProbeParams::TwoMode(p), channel: mix_channel(chi), closed: qfi_mix_separable(&p, chi) }
        }
        "eq38" => {
            let p = two_mode(g, Some(FRAC_PI_4));
            Draw { probe: ProbeParams::TwoMode(p), channel: mix_channel(chi), closed: qfi_mix_bs(&p, chi) }
        }
        "appC-st" => {
            let p = two_mode(g, None);
            Draw { probe: ProbeParams::TwoMode(p), channel: twomode_squeeze_channel(chi), closed: qfi_twomode_squeeze_full(&p, chi) }
        }
        "appC-mix" => {
            let p = two_mode(g, None);
            Draw { probe: ProbeParams::TwoMode(p), channel: mix_channel(chi), closed: qfi_mix_full(&p, chi) }
        }
        other => unreachable!("unknown oracle family {other}"),
    }
}

/// Compares `draws` random instances of the family `label`. The closed form is
/// multiplied by `scale` before comparison (1.0 in normal use).
pub fn oracle_family(label: &str, draws: usize, seed: u64, scale: f64, exec: Exec) -> Result<OracleFamilyResult> {
    let idx = ORACLE_FAMILIES
        .iter()
        .position(|l| *l == label)
        .ok_or_else(|| crate::Error::InvalidInput(format!("unknown closed-form family '{label}'")))?;
    let errs: Vec<Result<f64>> = exec.map_range(draws, |k| {
        let mut g = ChaCha8Rng::seed_from_u64(seed ^ ((idx as u64) << 32) ^ k as u64);
        let d = draw(label, &mut g);
        let h = qfi_unitary(&d.probe.probe()?, &d.channel)?.total;
        Ok((d.closed * scale - h).abs() / h.abs().max(1.0))
    });
    let mut max_rel_err = 0.0;
    let mut worst_draw = 0;
    for (k, e) in errs.into_iter().enumerate() {
        let e = e?;
        if !(e <= max_rel_err) {
            max_rel_err = e;
            worst_draw = k;
        }
    }
    Ok(OracleFamilyResult {
        label: label.to_string(),
        draws,
        max_rel_err,
        worst_draw,
        pass: max_rel_err < ORACLE_TOL,
    })
}

pub fn oracle_panel(draws: usize, seed: u64, scale: f64, exec: Exec) -> Result<Vec<OracleFamilyResult>> {
    ORACLE_FAMILIES.iter().map(|l| oracle_family(l, draws, seed, scale, exec)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn panel_passes_and_catches_faults() {
        let ok = oracle_panel(50, 3, 1.0, Exec::Parallel).unwrap();
        assert!(ok.iter().all(|r| r.pass), "{ok:?}");
        let bad = oracle_panel(5, 3, 1.0 + 1e-6, Exec::Parallel).unwrap();
        assert!(bad.iter().all(|r| !r.pass));
    }
}
