//! Fixed small-parameter cases comparing the Fock oracle with the symplectic QFI.

use std::f64::consts::FRAC_PI_4;

use serde::Serialize;

use super::{fock_qfi, select_cutoff, DEFAULT_STEP};
use crate::channel::{
    combined_channel, mix_channel, phase_channel, squeeze_channel, squeeze_on_mode_channel,
    twomode_squeeze_channel, ChannelSpec,
};
use crate::error::Result;
use crate::probe::{OneModeProbeParams, ProbeParams, TwoModeProbeParams};
use crate::qfi::qfi_unitary;

#[derive(Debug, Clone)]
pub struct FockCase {
    pub name: &'static str,
    pub probe: ProbeParams,
    pub channel: ChannelSpec,
}

#[derive(Debug, Clone, Serialize)]
pub struct FockCaseResult {
    pub name: String,
    pub cutoff: usize,
    pub fock: f64,
    pub unitary: f64,
    pub rel_err: f64,
    pub pass: bool,
}

fn one(lambda1: f64, r: f64, theta: f64, d_mag: f64, phi_d: f64) -> ProbeParams {
    ProbeParams::OneMode(OneModeProbeParams { lambda1, r, theta, d_mag, phi_d })
}

fn two(p: TwoModeProbeParams) -> ProbeParams {
    ProbeParams::TwoMode(p)
}

pub fn fock_panel() -> Vec<FockCase> {
    let d = TwoModeProbeParams::default();
    vec![
        FockCase { name: "phase/coherent", probe: one(1.0, 0.0, 0.0, 1.0, 0.0), channel: phase_channel() },
        FockCase { name: "phase/squeezed-vacuum", probe: one(1.0, 0.5, 0.0, 0.0, 0.0), channel: phase_channel() },
        FockCase { name: "phase/thermal-squeezed", probe: one(2.0, 0.3, 0.4, 0.5, 1.2), channel: phase_channel() },
        FockCase { name: "phase/thermal-coherent", probe: one(1.5, 0.0, 0.0, 1.5, -0.4), channel: phase_channel() },
        FockCase { name: "squeeze/displaced", probe: one(1.0, 0.4, 0.2, 0.8, 0.5), channel: squeeze_channel(0.0) },
        FockCase { name: "squeeze/hot", probe: one(3.0, 0.2, -0.3, 0.3, 0.9), channel: squeeze_channel(1.1) },
        FockCase {
            name: "combined/thermal",
            probe: one(1.5, 0.5, -0.7, 1.0, 0.2),
            channel: combined_channel(1.0, 0.5, 0.3),
        },
        FockCase {
            name: "mix/universal",
            probe: two(TwoModeProbeParams { r1: 0.4, r2: 0.4, theta: FRAC_PI_4, psi: FRAC_PI_4, phi_d2: -2.0 * FRAC_PI_4, ..d }),
            channel: mix_channel(0.5),
        },
        FockCase {
            name: "mix/separable-thermal",
            probe: two(TwoModeProbeParams {
                lambda1: 1.2,
                r1: 0.3,
                r2: 0.2,
                phi1: 0.3,
                phi2: -0.5,
                d1_mag: 0.5,
                phi_d1: 0.7,
                ..d
            }),
            channel: mix_channel(0.3),
        },
        FockCase {
            name: "two-mode-squeeze/entangled",
            probe: two(TwoModeProbeParams { r1: 0.3, r2: -0.2, theta: FRAC_PI_4, psi: 0.2, phi1: 0.1, ..d }),
            channel: twomode_squeeze_channel(0.2),
        },
        FockCase {
            name: "two-mode-squeeze/thermal-difference",
            probe: two(TwoModeProbeParams {
                lambda1: 1.5,
                lambda2: 1.2,
                r1: 0.2,
                r2: 0.1,
                phi1: 0.4,
                phi2: 0.4,
                d2_mag: 0.4,
                phi_d2: 1.0,
                ..d
            }),
            channel: twomode_squeeze_channel(0.6),
        },
        FockCase {
            name: "squeeze-mode2/mixed-probe",
            probe: two(TwoModeProbeParams { r1: 0.2, r2: 0.4, theta: 0.3, psi: -0.1, d1_mag: 0.3, phi_d1: 0.2, ..d }),
            channel: squeeze_on_mode_channel(1, 0.4).expect("mode 1 exists"),
        },
    ]
}

pub fn run_case(case: &FockCase, h: f64, tol: f64) -> Result<FockCaseResult> {
    let start = match case.probe {
        ProbeParams::OneMode(_) => 8,
        ProbeParams::TwoMode(_) => 12,
    };
    let cutoff = select_cutoff(&case.probe, &case.channel, start)?;
    let fock = fock_qfi(&case.probe, &case.channel, cutoff, h)?;
    let unitary = qfi_unitary(&case.probe.probe()?, &case.channel)?.total;
    let rel_err = (fock - unitary).abs() / unitary.abs().max(1.0);
    Ok(FockCaseResult { name: case.name.to_string(), cutoff, fock, unitary, rel_err, pass: rel_err < tol })
}

/// Runs every panel case at the default step with a `1e-3` relative tolerance.
pub fn run_fock_panel() -> Result<Vec<FockCaseResult>> {
    fock_panel().iter().map(|c| run_case(c, DEFAULT_STEP, 1e-3)).collect()
}
