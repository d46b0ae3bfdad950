mod common;

use gaussprobe::fock::{fock_panel, fock_qfi, run_case, select_cutoff, DEFAULT_STEP};
use gaussprobe::probe::ProbeParams;
use gaussprobe::qfi::qfi_unitary;

#[test]
fn panel_agrees_with_symplectic_qfi() {
    let panel = fock_panel();
    assert_eq!(panel.len(), 12);
    for case in &panel {
        let r = run_case(case, DEFAULT_STEP, 1e-3).unwrap();
        assert!(r.pass, "{}: fock {} vs {}", r.name, r.fock, r.unitary);
    }
}

#[test]
fn larger_cutoff_does_not_hurt() {
    for case in fock_panel().iter().filter(|c| matches!(c.probe, ProbeParams::OneMode(_))) {
        let exact = qfi_unitary(&case.probe.probe().unwrap(), &case.channel).unwrap().total;
        let d = select_cutoff(&case.probe, &case.channel, 8).unwrap();
        let e1 = (fock_qfi(&case.probe, &case.channel, d, DEFAULT_STEP).unwrap() - exact).abs();
        let e2 = (fock_qfi(&case.probe, &case.channel, (2 * d).min(128), DEFAULT_STEP).unwrap() - exact).abs();
        assert!(e2 <= e1 + 1e-6, "{}: {e1:e} -> {e2:e}", case.name);
    }
}

#[test]
fn step_size_robustness() {
    for case in fock_panel().iter().filter(|c| matches!(c.probe, ProbeParams::OneMode(_))) {
        let d = select_cutoff(&case.probe, &case.channel, 8).unwrap();
        let a = fock_qfi(&case.probe, &case.channel, d, 1e-3).unwrap();
        let b = fock_qfi(&case.probe, &case.channel, d, 1e-4).unwrap();
        assert!(common::rel(a, b) < 1e-4, "{}: {a} vs {b}", case.name);
    }
}
