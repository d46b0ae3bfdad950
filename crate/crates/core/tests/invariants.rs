mod common;

use std::f64::consts::FRAC_PI_4;

use gaussprobe::channel::{channel_symplectic, channel_symplectic_generic, mix_channel, twomode_squeeze_channel};
use gaussprobe::closed_forms::{
    bs_advantage_twomode_squeeze, h_max_twomode_squeeze_bs, h_max_twomode_squeeze_separable, universal_mix_probe,
    universal_mix_probe_qfi,
};
use gaussprobe::engine::{
    displacement_shift_closed_form, displacement_shift_series, euler_compose, exp_generator, expm_pade13,
    expm_reference, williamson, EulerFactors,
};
use gaussprobe::linalg::{c, k_matrix, max_abs, max_abs_diff, CMat, CVec};
use gaussprobe::phase_space::{complex_to_real, real_to_complex, SymplecticMatrix};
use gaussprobe::probe::{ProbeState, TwoModeProbeParams};
use gaussprobe::qfi::qfi_unitary;
use nalgebra::DMatrix;
use proptest::prelude::*;
use rand::Rng;

use common::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn exponentials_are_symplectic(seed in any::<u64>(), n in 1usize..4, scale in 0.05f64..1.0) {
        let mut g = rng(seed);
        let s = symplectic(&mut g, n, scale);
        let f = s.full();
        let k = k_matrix(n);
        let res = max_abs_diff(&(&f * &k * f.adjoint()), &k) / max_abs(&f).max(1.0).powi(2);
        prop_assert!(res < 1e-12, "residual {res:e}");
    }

    #[test]
    fn williamson_round_trip(seed in any::<u64>(), n in 1usize..4) {
        let mut g = rng(seed);
        let st = state(&mut g, n);
        let sigma = st.covariance();
        let w = williamson(&sigma).unwrap();
        let err = max_abs_diff(&w.reconstruct(), &sigma) / max_abs(&sigma);
        prop_assert!(err < 1e-10, "round trip {err:e}");
        prop_assert!(w.symplectic.symplectic_residual() < 1e-9);
    }

    #[test]
    fn ksigma_spectrum_matches_real_form(seed in any::<u64>(), n in 1usize..4) {
        let mut g = rng(seed);
        let st = state(&mut g, n);
        let w = williamson(&st.covariance()).unwrap();
        let real = complex_to_real(&st).unwrap();
        let mut omega = DMatrix::<f64>::zeros(2 * n, 2 * n);
        for i in 0..n {
            omega[(i, n + i)] = 1.0;
            omega[(n + i, i)] = -1.0;
        }
        let mut im: Vec<f64> = (omega * real.covariance).complex_eigenvalues().iter().map(|z| z.im.abs()).collect();
        im.sort_by(|a, b| b.total_cmp(a));
        for k in 0..n {
            prop_assert!(rel(im[2 * k], w.eigenvalues[k]) < 1e-9);
            prop_assert!(rel(im[2 * k + 1], w.eigenvalues[k]) < 1e-9);
        }
    }

    #[test]
    fn real_complex_round_trip(seed in any::<u64>(), n in 1usize..4) {
        let mut g = rng(seed);
        let st = state(&mut g, n);
        let real = complex_to_real(&st).unwrap();
        let back = real_to_complex(&real.displacement, &real.covariance).unwrap();
        let scale = max_abs(&st.covariance()).max(1.0);
        prop_assert!(max_abs_diff(&back.covariance(), &st.covariance()) / scale < 1e-12);
        let dd = (back.displacement() - st.displacement()).camax();
        prop_assert!(dd < 1e-12 * st.displacement().camax().max(1.0));
    }

    #[test]
    fn group_law_and_lie_algebra(seed in any::<u64>(), n in 1usize..3, a in -1.0f64..1.0, b in -1.0f64..1.0) {
        let mut g = rng(seed);
        let w = generator(&mut g, n, 0.8, false);
        let s = |t: f64| exp_generator(&w.scaled(t)).unwrap();
        let lhs = s(a).compose(&s(b)).full();
        let rhs = s(a + b).full();
        prop_assert!(max_abs_diff(&lhs, &rhs) / max_abs(&rhs) < 1e-8);
        let h = 1e-5;
        let eps = a;
        let deriv = (s(eps + h).full() - s(eps - h).full()) / c(2.0 * h, 0.0);
        let p = s(eps).inverse().full() * deriv;
        prop_assert!(max_abs_diff(&p, &w.ikw()) < 1e-8 * max_abs(&w.ikw()).max(1.0));
    }

    #[test]
    fn pade_matches_reference(seed in any::<u64>(), n in 1usize..4, scale in 0.01f64..3.0) {
        let mut g = rng(seed);
        let a = generator(&mut g, n, scale, false).ikw();
        let p = expm_pade13(&a);
        let r = expm_reference(&a);
        prop_assert!(max_abs_diff(&p, &r) / max_abs(&r) < 1e-10);
    }

    #[test]
    fn displacement_shift_paths_agree(seed in any::<u64>(), n in 1usize..3) {
        let mut g = rng(seed);
        let w = generator(&mut g, n, 0.7, true);
        if let Ok(cf) = displacement_shift_closed_form(&w) {
            let series = displacement_shift_series(&w).unwrap();
            prop_assert!((cf - &series).camax() < 1e-10 * series.camax().max(1.0));
        }
    }

    #[test]
    fn euler_factors_compose(seed in any::<u64>(), n in 1usize..4) {
        let mut g = rng(seed);
        let u1 = unitary(&mut g, n);
        let u2 = unitary(&mut g, n);
        let r: Vec<f64> = (0..n).map(|_| g.random_range(-1.5..1.5)).collect();
        let s = euler_compose(&EulerFactors { u1: u1.clone(), squeezings: r.clone(), u2: u2.clone() }).unwrap();
        prop_assert!(s.symplectic_residual() < 1e-10);
        let ch = CMat::from_diagonal(&CVec::from_iterator(n, r.iter().map(|x| c(x.cosh(), 0.0))));
        let sh = CMat::from_diagonal(&CVec::from_iterator(n, r.iter().map(|x| c(-x.sinh(), 0.0))));
        let mid = SymplecticMatrix::from_blocks(ch, sh).unwrap();
        let lhs = SymplecticMatrix::from_blocks(u1, CMat::zeros(n, n)).unwrap();
        let rhs = SymplecticMatrix::from_blocks(u2, CMat::zeros(n, n)).unwrap();
        let want = lhs.compose(&mid).compose(&rhs).full();
        prop_assert!(max_abs_diff(&s.full(), &want) / max_abs(&want) < 1e-12);
    }

    #[test]
    fn fast_channel_path_matches_exponential(seed in any::<u64>(), eps in -2.0f64..2.0) {
        let mut g = rng(seed);
        let ch = gaussprobe::channel::combined_channel(g.random_range(-2.0..2.0), g.random_range(-2.0..2.0), g.random_range(-3.0..3.0));
        let fast = channel_symplectic(&ch, eps).unwrap().full();
        let slow = channel_symplectic_generic(&ch, eps).unwrap().full();
        prop_assert!(max_abs_diff(&fast, &slow) / max_abs(&slow) < 1e-10);
    }

    #[test]
    fn qfi_is_gauge_independent(seed in any::<u64>(), lambda in 1.0f64..4.0) {
        let mut g = rng(seed);
        let s0 = symplectic(&mut g, 2, 0.6);
        let u = SymplecticMatrix::from_blocks(unitary(&mut g, 2), CMat::zeros(2, 2)).unwrap();
        let d = CVec::from_fn(2, |_, _| cplx(&mut g, 1.5));
        let w = generator(&mut g, 2, 0.8, true);
        let ch = gaussprobe::channel::custom_channel(w);
        let a = ProbeState::new(s0.clone(), vec![lambda, lambda], d.clone()).unwrap();
        let b = ProbeState::new(s0.compose(&u), vec![lambda, lambda], d).unwrap();
        let ha = qfi_unitary(&a, &ch).unwrap().total;
        let hb = qfi_unitary(&b, &ch).unwrap().total;
        prop_assert!(rel(ha, hb) < 1e-9, "{ha} vs {hb}");
    }

    #[test]
    fn qfi_is_epsilon_independent(seed in any::<u64>(), eps in -1.0f64..1.0) {
        let mut g = rng(seed);
        let st = state(&mut g, 2);
        let ch = gaussprobe::channel::custom_channel(generator(&mut g, 2, 0.5, true));
        let h0 = qfi_unitary(&ProbeState::from_state(&st).unwrap(), &ch).unwrap().total;
        let s = exp_generator(&ch.generator().scaled(eps)).unwrap();
        let shift = gaussprobe::engine::displacement_shift(&ch.generator().scaled(eps)).unwrap();
        let moved = s.apply_to_state(&st).unwrap();
        let d = moved.d_tilde() + shift.rows(0, 2);
        let moved = moved.with_displacement(d).unwrap();
        let h1 = qfi_unitary(&ProbeState::from_state(&moved).unwrap(), &ch).unwrap().total;
        prop_assert!(rel(h1, h0) < 1e-8, "{h0} vs {h1}");
    }

    #[test]
    fn psi_shifts_phases_without_beam_splitter(seed in any::<u64>()) {
        let mut g = rng(seed);
        let mut a = || -> f64 { g.random_range(-3.0..3.0) };
        let p = TwoModeProbeParams {
            lambda1: 1.0 + a().abs(), lambda2: 1.0 + a().abs(), r1: a() / 3.0, r2: a() / 3.0,
            theta: 0.0, psi: a(), phi1: a(), phi2: a(), d1_mag: a().abs() / 2.0, d2_mag: a().abs() / 2.0,
            phi_d1: a(), phi_d2: a(),
        };
        let q = TwoModeProbeParams { psi: 0.0, phi1: p.phi1 + p.psi, phi2: p.phi2 - p.psi, ..p };
        for ch in [mix_channel(0.4), twomode_squeeze_channel(-1.1)] {
            let hp = qfi_unitary(&p.probe().unwrap(), &ch).unwrap().total;
            let hq = qfi_unitary(&q.probe().unwrap(), &ch).unwrap().total;
            prop_assert!((hp - hq).abs() < 1e-9 * hp.max(1.0));
        }
        // Literal ψ-invariance holds for two-mode squeezing without displacement.
        let p0 = TwoModeProbeParams { d1_mag: 0.0, d2_mag: 0.0, ..p };
        let q0 = TwoModeProbeParams { psi: 0.0, ..p0 };
        let ch = twomode_squeeze_channel(0.7);
        let hp = qfi_unitary(&p0.probe().unwrap(), &ch).unwrap().total;
        let hq = qfi_unitary(&q0.probe().unwrap(), &ch).unwrap().total;
        prop_assert!((hp - hq).abs() < 1e-9 * hp.max(1.0));
    }

    #[test]
    fn universal_probe_ignores_mixing_direction(r in -1.0f64..1.0, d1 in 0.0f64..1.5, d2 in 0.0f64..1.5, chi in -3.0f64..3.0) {
        let probe = universal_mix_probe(r, d1, d2).probe().unwrap();
        let h = qfi_unitary(&probe, &mix_channel(chi)).unwrap().total;
        let h0 = qfi_unitary(&probe, &mix_channel(0.0)).unwrap().total;
        prop_assert!(rel(h, h0) < 1e-10);
        prop_assert!(rel(h, universal_mix_probe_qfi(r, d1, d2)) < 1e-10);
    }

    #[test]
    fn beam_splitter_advantage_identity(r1 in -1.0f64..1.0, r2 in -1.0f64..1.0, d1 in 0.0f64..2.0, d2 in 0.0f64..2.0) {
        let diff = h_max_twomode_squeeze_bs(1.0, 1.0, r1, r2, d1, d2) - h_max_twomode_squeeze_separable(1.0, 1.0, r1, r2, d1, d2);
        let adv = bs_advantage_twomode_squeeze(r1, r2, d1, d2);
        prop_assert!((diff - adv).abs() < 1e-10 * diff.abs().max(1.0));
    }
}

#[test]
fn universal_probe_angles() {
    let p = universal_mix_probe(0.3, 0.0, 0.0);
    assert_eq!((p.theta, p.psi), (FRAC_PI_4, FRAC_PI_4));
}
