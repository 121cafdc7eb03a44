//! Property tests for the invariants that hold across whole parameter
//! ranges rather than at hand-picked points.

use mpae_core::numeric::{bisect_root, gaussian_tail};
use mpae_core::power::{self, AchievableFamily, PowerParams, RateNats};
use mpae_core::sim::{quantize, quantizer_level};
use mpae_core::{ct, energy, Tolerance};
use proptest::prelude::*;

proptest! {
    #[test]
    fn tail_symmetry(x in -8.0f64..8.0) {
        let s = gaussian_tail(x) + gaussian_tail(-x);
        prop_assert!((s - 1.0).abs() < 1e-12);
    }

    #[test]
    fn bisection_finds_planted_roots(r in -5.0f64..5.0, skew in 0.1f64..4.0) {
        // Monotone function with a planted root at r.
        let f = |x: f64| (x - r) * skew + (x - r).powi(3);
        let tol = Tolerance { abs_tol: 1e-12, rel_tol: 0.0, max_iter: 200 };
        let root = bisect_root(f, -6.0, 6.0, &tol).unwrap();
        prop_assert!((root - r).abs() < 1e-9);
    }

    #[test]
    fn quantizer_cell_bound_even_m(u in -0.5f64..0.5, m_half in 1u32..32) {
        let m = 2 * m_half;
        let (w, v) = quantize(u, m).unwrap();
        prop_assert!((1..=m).contains(&w));
        prop_assert!((v - u).abs() <= 0.5 / m as f64 + 1e-15);
        prop_assert!((v - quantizer_level(w, m)).abs() < 1e-15);
        // Quantizing the reconstruction value is idempotent.
        let (w2, v2) = quantize(v, m).unwrap();
        prop_assert_eq!(w2, w);
        prop_assert_eq!(v2, v);
    }

    #[test]
    fn exponent_ordering_everywhere(
        s in 0.02f64..50.0,
        alpha in 0.05f64..8.0,
        rh in 0.0f64..3.0,
    ) {
        let p = PowerParams::new(s, rh, alpha).unwrap();
        let ach = power::achievable_exponent(&p, AchievableFamily::Best).unwrap().as_f64();
        let rx = power::converse_exponent_rx(&p).unwrap().as_f64();
        let tx = power::converse_exponent_tx(&p).unwrap().as_f64();
        let dpt = power::dpt_exponent(&p).as_f64();
        prop_assert!(ach <= rx + 1e-8, "ach {} > rx {}", ach, rx);
        prop_assert!(rx <= tx + 1e-8, "rx {} > tx {}", rx, tx);
        prop_assert!(tx <= dpt + 1e-8, "tx {} > dpt {}", tx, dpt);
    }

    #[test]
    fn weak_bound_dominates_ordinary_everywhere(
        s in 0.02f64..50.0,
        rh in 0.0f64..3.0,
        frac in 0.01f64..0.99,
    ) {
        let p = PowerParams::new(s, rh, 1.0).unwrap();
        let c0 = power::capacity_c0(s).unwrap().0;
        let r = RateNats(rh + c0 * frac);
        let w = power::weak_sphere_packing(r, &p).as_f64();
        let o = power::sphere_packing(r, &p).as_f64();
        prop_assert!(w >= o - 1e-12, "wsp {} < esp {}", w, o);
    }

    #[test]
    fn s_star_is_a_grid_minimum(s in 0.01f64..50.0, alpha in 0.05f64..8.0) {
        let p = PowerParams::new(s, 0.0, alpha).unwrap();
        let ss = power::s_star(&p).unwrap();
        prop_assert!(ss >= 1.0 - 1e-12);
        let g = |x: f64| alpha * (s / x).ln_1p() + x - x.ln() - 1.0;
        let best = g(ss);
        for i in 0..200 {
            let x = 1.0 + 60.0 * i as f64 / 199.0;
            prop_assert!(g(x) >= best - 1e-9);
        }
    }

    #[test]
    fn pe_bounds_are_probabilities_and_ordered(
        l in 0.0f64..6.0,
        gamma in 0.0f64..40.0,
        lh in 0.0f64..4.0,
    ) {
        for v in [
            energy::ppm_pe_bound(l, gamma),
            energy::two_sided_pe_bound(l, gamma, lh),
            energy::cribbed_tx_pe_bound(l, gamma, lh),
        ] {
            prop_assert!((0.0..=1.0).contains(&v), "bound {} outside [0,1]", v);
        }
        // More help never hurts the two-sided bound.
        prop_assert!(
            energy::two_sided_pe_bound(l, gamma, lh) <= energy::ppm_pe_bound(l, gamma) + 1e-15
        );
        // Zero help reduces both to plain PPM.
        prop_assert_eq!(energy::two_sided_pe_bound(l, gamma, 0.0), energy::ppm_pe_bound(l, gamma));
    }

    #[test]
    fn hybrid_dominates_its_endpoints(
        alpha in 0.05f64..8.0,
        gamma in 0.0f64..40.0,
        lh in 0.0f64..8.0,
    ) {
        let h = energy::hybrid_mpae_bound(alpha, gamma, lh);
        prop_assert!((0.0..=lh).contains(&h.side_budget));
        prop_assert!(h.exponent >= energy::side_channel_mpae_bound(alpha, gamma, lh) - 1e-9);
        prop_assert!(h.exponent >= energy::two_sided_mpae_bound(alpha, gamma, lh) - 1e-9);
    }

    #[test]
    fn ct_exponents_are_consistent(
        c0c in 0.01f64..5.0,
        rhc in 0.0f64..5.0,
        rc_frac in 0.0f64..1.5,
    ) {
        let p = ct::CtParams::new(c0c, rhc, 0.0, 1.0).unwrap();
        let rc = rhc + c0c * rc_frac;
        let shifted = ct::ee_oblivious(rc, &p).as_f64();
        let base = ct::ee_no_help(rc - rhc, c0c).as_f64();
        prop_assert!((shifted - base).abs() < 1e-12);
        // The cribbed capacity bound dominance criterion.
        let lb = ct::cribbed_capacity_lb(c0c, rhc);
        if rhc < 4.0 * c0c {
            prop_assert!(lb >= c0c + rhc - 1e-12);
        } else {
            prop_assert!(lb <= c0c + rhc + 1e-12);
        }
    }
}
