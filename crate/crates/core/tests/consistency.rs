//! Cross-module checks that pair the simulator with the exact oracles
//! and the analytical bounds at moderate trial counts.

use mpae_core::energy;
use mpae_core::oracle::{self, PpmSpec};
use mpae_core::sim::{self, Scheme, SimConfig};

fn cfg(scheme: Scheme, m: u32, mh: u32, gamma: f64, alpha: f64, seed: u64) -> SimConfig {
    let mut c = SimConfig::new(scheme, m, mh, gamma, alpha);
    c.trials = 200_000;
    c.seed = seed;
    c.u_grid = vec![0.0];
    c
}

#[test]
fn decision_rule_ordering_in_simulation() {
    // pe(two-sided) <= pe(cribbed-tx) <= pe(ppm-basic) within noise.
    let (m, mh, gamma) = (4u32, 3u32, 8.0);
    let ppm = sim::run(&cfg(Scheme::PpmBasic, m, 1, gamma, 2.0, 1)).unwrap();
    let crib = sim::run(&cfg(Scheme::CribbedTx, m, mh, gamma, 2.0, 2)).unwrap();
    let two = sim::run(&cfg(Scheme::TwoSided, m, mh, gamma, 2.0, 3)).unwrap();
    let tol = |a: &sim::SimResult, b: &sim::SimResult| {
        4.0 * (a.pe_stderr.powi(2) + b.pe_stderr.powi(2)).sqrt()
    };
    assert!(two.pe_hat <= crib.pe_hat + tol(&two, &crib));
    assert!(crib.pe_hat <= ppm.pe_hat + tol(&crib, &ppm));
}

#[test]
fn simulated_pe_respects_rigorous_bounds() {
    for (m, mh, gamma) in [(4u32, 1u32, 16.0), (2, 3, 2.0)] {
        let l = (m as f64).ln();
        let lh = (mh as f64).ln();
        let ppm = sim::run(&cfg(Scheme::PpmBasic, m, 1, gamma, 2.0, 5)).unwrap();
        assert!(ppm.pe_hat <= energy::ppm_pe_bound(l, gamma) + 4.0 * ppm.pe_stderr);
        let two = sim::run(&cfg(Scheme::TwoSided, m, mh, gamma, 2.0, 6)).unwrap();
        assert!(two.pe_hat <= energy::two_sided_pe_bound(l, gamma, lh) + 4.0 * two.pe_stderr);
    }
}

/// Standard error of the per-trial error moment under the exact mixture
/// law (correct value w.p. 1−Pe, uniform over the wrong set otherwise) —
/// the sample stderr degenerates when errors are too rare to observe.
fn exact_se(pe: f64, alpha: f64, m: u32, u: f64, wrong: &[u32], w: u32, n: u64) -> f64 {
    let x = |v: u32| (sim::quantizer_level(v, m) - u).abs().powf(alpha);
    let c = x(w);
    let mean = (1.0 - pe) * c + pe / wrong.len() as f64 * wrong.iter().map(|&v| x(v)).sum::<f64>();
    let mean_sq = (1.0 - pe) * c * c
        + pe / wrong.len() as f64 * wrong.iter().map(|&v| x(v) * x(v)).sum::<f64>();
    ((mean_sq - mean * mean).max(0.0) / n as f64).sqrt()
}

fn full_wrong_set(m: u32, w: u32) -> Vec<u32> {
    (1..=m).filter(|&v| v != w).collect()
}

#[test]
fn simulated_mpae_matches_mixture_oracle() {
    // Worst-case grid for plain PPM at (alpha=2, M=4, gamma=16).
    let mut c = SimConfig::new(Scheme::PpmBasic, 4, 1, 16.0, 2.0);
    c.trials = 200_000;
    c.seed = 8;
    let r = sim::run(&c).unwrap();
    for est in &r.mpae_by_u {
        let exact = oracle::ppm_mpae_exact(2.0, 4, 16.0, est.u).unwrap();
        assert!(
            (est.estimate - exact).abs() <= 4.0 * est.stderr + 1e-12,
            "u={}: {} vs {exact} (se {})",
            est.u,
            est.estimate,
            est.stderr
        );
    }
    assert!(r.mpae_sup >= r.mpae_by_u.iter().map(|e| e.estimate).fold(0.0, f64::max) - 1e-15);
}

#[test]
fn cribbed_and_two_sided_mpae_match_oracles() {
    // γ = 6 keeps errors frequent enough that the mixture tails are
    // actually sampled.
    let spec = PpmSpec::new(4, 4, 6.0).unwrap();
    for (scheme, seed) in [(Scheme::CribbedTx, 9), (Scheme::TwoSided, 10)] {
        let mut c = SimConfig::new(scheme, 4, 4, 6.0, 2.0);
        c.trials = 150_000;
        c.seed = seed;
        c.u_grid = vec![-0.375, 0.0, 0.125, 0.3];
        let r = sim::run(&c).unwrap();
        let pe = match scheme {
            Scheme::CribbedTx => oracle::cribbed_tx_pe_exact(&spec).unwrap(),
            _ => oracle::two_sided_pe_exact(&spec).unwrap(),
        };
        for est in &r.mpae_by_u {
            let exact = match scheme {
                Scheme::CribbedTx => oracle::cribbed_tx_mpae_exact(2.0, &spec, est.u).unwrap(),
                _ => oracle::two_sided_mpae_exact(2.0, &spec, est.u).unwrap(),
            };
            let w = sim::quantize(est.u, 4).unwrap().0;
            let se = exact_se(pe, 2.0, 4, est.u, &full_wrong_set(4, w), w, c.trials)
                .max(est.stderr);
            assert!(
                (est.estimate - exact).abs() <= 4.0 * se + 1e-12,
                "{} u={}: {} vs {exact} (se {se})",
                scheme.name(),
                est.u,
                est.estimate
            );
        }
    }
}

#[test]
fn hybrid_simulation_matches_reduction_oracle() {
    // Hybrid at (alpha=2, Mm=2, Ml=2, Mh=4, gamma=16) against the
    // mixture oracle built from the two-sided reduction. The error rate
    // here is ~5.5e-6, so the tolerance comes from the exact mixture
    // variance and the trial count is sized to actually see errors.
    let mut c = SimConfig::new(Scheme::Hybrid, 4, 4, 16.0, 2.0);
    c.mm = 2;
    c.ml = 2;
    c.trials = 4_000_000;
    c.seed = 11;
    c.u_grid = vec![-0.4, -0.125, 0.05, 0.375];
    let r = sim::run(&c).unwrap();
    let pe_oracle = oracle::hybrid_pe_exact(2, 2, 4, 16.0).unwrap();
    let se = (pe_oracle * (1.0 - pe_oracle) / r.trials_total as f64).sqrt();
    assert!((r.pe_hat - pe_oracle).abs() <= 4.0 * se, "pe {} vs {pe_oracle}", r.pe_hat);
    for est in &r.mpae_by_u {
        let exact = oracle::hybrid_mpae_exact(2.0, 2, 2, 4, 16.0, est.u).unwrap();
        let w = sim::quantize(est.u, 4).unwrap().0;
        // Wrong decodes stay inside the MSB group of w.
        let group = (w - 1) / 2;
        let wrong: Vec<u32> = (group * 2 + 1..=group * 2 + 2).filter(|&v| v != w).collect();
        let se = exact_se(pe_oracle, 2.0, 4, est.u, &wrong, w, c.trials).max(est.stderr);
        assert!(
            (est.estimate - exact).abs() <= 4.0 * se + 1e-12,
            "u={}: {} vs {exact} (se {se})",
            est.u,
            est.estimate
        );
    }
}

#[test]
fn hybrid_degenerate_splits() {
    // Mm = Mh: the two-sided part has a single instance, so the scheme
    // is a side channel plus plain PPM over Ml slots.
    let mut c = SimConfig::new(Scheme::Hybrid, 8, 4, 10.0, 2.0);
    c.mm = 4;
    c.ml = 2;
    c.trials = 150_000;
    c.seed = 12;
    c.u_grid = vec![0.0];
    let r = sim::run(&c).unwrap();
    let pe = oracle::ppm_pe_exact(2, 10.0).unwrap();
    let se = (pe * (1.0 - pe) / c.trials as f64).sqrt();
    assert!((r.pe_hat - pe).abs() <= 4.0 * se, "pe {} vs {pe}", r.pe_hat);
}
