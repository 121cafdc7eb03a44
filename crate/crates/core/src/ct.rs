//! Continuous-time, unconstrained-bandwidth translations: the
//! discrete-time reduction, channel-coding error exponents with and
//! without cribbing, the cribbed capacity lower bound, and MPαE
//! exponents per helper scenario.
//!
//! All quantities are per second; callers multiply by the transmission
//! time where a total is needed. `c0c = Pc/N0` is the power-limited
//! capacity without assistance.

use crate::{Error, Exponent, Result};

/// Parameters of the continuous-time setting (all rates in nats/second).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CtParams {
    /// Unconstrained-bandwidth capacity without help, `Cc0 = Pc/N0`.
    pub c0c: f64,
    /// Help rate `Rhc`.
    pub rhc: f64,
    /// Code rate `Rc`.
    pub rc: f64,
    /// Moment order, positive.
    pub alpha: f64,
}

impl CtParams {
    pub fn new(c0c: f64, rhc: f64, rc: f64, alpha: f64) -> Result<Self> {
        if !(c0c >= 0.0) || !(rhc >= 0.0) || !(rc >= 0.0) {
            return Err(Error::domain("ct rates must be >= 0"));
        }
        if !(alpha > 0.0) {
            return Err(Error::domain(format!("alpha must be > 0, got {alpha}")));
        }
        Ok(CtParams { c0c, rhc, rc, alpha })
    }
}

/// Sampling reduction of the band-limited channel to discrete time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DtReduction {
    /// Number of samples, `⌊2·B·T⌋`.
    pub n: u64,
    /// Power per sample, `Pc/(2B)`.
    pub power: f64,
    /// Noise variance per sample, `N0/2`.
    pub sigma2: f64,
    /// Factor converting per-sample rates to per-second rates, `2B`.
    pub rate_scale: f64,
    /// Fractional sample count dropped by the floor, recorded so runs
    /// can be reproduced exactly.
    pub rounding: f64,
}

impl DtReduction {
    /// Energy SNR of the reduction, `n·P/σ²` (≈ `2·T·Cc0` up to rounding).
    pub fn gamma(&self) -> f64 {
        self.n as f64 * self.power / self.sigma2
    }
}

/// Reduces a band-limited continuous-time channel of bandwidth `B` hertz
/// observed for `T` seconds to `⌊2BT⌋` discrete samples.
pub fn dt_reduce(bandwidth: f64, duration: f64, power: f64, n0: f64) -> Result<DtReduction> {
    if !(bandwidth > 0.0 && duration > 0.0 && n0 > 0.0) {
        return Err(Error::domain("dt_reduce needs B, T, N0 > 0"));
    }
    if !(power >= 0.0) {
        return Err(Error::domain(format!("power must be >= 0, got {power}")));
    }
    let exact = 2.0 * bandwidth * duration;
    let n = exact.floor();
    Ok(DtReduction {
        n: n as u64,
        power: power / (2.0 * bandwidth),
        sigma2: n0 / 2.0,
        rate_scale: 2.0 * bandwidth,
        rounding: exact - n,
    })
}

/// Achievable channel-coding exponent with a message-oblivious helper:
/// unbounded below `Rhc`, then the straight-line and square-root branches
/// of the very-noisy exponent shifted by the help rate, zero above
/// `Cc0 + Rhc`.
pub fn ee_oblivious(rc: f64, p: &CtParams) -> Exponent {
    let net = rc - p.rhc;
    if net < 0.0 {
        return Exponent::Unbounded;
    }
    if net >= p.c0c {
        return Exponent::Zero;
    }
    if net < 0.25 * p.c0c {
        Exponent::finite(0.5 * p.c0c - net)
    } else {
        let d = p.c0c.sqrt() - net.sqrt();
        Exponent::finite(d * d)
    }
}

/// Optimal channel-coding exponent without help over the
/// unconstrained-bandwidth channel.
pub fn ee_no_help(rc: f64, c0c: f64) -> Exponent {
    if rc >= c0c {
        return Exponent::Zero;
    }
    if rc < 0.25 * c0c {
        Exponent::finite(0.5 * c0c - rc)
    } else {
        let d = c0c.sqrt() - rc.sqrt();
        Exponent::finite(d * d)
    }
}

/// Capacity lower bound with a cribbed transmitter-only helper:
/// `Cc0 + 2·√(Rhc·Cc0)`; exceeds `Cc0 + Rhc` exactly when `Rhc < 4·Cc0`.
pub fn cribbed_capacity_lb(c0c: f64, rhc: f64) -> f64 {
    c0c + 2.0 * (rhc * c0c).sqrt()
}

/// Achievable channel-coding exponent with a cribbed transmitter-only
/// helper: `Cc0 + 2√(Rhc·Cc0) − Rc` below the capacity lower bound,
/// zero at and above it.
pub fn cribbed_ee(rc: f64, p: &CtParams) -> Exponent {
    let cap = cribbed_capacity_lb(p.c0c, p.rhc);
    if rc >= cap {
        Exponent::Zero
    } else {
        Exponent::finite(cap - rc)
    }
}

/// Achievable and converse MPαE exponents for a message-oblivious helper.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MpaeBounds {
    /// `α(Rc0* + Rhc)` with the very-noisy balance rate `Rc0*`.
    pub achievable: f64,
    /// `α(Cc0 + Rhc)` from the data-processing argument.
    pub converse: f64,
}

/// MPαE exponents (achievable, converse) per second with a
/// message-oblivious helper; the two coincide in the limit of small `α`.
pub fn mpae_oblivious(p: &CtParams) -> MpaeBounds {
    let r0 = if p.alpha >= 1.0 {
        p.c0c / (2.0 * (1.0 + p.alpha))
    } else {
        let q = 1.0 + p.alpha.sqrt();
        p.c0c / (q * q)
    };
    MpaeBounds {
        achievable: p.alpha * (r0 + p.rhc),
        converse: p.alpha * (p.c0c + p.rhc),
    }
}

/// MPαE exponent with a cribbed transmitter-only helper:
/// `α/(1+α)·(Cc0 + 2√(Rhc·Cc0))`.
pub fn cribbed_mpae(p: &CtParams) -> f64 {
    p.alpha / (1.0 + p.alpha) * cribbed_capacity_lb(p.c0c, p.rhc)
}

/// MPαE exponent with a two-sided cribbed helper:
/// `α·max{Cc0, Rhc + Cc0/min(4, (1+√α)²)}`.
pub fn two_sided_mpae(p: &CtParams) -> f64 {
    let q = 1.0 + p.alpha.sqrt();
    let denom = 4.0f64.min(q * q);
    p.alpha * p.c0c.max(p.rhc + p.c0c / denom)
}

/// Error probability with a two-sided cribbed helper: the no-help error
/// probability raised to the `e^{Rhc·T}` independent instances.
pub fn two_sided_pe(base_pe: f64, rhc: f64, duration: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&base_pe) {
        return Err(Error::domain(format!("base_pe must be in [0,1], got {base_pe}")));
    }
    Ok(base_pe.powf((rhc * duration).exp()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cp(c0c: f64, rhc: f64, alpha: f64) -> CtParams {
        CtParams::new(c0c, rhc, 0.0, alpha).unwrap()
    }

    #[test]
    fn dt_reduce_fields() {
        let r = dt_reduce(1.0, 1.0, 2.0, 1.0).unwrap();
        assert_eq!(r.n, 2);
        assert_eq!(r.power, 1.0);
        assert_eq!(r.sigma2, 0.5);
        assert_eq!(r.rate_scale, 2.0);
        assert_eq!(r.rounding, 0.0);
        // γ = n·P/σ² = 2·T·Cc0 up to the floor.
        let (b, t, pc, n0) = (100.0, 3.0, 2.0, 0.5);
        let r = dt_reduce(b, t, pc, n0).unwrap();
        let c0c = pc / n0;
        assert!((r.gamma() - 2.0 * t * c0c).abs() / (2.0 * t * c0c) < 1e-2);
        let r = dt_reduce(0.75, 1.0, 1.0, 1.0).unwrap();
        assert_eq!(r.n, 1);
        assert!((r.rounding - 0.5).abs() < 1e-12);
        assert!(dt_reduce(0.0, 1.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn oblivious_exponent_regimes() {
        let p = cp(1.0, 1.0, 1.0);
        assert_eq!(ee_oblivious(0.5, &p), Exponent::Unbounded);
        assert_eq!(ee_oblivious(2.0, &p), Exponent::Zero);
        assert_eq!(ee_oblivious(5.0, &p), Exponent::Zero);
        // Breakpoint at Rc − Rhc = Cc0/4: both branches give Cc0/4.
        let lo = ee_oblivious(1.25 - 1e-12, &p).as_f64();
        let hi = ee_oblivious(1.25, &p).as_f64();
        assert!((lo - 0.25).abs() < 1e-9 && (hi - 0.25).abs() < 1e-15);
        // At Rc = Rhc the finite branch starts at Cc0/2.
        assert!((ee_oblivious(1.0, &p).as_f64() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn no_help_exponent_values() {
        assert!((ee_no_help(0.0, 1.0).as_f64() - 0.5).abs() < 1e-15);
        assert_eq!(ee_no_help(1.0, 1.0), Exponent::Zero);
        assert!((ee_no_help(0.25, 1.0).as_f64() - 0.25).abs() < 1e-15);
    }

    #[test]
    fn oblivious_is_shifted_no_help() {
        // Equality is mathematical; the round trip net → rhc + net → net
        // re-rounds, so compare to 1e-12.
        let p = cp(0.8, 0.6, 1.0);
        for i in 0..=200 {
            let net = 0.8 * 1.2 * i as f64 / 200.0;
            let a = ee_oblivious(0.6 + net, &p).as_f64();
            let b = ee_no_help(net, 0.8).as_f64();
            assert!((a - b).abs() < 1e-12, "mismatch at net={net}: {a} vs {b}");
        }
    }

    #[test]
    fn cribbed_capacity_regimes() {
        // Strictly better than Cc0 + Rhc when Rhc < 4·Cc0.
        assert!((cribbed_capacity_lb(1.0, 1.0) - 3.0).abs() < 1e-15);
        assert!(cribbed_capacity_lb(1.0, 1.0) > 2.0);
        // Equality at Rhc = 4·Cc0.
        assert!((cribbed_capacity_lb(0.25, 1.0) - 1.25).abs() < 1e-15);
        // Below Rhc once the help rate dominates.
        assert!(cribbed_capacity_lb(0.1, 1.0) < 1.1);
        assert!(cribbed_capacity_lb(0.1, 1.0) < 1.0);
        assert_eq!(cribbed_capacity_lb(0.7, 0.0), 0.7);
    }

    #[test]
    fn cribbed_exponent_values() {
        let p = cp(1.0, 1.0, 1.0);
        assert!((cribbed_ee(1.0, &p).as_f64() - 2.0).abs() < 1e-15);
        assert_eq!(cribbed_ee(3.0, &p), Exponent::Zero);
        // Rhc → 0 leaves the straight line Cc0 − Rc.
        let p = cp(1.0, 0.0, 1.0);
        assert!((cribbed_ee(0.4, &p).as_f64() - 0.6).abs() < 1e-15);
    }

    #[test]
    fn mpae_oblivious_values() {
        let b = mpae_oblivious(&cp(1.0, 1.0, 2.0));
        assert!((b.achievable - 2.0 * (1.0 / 6.0 + 1.0)).abs() < 1e-14);
        assert!((b.converse - 4.0).abs() < 1e-15);
        // α = 1: both very-noisy branches give Cc0/4.
        let b = mpae_oblivious(&cp(1.0, 0.0, 1.0));
        assert!((b.achievable - 0.25).abs() < 1e-15);
        // Small α: achievable/converse → 1.
        let b = mpae_oblivious(&cp(1.0, 1.0, 1e-6));
        assert!((b.achievable / b.converse - 1.0).abs() < 1e-3);
    }

    #[test]
    fn cribbed_mpae_values() {
        assert!((cribbed_mpae(&cp(1.0, 0.0, 1.0)) - 0.5).abs() < 1e-15);
        assert!((cribbed_mpae(&cp(1.0, 1.0, 1.0)) - 1.5).abs() < 1e-15);
        // Increasing in Rhc.
        let mut prev = 0.0;
        for i in 1..50 {
            let v = cribbed_mpae(&cp(1.0, 0.1 * i as f64, 1.0));
            assert!(v > prev);
            prev = v;
        }
    }

    #[test]
    fn two_sided_mpae_values() {
        // Rhc = 0, α ≥ 1: the max picks α·Cc0.
        assert!((two_sided_mpae(&cp(1.0, 0.0, 2.0)) - 2.0).abs() < 1e-15);
        let v = two_sided_mpae(&cp(1.0, 1.0, 0.25));
        assert!((v - 0.25 * (1.0 + 1.0 / 2.25)).abs() < 1e-15, "got {v}");
        // Large α: the min picks 4.
        let v = two_sided_mpae(&cp(1.0, 1.0, 100.0));
        assert!((v - 100.0 * 1.25).abs() < 1e-12);
    }

    #[test]
    fn two_sided_mpae_meets_oblivious_achievable() {
        // Coincides with the oblivious achievable exponent for α ≤ 1 and
        // Rhc ≥ 0.75·Cc0, and dominates it elsewhere.
        for alpha in [0.2, 0.6, 1.0] {
            for rhc in [0.75, 1.0, 2.0] {
                let p = cp(1.0, rhc, alpha);
                let ts = two_sided_mpae(&p);
                let ob = mpae_oblivious(&p).achievable;
                assert!((ts - ob).abs() < 1e-12, "alpha={alpha} rhc={rhc}: {ts} vs {ob}");
            }
        }
        for alpha in [0.3, 1.0, 3.0] {
            for rhc in [0.0, 0.4, 1.0, 3.0] {
                let p = cp(1.0, rhc, alpha);
                assert!(two_sided_mpae(&p) >= mpae_oblivious(&p).achievable - 1e-12);
            }
        }
    }

    #[test]
    fn two_sided_pe_values() {
        assert_eq!(two_sided_pe(0.3, 0.0, 5.0).unwrap(), 0.3);
        let v = two_sided_pe(0.1, 2.0f64.ln(), 1.0).unwrap();
        assert!((v - 0.01).abs() < 1e-15);
        assert_eq!(two_sided_pe(1.0, 1.0, 1.0).unwrap(), 1.0);
        assert!(two_sided_pe(1.5, 1.0, 1.0).is_err());
    }
}
