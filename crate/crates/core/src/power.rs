//! Power-limited exponent bounds: capacities, the sphere-packing family,
//! Ziv–Zakai style converses and the achievable exponents of the
//! natural-labeling scheme, together with their one-dimensional
//! optimizers.
//!
//! Conventions: all rates are nats per channel use, `snr` is the per-use
//! SNR `S = P/σ²`, and `help_rate` is the helper rate `Rh`. Exponents
//! are exponent-order statements (sub-exponential factors dropped).

use crate::numeric::{bisect_root, golden_max};
use crate::{Error, Exponent, Result, Tolerance};

/// A rate in nats per channel use.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct RateNats(pub f64);

/// Parameters of the power-limited setting.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerParams {
    /// SNR `S = P/σ²`, non-negative.
    pub snr: f64,
    /// Help rate `Rh` in nats per channel use, non-negative.
    pub help_rate: f64,
    /// Moment order `α` of the error criterion, positive.
    pub alpha: f64,
    /// Parameter dimension, at least 1.
    pub dim: u32,
}

impl PowerParams {
    pub fn new(snr: f64, help_rate: f64, alpha: f64) -> Result<Self> {
        if !(snr >= 0.0) {
            return Err(Error::domain(format!("snr must be >= 0, got {snr}")));
        }
        if !(help_rate >= 0.0) {
            return Err(Error::domain(format!("help_rate must be >= 0, got {help_rate}")));
        }
        if !(alpha > 0.0) {
            return Err(Error::domain(format!("alpha must be > 0, got {alpha}")));
        }
        Ok(PowerParams { snr, help_rate, alpha, dim: 1 })
    }

    pub fn with_dim(mut self, dim: u32) -> Result<Self> {
        if dim == 0 {
            return Err(Error::domain("dim must be >= 1"));
        }
        self.dim = dim;
        Ok(self)
    }
}

/// Root-finding tolerance for the exponent balance equations; tight so
/// that ordering checks at 1e-8 slack are limited by math, not bisection.
fn root_tol() -> Tolerance {
    Tolerance { abs_tol: 1e-13, rel_tol: 1e-13, max_iter: 200 }
}

/// AWGN capacity without help, `C0 = ½·ln(1 + S)` nats per use.
pub fn capacity_c0(snr: f64) -> Result<RateNats> {
    if !(snr >= 0.0) {
        return Err(Error::domain(format!("capacity_c0: snr must be >= 0, got {snr}")));
    }
    Ok(RateNats(0.5 * snr.ln_1p()))
}

/// `ζ(R) = S / (e^{2(R − Rh)} − 1)`, defined for `R > Rh`.
pub fn zeta(rate: RateNats, p: &PowerParams) -> Result<f64> {
    let net = rate.0 - p.help_rate;
    if !(net > 0.0) {
        return Err(Error::domain(format!(
            "zeta: rate must exceed the help rate (R - Rh = {net})"
        )));
    }
    Ok(p.snr / (2.0 * net).exp_m1())
}

/// Weak sphere-packing exponent: converse for transmitter-assisted
/// channel coding, where input and noise may be correlated via the help.
///
/// Unbounded for `R ≤ Rh` (the boundary point follows the left-limit
/// convention), `½[ζ − ln ζ − 1]` on `(Rh, Rh + C0)`, zero above.
pub fn weak_sphere_packing(rate: RateNats, p: &PowerParams) -> Exponent {
    let net = rate.0 - p.help_rate;
    if net <= 0.0 {
        return Exponent::Unbounded;
    }
    let c0 = 0.5 * p.snr.ln_1p();
    if net >= c0 {
        return Exponent::Zero;
    }
    let z = p.snr / (2.0 * net).exp_m1();
    Exponent::finite(0.5 * (z - z.ln() - 1.0))
}

/// The ordinary sphere-packing expression at net rate `r0 > 0` with
/// `β = e^{2 r0}`, written through `D = √((β−1)(β−1+4β/S))` so the
/// `β → 1` end does not suffer cancellation.
fn sphere_packing_net(snr: f64, r0: f64) -> f64 {
    let beta = (2.0 * r0).exp();
    let bm1 = (2.0 * r0).exp_m1();
    if bm1.abs() < 1e-8 {
        // Stated limit of the expression as R ↓ Rh.
        return 0.5 * snr;
    }
    let d = (bm1 * (bm1 + 4.0 * beta / snr)).sqrt();
    snr * (beta + 1.0 - d) / (4.0 * beta) + 0.5 * (beta - 0.5 * snr * (d - bm1)).ln()
}

/// Ordinary sphere-packing exponent (receiver-assisted converse).
///
/// Unbounded for `R ≤ Rh`, the β-expression on `(Rh, Rh + C0)` with the
/// singular `β → 1` point evaluated by its limit `S/2`, zero for
/// `R − Rh ≥ C0`.
pub fn sphere_packing(rate: RateNats, p: &PowerParams) -> Exponent {
    let net = rate.0 - p.help_rate;
    if net <= 0.0 {
        return Exponent::Unbounded;
    }
    let c0 = 0.5 * p.snr.ln_1p();
    if net >= c0 {
        return Exponent::Zero;
    }
    Exponent::finite(sphere_packing_net(p.snr, net))
}

/// Minimizer `s*` of `g(s) = α·ln(1 + S/s) + s − ln s − 1` over `s ≥ 1`.
///
/// `s* = 2(α+1)S / (√((S+1)² + 4αS) + S − 1)`, evaluated through the
/// equivalent rationalized form `(√((S+1)² + 4αS) + 1 − S)/2` which has
/// no cancellation as `S → 0`; always at least 1. The `S = 0` point is
/// filled in by its continuity limit 1.
pub fn s_star(p: &PowerParams) -> Result<f64> {
    if !(p.snr >= 0.0) {
        return Err(Error::domain(format!("s_star: snr must be >= 0, got {}", p.snr)));
    }
    let s = p.snr;
    Ok(0.5 * (((s + 1.0) * (s + 1.0) + 4.0 * p.alpha * s).sqrt() + 1.0 - s))
}

fn c0_star_tx(p: &PowerParams) -> Result<f64> {
    let ss = s_star(p)?;
    Ok(0.5 * ((p.snr / ss).ln_1p() + (ss - ss.ln() - 1.0) / p.alpha))
}

/// Transmitter-assisted Ziv–Zakai converse: `E(α) ≤ α(Rh + C0*)` with
/// `C0* = ½(ln(1 + S/s*) + (s* − ln s* − 1)/α)`.
pub fn converse_exponent_tx(p: &PowerParams) -> Result<Exponent> {
    if !(p.snr > 0.0) {
        return Err(Error::domain(format!("converse_exponent_tx: snr must be > 0, got {}", p.snr)));
    }
    Ok(Exponent::finite(p.alpha * (p.help_rate + c0_star_tx(p)?)))
}

/// Data-processing-theorem converse, `E(α) ≤ α(C0 + Rh)`.
pub fn dpt_exponent(p: &PowerParams) -> Exponent {
    Exponent::finite(p.alpha * (0.5 * p.snr.ln_1p() + p.help_rate))
}

/// Receiver-assisted Ziv–Zakai converse: `E(α) ≤ α(Rh + R0*)` where
/// `R0* ∈ (0, C0)` is the unique root of `α·R0 = Esp(R0 + Rh)`.
///
/// Uniqueness holds because the left side increases strictly from 0 while
/// the sphere-packing side decreases strictly from `S/2` to 0 on the
/// bracket.
pub fn converse_exponent_rx(p: &PowerParams) -> Result<Exponent> {
    if !(p.snr > 0.0) {
        return Err(Error::domain(format!("converse_exponent_rx: snr must be > 0, got {}", p.snr)));
    }
    let c0 = 0.5 * p.snr.ln_1p();
    let eps = 1e-12f64.min(c0 * 1e-6);
    let alpha = p.alpha;
    let f = |r0: f64| alpha * r0 - sphere_packing_net(p.snr, r0);
    let root = bisect_root(f, eps, c0 - eps, &root_tol())
        .map_err(|e| Error::RootBracket(format!("converse_exponent_rx: {e}")))?;
    Ok(Exponent::finite(alpha * (p.help_rate + root)))
}

fn xi(snr: f64) -> f64 {
    0.5 * (1.0 + 0.5 * snr + (1.0 + 0.25 * snr * snr).sqrt())
}

/// Random-coding error exponent of the AWGN channel without help.
///
/// Straight-line branch below `½·ln ξ`, the sphere-packing expression up
/// to capacity, zero above, with `ξ = ½(1 + S/2 + √(1 + S²/4))`.
pub fn random_coding_exponent(r0: RateNats, snr: f64) -> Exponent {
    let r = r0.0;
    let c0 = 0.5 * snr.ln_1p();
    if r >= c0 {
        return Exponent::Zero;
    }
    let x = xi(snr);
    if r < 0.5 * x.ln() {
        Exponent::finite(1.0 - x + 0.5 * snr + 0.5 * (x * (x - 0.5 * snr)).ln() - r)
    } else {
        Exponent::finite(sphere_packing_net(snr, r))
    }
}

/// Expurgated error exponent of the AWGN channel without help:
/// `S/4·(1 − √(1 − e^{−2 R0}))` below its zero threshold
/// `½·ln(½ + ½√(1 + S²/4))`, zero at and above it.
pub fn expurgated_exponent(r0: RateNats, snr: f64) -> Exponent {
    let r = r0.0;
    let threshold = 0.5 * (0.5 + 0.5 * (1.0 + 0.25 * snr * snr).sqrt()).ln();
    if r >= threshold {
        return Exponent::Zero;
    }
    Exponent::finite(0.25 * snr * (1.0 - (1.0 - (-2.0 * r).exp()).sqrt()))
}

/// Gallager function `E0(ρ)` of the AWGN channel, maximized numerically
/// over `s ∈ [0, 1/(2S))`.
pub fn gallager_e0(rho: f64, snr: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&rho) {
        return Err(Error::domain(format!("gallager_e0: rho must be in [0,1], got {rho}")));
    }
    if !(snr > 0.0) {
        return Err(Error::domain(format!("gallager_e0: snr must be > 0, got {snr}")));
    }
    if rho == 0.0 {
        return Ok(0.0);
    }
    let hi = (1.0 - 1e-9) / (2.0 * snr);
    let f = |s: f64| {
        s * (1.0 + rho) * snr
            + 0.5 * (1.0 - 2.0 * s * snr).ln()
            + 0.5 * rho * (1.0 - 2.0 * s * snr + snr / (1.0 + rho)).ln()
    };
    let tol = Tolerance { abs_tol: 1e-12, rel_tol: 1e-12, max_iter: 400 };
    let (_, v) = golden_max(f, 0.0, hi, &tol)?;
    Ok(v.max(0.0))
}

/// Achievable exponent family used in the natural-labeling scheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AchievableFamily {
    RandomCoding,
    Expurgated,
    /// Larger of the two roots.
    Best,
}

fn balance_root<F: Fn(f64) -> f64>(alpha: f64, c0: f64, ea: F) -> Result<f64> {
    let eps = 1e-12f64.min(c0 * 1e-6);
    bisect_root(|r| alpha * r - ea(r), eps, c0 - eps, &root_tol())
}

/// Achievable exponent of the natural-labeling scheme,
/// `α(Rh + R0†)` with `R0†` solving `α·R0 = E_a(R0)` on `[0, C0]`.
///
/// `Best` takes the larger of the random-coding and expurgated roots. If
/// the bracket carries no sign change (degenerate `E_a`), the helper-only
/// exponent `α·Rh` is returned.
pub fn achievable_exponent(p: &PowerParams, family: AchievableFamily) -> Result<Exponent> {
    if !(p.snr > 0.0) {
        return Err(Error::domain(format!("achievable_exponent: snr must be > 0, got {}", p.snr)));
    }
    let c0 = 0.5 * p.snr.ln_1p();
    let rc = || balance_root(p.alpha, c0, |r| random_coding_exponent(RateNats(r), p.snr).as_f64());
    let ex = || balance_root(p.alpha, c0, |r| expurgated_exponent(RateNats(r), p.snr).as_f64());
    let root = match family {
        AchievableFamily::RandomCoding => rc(),
        AchievableFamily::Expurgated => ex(),
        AchievableFamily::Best => match (rc(), ex()) {
            (Ok(a), Ok(b)) => Ok(a.max(b)),
            (Ok(a), Err(_)) | (Err(_), Ok(a)) => Ok(a),
            (Err(e), Err(_)) => Err(e),
        },
    };
    match root {
        Ok(r0) => Ok(Exponent::finite(p.alpha * (p.help_rate + r0))),
        Err(Error::NoSignChange { .. }) => Ok(Exponent::finite(p.alpha * p.help_rate)),
        Err(e) => Err(Error::RootBracket(format!("achievable_exponent: {e}"))),
    }
}

/// Closed-form balance rate of the very noisy channel:
/// `C0/(2(1+α))` for `α ≥ 1`, `C0/(1+√α)²` for `α < 1`.
pub fn very_noisy_r0(alpha: f64, c0: RateNats) -> RateNats {
    if alpha >= 1.0 {
        RateNats(c0.0 / (2.0 * (1.0 + alpha)))
    } else {
        let q = 1.0 + alpha.sqrt();
        RateNats(c0.0 / (q * q))
    }
}

/// Evaluates a scalar exponent bound for a `dim`-dimensional parameter:
/// the scalar result with `α` replaced by `α/d`.
pub fn vector_wrap<F>(p: &PowerParams, base_op: F) -> Result<Exponent>
where
    F: Fn(&PowerParams) -> Result<Exponent>,
{
    let scalar = PowerParams { alpha: p.alpha / p.dim as f64, dim: 1, ..*p };
    base_op(&scalar)
}
