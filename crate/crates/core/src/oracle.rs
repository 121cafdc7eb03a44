//! Exact (quadrature) error probabilities and MPαE values for the PPM
//! schemes. These are the ground truth the simulator is validated
//! against, and the tightness reference for the analytical bounds.
//!
//! Wrong-slot uniformity lemma: conditioned on a decoding error, every
//! wrong message index is equally likely. For plain PPM the off-signal
//! slots are i.i.d. and the argmax rule is permutation-symmetric in
//! them; for the cribbed scheme every wrong residue class covers `Mh`
//! interchangeable slots; for the two-sided scheme the helper's margin
//! rule is permutation-symmetric in the off slots of every instance.
//! The exact MPαE values below therefore use the scalar mixture
//! `(1−Pe)·|û_w − u|^α + Pe/(M−1)·Σ_{v≠w} |û_v − u|^α`
//! instead of an `(M−1)`-dimensional integral; a brute-force `M = 3`
//! nested quadrature in the tests backs the lemma.

use crate::numeric::{gauss_expectation, gaussian_cdf, gaussian_tail};
use crate::sim::{quantize, quantizer_level};
use crate::{Error, Result, Tolerance};

/// PPM layout shared by the cribbed and two-sided schemes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PpmSpec {
    /// Number of message slots, at least 2.
    pub m: u32,
    /// Helper multiplicity, at least 1. Block length is `M·Mh`.
    pub mh: u32,
    /// Energy SNR `γ = E/σ²`.
    pub gamma: f64,
}

impl PpmSpec {
    pub fn new(m: u32, mh: u32, gamma: f64) -> Result<Self> {
        if m < 2 {
            return Err(Error::domain(format!("PpmSpec: M must be >= 2, got {m}")));
        }
        if mh < 1 {
            return Err(Error::domain("PpmSpec: Mh must be >= 1"));
        }
        if !(gamma >= 0.0) {
            return Err(Error::domain(format!("PpmSpec: gamma must be >= 0, got {gamma}")));
        }
        Ok(PpmSpec { m, mh, gamma })
    }

    pub fn block_len(&self) -> u64 {
        self.m as u64 * self.mh as u64
    }
}

/// `1 − Φ(x)^k`, evaluated without cancellation for Φ(x) near 1.
#[inline]
fn one_minus_cdf_pow(x: f64, k: f64) -> f64 {
    let q = gaussian_tail(x);
    if q >= 1.0 {
        return 1.0;
    }
    // ln Φ = ln(1−Q); 1 − e^{k·lnΦ} = −expm1(k·ln1p(−Q)).
    -f64::exp_m1(k * f64::ln_1p(-q))
}

/// Exact error probability of plain `M`-slot PPM:
/// `Pe = E[1 − Φ(√γ + Z)^{M−1}]` over standard normal `Z`.
pub fn ppm_pe_exact(m: u32, gamma: f64) -> Result<f64> {
    if m < 2 {
        return Err(Error::domain(format!("ppm_pe_exact: M must be >= 2, got {m}")));
    }
    if !(gamma >= 0.0) {
        return Err(Error::domain(format!("ppm_pe_exact: gamma must be >= 0, got {gamma}")));
    }
    let sg = gamma.sqrt();
    let k = (m - 1) as f64;
    gauss_expectation(|z| one_minus_cdf_pow(sg + z, k), &Tolerance::oracle())
}

/// Exact error probability of the cribbed transmitter-only scheme:
/// `Pe = E_G[1 − Φ(√γ + G)^{(M−1)·Mh}]` with `G` the maximum of `Mh`
/// standard normals, folded into one Gaussian expectation through the
/// density transform `Mh·Φ(z)^{Mh−1}`.
pub fn cribbed_tx_pe_exact(spec: &PpmSpec) -> Result<f64> {
    let sg = spec.gamma.sqrt();
    let mh = spec.mh as f64;
    let k = ((spec.m - 1) as u64 * spec.mh as u64) as f64;
    gauss_expectation(
        |z| mh * gaussian_cdf(z).powf(mh - 1.0) * one_minus_cdf_pow(sg + z, k),
        &Tolerance::oracle(),
    )
}

/// Exact error probability of the two-sided scheme: the plain PPM error
/// probability raised to the number of independent instances.
pub fn two_sided_pe_exact(spec: &PpmSpec) -> Result<f64> {
    Ok(ppm_pe_exact(spec.m, spec.gamma)?.powi(spec.mh as i32))
}

/// Exact error probability of the hybrid scheme: the MSB sub-message is
/// noiseless, so the error is that of a two-sided PPM over the `Ml` LSB
/// slots with `Mh/Mm` instances. Requires `Mm | Mh`.
pub fn hybrid_pe_exact(mm: u32, ml: u32, mh: u32, gamma: f64) -> Result<f64> {
    if mm == 0 || !mh.is_multiple_of(mm) {
        return Err(Error::domain(format!("hybrid_pe_exact: Mm must divide Mh, got {mm} | {mh}")));
    }
    if ml < 2 {
        // A single LSB slot cannot err.
        return Ok(0.0);
    }
    Ok(ppm_pe_exact(ml, gamma)?.powi((mh / mm) as i32))
}

/// Exact MPαE mixture given the error probability and the wrong-value
/// index set (wrong-slot uniformity lemma, see module docs).
fn mpae_mixture(
    alpha: f64,
    m: u32,
    pe: f64,
    u: f64,
    wrong: impl Iterator<Item = u32>,
    w: u32,
) -> f64 {
    let correct = (1.0 - pe) * (quantizer_level(w, m) - u).abs().powf(alpha);
    let mut wrong_sum = 0.0;
    let mut count = 0u32;
    for v in wrong {
        wrong_sum += (quantizer_level(v, m) - u).abs().powf(alpha);
        count += 1;
    }
    if count == 0 {
        return correct;
    }
    correct + pe / count as f64 * wrong_sum
}

/// Exact MPαE of plain PPM at parameter `u`.
pub fn ppm_mpae_exact(alpha: f64, m: u32, gamma: f64, u: f64) -> Result<f64> {
    check_alpha(alpha)?;
    let (w, _) = quantize(u, m)?;
    let pe = ppm_pe_exact(m, gamma)?;
    Ok(mpae_mixture(alpha, m, pe, u, (1..=m).filter(|&v| v != w), w))
}

/// Exact MPαE of the cribbed transmitter-only scheme at parameter `u`.
pub fn cribbed_tx_mpae_exact(alpha: f64, spec: &PpmSpec, u: f64) -> Result<f64> {
    check_alpha(alpha)?;
    let (w, _) = quantize(u, spec.m)?;
    let pe = cribbed_tx_pe_exact(spec)?;
    Ok(mpae_mixture(alpha, spec.m, pe, u, (1..=spec.m).filter(|&v| v != w), w))
}

/// Exact MPαE of the two-sided scheme at parameter `u`.
pub fn two_sided_mpae_exact(alpha: f64, spec: &PpmSpec, u: f64) -> Result<f64> {
    check_alpha(alpha)?;
    let (w, _) = quantize(u, spec.m)?;
    let pe = two_sided_pe_exact(spec)?;
    Ok(mpae_mixture(alpha, spec.m, pe, u, (1..=spec.m).filter(|&v| v != w), w))
}

/// Exact MPαE of the hybrid scheme at parameter `u`: errors stay inside
/// the noiselessly conveyed MSB group, uniformly over its `Ml − 1` wrong
/// LSB values.
pub fn hybrid_mpae_exact(alpha: f64, mm: u32, ml: u32, mh: u32, gamma: f64, u: f64) -> Result<f64> {
    check_alpha(alpha)?;
    let m = mm
        .checked_mul(ml)
        .ok_or_else(|| Error::domain("hybrid_mpae_exact: Mm*Ml overflows"))?;
    let (w, _) = quantize(u, m)?;
    let pe = hybrid_pe_exact(mm, ml, mh, gamma)?;
    let group = (w - 1) / ml; // 0-based MSB value
    let lo = group * ml + 1;
    Ok(mpae_mixture(alpha, m, pe, u, (lo..lo + ml).filter(|&v| v != w), w))
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha > 0.0) {
        return Err(Error::domain(format!("alpha must be > 0, got {alpha}")));
    }
    Ok(())
}
