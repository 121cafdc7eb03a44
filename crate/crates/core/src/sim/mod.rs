//! Monte Carlo simulation of the PPM transmission schemes, end to end:
//! quantize the parameter, transmit, add noise, decode, estimate.
//!
//! Trials are independent and may be executed concurrently; every trial
//! owns a dedicated random stream addressed by `(u_index, trial)` and the
//! per-chunk partial sums are folded in a fixed order, so a `(config,
//! seed)` pair produces a bit-identical [`SimResult`] for any degree of
//! parallelism.

mod rng;

use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;

use crate::{Error, Result};

/// Trials per work unit; partials are combined in chunk order.
const CHUNK: u64 = 8192;

/// Uniform quantizer of `[-1/2, 1/2)` with natural labeling.
///
/// Returns the slot index `w ∈ 1..=M` and the quantized value
/// `(⌊M·u⌋ + ½)/M`. The right edge `u = ½` is accepted as the limit from
/// the left (top cell). For even `M` the cells partition the interval
/// exactly and `|value − u| ≤ 1/(2M)`; odd `M` carries a boundary
/// half-cell at each end which is merged into the outermost slot, where
/// the error can reach `1/M`.
pub fn quantize(u: f64, m: u32) -> Result<(u32, f64)> {
    if m == 0 {
        return Err(Error::domain("quantize: M must be >= 1"));
    }
    if !(-0.5..=0.5).contains(&u) {
        return Err(Error::domain(format!("quantize: u must be in [-1/2, 1/2], got {u}")));
    }
    let raw = (m as f64 * u).floor() as i64 + (m / 2) as i64 + 1;
    let w = raw.clamp(1, m as i64) as u32;
    Ok((w, quantizer_level(w, m)))
}

/// The reconstruction value of slot `w`: `û_w = (w − ⌊M/2⌋ − ½)/M`,
/// increasing in `w` (natural labeling).
pub fn quantizer_level(w: u32, m: u32) -> f64 {
    (w as f64 - (m / 2) as f64 - 0.5) / m as f64
}

/// Default evaluation grid for the worst-case parameter: all `M` cell
/// centers plus the `M + 1` cell edges `k/M − ½`. The grid maximum
/// approximates (but does not prove) the supremum over the parameter.
pub fn default_u_grid(m: u32) -> Vec<f64> {
    let mf = m as f64;
    let mut grid: Vec<f64> = (1..=m).map(|w| quantizer_level(w, m)).collect();
    grid.extend((0..=m).map(|k| k as f64 / mf - 0.5));
    grid.sort_by(|a, b| a.partial_cmp(b).unwrap());
    grid.dedup();
    grid
}

/// Transmission scheme selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    /// Plain PPM over `M` slots, no helper.
    PpmBasic,
    /// Cribbed helper points the transmitter at the best of `Mh` slot
    /// groups; the receiver takes a global argmax.
    CribbedTx,
    /// Two-sided cribbed helper selects the best of `Mh` PPM instances;
    /// the receiver decodes inside the selected instance.
    TwoSided,
    /// MSB sub-message through the helper index, LSB sub-message through
    /// a two-sided PPM with `Mh/Mm` instances of `Ml` slots.
    Hybrid,
}

impl Scheme {
    pub fn name(self) -> &'static str {
        match self {
            Scheme::PpmBasic => "ppm-basic",
            Scheme::CribbedTx => "cribbed-tx",
            Scheme::TwoSided => "two-sided",
            Scheme::Hybrid => "hybrid",
        }
    }
}

impl std::str::FromStr for Scheme {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ppm-basic" => Ok(Scheme::PpmBasic),
            "cribbed-tx" => Ok(Scheme::CribbedTx),
            "two-sided" => Ok(Scheme::TwoSided),
            "hybrid" => Ok(Scheme::Hybrid),
            other => Err(Error::Config(format!("unknown scheme '{other}'"))),
        }
    }
}

/// Full description of a simulation run.
#[derive(Debug, Clone, PartialEq)]
pub struct SimConfig {
    pub scheme: Scheme,
    /// Number of quantizer slots (message alphabet size).
    pub m: u32,
    /// Helper multiplicity; must be 1 for `PpmBasic`.
    pub mh: u32,
    /// Hybrid MSB alphabet; `M = Mm·Ml` and `Mm | Mh`.
    pub mm: u32,
    /// Hybrid LSB alphabet.
    pub ml: u32,
    /// Energy SNR `γ = E/σ²`.
    pub gamma: f64,
    /// Moment order of the error criterion.
    pub alpha: f64,
    /// Parameter values to evaluate; non-empty, within `[-1/2, 1/2]`.
    pub u_grid: Vec<f64>,
    /// Trials per grid point.
    pub trials: u64,
    pub seed: u64,
}

impl SimConfig {
    /// A configuration with the default worst-case grid.
    pub fn new(scheme: Scheme, m: u32, mh: u32, gamma: f64, alpha: f64) -> Self {
        SimConfig {
            scheme,
            m,
            mh,
            mm: 1,
            ml: m,
            gamma,
            alpha,
            u_grid: default_u_grid(m.max(1)),
            trials: 100_000,
            seed: 0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.m == 0 || self.mh == 0 {
            return Err(Error::Config("M and Mh must be >= 1".into()));
        }
        if !(self.gamma >= 0.0) {
            return Err(Error::Config(format!("gamma must be >= 0, got {}", self.gamma)));
        }
        if !(self.alpha > 0.0) {
            return Err(Error::Config(format!("alpha must be > 0, got {}", self.alpha)));
        }
        if self.trials == 0 {
            return Err(Error::Config("trials must be >= 1".into()));
        }
        if self.trials >= 1 << rng::TRIAL_BITS {
            return Err(Error::Config("trials exceed the stream address space".into()));
        }
        if self.u_grid.is_empty() {
            return Err(Error::Config("u_grid must be non-empty".into()));
        }
        if self.u_grid.len() >= 1 << 24 {
            return Err(Error::Config("u_grid exceeds the stream address space".into()));
        }
        for &u in &self.u_grid {
            if !(-0.5..=0.5).contains(&u) {
                return Err(Error::Config(format!("u_grid entry {u} outside [-1/2, 1/2]")));
            }
        }
        match self.scheme {
            Scheme::PpmBasic => {
                if self.mh != 1 {
                    return Err(Error::Config("ppm-basic requires Mh = 1".into()));
                }
            }
            Scheme::Hybrid => {
                if self.mm == 0 || self.ml == 0 {
                    return Err(Error::Config("Mm and Ml must be >= 1".into()));
                }
                if self.mm as u64 * self.ml as u64 != self.m as u64 {
                    return Err(Error::Config(format!(
                        "hybrid requires M = Mm*Ml, got {} != {}*{}",
                        self.m, self.mm, self.ml
                    )));
                }
                if !self.mh.is_multiple_of(self.mm) {
                    return Err(Error::Config(format!(
                        "hybrid requires Mm | Mh, got Mh={} Mm={}",
                        self.mh, self.mm
                    )));
                }
            }
            _ => {}
        }
        Ok(())
    }

    /// Block length of the configured scheme.
    pub fn block_len(&self) -> u64 {
        match self.scheme {
            Scheme::PpmBasic => self.m as u64,
            Scheme::CribbedTx | Scheme::TwoSided => self.m as u64 * self.mh as u64,
            Scheme::Hybrid => self.ml as u64 * (self.mh / self.mm) as u64,
        }
    }
}

/// Per-parameter-point MPαE estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MpaeEstimate {
    pub u: f64,
    pub estimate: f64,
    pub stderr: f64,
}

/// Aggregated result of a simulation run.
#[derive(Debug, Clone, PartialEq)]
pub struct SimResult {
    /// Error rate pooled over all grid points (the channel-coding error
    /// probability is slot-symmetric, hence independent of `u`).
    pub pe_hat: f64,
    /// Binomial standard error `√(p(1−p)/trials_total)`.
    pub pe_stderr: f64,
    /// Trials underlying `pe_hat` (`trials × |u_grid|`).
    pub trials_total: u64,
    pub mpae_by_u: Vec<MpaeEstimate>,
    /// Maximum MPαE estimate over the grid — a grid maximum, not a
    /// proven supremum.
    pub mpae_sup: f64,
}

/// Compensated accumulator so chunk totals do not depend on summation
/// length.
#[derive(Debug, Clone, Copy, Default)]
struct KahanSum {
    sum: f64,
    carry: f64,
}

impl KahanSum {
    #[inline]
    fn add(&mut self, x: f64) {
        let y = x - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }
    fn merge(&mut self, other: &KahanSum) {
        self.add(other.carry.mul_add(-1.0, other.sum));
    }
}

#[derive(Debug, Clone, Default)]
struct Partial {
    errors: u64,
    moment: KahanSum,
    moment_sq: KahanSum,
}

/// Runs the configured scheme at every grid point.
pub fn run(cfg: &SimConfig) -> Result<SimResult> {
    cfg.validate()?;
    let base = rng::base_rng(cfg.seed);
    let sqrt_g = cfg.gamma.sqrt();
    let levels: Vec<f64> = (1..=cfg.m).map(|w| quantizer_level(w, cfg.m)).collect();
    let n_chunks = cfg.trials.div_ceil(CHUNK);

    let mut total_errors = 0u64;
    let mut mpae_by_u = Vec::with_capacity(cfg.u_grid.len());
    for (ui, &u) in cfg.u_grid.iter().enumerate() {
        let (w, _) = quantize(u, cfg.m)?;
        let partials: Vec<Partial> = (0..n_chunks)
            .into_par_iter()
            .map(|chunk| {
                let mut part = Partial::default();
                let mut buf = vec![0.0f64; cfg.block_len() as usize];
                let lo = chunk * CHUNK;
                let hi = (lo + CHUNK).min(cfg.trials);
                for trial in lo..hi {
                    let mut rng = rng::trial_stream(&base, ui as u32, trial);
                    let decoded = decode_trial(cfg, w, sqrt_g, &mut rng, &mut buf);
                    if decoded != w {
                        part.errors += 1;
                    }
                    let err = (levels[decoded as usize - 1] - u).abs().powf(cfg.alpha);
                    part.moment.add(err);
                    part.moment_sq.add(err * err);
                }
                part
            })
            .collect();

        // Fold in chunk order: bit-identical under any thread count.
        let mut agg = Partial::default();
        for p in &partials {
            agg.errors += p.errors;
            agg.moment.merge(&p.moment);
            agg.moment_sq.merge(&p.moment_sq);
        }
        total_errors += agg.errors;
        let n = cfg.trials as f64;
        let mean = agg.moment.sum / n;
        let stderr = if cfg.trials > 1 {
            let var =
                ((agg.moment_sq.sum - agg.moment.sum * agg.moment.sum / n) / (n - 1.0)).max(0.0);
            (var / n).sqrt()
        } else {
            0.0
        };
        mpae_by_u.push(MpaeEstimate { u, estimate: mean, stderr });
    }

    let trials_total = cfg.trials * cfg.u_grid.len() as u64;
    let pe_hat = total_errors as f64 / trials_total as f64;
    let pe_stderr = (pe_hat * (1.0 - pe_hat) / trials_total as f64).sqrt();
    let mpae_sup = mpae_by_u.iter().map(|e| e.estimate).fold(f64::NEG_INFINITY, f64::max);
    Ok(SimResult { pe_hat, pe_stderr, trials_total, mpae_by_u, mpae_sup })
}

/// Scheme-checked entry points.
pub fn run_ppm_basic(cfg: &SimConfig) -> Result<SimResult> {
    expect_scheme(cfg, Scheme::PpmBasic)?;
    run(cfg)
}

pub fn run_cribbed_tx(cfg: &SimConfig) -> Result<SimResult> {
    expect_scheme(cfg, Scheme::CribbedTx)?;
    run(cfg)
}

pub fn run_two_sided(cfg: &SimConfig) -> Result<SimResult> {
    expect_scheme(cfg, Scheme::TwoSided)?;
    run(cfg)
}

pub fn run_hybrid(cfg: &SimConfig) -> Result<SimResult> {
    expect_scheme(cfg, Scheme::Hybrid)?;
    run(cfg)
}

fn expect_scheme(cfg: &SimConfig, want: Scheme) -> Result<()> {
    if cfg.scheme != want {
        return Err(Error::Config(format!(
            "expected scheme {}, got {}",
            want.name(),
            cfg.scheme.name()
        )));
    }
    Ok(())
}

/// One channel use: draws the noise, applies the helper rule and the
/// decoder, returns the decoded message index in `1..=M`.
fn decode_trial(cfg: &SimConfig, w: u32, sqrt_g: f64, rng: &mut ChaCha8Rng, buf: &mut [f64]) -> u32 {
    match cfg.scheme {
        Scheme::PpmBasic => {
            let m = cfg.m as usize;
            fill_noise(rng, &mut buf[..m]);
            buf[w as usize - 1] += sqrt_g;
            argmax(&buf[..m]) as u32 + 1
        }
        Scheme::CribbedTx => {
            let (m, mh) = (cfg.m as usize, cfg.mh as usize);
            fill_noise(rng, &mut buf[..m * mh]);
            // Helper: the slot with the largest noise among {w, w+M, ...}.
            let mut best = 0usize;
            let mut best_z = f64::NEG_INFINITY;
            for i in 0..mh {
                let z = buf[w as usize - 1 + i * m];
                if z > best_z {
                    best_z = z;
                    best = i;
                }
            }
            buf[w as usize - 1 + best * m] += sqrt_g;
            let t = argmax(&buf[..m * mh]);
            (t % m) as u32 + 1
        }
        Scheme::TwoSided => {
            let (m, mh) = (cfg.m as usize, cfg.mh as usize);
            fill_noise(rng, &mut buf[..m * mh]);
            let sel = select_instance(buf, m, mh, w as usize - 1);
            let block = &mut buf[sel * m..(sel + 1) * m];
            block[w as usize - 1] += sqrt_g;
            argmax(block) as u32 + 1
        }
        Scheme::Hybrid => {
            // MSB sub-message rides the helper index noiselessly; the LSB
            // sub-message goes through a two-sided PPM over Ml slots.
            let ml = cfg.ml as usize;
            let inst = (cfg.mh / cfg.mm) as usize;
            let wm = (w - 1) / cfg.ml;
            let wl = (w - 1) % cfg.ml; // 0-based LSB slot
            fill_noise(rng, &mut buf[..ml * inst]);
            let sel = select_instance(buf, ml, inst, wl as usize);
            let block = &mut buf[sel * ml..(sel + 1) * ml];
            block[wl as usize] += sqrt_g;
            let dec_l = argmax(block) as u32;
            cfg.ml * wm + dec_l + 1
        }
    }
}

#[inline]
fn fill_noise(rng: &mut ChaCha8Rng, buf: &mut [f64]) {
    for z in buf.iter_mut() {
        *z = StandardNormal.sample(rng);
    }
}

/// Index of the maximum, ties broken toward the smallest index.
#[inline]
fn argmax(xs: &[f64]) -> usize {
    let mut best = 0usize;
    let mut best_v = xs[0];
    for (i, &v) in xs.iter().enumerate().skip(1) {
        if v > best_v {
            best_v = v;
            best = i;
        }
    }
    best
}

/// Two-sided helper rule: the instance maximizing the signal-slot margin
/// over the best off slot. A one-slot instance has an empty off set and
/// margin +∞ (never errs).
fn select_instance(buf: &[f64], m: usize, instances: usize, w0: usize) -> usize {
    let mut best = 0usize;
    let mut best_margin = f64::NEG_INFINITY;
    for i in 0..instances {
        let block = &buf[i * m..(i + 1) * m];
        let mut off = f64::NEG_INFINITY;
        for (t, &z) in block.iter().enumerate() {
            if t != w0 && z > off {
                off = z;
            }
        }
        let margin = block[w0] - off;
        if margin > best_margin {
            best_margin = margin;
            best = i;
        }
    }
    best
}
