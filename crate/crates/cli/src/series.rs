//! The series registry: named curves evaluable at a point of the
//! parameter space, plus the sweep families that pick the axis,
//! default grid and default series for the reproduced figures.

use anyhow::{bail, Result};
use mpae_core::power::{AchievableFamily, PowerParams};
use mpae_core::{ct, energy, oracle, power};

use crate::table::Cell;

/// Point of the parameter space a series is evaluated at. Entries stay
/// `None` until set by a flag or by the sweep axis; a series that needs
/// a missing entry reports which flag to pass.
#[derive(Debug, Clone, Copy, Default)]
pub struct ParamPoint {
    pub snr: Option<f64>,
    pub rh: Option<f64>,
    pub alpha: Option<f64>,
    pub gamma: Option<f64>,
    pub big_l: Option<f64>,
    pub lh: Option<f64>,
    pub c0c: Option<f64>,
    pub rhc: Option<f64>,
    pub rc: Option<f64>,
    pub m: Option<u32>,
    pub mh: Option<u32>,
}

/// Axis variables a sweep can run over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Snr,
    Alpha,
    Rh,
    Gamma,
    BigL,
    Lh,
    C0c,
    Rhc,
    Rc,
}

impl Axis {
    pub fn name(self) -> &'static str {
        match self {
            Axis::Snr => "snr",
            Axis::Alpha => "alpha",
            Axis::Rh => "rh",
            Axis::Gamma => "gamma",
            Axis::BigL => "big-l",
            Axis::Lh => "lh",
            Axis::C0c => "c0c",
            Axis::Rhc => "rhc",
            Axis::Rc => "rc",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "snr" | "s" => Axis::Snr,
            "alpha" => Axis::Alpha,
            "rh" => Axis::Rh,
            "gamma" => Axis::Gamma,
            "big-l" | "l" => Axis::BigL,
            "lh" => Axis::Lh,
            "c0c" => Axis::C0c,
            "rhc" => Axis::Rhc,
            "rc" => Axis::Rc,
            other => bail!("unknown axis '{other}'"),
        })
    }

    pub fn set(self, p: &mut ParamPoint, v: f64) {
        match self {
            Axis::Snr => p.snr = Some(v),
            Axis::Alpha => p.alpha = Some(v),
            Axis::Rh => p.rh = Some(v),
            Axis::Gamma => p.gamma = Some(v),
            Axis::BigL => p.big_l = Some(v),
            Axis::Lh => p.lh = Some(v),
            Axis::C0c => p.c0c = Some(v),
            Axis::Rhc => p.rhc = Some(v),
            Axis::Rc => p.rc = Some(v),
        }
    }
}

fn need(v: Option<f64>, flag: &str, series: &str) -> Result<f64> {
    match v {
        Some(x) => Ok(x),
        None => bail!("series '{series}' needs --{flag} (or the sweep axis set to it)"),
    }
}

fn need_int(v: Option<u32>, flag: &str, series: &str) -> Result<u32> {
    match v {
        Some(x) => Ok(x),
        None => bail!("series '{series}' needs --{flag}"),
    }
}

fn power_params(p: &ParamPoint, series: &str) -> Result<PowerParams> {
    let snr = need(p.snr, "snr", series)?;
    let rh = need(p.rh, "rh", series)?;
    let alpha = need(p.alpha, "alpha", series)?;
    Ok(PowerParams::new(snr, rh, alpha)?)
}

fn ct_params(p: &ParamPoint, series: &str) -> Result<ct::CtParams> {
    let c0c = need(p.c0c, "c0c", series)?;
    let rhc = need(p.rhc, "rhc", series)?;
    let alpha = p.alpha.unwrap_or(1.0);
    Ok(ct::CtParams::new(c0c, rhc, p.rc.unwrap_or(0.0), alpha)?)
}

/// Evaluates one named series at a parameter point.
pub fn eval(series: &str, p: &ParamPoint) -> Result<Cell> {
    Ok(match series {
        // Power-limited exponent curves.
        "dpt" => power::dpt_exponent(&power_params(p, series)?).into(),
        "zz-tx" => power::converse_exponent_tx(&power_params(p, series)?)?.into(),
        "zz-rx" => power::converse_exponent_rx(&power_params(p, series)?)?.into(),
        "achievable" => {
            power::achievable_exponent(&power_params(p, series)?, AchievableFamily::Best)?.into()
        }
        "achievable-rc" => {
            power::achievable_exponent(&power_params(p, series)?, AchievableFamily::RandomCoding)?
                .into()
        }
        "achievable-ex" => {
            power::achievable_exponent(&power_params(p, series)?, AchievableFamily::Expurgated)?
                .into()
        }
        // Continuous-time channel-coding exponents (per second).
        "ct-oblivious" => {
            let cp = ct_params(p, series)?;
            ct::ee_oblivious(need(p.rc, "rc", series)?, &cp).into()
        }
        "ct-cribbed" => {
            let cp = ct_params(p, series)?;
            ct::cribbed_ee(need(p.rc, "rc", series)?, &cp).into()
        }
        "ct-no-help" => {
            ct::ee_no_help(need(p.rc, "rc", series)?, need(p.c0c, "c0c", series)?).into()
        }
        // Continuous-time MPαE exponents (per second).
        "cribless-achievable" => Cell::Num(ct::mpae_oblivious(&ct_params(p, series)?).achievable),
        "cribless-converse" => Cell::Num(ct::mpae_oblivious(&ct_params(p, series)?).converse),
        "cribbed" => Cell::Num(ct::cribbed_mpae(&ct_params(p, series)?)),
        "two-sided" => Cell::Num(ct::two_sided_mpae(&ct_params(p, series)?)),
        // Energy-limited analytical bounds.
        "ppm-pe" => Cell::Num(energy::ppm_pe_bound(
            need(p.big_l, "big-l", series)?,
            need(p.gamma, "gamma", series)?,
        )),
        "ppm-mpae" => Cell::Num(energy::ppm_mpae_bound(
            need(p.alpha, "alpha", series)?,
            need(p.gamma, "gamma", series)?,
        )),
        "cribbed-pe" => Cell::Num(energy::cribbed_tx_pe_bound(
            need(p.big_l, "big-l", series)?,
            need(p.gamma, "gamma", series)?,
            need(p.lh, "lh", series)?,
        )),
        "cribbed-mpae" => Cell::Num(energy::cribbed_tx_mpae_bound(
            need(p.alpha, "alpha", series)?,
            need(p.gamma, "gamma", series)?,
            need(p.lh, "lh", series)?,
        )),
        "side-mpae" => Cell::Num(energy::side_channel_mpae_bound(
            need(p.alpha, "alpha", series)?,
            need(p.gamma, "gamma", series)?,
            need(p.lh, "lh", series)?,
        )),
        "two-sided-pe" => Cell::Num(energy::two_sided_pe_bound(
            need(p.big_l, "big-l", series)?,
            need(p.gamma, "gamma", series)?,
            need(p.lh, "lh", series)?,
        )),
        "two-sided-mpae" => Cell::Num(energy::two_sided_mpae_bound(
            need(p.alpha, "alpha", series)?,
            need(p.gamma, "gamma", series)?,
            need(p.lh, "lh", series)?,
        )),
        "hybrid-mpae" => Cell::Num(
            energy::hybrid_mpae_bound(
                need(p.alpha, "alpha", series)?,
                need(p.gamma, "gamma", series)?,
                need(p.lh, "lh", series)?,
            )
            .exponent,
        ),
        // Exact quadrature oracles.
        "ppm-pe-exact" => Cell::Num(oracle::ppm_pe_exact(
            need_int(p.m, "m", series)?,
            need(p.gamma, "gamma", series)?,
        )?),
        "cribbed-pe-exact" => {
            let spec = oracle::PpmSpec::new(
                need_int(p.m, "m", series)?,
                need_int(p.mh, "mh", series)?,
                need(p.gamma, "gamma", series)?,
            )?;
            Cell::Num(oracle::cribbed_tx_pe_exact(&spec)?)
        }
        "two-sided-pe-exact" => {
            let spec = oracle::PpmSpec::new(
                need_int(p.m, "m", series)?,
                need_int(p.mh, "mh", series)?,
                need(p.gamma, "gamma", series)?,
            )?;
            Cell::Num(oracle::two_sided_pe_exact(&spec)?)
        }
        other => bail!("unknown series '{other}'"),
    })
}

/// Sweep family: fixes the axis and supplies figure defaults.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    PowerVsSnr,
    PowerVsAlpha,
    CtEe,
    CtDistVsC0,
    CtDistVsAlpha,
    Custom,
}

impl Family {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "fig-power-vs-s" => Family::PowerVsSnr,
            "fig-power-vs-alpha" => Family::PowerVsAlpha,
            "fig-ct-ee" => Family::CtEe,
            "fig-ct-dist-vs-c0" => Family::CtDistVsC0,
            "fig-ct-dist-vs-alpha" => Family::CtDistVsAlpha,
            "custom" => Family::Custom,
            other => bail!("unknown family '{other}'"),
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::PowerVsSnr => "fig-power-vs-S",
            Family::PowerVsAlpha => "fig-power-vs-alpha",
            Family::CtEe => "fig-ct-ee",
            Family::CtDistVsC0 => "fig-ct-dist-vs-C0",
            Family::CtDistVsAlpha => "fig-ct-dist-vs-alpha",
            Family::Custom => "custom",
        }
    }

    /// Axis implied by the family; `None` for custom sweeps.
    pub fn axis(self) -> Option<Axis> {
        match self {
            Family::PowerVsSnr => Some(Axis::Snr),
            Family::PowerVsAlpha | Family::CtDistVsAlpha => Some(Axis::Alpha),
            Family::CtEe => Some(Axis::Rc),
            Family::CtDistVsC0 => Some(Axis::C0c),
            Family::Custom => None,
        }
    }

    /// Default grid `(min, max, points, log)` when `--grid` is omitted.
    pub fn default_grid(self, p: &ParamPoint) -> Option<(f64, f64, usize, bool)> {
        match self {
            Family::PowerVsSnr => Some((1e-2, 1e2, 200, true)),
            Family::PowerVsAlpha | Family::CtDistVsAlpha => Some((0.05, 4.0, 160, false)),
            Family::CtEe => {
                let top = p.c0c.unwrap_or(1.0) + p.rhc.unwrap_or(0.0);
                Some((0.0, 1.25 * top, 200, false))
            }
            Family::CtDistVsC0 => Some((0.02, 4.0, 200, false)),
            Family::Custom => None,
        }
    }

    pub fn default_series(self) -> Option<Vec<String>> {
        let names: &[&str] = match self {
            Family::PowerVsSnr | Family::PowerVsAlpha => &["dpt", "zz-tx", "zz-rx", "achievable"],
            Family::CtEe => &["ct-oblivious", "ct-cribbed", "ct-no-help"],
            Family::CtDistVsC0 | Family::CtDistVsAlpha => {
                &["cribless-converse", "cribless-achievable", "cribbed", "two-sided"]
            }
            Family::Custom => return None,
        };
        Some(names.iter().map(|s| s.to_string()).collect())
    }
}

/// The evaluation grid of a sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub min: f64,
    pub max: f64,
    pub points: usize,
    pub log: bool,
}

impl GridSpec {
    pub fn new(min: f64, max: f64, points: usize, log: bool) -> Result<Self> {
        if points < 2 {
            bail!("grid needs at least 2 points, got {points}");
        }
        if !(min < max) {
            bail!("grid needs min < max, got {min}:{max}");
        }
        if log && !(min > 0.0) {
            bail!("log grid needs min > 0, got {min}");
        }
        Ok(GridSpec { min, max, points, log })
    }

    /// Parses `min:max:points[:log]`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 && parts.len() != 4 {
            bail!("grid must be min:max:points[:log], got '{s}'");
        }
        let min: f64 = parts[0].parse().map_err(|_| anyhow::anyhow!("bad grid min '{}'", parts[0]))?;
        let max: f64 = parts[1].parse().map_err(|_| anyhow::anyhow!("bad grid max '{}'", parts[1]))?;
        let points: usize =
            parts[2].parse().map_err(|_| anyhow::anyhow!("bad grid points '{}'", parts[2]))?;
        let log = match parts.get(3) {
            None => false,
            Some(&"log") => true,
            Some(&"linear") => false,
            Some(other) => bail!("grid scale must be 'log' or 'linear', got '{other}'"),
        };
        GridSpec::new(min, max, points, log)
    }

    pub fn values(&self) -> Vec<f64> {
        let n = self.points;
        if self.log {
            let (a, b) = (self.min.log10(), self.max.log10());
            (0..n).map(|i| 10f64.powf(a + (b - a) * i as f64 / (n - 1) as f64)).collect()
        } else {
            (0..n)
                .map(|i| self.min + (self.max - self.min) * i as f64 / (n - 1) as f64)
                .collect()
        }
    }
}
