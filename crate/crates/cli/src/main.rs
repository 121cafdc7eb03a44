//! `mpae` — parameter sweeps, Monte Carlo runs and oracle/bound
//! comparison reports for modulation–estimation over AWGN channels with
//! a rate-limited helper.
//!
//! Exit codes: 0 success, 2 configuration error, 3 acceptance deviation
//! (compare mode), 1 I/O failure.

// NaN-rejecting guards are written as `!(x > 0.0)` on purpose.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod series;
mod sim_cmd;
mod svg;
mod table;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use series::{Axis, Family, GridSpec, ParamPoint};
use table::CurveTable;

#[derive(Parser)]
#[command(name = "mpae", version, about = "Exponent bounds, exact oracles and simulations for AWGN parameter modulation with a helper")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep analytical bounds/oracles over a parameter grid.
    Bounds(BoundsArgs),
    /// Run a Monte Carlo simulation and write per-u results.
    Simulate(sim_cmd::SimulateArgs),
    /// Compare simulation, exact oracle and analytical bound.
    Compare(sim_cmd::CompareArgs),
    /// Render a CSV curve table to SVG.
    Plot(PlotArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Csv,
    Svg,
}

#[derive(Args)]
struct BoundsArgs {
    /// Sweep family: fig-power-vs-S, fig-power-vs-alpha, fig-ct-ee,
    /// fig-ct-dist-vs-C0, fig-ct-dist-vs-alpha, or custom.
    #[arg(long)]
    family: String,
    /// Axis variable for custom sweeps (snr, alpha, rh, gamma, big-l,
    /// lh, c0c, rhc, rc).
    #[arg(long)]
    axis: Option<String>,
    /// Grid as min:max:points[:log].
    #[arg(long)]
    grid: Option<String>,
    /// Comma-separated series names.
    #[arg(long, value_delimiter = ',')]
    series: Option<Vec<String>>,
    #[command(flatten)]
    params: ParamFlags,
    /// Output file (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    format: OutputFormat,
    /// Logarithmic y axis when rendering SVG.
    #[arg(long)]
    ylog: bool,
}

/// Fixed-parameter flags shared by the sweep commands.
#[derive(Args, Clone, Copy, Debug, Default)]
struct ParamFlags {
    /// SNR `S = P/σ²` (power-limited setting).
    #[arg(long)]
    snr: Option<f64>,
    /// Help rate Rh in nats per channel use.
    #[arg(long)]
    rh: Option<f64>,
    /// Moment order α of the error criterion.
    #[arg(long)]
    alpha: Option<f64>,
    /// Energy SNR γ = E/σ².
    #[arg(long)]
    gamma: Option<f64>,
    /// Message budget L in nats.
    #[arg(long = "big-l")]
    big_l: Option<f64>,
    /// Help budget Lh in nats.
    #[arg(long)]
    lh: Option<f64>,
    /// Number of PPM slots M (for exact-oracle series).
    #[arg(long)]
    m: Option<u32>,
    /// Helper multiplicity Mh (for exact-oracle series).
    #[arg(long)]
    mh: Option<u32>,
    /// Continuous-time capacity without help, Cc0 = Pc/N0 (nats/s).
    #[arg(long)]
    c0c: Option<f64>,
    /// Continuous-time help rate Rhc (nats/s).
    #[arg(long)]
    rhc: Option<f64>,
    /// Continuous-time code rate Rc (nats/s).
    #[arg(long)]
    rc: Option<f64>,
}

impl ParamFlags {
    fn to_point(self) -> ParamPoint {
        ParamPoint {
            snr: self.snr,
            rh: self.rh,
            alpha: self.alpha,
            gamma: self.gamma,
            big_l: self.big_l,
            lh: self.lh,
            c0c: self.c0c,
            rhc: self.rhc,
            rc: self.rc,
            m: self.m,
            mh: self.mh,
        }
    }

    /// Set flags as a re-runnable command-line fragment.
    fn record(&self) -> String {
        let mut parts = Vec::new();
        macro_rules! push {
            ($name:literal, $field:expr) => {
                if let Some(v) = $field {
                    parts.push(format!(concat!("--", $name, "={}"), v));
                }
            };
        }
        push!("snr", self.snr);
        push!("rh", self.rh);
        push!("alpha", self.alpha);
        push!("gamma", self.gamma);
        push!("big-l", self.big_l);
        push!("lh", self.lh);
        push!("m", self.m);
        push!("mh", self.mh);
        push!("c0c", self.c0c);
        push!("rhc", self.rhc);
        push!("rc", self.rc);
        parts.join(" ")
    }
}

#[derive(Args)]
struct PlotArgs {
    /// Input CSV curve table.
    input: PathBuf,
    /// Output SVG file.
    #[arg(long)]
    out: PathBuf,
    /// Logarithmic y axis.
    #[arg(long)]
    ylog: bool,
}

/// Error carrying its process exit code.
enum CliError {
    /// Invalid configuration (exit 2).
    Config(anyhow::Error),
    /// I/O failure (exit 1).
    Io(anyhow::Error),
    /// Acceptance deviation in compare mode (exit 3).
    Deviation(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Config(_) => 2,
            CliError::Io(_) => 1,
            CliError::Deviation(_) => 3,
        }
    }
}

type CliResult = Result<(), CliError>;

fn cfg_err(e: impl Into<anyhow::Error>) -> CliError {
    CliError::Config(e.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Command::Bounds(args) => cmd_bounds(args),
        Command::Simulate(args) => sim_cmd::cmd_simulate(args),
        Command::Compare(args) => sim_cmd::cmd_compare(args),
        Command::Plot(args) => cmd_plot(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            match &e {
                CliError::Config(err) => eprintln!("error: {err:#}"),
                CliError::Io(err) => eprintln!("error: {err:#}"),
                CliError::Deviation(msg) => eprintln!("deviation: {msg}"),
            }
            ExitCode::from(e.code())
        }
    }
}

fn cmd_bounds(args: BoundsArgs) -> CliResult {
    let family = Family::parse(&args.family).map_err(cfg_err)?;
    let point = args.params.to_point();

    let axis = match (family.axis(), &args.axis) {
        (Some(a), None) => a,
        (Some(a), Some(requested)) => {
            let r = Axis::parse(requested).map_err(cfg_err)?;
            if r != a {
                return Err(cfg_err(anyhow!(
                    "family {} sweeps over {}, not {}",
                    family.name(),
                    a.name(),
                    r.name()
                )));
            }
            a
        }
        (None, Some(requested)) => Axis::parse(requested).map_err(cfg_err)?,
        (None, None) => return Err(cfg_err(anyhow!("custom sweeps need --axis"))),
    };

    let grid = match &args.grid {
        Some(g) => GridSpec::parse(g).map_err(cfg_err)?,
        None => {
            let (lo, hi, n, log) = family
                .default_grid(&point)
                .ok_or_else(|| cfg_err(anyhow!("custom sweeps need --grid min:max:points[:log]")))?;
            GridSpec::new(lo, hi, n, log).map_err(cfg_err)?
        }
    };

    let series_names: Vec<String> = match args.series {
        Some(s) if !s.is_empty() => s,
        _ => family
            .default_series()
            .ok_or_else(|| cfg_err(anyhow!("custom sweeps need --series a,b,c")))?,
    };

    let mut tab = CurveTable::new(axis.name(), series_names.clone());
    tab.meta("tool", format!("mpae {}", env!("CARGO_PKG_VERSION")));
    // Re-running this exact command regenerates the table byte for byte.
    tab.meta(
        "command",
        format!(
            "bounds --family {} --axis {} --grid {}:{}:{}{} --series {} {}",
            family.name(),
            axis.name(),
            grid.min,
            grid.max,
            grid.points,
            if grid.log { ":log" } else { "" },
            series_names.join(","),
            args.params.record()
        )
        .trim_end()
        .to_string(),
    );
    tab.meta("family", family.name());
    tab.meta("fixed", args.params.record());
    tab.meta("scale", if grid.log { "log" } else { "linear" });

    for x in grid.values() {
        let mut p = point;
        axis.set(&mut p, x);
        let mut row = Vec::with_capacity(series_names.len());
        for s in &series_names {
            row.push(series::eval(s, &p).map_err(cfg_err)?);
        }
        tab.push_row(x, row);
    }

    emit_table(&tab, args.out.as_deref(), args.format, args.ylog, family.name())
}

fn emit_table(
    tab: &CurveTable,
    out: Option<&std::path::Path>,
    format: OutputFormat,
    ylog: bool,
    title: &str,
) -> CliResult {
    match format {
        OutputFormat::Csv => match out {
            Some(path) => tab.write_csv(path).map_err(CliError::Io)?,
            None => print!("{}", tab.to_csv()),
        },
        OutputFormat::Svg => {
            let opts = svg::PlotOptions {
                log_x: tab.meta_value("scale") == Some("log"),
                log_y: ylog,
                title: title.to_string(),
            };
            let doc = svg::render(tab, &opts).map_err(cfg_err)?;
            match out {
                Some(path) => std::fs::write(path, doc)
                    .with_context(|| format!("writing {}", path.display()))
                    .map_err(CliError::Io)?,
                None => print!("{doc}"),
            }
        }
    }
    Ok(())
}

fn cmd_plot(args: PlotArgs) -> CliResult {
    let tab = CurveTable::read_csv(&args.input).map_err(CliError::Io)?;
    let opts = svg::PlotOptions {
        log_x: tab.meta_value("scale") == Some("log"),
        log_y: args.ylog,
        title: tab.meta_value("family").unwrap_or("").to_string(),
    };
    let doc = svg::render(&tab, &opts).map_err(cfg_err)?;
    std::fs::write(&args.out, doc)
        .with_context(|| format!("writing {}", args.out.display()))
        .map_err(CliError::Io)
}
