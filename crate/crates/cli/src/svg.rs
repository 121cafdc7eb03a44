//! Presentation-only SVG rendering of a [`CurveTable`]: a single panel,
//! one polyline per series, a legend from the header, and clip markers
//! where a series is unbounded (`inf` cells are never plotted as finite
//! values).

use anyhow::{bail, Result};

use crate::table::{Cell, CurveTable};

const WIDTH: f64 = 840.0;
const HEIGHT: f64 = 540.0;
const MARGIN_L: f64 = 72.0;
const MARGIN_R: f64 = 180.0;
const MARGIN_T: f64 = 36.0;
const MARGIN_B: f64 = 52.0;

const PALETTE: [&str; 8] =
    ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"];

#[derive(Debug, Clone, Default)]
pub struct PlotOptions {
    pub log_x: bool,
    pub log_y: bool,
    pub title: String,
}

struct Scale {
    lo: f64,
    hi: f64,
    log: bool,
    px_lo: f64,
    px_hi: f64,
}

impl Scale {
    fn map(&self, v: f64) -> f64 {
        let (a, b, x) = if self.log {
            (self.lo.log10(), self.hi.log10(), v.log10())
        } else {
            (self.lo, self.hi, v)
        };
        let t = if b > a { (x - a) / (b - a) } else { 0.5 };
        self.px_lo + t * (self.px_hi - self.px_lo)
    }
}

fn fmt_tick(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    let a = v.abs();
    if !(1e-3..1e4).contains(&a) {
        return format!("{v:.0e}");
    }
    let s = format!("{v:.3}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    s.to_string()
}

fn ticks(lo: f64, hi: f64, log: bool) -> Vec<f64> {
    if log {
        let (a, b) = (lo.log10().ceil() as i32, hi.log10().floor() as i32);
        let decades: Vec<f64> = (a..=b).map(|e| 10f64.powi(e)).collect();
        if decades.len() >= 2 {
            return decades;
        }
    }
    (0..=5).map(|i| lo + (hi - lo) * i as f64 / 5.0).collect()
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Renders the table to an SVG document string.
pub fn render(table: &CurveTable, opts: &PlotOptions) -> Result<String> {
    if table.series.is_empty() {
        bail!("nothing to plot: table has no series columns");
    }
    if table.rows.is_empty() {
        bail!("nothing to plot: table has no rows");
    }
    let xs: Vec<f64> = table.rows.iter().map(|(x, _)| *x).collect();
    let (mut x_lo, mut x_hi) =
        xs.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &v| (a.min(v), b.max(v)));
    if opts.log_x && !(x_lo > 0.0) {
        bail!("log x-axis needs positive axis values");
    }
    if x_lo == x_hi {
        x_lo -= 0.5;
        x_hi += 0.5;
    }

    let mut y_lo = f64::INFINITY;
    let mut y_hi = f64::NEG_INFINITY;
    for (_, vals) in &table.rows {
        for v in vals {
            let y = v.as_f64();
            if !v.is_inf() && y.is_finite() && (!opts.log_y || y > 0.0) {
                y_lo = y_lo.min(y);
                y_hi = y_hi.max(y);
            }
        }
    }
    if !y_lo.is_finite() {
        // Every cell is inf; plot markers on a unit band.
        y_lo = 0.0;
        y_hi = 1.0;
    }
    if y_lo == y_hi {
        y_lo -= 0.5;
        y_hi += 0.5;
    }
    if !opts.log_y {
        let pad = 0.05 * (y_hi - y_lo);
        y_lo -= pad;
        y_hi += pad;
    }

    let sx = Scale { lo: x_lo, hi: x_hi, log: opts.log_x, px_lo: MARGIN_L, px_hi: WIDTH - MARGIN_R };
    let sy =
        Scale { lo: y_lo, hi: y_hi, log: opts.log_y, px_lo: HEIGHT - MARGIN_B, px_hi: MARGIN_T };

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\" font-family=\"sans-serif\" font-size=\"12\">\n"
    ));
    out.push_str(&format!(
        "<rect x=\"0\" y=\"0\" width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>\n"
    ));
    if !opts.title.is_empty() {
        out.push_str(&format!(
            "<text x=\"{}\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">{}</text>\n",
            (MARGIN_L + WIDTH - MARGIN_R) / 2.0,
            xml_escape(&opts.title)
        ));
    }

    // Axes, ticks, grid lines.
    let (x0, x1) = (MARGIN_L, WIDTH - MARGIN_R);
    let (y0, y1) = (HEIGHT - MARGIN_B, MARGIN_T);
    out.push_str(&format!(
        "<line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x1}\" y2=\"{y0}\" stroke=\"black\"/>\n\
         <line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x0}\" y2=\"{y1}\" stroke=\"black\"/>\n"
    ));
    for t in ticks(x_lo, x_hi, opts.log_x) {
        let px = sx.map(t);
        out.push_str(&format!(
            "<line x1=\"{px}\" y1=\"{y0}\" x2=\"{px}\" y2=\"{}\" stroke=\"#dddddd\"/>\n\
             <line x1=\"{px}\" y1=\"{y0}\" x2=\"{px}\" y2=\"{}\" stroke=\"black\"/>\n\
             <text x=\"{px}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n",
            y1,
            y0 + 5.0,
            y0 + 20.0,
            fmt_tick(t)
        ));
    }
    for t in ticks(y_lo, y_hi, opts.log_y) {
        let py = sy.map(t);
        out.push_str(&format!(
            "<line x1=\"{x0}\" y1=\"{py}\" x2=\"{x1}\" y2=\"{py}\" stroke=\"#dddddd\"/>\n\
             <line x1=\"{}\" y1=\"{py}\" x2=\"{x0}\" y2=\"{py}\" stroke=\"black\"/>\n\
             <text x=\"{}\" y=\"{}\" text-anchor=\"end\">{}</text>\n",
            x0 - 5.0,
            x0 - 8.0,
            py + 4.0,
            fmt_tick(t)
        ));
    }
    out.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n",
        (x0 + x1) / 2.0,
        HEIGHT - 12.0,
        xml_escape(&table.axis)
    ));

    // Series polylines; unbounded cells become clip markers at the top.
    for (si, name) in table.series.iter().enumerate() {
        let color = PALETTE[si % PALETTE.len()];
        let mut segments: Vec<Vec<(f64, f64)>> = vec![Vec::new()];
        let mut markers = Vec::new();
        for (x, vals) in &table.rows {
            match vals[si] {
                Cell::Num(y) if y.is_finite() && (!opts.log_y || y > 0.0) => {
                    segments.last_mut().unwrap().push((sx.map(*x), sy.map(y)));
                }
                Cell::Inf => {
                    markers.push(sx.map(*x));
                    segments.push(Vec::new());
                }
                _ => segments.push(Vec::new()),
            }
        }
        for seg in segments.iter().filter(|s| s.len() >= 2) {
            let pts: Vec<String> = seg.iter().map(|(x, y)| format!("{x:.2},{y:.2}")).collect();
            out.push_str(&format!(
                "<polyline points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"1.6\"/>\n",
                pts.join(" ")
            ));
        }
        for seg in segments.iter().filter(|s| s.len() == 1) {
            let (x, y) = seg[0];
            out.push_str(&format!("<circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"2\" fill=\"{color}\"/>\n"));
        }
        for mx in markers {
            // Upward triangle at the top edge: the curve is unbounded here.
            out.push_str(&format!(
                "<path d=\"M {} {} L {} {} L {} {} Z\" fill=\"{color}\"/>\n",
                mx - 4.0,
                y1 + 10.0,
                mx + 4.0,
                y1 + 10.0,
                mx,
                y1 + 2.0
            ));
        }
        // Legend entry.
        let ly = MARGIN_T + 18.0 * si as f64 + 8.0;
        out.push_str(&format!(
            "<line x1=\"{}\" y1=\"{ly}\" x2=\"{}\" y2=\"{ly}\" stroke=\"{color}\" stroke-width=\"2\"/>\n\
             <text x=\"{}\" y=\"{}\">{}</text>\n",
            x1 + 12.0,
            x1 + 40.0,
            x1 + 46.0,
            ly + 4.0,
            xml_escape(name)
        ));
    }
    out.push_str("</svg>\n");
    Ok(out)
}
