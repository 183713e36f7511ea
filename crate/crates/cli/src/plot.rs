//! Self-contained SVG line plots with a logarithmic x-axis.
//!
//! Each series is drawn as one `<polyline>` with markers and vertical error
//! bars; an optional floor is drawn as a dashed horizontal line. Coordinates
//! are printed with fixed precision so identical input gives identical bytes.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::format::sig;
use crate::{Error, Result};

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 440.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 200.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 60.0;

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlotPoint {
    pub x: f64,
    pub y: f64,
    /// Half-height of the error bar; 0 draws none.
    pub err: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlotSeries {
    pub label: String,
    pub points: Vec<PlotPoint>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Plot {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    /// Tick spacing of the logarithmic x-axis, e.g. 2 or 10.
    pub x_log_base: f64,
    pub series: Vec<PlotSeries>,
    pub floor: Option<f64>,
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Maps data coordinates to pixels.
struct Frame {
    log_min: f64,
    log_max: f64,
    y_min: f64,
    y_max: f64,
}

impl Frame {
    fn x(&self, x: f64) -> f64 {
        LEFT + (x.log10() - self.log_min) / (self.log_max - self.log_min) * (WIDTH - LEFT - RIGHT)
    }

    fn y(&self, y: f64) -> f64 {
        HEIGHT - BOTTOM - (y - self.y_min) / (self.y_max - self.y_min) * (HEIGHT - TOP - BOTTOM)
    }
}

/// Step of roughly `range / 5` rounded to 1, 2 or 5 times a power of ten.
fn nice_step(range: f64) -> f64 {
    let raw = range / 5.0;
    let magnitude = 10f64.powf(raw.log10().floor());
    let m = raw / magnitude;
    let nice = if m <= 1.0 {
        1.0
    } else if m <= 2.0 {
        2.0
    } else if m <= 5.0 {
        5.0
    } else {
        10.0
    };
    nice * magnitude
}

fn frame(plot: &Plot) -> Frame {
    let points = plot.series.iter().flat_map(|s| &s.points);
    let (mut x_lo, mut x_hi) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut y_lo, mut y_hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for p in points.filter(|p| p.x > 0.0 && p.x.is_finite() && p.y.is_finite()) {
        x_lo = x_lo.min(p.x);
        x_hi = x_hi.max(p.x);
        y_lo = y_lo.min(p.y - p.err);
        y_hi = y_hi.max(p.y + p.err);
    }
    if let Some(floor) = plot.floor {
        y_lo = y_lo.min(floor);
        y_hi = y_hi.max(floor);
    }
    if !x_lo.is_finite() {
        (x_lo, x_hi) = (1.0, 10.0);
    }
    if !y_lo.is_finite() {
        (y_lo, y_hi) = (0.0, 1.0);
    }

    let (mut log_min, mut log_max) = (x_lo.log10(), x_hi.log10());
    let pad = ((log_max - log_min) * 0.05).max(0.05);
    log_min -= pad;
    log_max += pad;

    let span = y_hi - y_lo;
    let pad = if span > 0.0 {
        span * 0.05
    } else {
        y_lo.abs().max(1.0) * 0.5
    };
    Frame {
        log_min,
        log_max,
        y_min: y_lo - pad,
        y_max: y_hi + pad,
    }
}

/// Renders the plot to an SVG document.
pub fn render(plot: &Plot) -> Result<String> {
    if plot.series.is_empty() {
        return Err(Error::EmptyPlot);
    }
    let f = frame(plot);
    let (x0, x1) = (LEFT, WIDTH - RIGHT);
    let (y0, y1) = (HEIGHT - BOTTOM, TOP);

    let mut svg = String::new();
    let w = &mut svg;
    let _ = writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(
        w,
        r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );
    let _ = writeln!(
        w,
        r#"<text x="{:.2}" y="24" text-anchor="middle" font-size="14">{}</text>"#,
        (x0 + x1) / 2.0,
        escape(&plot.title)
    );

    // Axes.
    let _ = writeln!(
        w,
        r#"<path d="M{x0:.2},{y1:.2} V{y0:.2} H{x1:.2}" fill="none" stroke="black"/>"#
    );

    // Log x ticks at integer powers of the base.
    let base = plot.x_log_base;
    let first = (f.log_min / base.log10()).ceil() as i32;
    let last = (f.log_max / base.log10()).floor() as i32;
    for k in first..=last {
        let value = base.powi(k);
        let px = f.x(value);
        let label = if base == 10.0 {
            format!("10^{k}")
        } else {
            format!("{}^{k}", sig(base))
        };
        let _ = writeln!(
            w,
            r#"<line x1="{px:.2}" y1="{y0:.2}" x2="{px:.2}" y2="{:.2}" stroke="black"/><text x="{px:.2}" y="{:.2}" text-anchor="middle">{label}</text>"#,
            y0 + 5.0,
            y0 + 20.0
        );
    }

    // Linear y ticks.
    let step = nice_step(f.y_max - f.y_min);
    let (k_lo, k_hi) = (
        (f.y_min / step).ceil() as i64,
        (f.y_max / step).floor() as i64,
    );
    for k in k_lo..=k_hi {
        let tick = k as f64 * step;
        let py = f.y(tick);
        let label = sig(if k == 0 { 0.0 } else { tick });
        let _ = writeln!(
            w,
            r##"<line x1="{:.2}" y1="{py:.2}" x2="{x0:.2}" y2="{py:.2}" stroke="black"/><line x1="{x0:.2}" y1="{py:.2}" x2="{x1:.2}" y2="{py:.2}" stroke="#dddddd"/><text x="{:.2}" y="{:.2}" text-anchor="end">{label}</text>"##,
            x0 - 5.0,
            x0 - 8.0,
            py + 4.0
        );
    }

    let _ = writeln!(
        w,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
        (x0 + x1) / 2.0,
        HEIGHT - 15.0,
        escape(&plot.x_label)
    );
    let _ = writeln!(
        w,
        r#"<text x="20" y="{:.2}" text-anchor="middle" transform="rotate(-90 20 {:.2})">{}</text>"#,
        (y0 + y1) / 2.0,
        (y0 + y1) / 2.0,
        escape(&plot.y_label)
    );

    if let Some(floor) = plot.floor {
        let py = f.y(floor);
        let _ = writeln!(
            w,
            r#"<line class="floor" x1="{x0:.2}" y1="{py:.2}" x2="{x1:.2}" y2="{py:.2}" stroke="gray" stroke-dasharray="6,4"/>"#
        );
    }

    for (i, series) in plot.series.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let visible: Vec<&PlotPoint> = series
            .points
            .iter()
            .filter(|p| p.x > 0.0 && p.x.is_finite() && p.y.is_finite())
            .collect();
        let coords: Vec<String> = visible
            .iter()
            .map(|p| format!("{:.2},{:.2}", f.x(p.x), f.y(p.y)))
            .collect();
        let _ = writeln!(
            w,
            r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="1.5"/>"#,
            coords.join(" ")
        );
        for p in &visible {
            let (px, py) = (f.x(p.x), f.y(p.y));
            if p.err > 0.0 {
                let _ = writeln!(
                    w,
                    r#"<line class="errorbar" x1="{px:.2}" y1="{:.2}" x2="{px:.2}" y2="{:.2}" stroke="{color}"/>"#,
                    f.y(p.y - p.err),
                    f.y(p.y + p.err)
                );
            }
            let _ = writeln!(
                w,
                r#"<circle cx="{px:.2}" cy="{py:.2}" r="2.5" fill="{color}"/>"#
            );
        }

        let ly = TOP + 10.0 + 18.0 * i as f64;
        let lx = x1 + 15.0;
        let _ = writeln!(
            w,
            r#"<line x1="{lx:.2}" y1="{ly:.2}" x2="{:.2}" y2="{ly:.2}" stroke="{color}" stroke-width="2"/><text x="{:.2}" y="{:.2}">{}</text>"#,
            lx + 20.0,
            lx + 26.0,
            ly + 4.0,
            escape(&series.label)
        );
    }

    svg.push_str("</svg>\n");
    Ok(svg)
}

pub fn write(plot: &Plot, path: &Path) -> Result<()> {
    fs::write(path, render(plot)?).map_err(Error::io(path))
}
