//! Minimal standalone SVG scatter and line plots.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, ValueEnum};

use crate::failure::{emit, Failure};

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const LEFT: f64 = 70.0;
const RIGHT: f64 = 20.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 55.0;
const TICKS: usize = 5;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Style {
    Scatter,
    Line,
}

#[derive(Args)]
pub struct PlotArgs {
    /// CSV with a header row; lines starting with `#` are skipped.
    #[arg(long, value_name = "FILE")]
    input: PathBuf,
    #[arg(long)]
    x: String,
    #[arg(long)]
    y: String,
    #[arg(long, default_value = "")]
    title: String,
    /// Output SVG path (stdout when omitted).
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Defaults to `line` when the x column is `step`, else `scatter`.
    #[arg(long, value_enum)]
    style: Option<Style>,
    #[arg(long, default_value_t = 2.5)]
    radius: f64,
    #[arg(long)]
    xmin: Option<f64>,
    #[arg(long)]
    xmax: Option<f64>,
    #[arg(long)]
    ymin: Option<f64>,
    #[arg(long)]
    ymax: Option<f64>,
}

pub fn run(args: PlotArgs) -> Result<(), Failure> {
    let points = read_columns(&args.input, &args.x, &args.y)?;
    if points.is_empty() {
        eprintln!(
            "warning: {} has no data rows; drawing axes only",
            args.input.display()
        );
    }
    let style = args.style.unwrap_or(if args.x == "step" {
        Style::Line
    } else {
        Style::Scatter
    });
    let x_range = range(points.iter().map(|p| p.0), args.xmin, args.xmax);
    let y_range = range(points.iter().map(|p| p.1), args.ymin, args.ymax);
    let svg = render(
        &points,
        &args.x,
        &args.y,
        &args.title,
        style,
        args.radius,
        x_range,
        y_range,
    );
    emit(args.out.as_deref(), &svg)
}

fn read_columns(path: &PathBuf, x: &str, y: &str) -> Result<Vec<(f64, f64)>, Failure> {
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_path(path)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
    let headers = reader.headers()?.clone();
    let column = |name: &str| {
        headers
            .iter()
            .position(|h| h.trim() == name)
            .ok_or_else(|| {
                Failure::input(format!(
                    "column {name:?} not in header {:?}",
                    headers.iter().collect::<Vec<_>>()
                ))
            })
    };
    let (xi, yi) = (column(x)?, column(y)?);
    let mut points = Vec::new();
    for (line, record) in reader.records().enumerate() {
        let record = record?;
        let value = |i: usize, name: &str| {
            let cell = record.get(i).unwrap_or("").trim();
            cell.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| {
                    Failure::input(format!(
                        "row {}: {name} value {cell:?} is not a number",
                        line + 1
                    ))
                })
        };
        points.push((value(xi, x)?, value(yi, y)?));
    }
    Ok(points)
}

fn range(values: impl Iterator<Item = f64>, lo: Option<f64>, hi: Option<f64>) -> (f64, f64) {
    let (mut min, mut max) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), v| {
        (a.min(v), b.max(v))
    });
    if !min.is_finite() {
        (min, max) = (0.0, 1.0);
    }
    let (mut lo, mut hi) = (lo.unwrap_or(min), hi.unwrap_or(max));
    if hi <= lo {
        let pad = if lo == 0.0 { 1.0 } else { lo.abs() * 0.5 };
        (lo, hi) = (lo - pad, hi + pad);
    }
    (lo, hi)
}

/// Tick positions at a 1, 2 or 5 multiple of a power of ten.
fn ticks(lo: f64, hi: f64) -> Vec<f64> {
    let raw = (hi - lo) / TICKS as f64;
    let magnitude = 10f64.powf(raw.log10().floor());
    let step = [1.0, 2.0, 5.0, 10.0]
        .iter()
        .map(|m| m * magnitude)
        .find(|s| *s >= raw)
        .unwrap_or(10.0 * magnitude);
    let first = (lo / step).ceil() as i64;
    let last = (hi / step).floor() as i64;
    (first..=last).map(|k| k as f64 * step).collect()
}

fn label(v: f64) -> String {
    let text = format!("{v:.4}");
    let text = text.trim_end_matches('0').trim_end_matches('.');
    if text == "-0" {
        "0".into()
    } else {
        text.into()
    }
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

#[allow(clippy::too_many_arguments)]
pub fn render(
    points: &[(f64, f64)],
    x_name: &str,
    y_name: &str,
    title: &str,
    style: Style,
    radius: f64,
    (x0, x1): (f64, f64),
    (y0, y1): (f64, f64),
) -> String {
    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let sx = |x: f64| LEFT + (x - x0) / (x1 - x0) * plot_w;
    let sy = |y: f64| TOP + plot_h - (y - y0) / (y1 - y0) * plot_h;
    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    )
    .unwrap();
    writeln!(
        s,
        r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    )
    .unwrap();
    if !title.is_empty() {
        writeln!(
            s,
            r#"<text x="{:.2}" y="24" text-anchor="middle" font-size="15">{}</text>"#,
            WIDTH / 2.0,
            escape(title)
        )
        .unwrap();
    }
    writeln!(
        s,
        r#"<rect x="{LEFT}" y="{TOP}" width="{plot_w}" height="{plot_h}" fill="none" stroke="black"/>"#
    )
    .unwrap();
    for t in ticks(x0, x1) {
        let x = sx(t);
        writeln!(
            s,
            r#"<line x1="{x:.2}" y1="{:.2}" x2="{x:.2}" y2="{:.2}" stroke="black"/>"#,
            TOP + plot_h,
            TOP + plot_h + 5.0
        )
        .unwrap();
        writeln!(
            s,
            r#"<text x="{x:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            TOP + plot_h + 18.0,
            label(t)
        )
        .unwrap();
    }
    for t in ticks(y0, y1) {
        let y = sy(t);
        writeln!(
            s,
            r#"<line x1="{:.2}" y1="{y:.2}" x2="{LEFT}" y2="{y:.2}" stroke="black"/>"#,
            LEFT - 5.0
        )
        .unwrap();
        writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#,
            LEFT - 8.0,
            y + 4.0,
            label(t)
        )
        .unwrap();
    }
    writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
        LEFT + plot_w / 2.0,
        HEIGHT - 12.0,
        escape(x_name)
    )
    .unwrap();
    writeln!(
        s,
        r#"<text x="18" y="{:.2}" text-anchor="middle" transform="rotate(-90 18 {:.2})">{}</text>"#,
        TOP + plot_h / 2.0,
        TOP + plot_h / 2.0,
        escape(y_name)
    )
    .unwrap();
    match style {
        Style::Scatter => {
            writeln!(s, r##"<g fill="#1f5fa8" fill-opacity="0.6">"##).unwrap();
            for &(x, y) in points {
                writeln!(
                    s,
                    r#"<circle cx="{:.2}" cy="{:.2}" r="{radius}"/>"#,
                    sx(x),
                    sy(y)
                )
                .unwrap();
            }
            writeln!(s, "</g>").unwrap();
        }
        Style::Line if !points.is_empty() => {
            let coords: Vec<String> = points
                .iter()
                .map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y)))
                .collect();
            writeln!(
                s,
                r##"<polyline fill="none" stroke="#1f5fa8" stroke-width="1.5" points="{}"/>"##,
                coords.join(" ")
            )
            .unwrap();
        }
        Style::Line => {}
    }
    writeln!(s, "</svg>").unwrap();
    s
}
