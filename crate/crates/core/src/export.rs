//! Deterministic text emitters: fixed-significance numbers, SVG, CSV and
//! OFF polylines, plus guarded file writing.

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::hyperbolic::{Geodesic, Tile, Tiling};
use crate::numerics::{Vec2, Vec3};

pub const DEFAULT_DIGITS: usize = 12;
pub const MAX_DIGITS: usize = 17;

#[derive(Debug, Error)]
pub enum ExportError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{0} already exists (use --force to overwrite)")]
    Exists(PathBuf),
    #[error("invalid style: {0}")]
    InvalidStyle(String),
}

/// Significant-digit formatter. Rounding is half-to-even on the exact
/// binary value; trailing zeros are dropped; exponents outside
/// `[-5, digits)` switch to scientific notation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NumberFormat {
    digits: usize,
}

impl Default for NumberFormat {
    fn default() -> Self {
        Self {
            digits: DEFAULT_DIGITS,
        }
    }
}

impl NumberFormat {
    pub fn new(digits: usize) -> Result<Self, ExportError> {
        if !(1..=MAX_DIGITS).contains(&digits) {
            return Err(ExportError::InvalidStyle(format!(
                "precision must be between 1 and {MAX_DIGITS} digits, got {digits}"
            )));
        }
        Ok(Self { digits })
    }

    pub fn digits(&self) -> usize {
        self.digits
    }

    pub fn format(&self, x: f64) -> String {
        if x.is_nan() {
            return "NaN".into();
        }
        if x.is_infinite() {
            return if x > 0.0 { "inf".into() } else { "-inf".into() };
        }
        if x == 0.0 {
            return "0".into();
        }
        let sci = format!("{:.*e}", self.digits - 1, x);
        let (mantissa, exp) = sci.split_once('e').expect("exponent present");
        let exp: i32 = exp.parse().expect("integer exponent");
        let negative = mantissa.starts_with('-');
        let digits: String = mantissa.chars().filter(char::is_ascii_digit).collect();
        let digits = digits.trim_end_matches('0');
        let digits = if digits.is_empty() { "0" } else { digits };
        let sign = if negative { "-" } else { "" };

        if exp < -5 || exp >= self.digits as i32 {
            let (head, tail) = digits.split_at(1);
            return if tail.is_empty() {
                format!("{sign}{head}e{exp}")
            } else {
                format!("{sign}{head}.{tail}e{exp}")
            };
        }
        if exp < 0 {
            let zeros = "0".repeat((-exp - 1) as usize);
            return format!("{sign}0.{zeros}{digits}");
        }
        let int_len = exp as usize + 1;
        if digits.len() <= int_len {
            format!("{sign}{digits}{}", "0".repeat(int_len - digits.len()))
        } else {
            let (i, f) = digits.split_at(int_len);
            format!("{sign}{i}.{f}")
        }
    }
}

/// Shorthand for the default 12-digit format.
pub fn format_number(x: f64) -> String {
    NumberFormat::default().format(x)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RenderStyle {
    pub stroke_width: f64,
    pub samples: usize,
    pub number_format: NumberFormat,
}

impl Default for RenderStyle {
    fn default() -> Self {
        Self {
            stroke_width: 0.004,
            samples: 720,
            number_format: NumberFormat::default(),
        }
    }
}

impl RenderStyle {
    pub fn validate(&self) -> Result<(), ExportError> {
        if !(self.stroke_width > 0.0 && self.stroke_width.is_finite()) {
            return Err(ExportError::InvalidStyle(format!(
                "stroke width must be positive, got {}",
                self.stroke_width
            )));
        }
        if self.samples == 0 {
            return Err(ExportError::InvalidStyle(
                "sample count must be positive".into(),
            ));
        }
        Ok(())
    }

    fn num(&self, x: f64) -> String {
        self.number_format.format(x)
    }
}

/// Minimal SVG 1.1 writer. Content is drawn in mathematical orientation
/// (y up) inside a flipping group.
pub struct Svg {
    body: String,
    view_box: [f64; 4],
    style: RenderStyle,
}

impl Svg {
    /// `view_box` is `[min_x, min_y, width, height]` in y-up coordinates.
    pub fn new(view_box: [f64; 4], style: RenderStyle) -> Self {
        Self {
            body: String::new(),
            view_box,
            style,
        }
    }

    /// View box around `points` with a relative margin.
    pub fn fitted<'a>(points: impl IntoIterator<Item = &'a Vec2>, style: RenderStyle) -> Self {
        let (mut lo, mut hi) = (
            Vec2::new(f64::INFINITY, f64::INFINITY),
            Vec2::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
        );
        for p in points {
            lo = Vec2::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Vec2::new(hi.x.max(p.x), hi.y.max(p.y));
        }
        if !lo.is_finite() || !hi.is_finite() {
            (lo, hi) = (Vec2::new(-1.0, -1.0), Vec2::new(1.0, 1.0));
        }
        let span = (hi.x - lo.x).max(hi.y - lo.y).max(1e-9);
        let margin = 0.05 * span;
        Self::new(
            [
                lo.x - margin,
                lo.y - margin,
                hi.x - lo.x + 2.0 * margin,
                hi.y - lo.y + 2.0 * margin,
            ],
            style,
        )
    }

    fn num(&self, x: f64) -> String {
        self.style.num(x)
    }

    pub fn circle(&mut self, center: Vec2, radius: f64, stroke: &str) {
        let line = format!(
            "    <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"{stroke}\" stroke-width=\"{}\"/>\n",
            self.num(center.x),
            self.num(center.y),
            self.num(radius),
            self.num(self.style.stroke_width)
        );
        self.body.push_str(&line);
    }

    pub fn polyline(&mut self, points: &[Vec2], closed: bool, stroke: &str) {
        if points.is_empty() {
            return;
        }
        let mut d = String::new();
        for (i, p) in points.iter().enumerate() {
            let cmd = if i == 0 { 'M' } else { 'L' };
            let _ = write!(d, "{cmd}{} {} ", self.num(p.x), self.num(p.y));
        }
        if closed {
            d.push('Z');
        }
        self.path(d.trim_end(), stroke);
    }

    pub fn segment(&mut self, a: Vec2, b: Vec2, stroke: &str) {
        self.polyline(&[a, b], false, stroke);
    }

    /// Raw path data.
    pub fn path(&mut self, d: &str, stroke: &str) {
        let line = format!(
            "    <path d=\"{d}\" fill=\"none\" stroke=\"{stroke}\" stroke-width=\"{}\"/>\n",
            self.num(self.style.stroke_width)
        );
        self.body.push_str(&line);
    }

    pub fn finish(self) -> String {
        let [x, y, w, h] = self.view_box;
        // flipping y maps [y, y + h] onto [−(y + h), −y]
        format!(
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
             <svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\">\n  \
             <g transform=\"scale(1,-1)\">\n{}  </g>\n</svg>\n",
            self.num(x),
            self.num(-(y + h)),
            self.num(w),
            self.num(h),
            self.body
        )
    }
}

fn generation_shade(generation: usize) -> String {
    let level = (generation * 48).min(192);
    format!("#{level:02x}{level:02x}{level:02x}")
}

/// Path data for a geodesic polygon: arcs for circle sides, lines for
/// diameters.
fn tile_path(tile: &Tile, style: &RenderStyle) -> String {
    let verts = tile.polygon.vertices();
    let mut d = format!("M{} {}", style.num(verts[0].x()), style.num(verts[0].y()));
    for i in 0..verts.len() {
        let (a, b) = (verts[i], verts[(i + 1) % verts.len()]);
        match tile.polygon.side(i) {
            Geodesic::Diameter { .. } => {
                let _ = write!(d, " L{} {}", style.num(b.x()), style.num(b.y()));
            }
            Geodesic::Arc { center, radius } => {
                let (ca, cb) = (a.z() - center, b.z() - center);
                let sweep = u8::from(ca.re * cb.im - ca.im * cb.re > 0.0);
                let r = style.num(radius);
                let _ = write!(
                    d,
                    " A{r} {r} 0 0 {sweep} {} {}",
                    style.num(b.x()),
                    style.num(b.y())
                );
            }
        }
    }
    d.push_str(" Z");
    d
}

/// Unit circle plus one path per tile, shaded by generation.
pub fn tiles_svg(tiles: &[Tile], style: &RenderStyle) -> String {
    let mut svg = Svg::new([-1.05, -1.05, 2.1, 2.1], *style);
    svg.circle(Vec2::ZERO, 1.0, "#000000");
    for tile in tiles {
        let d = tile_path(tile, style);
        svg.path(&d, &generation_shade(tile.generation));
    }
    svg.finish()
}

pub fn tiling_svg(tiling: &Tiling, style: &RenderStyle) -> String {
    tiles_svg(&tiling.tiles, style)
}

/// Quote a CSV field when it contains a separator, quote or line break.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn csv_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    let line = |cells: &mut dyn Iterator<Item = String>| cells.collect::<Vec<_>>().join(",");
    out.push_str(&line(&mut header.iter().map(|h| csv_field(h))));
    out.push('\n');
    for row in rows {
        out.push_str(&line(&mut row.iter().map(|c| csv_field(c))));
        out.push('\n');
    }
    out
}

/// A closed polyline as OFF: one 2-vertex face per edge.
pub fn polyline_off(points: &[Vec3], fmt: &NumberFormat) -> String {
    let n = points.len();
    let mut out = format!("OFF\n{n} {n} {n}\n");
    for p in points {
        let _ = writeln!(
            out,
            "{} {} {}",
            fmt.format(p.x),
            fmt.format(p.y),
            fmt.format(p.z)
        );
    }
    for i in 0..n {
        let _ = writeln!(out, "2 {i} {}", (i + 1) % n);
    }
    out
}

/// Write `contents` to `path`, refusing to replace an existing file unless
/// `force` is set.
pub fn write_output(path: &Path, contents: &str, force: bool) -> Result<(), ExportError> {
    if path.exists() && !force {
        return Err(ExportError::Exists(path.to_path_buf()));
    }
    fs::write(path, contents).map_err(|source| ExportError::Io {
        path: path.to_path_buf(),
        source,
    })
}
