//! Static SVG figures of a scenario and any number of planned paths.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{Bounds, Point2};
use crate::scenario::Scenario;

#[derive(Debug, Error)]
pub enum RenderError {
    #[error("invalid render style: {0}")]
    Style(String),
    #[error("cannot write {path}: {source}")]
    Io {
        path: std::path::PathBuf,
        source: std::io::Error,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Glyph {
    Square,
    Diamond,
    Triangle,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct RenderStyle {
    pub width_px: u32,
    pub height_px: u32,
    pub margin_px: f64,
    pub background: String,
    pub bounds_stroke: String,
    pub obstacle_fill: String,
    pub obstacle_stroke: String,
    pub dccppa_color: String,
    pub rrt_color: String,
    pub prm_color: String,
    /// Used in turn for labels that are not a known planner.
    pub fallback_colors: Vec<String>,
    pub start_color: String,
    pub goal_color: String,
    pub start_glyph: Glyph,
    pub goal_glyph: Glyph,
    pub marker_size_px: f64,
    pub path_stroke_px: f64,
    pub outline_stroke_px: f64,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle {
            width_px: 800,
            height_px: 800,
            margin_px: 40.0,
            background: "#ffffff".into(),
            bounds_stroke: "#333333".into(),
            obstacle_fill: "#9e9e9e".into(),
            obstacle_stroke: "#424242".into(),
            dccppa_color: "#d62728".into(),
            rrt_color: "#1f77b4".into(),
            prm_color: "#2ca02c".into(),
            fallback_colors: vec!["#9467bd".into(), "#ff7f0e".into(), "#8c564b".into()],
            start_color: "#2e7d32".into(),
            goal_color: "#c62828".into(),
            start_glyph: Glyph::Square,
            goal_glyph: Glyph::Diamond,
            marker_size_px: 12.0,
            path_stroke_px: 2.0,
            outline_stroke_px: 1.5,
        }
    }
}

fn is_hex_color(s: &str) -> bool {
    s.len() == 7 && s.starts_with('#') && s[1..].chars().all(|c| c.is_ascii_hexdigit())
}

impl RenderStyle {
    pub fn validate(&self) -> Result<(), RenderError> {
        if self.width_px == 0 || self.height_px == 0 {
            return Err(RenderError::Style("canvas dimensions must be positive".into()));
        }
        if !self.margin_px.is_finite()
            || self.margin_px < 0.0
            || 2.0 * self.margin_px >= f64::from(self.width_px.min(self.height_px))
        {
            return Err(RenderError::Style("margin leaves no drawing area".into()));
        }
        let colors = [
            &self.background,
            &self.bounds_stroke,
            &self.obstacle_fill,
            &self.obstacle_stroke,
            &self.dccppa_color,
            &self.rrt_color,
            &self.prm_color,
            &self.start_color,
            &self.goal_color,
        ];
        for c in colors.into_iter().chain(self.fallback_colors.iter()) {
            if !is_hex_color(c) {
                return Err(RenderError::Style(format!("{c:?} is not a #rrggbb color")));
            }
        }
        if self.fallback_colors.is_empty() {
            return Err(RenderError::Style("fallback_colors must not be empty".into()));
        }
        Ok(())
    }

    fn color_for(&self, label: &str, unknown_index: &mut usize) -> &str {
        match label.to_ascii_lowercase().as_str() {
            "dccppa" => &self.dccppa_color,
            "rrt" => &self.rrt_color,
            "prm" => &self.prm_color,
            _ => {
                let c = &self.fallback_colors[*unknown_index % self.fallback_colors.len()];
                *unknown_index += 1;
                c
            }
        }
    }
}

/// Affine world-to-pixel map with uniform scale and a flipped y axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Viewport {
    scale: f64,
    offset_x: f64,
    offset_y: f64,
    min_x: f64,
    max_y: f64,
}

impl Viewport {
    pub fn fit(bounds: &Bounds, width_px: f64, height_px: f64, margin_px: f64) -> Viewport {
        let avail_w = width_px - 2.0 * margin_px;
        let avail_h = height_px - 2.0 * margin_px;
        let scale = (avail_w / bounds.width()).min(avail_h / bounds.height());
        Viewport {
            scale,
            offset_x: margin_px + (avail_w - scale * bounds.width()) / 2.0,
            offset_y: margin_px + (avail_h - scale * bounds.height()) / 2.0,
            min_x: bounds.min_x,
            max_y: bounds.max_y,
        }
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn to_pixel(&self, p: Point2) -> (f64, f64) {
        (
            self.offset_x + (p.x - self.min_x) * self.scale,
            self.offset_y + (self.max_y - p.y) * self.scale,
        )
    }

    pub fn to_world(&self, px: f64, py: f64) -> Point2 {
        Point2::new(
            self.min_x + (px - self.offset_x) / self.scale,
            self.max_y - (py - self.offset_y) / self.scale,
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LabeledPath {
    pub label: String,
    pub points: Vec<Point2>,
}

impl LabeledPath {
    pub fn new(label: impl Into<String>, points: Vec<Point2>) -> Self {
        LabeledPath {
            label: label.into(),
            points,
        }
    }
}

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            _ => out.push(c),
        }
    }
    out
}

fn glyph(out: &mut String, kind: Glyph, (x, y): (f64, f64), size: f64, color: &str, class: &str) {
    let h = size / 2.0;
    let _ = match kind {
        Glyph::Square => writeln!(
            out,
            r#"  <rect class="{class}" x="{:.3}" y="{:.3}" width="{size:.3}" height="{size:.3}" fill="{color}"/>"#,
            x - h,
            y - h
        ),
        Glyph::Diamond => writeln!(
            out,
            r#"  <polygon class="{class}" points="{:.3},{:.3} {:.3},{:.3} {:.3},{:.3} {:.3},{:.3}" fill="{color}"/>"#,
            x, y - h, x + h, y, x, y + h, x - h, y
        ),
        Glyph::Triangle => writeln!(
            out,
            r#"  <polygon class="{class}" points="{:.3},{:.3} {:.3},{:.3} {:.3},{:.3}" fill="{color}"/>"#,
            x, y - h, x + h, y + h, x - h, y + h
        ),
    };
}

/// SVG document: bounds, one `<circle>` per obstacle, start and goal
/// markers, one `<polyline>` per path and a legend.
pub fn render_svg(
    scenario: &Scenario,
    paths: &[LabeledPath],
    style: &RenderStyle,
) -> Result<String, RenderError> {
    style.validate()?;
    let (w, h) = (f64::from(style.width_px), f64::from(style.height_px));
    let view = Viewport::fit(&scenario.bounds, w, h, style.margin_px);
    let mut out = String::new();

    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        style.width_px, style.height_px, style.width_px, style.height_px
    );
    let _ = writeln!(out, "  <title>{}</title>", escape(&scenario.name));
    let _ = writeln!(
        out,
        r#"  <rect class="background" x="0" y="0" width="{}" height="{}" fill="{}"/>"#,
        style.width_px, style.height_px, style.background
    );

    let b = &scenario.bounds;
    let (x0, y0) = view.to_pixel(Point2::new(b.min_x, b.max_y));
    let _ = writeln!(
        out,
        r#"  <rect class="bounds" x="{x0:.3}" y="{y0:.3}" width="{:.3}" height="{:.3}" fill="none" stroke="{}" stroke-width="{}"/>"#,
        b.width() * view.scale(),
        b.height() * view.scale(),
        style.bounds_stroke,
        style.outline_stroke_px
    );

    for o in &scenario.obstacles {
        let (cx, cy) = view.to_pixel(o.center);
        let _ = writeln!(
            out,
            r#"  <circle class="obstacle" cx="{cx:.3}" cy="{cy:.3}" r="{:.3}" fill="{}" stroke="{}" stroke-width="{}"/>"#,
            o.radius * view.scale(),
            style.obstacle_fill,
            style.obstacle_stroke,
            style.outline_stroke_px
        );
    }

    let mut unknown = 0;
    let mut legend = Vec::with_capacity(paths.len());
    for path in paths {
        let color = style.color_for(&path.label, &mut unknown).to_string();
        let points: Vec<String> = path
            .points
            .iter()
            .map(|&p| {
                let (x, y) = view.to_pixel(p);
                format!("{x:.3},{y:.3}")
            })
            .collect();
        let _ = writeln!(
            out,
            r#"  <polyline class="path" data-label="{}" points="{}" fill="none" stroke="{color}" stroke-width="{}" stroke-linejoin="round"/>"#,
            escape(&path.label),
            points.join(" "),
            style.path_stroke_px
        );
        legend.push((path.label.clone(), color));
    }

    glyph(
        &mut out,
        style.start_glyph,
        view.to_pixel(scenario.start),
        style.marker_size_px,
        &style.start_color,
        "start",
    );
    glyph(
        &mut out,
        style.goal_glyph,
        view.to_pixel(scenario.goal),
        style.marker_size_px,
        &style.goal_color,
        "goal",
    );

    let _ = writeln!(out, r#"  <g class="legend" font-family="sans-serif" font-size="12">"#);
    let mut y = 16.0;
    let entries = [("start".to_string(), style.start_color.clone()), ("goal".to_string(), style.goal_color.clone())];
    for (label, color) in entries.iter().chain(legend.iter()) {
        let _ = writeln!(
            out,
            r#"    <line x1="8" y1="{:.1}" x2="28" y2="{:.1}" stroke="{color}" stroke-width="3"/>"#,
            y - 4.0,
            y - 4.0
        );
        let _ = writeln!(out, r#"    <text x="34" y="{y:.1}">{}</text>"#, escape(label));
        y += 16.0;
    }
    let _ = writeln!(out, "  </g>");
    let _ = writeln!(out, "</svg>");
    Ok(out)
}

pub fn write_svg(
    scenario: &Scenario,
    paths: &[LabeledPath],
    style: &RenderStyle,
    path: impl AsRef<Path>,
) -> Result<(), RenderError> {
    let svg = render_svg(scenario, paths, style)?;
    let path = path.as_ref();
    std::fs::write(path, svg).map_err(|source| RenderError::Io {
        path: path.to_path_buf(),
        source,
    })
}
