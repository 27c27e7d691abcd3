//! Deterministic SVG rendering of 1-D score-domain diagrams.
//!
//! Each class domain is drawn as a circle sitting on a horizontal score
//! axis: the circle's center is the class center, its radius is the domain
//! radius mapped through the x-scale. Concentric quantile rings show where
//! the configured fractions of the samples fall (the outermost ring, at
//! fraction 1.0, reaches the most distant sample — twice the domain radius
//! when the extent is one-sided). Thresholds are full-height vertical lines.
//!
//! Determinism contract: identical [`RenderSpec`] values produce identical
//! bytes. All coordinates are serialized at a fixed 4 decimal places, every
//! styling default is resolved at construction, and nothing environmental
//! (timestamps, locales, map iteration order) enters the output.

use crate::error::{Error, Result};
use crate::geometry::{DomainSummary, Normalize};
use crate::threshold::{CandidateNote, ThresholdCandidate};

/// Resolved visual style for one class domain.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassStyle {
    pub label: String,
    pub color: String,
}

impl ClassStyle {
    /// Fixed palette by slot so two-class renders look the same everywhere.
    pub fn palette(slot: usize, label: impl Into<String>) -> Self {
        const COLORS: [&str; 4] = ["#2a9d8f", "#e76f51", "#577590", "#b5838d"];
        Self {
            label: label.into(),
            color: COLORS[slot % COLORS.len()].to_string(),
        }
    }
}

/// Resolved visual style for one threshold line.
#[derive(Debug, Clone, PartialEq)]
pub struct LineStyle {
    pub label: String,
    pub color: String,
    /// `stroke-dasharray` value, e.g. `"5 3"`.
    pub dash: Option<String>,
}

impl LineStyle {
    pub fn for_candidate(c: &ThresholdCandidate) -> Self {
        use crate::threshold::ThresholdStrategy::*;
        let color = match c.strategy {
            FakeBorder => "#e07a5f",
            LiveBorder => "#81b29a",
            CrossPoint => "#9b5de5",
            BalancePoint => "#0077b6",
            AcerLeft => "#f2cc8f",
            AcerMid => "#d9a44a",
            AcerRight => "#f2cc8f",
        };
        Self {
            label: c.strategy.as_str().to_string(),
            color: color.to_string(),
            dash: if c.note == CandidateNote::Ok {
                None
            } else {
                Some("5 3".to_string())
            },
        }
    }
}

/// One class domain to draw, with the samples backing rug ticks and rings.
#[derive(Debug, Clone, PartialEq)]
pub struct DomainLayer {
    pub summary: DomainSummary,
    /// Raw scores; required for rug ticks and quantile rings.
    pub samples: Option<Vec<f64>>,
    pub style: ClassStyle,
}

/// One threshold line to draw.
#[derive(Debug, Clone, PartialEq)]
pub struct ThresholdLayer {
    pub candidate: ThresholdCandidate,
    pub style: LineStyle,
}

/// Everything a render needs; no hidden inputs.
#[derive(Debug, Clone, PartialEq)]
pub struct RenderSpec {
    pub width: u32,
    pub height: u32,
    /// Score interval mapped onto `[0, width]`.
    pub viewport: (f64, f64),
    pub domains: Vec<DomainLayer>,
    pub thresholds: Vec<ThresholdLayer>,
    /// Draw per-sample tick marks on the axis.
    pub rug: bool,
    /// Sample fractions for the concentric rings, each in `(0, 1]`.
    pub rings: Vec<f64>,
    pub legend: bool,
    pub title: Option<String>,
    /// Free-form provenance line embedded in the `<desc>` element.
    pub config_note: Option<String>,
}

impl Default for RenderSpec {
    fn default() -> Self {
        Self {
            width: 800,
            height: 360,
            viewport: (0.0, 1.0),
            domains: Vec::new(),
            thresholds: Vec::new(),
            rug: true,
            rings: vec![0.25, 0.5, 0.75, 1.0],
            legend: true,
            title: None,
            config_note: None,
        }
    }
}

impl RenderSpec {
    fn validate(&self) -> Result<()> {
        let (lo, hi) = self.viewport;
        if !(lo.is_finite() && hi.is_finite()) || lo >= hi {
            return Err(Error::DegenerateViewport { lo, hi });
        }
        if self.width == 0 || self.height == 0 {
            return Err(Error::InvalidRenderSpec {
                reason: "width and height must be positive".into(),
            });
        }
        for &q in &self.rings {
            if !(q > 0.0 && q <= 1.0) {
                return Err(Error::InvalidRenderSpec {
                    reason: format!("ring fraction {q} outside (0, 1]"),
                });
            }
        }
        Ok(())
    }
}

/// The affine viewport map: score -> pixel x.
pub fn viewport_x(viewport: (f64, f64), width: u32, score: f64) -> f64 {
    let (lo, hi) = viewport;
    (score - lo) / (hi - lo) * width as f64
}

fn px(v: f64) -> String {
    format!("{v:.4}")
}

fn esc(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

fn fmt_value(v: f64) -> String {
    format!("{v:.5}")
}

fn fmt_normalize(n: Normalize) -> String {
    match n {
        Normalize::Value(v) => fmt_value(v),
        Normalize::OneSided => "n/a".to_string(),
    }
}

/// Deviation radius containing at least `fraction` of the samples.
fn quantile_deviation(samples: &[f64], center: f64, fraction: f64) -> f64 {
    let mut devs: Vec<f64> = samples.iter().map(|&x| (x - center).abs()).collect();
    devs.sort_by(|a, b| a.total_cmp(b));
    let k = ((fraction * devs.len() as f64).ceil() as usize).clamp(1, devs.len());
    devs[k - 1]
}

struct Panel {
    body: String,
    width: u32,
    height: u32,
}

fn render_panel(spec: &RenderSpec) -> Result<Panel> {
    spec.validate()?;
    let w = spec.width as f64;
    let (lo, hi) = spec.viewport;
    let xscale = w / (hi - lo);
    let xmap = |s: f64| viewport_x(spec.viewport, spec.width, s);

    // Pixel extent of each domain above the axis; the canvas grows rather
    // than clip a large circle.
    let mut max_up: f64 = 12.0;
    let mut domain_draw = Vec::new();
    for layer in &spec.domains {
        let r_px = layer.summary.radius * xscale;
        let mut ring_px: Vec<f64> = Vec::new();
        if let Some(samples) = &layer.samples {
            if !samples.is_empty() {
                for &q in &spec.rings {
                    ring_px
                        .push(quantile_deviation(samples, layer.summary.center.value, q) * xscale);
                }
            }
        }
        let reach = ring_px.iter().copied().fold(r_px, f64::max);
        max_up = max_up.max(reach);
        domain_draw.push((layer, r_px, ring_px));
    }

    let title_h = if spec.title.is_some() { 22u32 } else { 0 };
    let legend_lines = if spec.legend {
        spec.domains.len() + spec.thresholds.len()
    } else {
        0
    };
    let legend_h = if legend_lines > 0 {
        14 * legend_lines as u32 + 6
    } else {
        0
    };
    let top = 8 + title_h + legend_h;
    let needed = top as f64 + max_up + 40.0;
    let height = spec.height.max(needed.ceil() as u32);
    let axis_y = (height - 28) as f64;

    let mut b = String::new();
    b.push_str(&format!(
        "<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"#ffffff\"/>\n",
        spec.width, height
    ));
    if let Some(title) = &spec.title {
        b.push_str(&format!(
            "<text x=\"{}\" y=\"16\" font-family=\"monospace\" font-size=\"13\" text-anchor=\"middle\" fill=\"#222222\">{}</text>\n",
            px(w / 2.0),
            esc(title)
        ));
    }

    // axis and ticks
    b.push_str(&format!(
        "<line x1=\"0\" y1=\"{y}\" x2=\"{x2}\" y2=\"{y}\" stroke=\"#333333\" stroke-width=\"1\"/>\n",
        y = px(axis_y),
        x2 = px(w)
    ));
    for i in 0..=4 {
        let f = i as f64 / 4.0;
        let x = f * w;
        let value = lo + f * (hi - lo);
        b.push_str(&format!(
            "<line x1=\"{x}\" y1=\"{y1}\" x2=\"{x}\" y2=\"{y2}\" stroke=\"#333333\" stroke-width=\"1\"/>\n",
            x = px(x),
            y1 = px(axis_y),
            y2 = px(axis_y + 5.0)
        ));
        b.push_str(&format!(
            "<text x=\"{x}\" y=\"{y}\" font-family=\"monospace\" font-size=\"10\" text-anchor=\"middle\" fill=\"#333333\">{value:.2}</text>\n",
            x = px(x),
            y = px(axis_y + 16.0),
        ));
    }

    // domains: rings underneath, then the domain circle, center dot, rug
    for (layer, r_px, ring_px) in &domain_draw {
        let center = layer.summary.center.value;
        let clamped = center.clamp(lo, hi);
        let cx = xmap(clamped);
        let color = &layer.style.color;
        for r in ring_px {
            b.push_str(&format!(
                "<circle cx=\"{cx}\" cy=\"{cy}\" r=\"{r}\" fill=\"none\" stroke=\"{color}\" stroke-opacity=\"0.35\" stroke-width=\"1\"/>\n",
                cx = px(cx),
                cy = px(axis_y),
                r = px(*r)
            ));
        }
        b.push_str(&format!(
            "<circle cx=\"{cx}\" cy=\"{cy}\" r=\"{r}\" fill=\"{color}\" fill-opacity=\"0.12\" stroke=\"{color}\" stroke-width=\"1.5\"/>\n",
            cx = px(cx),
            cy = px(axis_y),
            r = px(*r_px)
        ));
        b.push_str(&format!(
            "<circle cx=\"{cx}\" cy=\"{cy}\" r=\"3\" fill=\"{color}\"/>\n",
            cx = px(cx),
            cy = px(axis_y)
        ));
        if center < lo || center > hi {
            // center outside the viewport: drawn clamped, flagged visibly
            b.push_str(&format!(
                "<text x=\"{x}\" y=\"{y}\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\" fill=\"#d62828\">!</text>\n",
                x = px(cx),
                y = px(axis_y - max_up - 4.0)
            ));
        }
        if spec.rug {
            if let Some(samples) = &layer.samples {
                for &s in samples {
                    let x = xmap(s.clamp(lo, hi));
                    b.push_str(&format!(
                        "<line x1=\"{x}\" y1=\"{y1}\" x2=\"{x}\" y2=\"{y2}\" stroke=\"{color}\" stroke-opacity=\"0.45\" stroke-width=\"1\"/>\n",
                        x = px(x),
                        y1 = px(axis_y - 4.0),
                        y2 = px(axis_y + 4.0)
                    ));
                }
            }
        }
    }

    // threshold verticals
    for layer in &spec.thresholds {
        let v = layer.candidate.value;
        let x = xmap(v.clamp(lo, hi));
        let dash = layer
            .style
            .dash
            .as_ref()
            .map(|d| format!(" stroke-dasharray=\"{}\"", esc(d)))
            .unwrap_or_default();
        b.push_str(&format!(
            "<line x1=\"{x}\" y1=\"{y1}\" x2=\"{x}\" y2=\"{y2}\" stroke=\"{color}\" stroke-width=\"1.5\"{dash}/>\n",
            x = px(x),
            y1 = px(top as f64),
            y2 = px(axis_y + 6.0),
            color = layer.style.color,
        ));
        if v < lo || v > hi {
            b.push_str(&format!(
                "<text x=\"{x}\" y=\"{y}\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\" fill=\"#d62828\">!</text>\n",
                x = px(x),
                y = px(top as f64 - 2.0)
            ));
        }
    }

    // legend: R/N/D per class, one line per threshold
    if spec.legend && legend_lines > 0 {
        let mut y = (8 + title_h + 12) as f64;
        for layer in &spec.domains {
            let s = &layer.summary;
            let text = format!(
                "{label}: n={n} R={r} N={norm} D={d} center[{method}]={c}",
                label = layer.style.label,
                n = s.n,
                r = fmt_value(s.radius),
                norm = fmt_normalize(s.normalize),
                d = fmt_value(s.density),
                method = s.center.method,
                c = fmt_value(s.center.value),
            );
            b.push_str(&format!(
                "<text x=\"8\" y=\"{y}\" font-family=\"monospace\" font-size=\"11\" fill=\"{color}\">{t}</text>\n",
                y = px(y),
                color = layer.style.color,
                t = esc(&text)
            ));
            y += 14.0;
        }
        for layer in &spec.thresholds {
            let c = &layer.candidate;
            let note = if c.note == CandidateNote::Ok {
                String::new()
            } else {
                format!(" [{}]", c.note.as_str())
            };
            let text = format!(
                "{label} = {v}{note}",
                label = layer.style.label,
                v = fmt_value(c.value)
            );
            b.push_str(&format!(
                "<text x=\"8\" y=\"{y}\" font-family=\"monospace\" font-size=\"11\" fill=\"{color}\">{t}</text>\n",
                y = px(y),
                color = layer.style.color,
                t = esc(&text)
            ));
            y += 14.0;
        }
    }

    Ok(Panel {
        body: b,
        width: spec.width,
        height,
    })
}

fn envelope(width: u32, height: u32, desc: Option<&str>, body: &str) -> String {
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n"
    ));
    if let Some(d) = desc {
        out.push_str(&format!("<desc>{}</desc>\n", esc(d)));
    }
    out.push_str(body);
    out.push_str("</svg>\n");
    out
}

/// Render one diagram to an SVG byte string.
pub fn render(spec: &RenderSpec) -> Result<String> {
    let panel = render_panel(spec)?;
    Ok(envelope(
        panel.width,
        panel.height,
        spec.config_note.as_deref(),
        &panel.body,
    ))
}

/// Render two diagrams side by side with a shared axis scale.
///
/// Both specs must declare the same viewport; the panels keep their own
/// widths and the taller panel sets the document height.
pub fn render_comparison(before: &RenderSpec, after: &RenderSpec) -> Result<String> {
    if before.viewport != after.viewport {
        return Err(Error::MismatchedViewports);
    }
    let a = render_panel(before)?;
    let b = render_panel(after)?;
    let gutter = 24;
    let width = a.width + gutter + b.width;
    let height = a.height.max(b.height);
    let mut body = String::new();
    body.push_str("<g>\n");
    body.push_str(&a.body);
    body.push_str("</g>\n");
    body.push_str(&format!(
        "<g transform=\"translate({},0)\">\n",
        a.width + gutter
    ));
    body.push_str(&b.body);
    body.push_str("</g>\n");
    Ok(envelope(
        width,
        height,
        before.config_note.as_deref(),
        &body,
    ))
}
