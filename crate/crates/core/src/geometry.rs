//! Prediction-domain geometry: radius, normalize, density, and per-class
//! summaries.
//!
//! A class's scores are modeled as a 1-D domain around its center. Three
//! scalars describe the domain:
//!
//! * `radius`  — half the larger one-sided extent, `max(c-min, max-c)/2`.
//!   Note the division by two: the drawn radius covers half the one-sided
//!   extent by definition, and the renderer keeps that convention.
//! * `normalize` — `(c-min)/(max-c)`, the asymmetry ratio. Close to 1 means
//!   the extent is symmetric; extreme values point at unusually hard samples
//!   on one side. When `max == c` the ratio has no value and the `one-sided`
//!   sentinel is reported instead (reports print `n/a`).
//! * `density` — mean absolute deviation from the center divided by the
//!   radius. Smaller means more concentrated. Always in `[0, 2]` because the
//!   mean deviation cannot exceed the maximal deviation, which equals twice
//!   the radius. Defined as 0 when the radius is 0 (all scores equal).

use serde::Serialize;

use crate::center::{CenterMethod, CenterResult};
use crate::error::{Error, Result};
use crate::score::ClassScores;

/// The asymmetry ratio, or the `one-sided` sentinel when the center sits on
/// the class maximum and the ratio's denominator vanishes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Normalize {
    Value(f64),
    #[serde(serialize_with = "serialize_one_sided")]
    OneSided,
}

fn serialize_one_sided<S: serde::Serializer>(s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str("one-sided")
}

impl Normalize {
    pub fn value(self) -> Option<f64> {
        match self {
            Normalize::Value(v) => Some(v),
            Normalize::OneSided => None,
        }
    }
}

/// Half the larger one-sided extent of the scores around `center`.
pub fn radius(center: f64, min: f64, max: f64) -> Result<f64> {
    if center < min || center > max {
        return Err(Error::CenterOutOfRange { center, min, max });
    }
    Ok((center - min).max(max - center) / 2.0)
}

/// Asymmetry ratio `(center - min) / (max - center)`.
pub fn normalize(center: f64, min: f64, max: f64) -> Normalize {
    debug_assert!(center >= min && center <= max);
    if max == center {
        // includes the all-equal case min == center == max
        Normalize::OneSided
    } else {
        Normalize::Value((center - min) / (max - center))
    }
}

/// Mean absolute deviation from `center`, divided by `radius`; 0 for a
/// degenerate (radius 0) domain.
pub fn density(scores: &ClassScores, center: f64, radius: f64) -> f64 {
    if radius == 0.0 {
        return 0.0;
    }
    let mad: f64 = scores.iter().map(|&x| (x - center).abs()).sum::<f64>() / scores.n() as f64;
    mad / radius
}

/// The per-class geometry bundle.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DomainSummary {
    pub center: CenterResult,
    pub radius: f64,
    pub normalize: Normalize,
    pub density: f64,
    pub min: f64,
    pub max: f64,
    pub n: usize,
}

/// Compute center, radius, normalize, and density for one class in one go.
pub fn summarize_domain(scores: &ClassScores, method: CenterMethod) -> DomainSummary {
    let center = method.compute(scores);
    let min = scores.min();
    let max = scores.max();
    // the center estimators guarantee value in [min, max]
    let radius = radius(center.value, min, max).expect("center within range");
    let normalize = normalize(center.value, min, max);
    let density = density(scores, center.value, radius);
    DomainSummary {
        center,
        radius,
        normalize,
        density,
        min,
        max,
        n: scores.n(),
    }
}

/// One before/after comparison of a class's geometry.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonRow {
    pub before_radius: f64,
    pub before_normalize: Normalize,
    pub before_density: f64,
    pub after_radius: f64,
    pub after_normalize: Normalize,
    pub after_density: f64,
    pub radius_delta: f64,
    /// `None` when either side is one-sided.
    pub normalize_delta: Option<f64>,
    pub density_delta: f64,
    /// The radius grew: the domain's boundary moved outward.
    pub domain_expanded: bool,
    /// The density shrank: the scores packed closer around the center.
    pub domain_more_cohesive: bool,
}

/// Compare two summaries of the same class (for example before and after a
/// data-processing change). The boolean flags are report annotations only and
/// never feed back into any computation.
pub fn compare_domains(before: &DomainSummary, after: &DomainSummary) -> ComparisonRow {
    let normalize_delta = match (before.normalize, after.normalize) {
        (Normalize::Value(b), Normalize::Value(a)) => Some(a - b),
        _ => None,
    };
    ComparisonRow {
        before_radius: before.radius,
        before_normalize: before.normalize,
        before_density: before.density,
        after_radius: after.radius,
        after_normalize: after.normalize,
        after_density: after.density,
        radius_delta: after.radius - before.radius,
        normalize_delta,
        density_delta: after.density - before.density,
        domain_expanded: after.radius > before.radius,
        domain_more_cohesive: after.density < before.density,
    }
}
