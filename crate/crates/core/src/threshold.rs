//! Deployment-threshold selection strategies and the combined report.
//!
//! Five families of candidate thresholds on a two-class dataset:
//!
//! * **borders** — the inner extremes of the two classes (`max(lower)`,
//!   `min(upper)`), named fake/live according to polarity;
//! * **error-balance plateau** — the set of thresholds minimizing the
//!   absolute difference between the two classes' strict crossing fractions.
//!   On separable data the whole inter-class gap minimizes it, so the plateau
//!   is reported as left edge, midpoint, and right edge rather than a single
//!   number;
//! * **balance point** — the threshold equalizing the summed distances from
//!   each class's scores to the threshold. Rearranging
//!   `sum(T - lower_i) = sum(upper_j - T)` gives `(N + M) * T = sum(all)`,
//!   so the unconstrained solution is the pooled mean; it is then clamped
//!   into the inter-class gap when one exists;
//! * **cross point** — the score-axis coordinate where the two classes'
//!   domain circles intersect, with flagged fallbacks when they don't.

use serde::Serialize;

use crate::center::CenterMethod;
use crate::dataset::{LabeledDataset, Polarity};
use crate::error::Result;
use crate::geometry::{summarize_domain, DomainSummary};
use crate::metrics::{evaluate_threshold, ThresholdEvaluation, TieRule};

/// Which construction produced a candidate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ThresholdStrategy {
    FakeBorder,
    LiveBorder,
    CrossPoint,
    BalancePoint,
    AcerLeft,
    AcerMid,
    AcerRight,
}

impl ThresholdStrategy {
    pub fn as_str(self) -> &'static str {
        match self {
            ThresholdStrategy::FakeBorder => "fake-border",
            ThresholdStrategy::LiveBorder => "live-border",
            ThresholdStrategy::CrossPoint => "cross-point",
            ThresholdStrategy::BalancePoint => "balance-point",
            ThresholdStrategy::AcerLeft => "acer-left",
            ThresholdStrategy::AcerMid => "acer-mid",
            ThresholdStrategy::AcerRight => "acer-right",
        }
    }
}

impl std::fmt::Display for ThresholdStrategy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Qualifier attached to a candidate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CandidateNote {
    Ok,
    /// The classes overlap, so gap-based reasoning does not apply.
    ClassesOverlap,
    /// The balance point fell outside the inter-class gap and was clamped
    /// to the nearest gap endpoint.
    GapClamped,
    /// The domain circles do not touch; the midpoint of the inner boundary
    /// segment was used instead.
    CirclesDisjointFallback,
    /// One domain circle contains the other; the midpoint of the two centers
    /// was used instead.
    CirclesNestedFallback,
}

impl CandidateNote {
    pub fn as_str(self) -> &'static str {
        match self {
            CandidateNote::Ok => "ok",
            CandidateNote::ClassesOverlap => "classes-overlap",
            CandidateNote::GapClamped => "gap-clamped",
            CandidateNote::CirclesDisjointFallback => "circles-disjoint-fallback",
            CandidateNote::CirclesNestedFallback => "circles-nested-fallback",
        }
    }
}

/// A named threshold candidate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThresholdCandidate {
    pub strategy: ThresholdStrategy,
    pub value: f64,
    pub valid: bool,
    pub note: CandidateNote,
}

impl ThresholdCandidate {
    fn ok(strategy: ThresholdStrategy, value: f64) -> Self {
        Self {
            strategy,
            value,
            valid: true,
            note: CandidateNote::Ok,
        }
    }
}

/// The two class-border candidates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Borders {
    pub fake: ThresholdCandidate,
    pub live: ThresholdCandidate,
}

/// Inner extremes of the two classes as thresholds.
///
/// The lower class contributes its maximum, the upper class its minimum;
/// polarity decides which is the fake border and which the live border.
/// When the classes overlap both candidates carry the `classes-overlap` note
/// and `valid = false` for gap-based consumers.
pub fn threshold_borders(data: &LabeledDataset) -> Borders {
    let lower_border = data.lower().max();
    let upper_border = data.upper().min();
    let overlap = data.classes_overlap();
    let make = |strategy, value| ThresholdCandidate {
        strategy,
        value,
        valid: !overlap,
        note: if overlap {
            CandidateNote::ClassesOverlap
        } else {
            CandidateNote::Ok
        },
    };
    match data.polarity() {
        // genuine occupies the lower side: the upper class is the fakes
        Polarity::GenuineLow => Borders {
            fake: make(ThresholdStrategy::FakeBorder, upper_border),
            live: make(ThresholdStrategy::LiveBorder, lower_border),
        },
        Polarity::GenuineHigh => Borders {
            fake: make(ThresholdStrategy::FakeBorder, lower_border),
            live: make(ThresholdStrategy::LiveBorder, upper_border),
        },
    }
}

/// The plateau of error-balance minimizers.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AcerPlateau {
    pub left: ThresholdCandidate,
    pub mid: ThresholdCandidate,
    pub right: ThresholdCandidate,
}

/// Threshold regions between, at, and beyond the distinct pooled values.
#[derive(Debug, Clone, Copy)]
struct Region {
    /// A representative threshold inside the region.
    representative: f64,
    /// Infimum of the region (finite stand-in for the outer regions).
    inf: f64,
    /// Supremum of the region.
    sup: f64,
}

/// Find the plateau of thresholds minimizing
/// `|#(lower > T)/N - #(upper < T)/M|`.
///
/// The objective is piecewise constant and only changes at sample values, so
/// it is swept exactly over every sample value, every open interval between
/// adjacent distinct values, and one region beyond each extreme. Comparisons
/// use the integer cross-products `|a*M - b*N|`, so ties are exact. The
/// difference of the two fractions is monotone in `T`, which makes the
/// minimizing set one contiguous block; its infimum, midpoint, and supremum
/// are returned. On separable data the plateau is exactly the inter-class
/// gap `[max(lower), min(upper)]`.
pub fn threshold_acer(data: &LabeledDataset) -> AcerPlateau {
    let lower = data.lower();
    let upper = data.upper();
    let n = lower.n() as i128;
    let m = upper.n() as i128;

    let mut values: Vec<f64> = lower.iter().chain(upper.iter()).copied().collect();
    values.sort_by(|a, b| a.total_cmp(b));
    values.dedup();

    let mut regions = Vec::with_capacity(2 * values.len() + 1);
    regions.push(Region {
        representative: values[0] - 1.0,
        inf: values[0] - 1.0,
        sup: values[0],
    });
    for (i, &v) in values.iter().enumerate() {
        regions.push(Region {
            representative: v,
            inf: v,
            sup: v,
        });
        if let Some(&next) = values.get(i + 1) {
            regions.push(Region {
                representative: (v + next) / 2.0,
                inf: v,
                sup: next,
            });
        }
    }
    let top = values[values.len() - 1];
    regions.push(Region {
        representative: top + 1.0,
        inf: top,
        sup: top + 1.0,
    });

    let imbalance = |t: f64| -> i128 {
        let a = lower.count_above(t) as i128;
        let b = upper.count_below(t) as i128;
        (a * m - b * n).abs()
    };

    let best = regions
        .iter()
        .map(|r| imbalance(r.representative))
        .min()
        .expect("at least one region");
    let minimizers: Vec<&Region> = regions
        .iter()
        .filter(|r| imbalance(r.representative) == best)
        .collect();
    let left = minimizers[0].inf;
    let right = minimizers[minimizers.len() - 1].sup;

    AcerPlateau {
        left: ThresholdCandidate::ok(ThresholdStrategy::AcerLeft, left),
        mid: ThresholdCandidate::ok(ThresholdStrategy::AcerMid, (left + right) / 2.0),
        right: ThresholdCandidate::ok(ThresholdStrategy::AcerRight, right),
    }
}

/// The distance-balance threshold.
///
/// The unconstrained solution of the summed-distance equality is the pooled
/// mean of all scores (closed form, see module docs). When the classes are
/// separable the value is constrained to the inter-class gap: a pooled mean
/// outside the gap is clamped to the nearest endpoint and flagged
/// `gap-clamped`. When the classes overlap there is no gap to constrain to;
/// the pooled mean is returned with the `classes-overlap` note and stays
/// valid.
pub fn threshold_balance(data: &LabeledDataset) -> ThresholdCandidate {
    let pooled = data.pooled_mean();
    match data.gap() {
        None => ThresholdCandidate {
            strategy: ThresholdStrategy::BalancePoint,
            value: pooled,
            valid: true,
            note: CandidateNote::ClassesOverlap,
        },
        Some((lo, hi)) => {
            if pooled < lo || pooled > hi {
                ThresholdCandidate {
                    strategy: ThresholdStrategy::BalancePoint,
                    value: pooled.clamp(lo, hi),
                    valid: true,
                    note: CandidateNote::GapClamped,
                }
            } else {
                ThresholdCandidate::ok(ThresholdStrategy::BalancePoint, pooled)
            }
        }
    }
}

/// The circle cross point of two class domains.
///
/// Each domain is modeled as a circle centered on the score axis at
/// `(center, 0)` with its summary radius. For properly intersecting circles
/// (`|r_l - r_u| < d < r_l + r_u`), the returned coordinate is the foot of
/// the intersection chord, `c_l + (d^2 + r_l^2 - r_u^2) / (2 d)`. Disjoint
/// circles fall back to the midpoint of the segment between their inner
/// boundaries; nested circles fall back to the midpoint of the centers and
/// are marked invalid. The caller orients the pair so
/// `lower.center <= upper.center`.
pub fn threshold_cross(lower: &DomainSummary, upper: &DomainSummary) -> ThresholdCandidate {
    let c_l = lower.center.value;
    let c_u = upper.center.value;
    debug_assert!(c_l <= c_u, "caller orients the domains");
    let r_l = lower.radius;
    let r_u = upper.radius;
    let d = c_u - c_l;

    if d <= (r_l - r_u).abs() {
        return ThresholdCandidate {
            strategy: ThresholdStrategy::CrossPoint,
            value: (c_l + c_u) / 2.0,
            valid: false,
            note: CandidateNote::CirclesNestedFallback,
        };
    }
    if d >= r_l + r_u {
        return ThresholdCandidate {
            strategy: ThresholdStrategy::CrossPoint,
            value: ((c_l + r_l) + (c_u - r_u)) / 2.0,
            valid: true,
            note: CandidateNote::CirclesDisjointFallback,
        };
    }
    let x = c_l + (d * d + r_l * r_l - r_u * r_u) / (2.0 * d);
    ThresholdCandidate::ok(ThresholdStrategy::CrossPoint, x)
}

/// Every candidate the strategies produce on one training set.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CandidateSet {
    pub borders: Borders,
    pub acer: AcerPlateau,
    pub balance: ThresholdCandidate,
    pub cross: ThresholdCandidate,
    /// Per-class domain summaries backing the cross point, lower side first.
    pub domains: (DomainSummary, DomainSummary),
}

/// Compute all threshold strategies on a training set.
///
/// `center` selects the estimator backing the domain summaries used by the
/// cross point.
pub fn candidate_set(train: &LabeledDataset, center: CenterMethod) -> CandidateSet {
    let lower_dom = summarize_domain(train.lower(), center);
    let upper_dom = summarize_domain(train.upper(), center);
    let cross = if lower_dom.center.value <= upper_dom.center.value {
        threshold_cross(&lower_dom, &upper_dom)
    } else {
        threshold_cross(&upper_dom, &lower_dom)
    };
    CandidateSet {
        borders: threshold_borders(train),
        acer: threshold_acer(train),
        balance: threshold_balance(train),
        cross,
        domains: (lower_dom, upper_dom),
    }
}

/// One row of the threshold report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportRow {
    pub candidate: ThresholdCandidate,
    pub train: ThresholdEvaluation,
    pub dev: Option<ThresholdEvaluation>,
}

/// The combined report: each strategy's threshold evaluated on the training
/// set and optionally on a dev set.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ThresholdReport {
    pub rows: Vec<ReportRow>,
}

/// Build the canonical six-row report in fixed order: fake border, live
/// border, cross point, balance point, plateau left, plateau right.
pub fn threshold_report(
    train: &LabeledDataset,
    dev: Option<&LabeledDataset>,
    center: CenterMethod,
    tie_rule: TieRule,
) -> Result<ThresholdReport> {
    let set = candidate_set(train, center);
    let candidates = [
        set.borders.fake,
        set.borders.live,
        set.cross,
        set.balance,
        set.acer.left,
        set.acer.right,
    ];
    build_report(&candidates, train, dev, tie_rule)
}

/// Build a report over an explicit list of candidates.
pub fn build_report(
    candidates: &[ThresholdCandidate],
    train: &LabeledDataset,
    dev: Option<&LabeledDataset>,
    tie_rule: TieRule,
) -> Result<ThresholdReport> {
    let mut rows = Vec::with_capacity(candidates.len());
    for &candidate in candidates {
        let train_eval = evaluate_threshold(train, candidate.value, tie_rule)?;
        let dev_eval = dev
            .map(|d| evaluate_threshold(d, candidate.value, tie_rule))
            .transpose()?;
        rows.push(ReportRow {
            candidate,
            train: train_eval,
            dev: dev_eval,
        });
    }
    Ok(ThresholdReport { rows })
}
