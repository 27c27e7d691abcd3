//! Threshold evaluation and ROC analysis.
//!
//! Conventions, fixed once and asserted in tests:
//!
//! * "positive" is the genuine (bona fide) class: `tp + fn = genuine count`,
//!   `tn + fp = attack count`.
//! * `APCER = FP / (TN + FP)` — fraction of attacks accepted as genuine;
//!   `BPCER = FN / (FN + TP)` — fraction of genuine rejected;
//!   `ACER = (APCER + BPCER) / 2`.
//! * With genuine as positive, `FPR` is identical to `APCER` and
//!   `TPR = 1 - BPCER`, so ROC columns line up with the error rates.
//!
//! A sample is classified attack when its score lies strictly on the attack
//! side of the threshold (above for `genuine-low` polarity, below for
//! `genuine-high`). Scores exactly equal to the threshold are governed by the
//! tie rule.

use serde::Serialize;

use crate::dataset::{LabeledDataset, Polarity};
use crate::error::{Error, Result};
use crate::score::ClassScores;

/// What happens to a score exactly equal to the threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TieRule {
    /// Ties are classified genuine (default).
    EqualIsGenuine,
    /// Ties are classified attack.
    EqualIsAttack,
    /// Ties are scored as their true class. This is the convention under
    /// which a class's own boundary value is a zero-error threshold on its
    /// own data; both strict-side crossings still count as errors.
    EqualIsCorrect,
}

impl TieRule {
    pub fn as_str(self) -> &'static str {
        match self {
            TieRule::EqualIsGenuine => "equal-is-genuine",
            TieRule::EqualIsAttack => "equal-is-attack",
            TieRule::EqualIsCorrect => "equal-is-correct",
        }
    }
}

impl std::fmt::Display for TieRule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Confusion counts and error rates at one threshold.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThresholdEvaluation {
    pub threshold: f64,
    pub tp: usize,
    pub fp: usize,
    pub tn: usize,
    #[serde(rename = "fn")]
    pub fn_: usize,
    pub apcer: f64,
    pub bpcer: f64,
    pub acer: f64,
    pub fpr: f64,
    pub tpr: f64,
}

/// Count how many of `scores` land on the attack side of `threshold`.
///
/// `ties_attack` decides whether scores equal to the threshold count as
/// attack. `attack_high` says which side of the axis the attack class
/// occupies.
fn attack_side_count(
    scores: &ClassScores,
    threshold: f64,
    attack_high: bool,
    ties_attack: bool,
) -> usize {
    match (attack_high, ties_attack) {
        (true, false) => scores.count_above(threshold),
        (true, true) => scores.count_at_or_above(threshold),
        (false, false) => scores.count_below(threshold),
        (false, true) => scores.count_at_or_below(threshold),
    }
}

/// Evaluate one threshold on one dataset.
pub fn evaluate_threshold(
    data: &LabeledDataset,
    threshold: f64,
    tie_rule: TieRule,
) -> Result<ThresholdEvaluation> {
    if !threshold.is_finite() {
        return Err(Error::NonFiniteThreshold);
    }
    let attack_high = data.polarity() == Polarity::GenuineLow;
    let (genuine_ties_attack, attack_ties_attack) = match tie_rule {
        TieRule::EqualIsGenuine => (false, false),
        TieRule::EqualIsAttack => (true, true),
        TieRule::EqualIsCorrect => (false, true),
    };

    let genuine = data.genuine();
    let attack = data.attack();
    let fn_ = attack_side_count(genuine, threshold, attack_high, genuine_ties_attack);
    let tp = genuine.n() - fn_;
    let tn = attack_side_count(attack, threshold, attack_high, attack_ties_attack);
    let fp = attack.n() - tn;

    let apcer = fp as f64 / (tn + fp) as f64;
    let bpcer = fn_ as f64 / (fn_ + tp) as f64;
    Ok(ThresholdEvaluation {
        threshold,
        tp,
        fp,
        tn,
        fn_,
        apcer,
        bpcer,
        acer: (apcer + bpcer) / 2.0,
        fpr: apcer,
        tpr: tp as f64 / (tp + fn_) as f64,
    })
}

/// One operating point of the ROC curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RocPoint {
    pub threshold: f64,
    pub fpr: f64,
    pub tpr: f64,
}

/// A full ROC sweep: one point per distinct pooled score plus both outer
/// sentinels, ordered by ascending FPR, with the trapezoid-rule AUC.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RocCurve {
    pub points: Vec<RocPoint>,
    pub auc: f64,
}

/// Sweep every distinct pooled score as a threshold and integrate the curve.
pub fn roc_sweep(data: &LabeledDataset) -> RocCurve {
    let mut values: Vec<f64> = data
        .lower()
        .iter()
        .chain(data.upper().iter())
        .copied()
        .collect();
    values.sort_by(|a, b| a.total_cmp(b));
    values.dedup();

    let below = values[0] - 1.0;
    let above = values[values.len() - 1] + 1.0;

    // Thresholds ordered so genuine acceptance only grows: ascending for
    // genuine-low, descending for genuine-high.
    let mut thresholds = Vec::with_capacity(values.len() + 2);
    match data.polarity() {
        Polarity::GenuineLow => {
            thresholds.push(below);
            thresholds.extend(values.iter().copied());
            thresholds.push(above);
        }
        Polarity::GenuineHigh => {
            thresholds.push(above);
            thresholds.extend(values.iter().rev().copied());
            thresholds.push(below);
        }
    }

    let points: Vec<RocPoint> = thresholds
        .into_iter()
        .map(|t| {
            let e = evaluate_threshold(data, t, TieRule::EqualIsGenuine).expect("finite threshold");
            RocPoint {
                threshold: t,
                fpr: e.fpr,
                tpr: e.tpr,
            }
        })
        .collect();

    let mut auc = 0.0;
    for w in points.windows(2) {
        auc += (w[1].fpr - w[0].fpr) * (w[0].tpr + w[1].tpr) / 2.0;
    }
    RocCurve { points, auc }
}
