//! Two-class labeled datasets and the polarity convention.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::score::ClassScores;

/// Which semantic class occupies the low-score side of the axis.
///
/// Real deployments are inconsistent about whether genuine (bona fide) faces
/// score low or high, so the orientation is always recorded explicitly and
/// never inferred from the data.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Polarity {
    /// Genuine samples occupy the low-score side; attacks score high.
    GenuineLow,
    /// Genuine samples occupy the high-score side; attacks score low.
    GenuineHigh,
}

impl Polarity {
    pub fn as_str(self) -> &'static str {
        match self {
            Polarity::GenuineLow => "genuine-low",
            Polarity::GenuineHigh => "genuine-high",
        }
    }
}

impl std::fmt::Display for Polarity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One record as it arrives from a score file, after label mapping.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreRecord {
    pub id: String,
    pub score: f64,
    /// `true` when the record belongs to the genuine (bona fide) class.
    pub genuine: bool,
}

/// A validated two-class dataset: both classes non-empty, each sorted.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledDataset {
    lower: ClassScores,
    upper: ClassScores,
    polarity: Polarity,
}

impl LabeledDataset {
    /// Build from the structural (low-side / high-side) classes.
    ///
    /// Non-emptiness is guaranteed by the `ClassScores` type itself.
    pub fn new(lower: ClassScores, upper: ClassScores, polarity: Polarity) -> Self {
        Self {
            lower,
            upper,
            polarity,
        }
    }

    /// Build from the semantic classes, mapping them onto sides via polarity.
    pub fn from_classes(genuine: ClassScores, attack: ClassScores, polarity: Polarity) -> Self {
        match polarity {
            Polarity::GenuineLow => Self::new(genuine, attack, polarity),
            Polarity::GenuineHigh => Self::new(attack, genuine, polarity),
        }
    }

    pub fn lower(&self) -> &ClassScores {
        &self.lower
    }

    pub fn upper(&self) -> &ClassScores {
        &self.upper
    }

    pub fn polarity(&self) -> Polarity {
        self.polarity
    }

    pub fn genuine(&self) -> &ClassScores {
        match self.polarity {
            Polarity::GenuineLow => &self.lower,
            Polarity::GenuineHigh => &self.upper,
        }
    }

    pub fn attack(&self) -> &ClassScores {
        match self.polarity {
            Polarity::GenuineLow => &self.upper,
            Polarity::GenuineHigh => &self.lower,
        }
    }

    /// Total record count across both classes.
    pub fn len(&self) -> usize {
        self.lower.n() + self.upper.n()
    }

    pub fn is_empty(&self) -> bool {
        false // both classes are non-empty by construction
    }

    pub fn global_min(&self) -> f64 {
        self.lower.min().min(self.upper.min())
    }

    pub fn global_max(&self) -> f64 {
        self.lower.max().max(self.upper.max())
    }

    /// Mean of all scores pooled across both classes.
    pub fn pooled_mean(&self) -> f64 {
        (self.lower.sum() + self.upper.sum()) / self.len() as f64
    }

    /// The inter-class gap `[max(lower), min(upper)]`, or `None` when the
    /// classes overlap (`max(lower) > min(upper)`).
    ///
    /// A touching pair (`max(lower) == min(upper)`) counts as a degenerate,
    /// single-point gap.
    pub fn gap(&self) -> Option<(f64, f64)> {
        let lo = self.lower.max();
        let hi = self.upper.min();
        if lo <= hi {
            Some((lo, hi))
        } else {
            None
        }
    }

    /// Whether the two classes overlap on the score axis.
    pub fn classes_overlap(&self) -> bool {
        self.gap().is_none()
    }
}

/// A per-class partition where either side may still be missing.
///
/// This is the relaxed ingestion result used by rendering, which can draw a
/// single class; analysis operations convert it into a [`LabeledDataset`]
/// and fail when a class has zero samples.
#[derive(Debug, Clone)]
pub struct ClassPartition {
    pub genuine: Option<ClassScores>,
    pub attack: Option<ClassScores>,
    pub polarity: Polarity,
}

impl ClassPartition {
    pub fn into_dataset(self) -> Result<LabeledDataset> {
        let genuine = self.genuine.ok_or_else(|| Error::EmptyClass {
            class: "genuine".into(),
        })?;
        let attack = self.attack.ok_or_else(|| Error::EmptyClass {
            class: "attack".into(),
        })?;
        Ok(LabeledDataset::from_classes(genuine, attack, self.polarity))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::score::sort_scores;

    fn scores(v: &[f64]) -> ClassScores {
        sort_scores(v.to_vec()).unwrap()
    }

    #[test]
    fn semantic_accessors_follow_polarity() {
        let ds = LabeledDataset::from_classes(
            scores(&[0.1, 0.2]),
            scores(&[0.8, 0.9]),
            Polarity::GenuineLow,
        );
        assert_eq!(ds.genuine().as_slice(), &[0.1, 0.2]);
        assert_eq!(ds.attack().as_slice(), &[0.8, 0.9]);
        assert_eq!(ds.lower().as_slice(), &[0.1, 0.2]);

        let ds = LabeledDataset::from_classes(
            scores(&[0.8, 0.9]),
            scores(&[0.1, 0.2]),
            Polarity::GenuineHigh,
        );
        assert_eq!(ds.genuine().as_slice(), &[0.8, 0.9]);
        assert_eq!(ds.lower().as_slice(), &[0.1, 0.2]);
    }

    #[test]
    fn gap_and_overlap() {
        let ds = LabeledDataset::new(
            scores(&[0.1, 0.2]),
            scores(&[0.8, 0.9]),
            Polarity::GenuineLow,
        );
        assert_eq!(ds.gap(), Some((0.2, 0.8)));
        assert!(!ds.classes_overlap());

        let ds = LabeledDataset::new(
            scores(&[0.1, 0.6]),
            scores(&[0.4, 0.9]),
            Polarity::GenuineLow,
        );
        assert_eq!(ds.gap(), None);
        assert!(ds.classes_overlap());

        // touching classes form a single-point gap
        let ds = LabeledDataset::new(
            scores(&[0.1, 0.5]),
            scores(&[0.5, 0.9]),
            Polarity::GenuineLow,
        );
        assert_eq!(ds.gap(), Some((0.5, 0.5)));
    }

    #[test]
    fn pooled_mean_counts_every_score() {
        let ds = LabeledDataset::new(scores(&[0.1, 0.2]), scores(&[0.8]), Polarity::GenuineLow);
        assert!((ds.pooled_mean() - 1.1 / 3.0).abs() < 1e-15);
        assert_eq!(ds.len(), 3);
    }

    #[test]
    fn partition_requires_both_classes() {
        let p = ClassPartition {
            genuine: Some(scores(&[0.1])),
            attack: None,
            polarity: Polarity::GenuineLow,
        };
        assert!(matches!(
            p.into_dataset(),
            Err(Error::EmptyClass { class }) if class == "attack"
        ));
    }
}
