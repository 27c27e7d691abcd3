//! Validated score vectors: the base type everything else computes on.

use serde::Serialize;

use crate::error::{Error, Result};

/// An ascending-sorted, non-empty vector of finite prediction scores for one class.
///
/// Sorting and validation happen once at construction; every downstream
/// computation may assume `scores[i] <= scores[i+1]`, `n >= 1`, and all
/// values finite. Duplicate scores are kept (multiset semantics).
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct ClassScores {
    scores: Vec<f64>,
}

impl ClassScores {
    /// Validate and sort a raw score vector.
    pub fn new(raw: Vec<f64>) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyScores);
        }
        for (index, v) in raw.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::NonFiniteValue { index });
            }
        }
        let mut scores = raw;
        // stable sort; equal values keep their input order
        scores.sort_by(|a, b| a.total_cmp(b));
        Ok(Self { scores })
    }

    pub fn n(&self) -> usize {
        self.scores.len()
    }

    pub fn min(&self) -> f64 {
        self.scores[0]
    }

    pub fn max(&self) -> f64 {
        self.scores[self.scores.len() - 1]
    }

    pub fn sum(&self) -> f64 {
        self.scores.iter().sum()
    }

    pub fn mean(&self) -> f64 {
        self.sum() / self.n() as f64
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.scores
    }

    pub fn iter(&self) -> std::slice::Iter<'_, f64> {
        self.scores.iter()
    }

    /// Number of scores strictly below `t`.
    pub fn count_below(&self, t: f64) -> usize {
        self.scores.partition_point(|&x| x < t)
    }

    /// Number of scores at or below `t`.
    pub fn count_at_or_below(&self, t: f64) -> usize {
        self.scores.partition_point(|&x| x <= t)
    }

    /// Number of scores strictly above `t`.
    pub fn count_above(&self, t: f64) -> usize {
        self.n() - self.count_at_or_below(t)
    }

    /// Number of scores at or above `t`.
    pub fn count_at_or_above(&self, t: f64) -> usize {
        self.n() - self.count_below(t)
    }
}

/// Sort a raw score vector ascending, validating it on the way in.
///
/// This is the single entry point for turning unordered model output into a
/// [`ClassScores`]; identical to [`ClassScores::new`].
pub fn sort_scores(raw: Vec<f64>) -> Result<ClassScores> {
    ClassScores::new(raw)
}
