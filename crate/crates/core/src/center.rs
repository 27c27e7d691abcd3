//! Center estimators for one class's score distribution.
//!
//! Four candidate definitions of a distribution's representative score:
//! the arithmetic mean, the sample median, and two balance estimators that
//! pick the sample at which the summed (or summed-squared) distances to the
//! scores below equal those to the scores above. The squared variant weights
//! far-away samples more heavily, so hard samples pull the center harder.

use serde::Serialize;

use crate::score::ClassScores;

/// The available center estimators. CLI tokens:
/// `mean | median | balance | weighted-balance`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CenterMethod {
    Mean,
    Median,
    DistanceBalance,
    WeightedDistanceBalance,
}

impl CenterMethod {
    pub const ALL: [CenterMethod; 4] = [
        CenterMethod::Mean,
        CenterMethod::Median,
        CenterMethod::DistanceBalance,
        CenterMethod::WeightedDistanceBalance,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CenterMethod::Mean => "mean",
            CenterMethod::Median => "median",
            CenterMethod::DistanceBalance => "balance",
            CenterMethod::WeightedDistanceBalance => "weighted-balance",
        }
    }

    pub fn compute(self, scores: &ClassScores) -> CenterResult {
        match self {
            CenterMethod::Mean => center_mean(scores),
            CenterMethod::Median => center_median(scores),
            CenterMethod::DistanceBalance => center_distance_balance(scores),
            CenterMethod::WeightedDistanceBalance => center_weighted_balance(scores),
        }
    }
}

impl std::fmt::Display for CenterMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A computed center.
///
/// `selected_index` is the chosen sample index for the balance methods and
/// `None` otherwise. `imbalance` carries the signed residual of the balance
/// equation at the selected sample (left-sum minus right-sum); it is zero
/// for mean and median.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CenterResult {
    pub method: CenterMethod,
    pub value: f64,
    pub selected_index: Option<usize>,
    pub imbalance: f64,
}

/// Arithmetic mean of all scores.
pub fn center_mean(scores: &ClassScores) -> CenterResult {
    CenterResult {
        method: CenterMethod::Mean,
        value: scores.mean(),
        selected_index: None,
        imbalance: 0.0,
    }
}

/// Standard sample median: the middle element for odd n, the mean of the two
/// middle elements for even n.
pub fn center_median(scores: &ClassScores) -> CenterResult {
    let xs = scores.as_slice();
    let n = xs.len();
    let value = if n % 2 == 1 {
        xs[n / 2]
    } else {
        (xs[n / 2 - 1] + xs[n / 2]) / 2.0
    };
    CenterResult {
        method: CenterMethod::Median,
        value,
        selected_index: None,
        imbalance: 0.0,
    }
}

/// Distance-balance center: the sample m minimizing
/// `|sum_{n<m}(x_m - x_n) - sum_{n>m}(x_n - x_m)|`, ties toward the smaller
/// index. Evaluated with prefix sums in O(n) after sorting.
pub fn center_distance_balance(scores: &ClassScores) -> CenterResult {
    let (idx, imbalance) = balance_argmin(scores.as_slice(), false);
    CenterResult {
        method: CenterMethod::DistanceBalance,
        value: scores.as_slice()[idx],
        selected_index: Some(idx),
        imbalance,
    }
}

/// Weighted distance-balance center: same selection with squared distances,
/// `|sum_{n<m}(x_m - x_n)^2 - sum_{n>m}(x_n - x_m)^2|`.
pub fn center_weighted_balance(scores: &ClassScores) -> CenterResult {
    let (idx, imbalance) = balance_argmin(scores.as_slice(), true);
    CenterResult {
        method: CenterMethod::WeightedDistanceBalance,
        value: scores.as_slice()[idx],
        selected_index: Some(idx),
        imbalance,
    }
}

fn balance_argmin(xs: &[f64], squared: bool) -> (usize, f64) {
    let n = xs.len();
    if n == 1 {
        return (0, 0.0);
    }
    if n == 2 {
        // Both samples balance with exactly opposite residuals, so the tie
        // always resolves to the lower one.
        let d = xs[1] - xs[0];
        return (0, if squared { -(d * d) } else { -d });
    }

    // prefix[i] = sum of xs[..i]; prefix_sq likewise for squares
    let mut prefix = vec![0.0f64; n + 1];
    let mut prefix_sq = vec![0.0f64; n + 1];
    for (i, &x) in xs.iter().enumerate() {
        prefix[i + 1] = prefix[i] + x;
        prefix_sq[i + 1] = prefix_sq[i] + x * x;
    }
    let total = prefix[n];
    let total_sq = prefix_sq[n];

    let mut best_idx = 0usize;
    let mut best_abs = f64::INFINITY;
    let mut best_signed = 0.0f64;
    for m in 0..n {
        // Candidates with equal values have identical residuals, so only the
        // first index of each run is evaluated; that keeps the smaller-index
        // tie rule exact instead of leaving it to summation noise.
        if m > 0 && xs[m] == xs[m - 1] {
            continue;
        }
        let x = xs[m];
        let left_n = m as f64;
        let right_n = (n - 1 - m) as f64;
        let signed = if squared {
            let left = left_n * x * x - 2.0 * x * prefix[m] + prefix_sq[m];
            let right =
                (total_sq - prefix_sq[m + 1]) - 2.0 * x * (total - prefix[m + 1]) + right_n * x * x;
            left - right
        } else {
            let left = left_n * x - prefix[m];
            let right = (total - prefix[m + 1]) - right_n * x;
            left - right
        };
        if signed.abs() < best_abs {
            best_abs = signed.abs();
            best_idx = m;
            best_signed = signed;
        }
    }
    (best_idx, best_signed)
}
