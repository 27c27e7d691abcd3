//! Brute-force oracles and seeded instance generators.
//!
//! Everything here recomputes results by the most direct definition
//! available - double loops, pairwise counting, bisection - so the main
//! crate's prefix-sum / closed-form / sweep implementations can be checked
//! against an independent route. Nothing in this crate calls the
//! implementation paths it is used to verify.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

/// Seeded generator for reproducible test instances.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Draw a score vector from a randomly chosen distribution family.
///
/// Mixes uniform, Gaussian-ish, exponential-ish, and bimodal shapes, and
/// sometimes quantizes onto a coarse grid so duplicate values and threshold
/// ties get exercised.
pub fn random_scores(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    let flavor = rng.random_range(0..4u32);
    let quantize = rng.random_bool(0.25);
    let offset: f64 = rng.random_range(-2.0..2.0);
    let scale: f64 = rng.random_range(0.05..3.0);
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let u: f64 = rng.random();
        let v = match flavor {
            0 => u,
            1 => {
                // sum of uniforms, roughly Gaussian
                let s: f64 = (0..6).map(|_| rng.random::<f64>()).sum();
                s / 6.0
            }
            2 => -(1.0 - u).ln() / 3.0,
            _ => {
                if rng.random_bool(0.5) {
                    0.25 + 0.1 * u
                } else {
                    0.75 + 0.1 * u
                }
            }
        };
        let mut x = offset + scale * v;
        if quantize {
            x = (x * 16.0).round() / 16.0;
        }
        out.push(x);
    }
    out
}

/// O(n^2) argmin oracle for the balance centers.
///
/// Evaluates the left/right distance sums by direct summation at every
/// candidate index and returns `(index, value, signed_residual)` with ties
/// broken toward the smaller index. `squared` switches to squared distances.
pub fn balance_argmin_oracle(sorted: &[f64], squared: bool) -> (usize, f64, f64) {
    assert!(!sorted.is_empty());
    let mut best = (0usize, sorted[0], f64::INFINITY, 0.0f64);
    for m in 0..sorted.len() {
        let x = sorted[m];
        let mut left = 0.0;
        for &v in &sorted[..m] {
            let d = x - v;
            left += if squared { d * d } else { d };
        }
        let mut right = 0.0;
        for &v in &sorted[m + 1..] {
            let d = v - x;
            right += if squared { d * d } else { d };
        }
        let signed = left - right;
        if signed.abs() < best.2 {
            best = (m, x, signed.abs(), signed);
        }
    }
    (best.0, best.1, best.3)
}

/// Pairwise-comparison (rank-sum) AUC estimator.
///
/// Counts over every (genuine, attack) pair whether the attack score falls
/// on the attack side of the genuine score, crediting half for exact ties.
/// `attack_high` states which side of the axis attacks occupy.
pub fn pairwise_auc(genuine: &[f64], attack: &[f64], attack_high: bool) -> f64 {
    let mut credit = 0.0f64;
    for &g in genuine {
        for &a in attack {
            let ordered = if attack_high { a > g } else { a < g };
            if ordered {
                credit += 1.0;
            } else if a == g {
                credit += 0.5;
            }
        }
    }
    credit / (genuine.len() as f64 * attack.len() as f64)
}

/// Numerical circle-intersection oracle.
///
/// Solves the two circle equations `(x-c)^2 + y^2 = r^2` by bisecting their
/// difference (which is monotone in x) and returns the chord's axis
/// coordinate, or `None` when no real intersection exists.
pub fn circle_intersection_oracle(c_low: f64, r_low: f64, c_high: f64, r_high: f64) -> Option<f64> {
    let d = c_high - c_low;
    if d <= 0.0 {
        return None;
    }
    let h = |x: f64| {
        (r_low * r_low - (x - c_low) * (x - c_low))
            - (r_high * r_high - (x - c_high) * (x - c_high))
    };
    let pad = r_low + r_high + d + 1.0;
    let mut lo = c_low - pad;
    let mut hi = c_high + pad;
    let (f_lo, f_hi) = (h(lo), h(hi));
    if f_lo == 0.0 && f_hi == 0.0 {
        return None; // identical circles
    }
    if f_lo.signum() == f_hi.signum() {
        return None;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let f_mid = h(mid);
        if f_mid == 0.0 {
            lo = mid;
            hi = mid;
            break;
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let x = 0.5 * (lo + hi);
    // require a real chord: y^2 >= 0 on both circles
    let y2 = r_low * r_low - (x - c_low) * (x - c_low);
    if y2 < -1e-12 {
        return None;
    }
    Some(x)
}

/// Exact error-imbalance at a threshold, by direct strict counting.
///
/// Returns `|#(lower > t) * m - #(upper < t) * n|` as an integer so
/// candidate comparisons are exact.
pub fn strict_imbalance(lower: &[f64], upper: &[f64], t: f64) -> i128 {
    let a = lower.iter().filter(|&&x| x > t).count() as i128;
    let b = upper.iter().filter(|&&x| x < t).count() as i128;
    let n = lower.len() as i128;
    let m = upper.len() as i128;
    (a * m - b * n).abs()
}

/// Exhaustive sweep oracle: the minimum imbalance over every sample value,
/// every midpoint between adjacent distinct pooled values, and one candidate
/// beyond each extreme.
pub fn acer_sweep_oracle(lower: &[f64], upper: &[f64]) -> i128 {
    let mut values: Vec<f64> = lower.iter().chain(upper.iter()).copied().collect();
    values.sort_by(|a, b| a.total_cmp(b));
    values.dedup();
    let mut candidates = vec![values[0] - 1.0, values[values.len() - 1] + 1.0];
    candidates.extend(values.iter().copied());
    for w in values.windows(2) {
        candidates.push((w[0] + w[1]) / 2.0);
    }
    candidates
        .into_iter()
        .map(|t| strict_imbalance(lower, upper, t))
        .min()
        .expect("non-empty candidate list")
}
