//! Shared fixtures for the pipeline benchmarks.

use scorelab::dataset::{LabeledDataset, Polarity};
use scorelab::score::ClassScores;
use scorelab::synth::{generate, SynthSpec};

/// A deterministic Gaussian score vector.
pub fn gaussian_scores(n: usize, mean: f64, seed: u64) -> ClassScores {
    generate(&SynthSpec {
        n,
        mean,
        std_dev: 0.1,
        seed,
        clamp: None,
    })
    .expect("valid spec")
}

/// A deterministic two-class dataset with overlapping tails.
pub fn gaussian_dataset(per_class: usize, seed: u64) -> LabeledDataset {
    LabeledDataset::new(
        gaussian_scores(per_class, 0.4, seed),
        gaussian_scores(per_class, 0.6, seed ^ 0xDEAD_BEEF),
        Polarity::GenuineLow,
    )
}
