//! Analysis of binary-classifier prediction-score distributions.
//!
//! The library models each class's scores as a 1-D domain with a center,
//! radius, asymmetry ratio, and density; selects deployment thresholds by
//! several competing strategies (class borders, error-balance plateau,
//! distance-balance point, domain-circle cross point); evaluates any
//! threshold with APCER/BPCER/ACER and ROC/AUC; and renders the domains as
//! deterministic SVG diagrams. A seeded Gaussian generator backs synthetic
//! studies and reproducible tests.
//!
//! Everything here is pure and deterministic: identical inputs produce
//! identical outputs, bit for bit, including the SVG byte stream.

pub mod center;
pub mod dataset;
pub mod error;
pub mod geometry;
pub mod io;
pub mod metrics;
pub mod report;
pub mod score;
pub mod svg;
pub mod synth;
pub mod threshold;

pub use center::{
    center_distance_balance, center_mean, center_median, center_weighted_balance, CenterMethod,
    CenterResult,
};
pub use dataset::{ClassPartition, LabeledDataset, Polarity, ScoreRecord};
pub use error::{Error, Result};
pub use geometry::{
    compare_domains, density, normalize, radius, summarize_domain, ComparisonRow, DomainSummary,
    Normalize,
};
pub use io::{ingest, ingest_partition, write_csv, write_json, InputFormat, LabelMap};
pub use metrics::{
    evaluate_threshold, roc_sweep, RocCurve, RocPoint, ThresholdEvaluation, TieRule,
};
pub use score::{sort_scores, ClassScores};
pub use svg::{
    render, render_comparison, ClassStyle, DomainLayer, LineStyle, RenderSpec, ThresholdLayer,
};
pub use synth::{generate, SplitMix64, SynthSpec};
pub use threshold::{
    candidate_set, threshold_acer, threshold_balance, threshold_borders, threshold_cross,
    threshold_report, AcerPlateau, Borders, CandidateNote, CandidateSet, ReportRow,
    ThresholdCandidate, ThresholdReport, ThresholdStrategy,
};
