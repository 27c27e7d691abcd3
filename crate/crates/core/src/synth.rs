//! Seeded synthetic score generation.
//!
//! Determinism contract: identical [`SynthSpec`] values produce bitwise
//! identical output, on every platform. To keep that promise the generator
//! pins both the PRNG and the Gaussian transform instead of going through a
//! random-crate abstraction whose stream may change between releases:
//!
//! * PRNG: SplitMix64 over the seed — `state += 0x9E3779B97F4A7C15`, mixed
//!   with `0xBF58476D1CE4E5B9` / `0x94D049BB133111EB` and xor-shifts 30/27/31.
//! * Uniforms: `u1` maps the top 53 bits onto `(0, 1]` (so `ln` is safe),
//!   `u2` maps onto `[0, 1)`.
//! * Gaussian: Box-Muller — `r = sqrt(-2 ln u1)`,
//!   `z0 = r cos(2 pi u2)`, `z1 = r sin(2 pi u2)`; both pair members are
//!   consumed before drawing again.
//!
//! Optional clamping saturates into the interval (the sample count stays
//! exact; nothing is rejected or redrawn).

use crate::error::{Error, Result};
use crate::score::ClassScores;

/// A deterministic 64-bit PRNG (SplitMix64).
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform on `(0, 1]`.
    fn next_open01(&mut self) -> f64 {
        ((self.next_u64() >> 11) + 1) as f64 / (1u64 << 53) as f64
    }

    /// Uniform on `[0, 1)`.
    fn next_halfopen01(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }
}

/// Parameters of one synthetic sample.
#[derive(Debug, Clone, PartialEq)]
pub struct SynthSpec {
    pub n: usize,
    pub mean: f64,
    pub std_dev: f64,
    pub seed: u64,
    /// Saturating clamp interval, applied after the draw.
    pub clamp: Option<(f64, f64)>,
}

impl SynthSpec {
    fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidSynthSpec {
                reason: "n must be at least 1".into(),
            });
        }
        if !self.mean.is_finite() {
            return Err(Error::InvalidSynthSpec {
                reason: "mean must be finite".into(),
            });
        }
        if !self.std_dev.is_finite() || self.std_dev < 0.0 {
            return Err(Error::InvalidSynthSpec {
                reason: "std_dev must be finite and non-negative".into(),
            });
        }
        if let Some((lo, hi)) = self.clamp {
            if !(lo.is_finite() && hi.is_finite()) || lo > hi {
                return Err(Error::InvalidSynthSpec {
                    reason: format!("clamp interval [{lo}, {hi}] is not a valid interval"),
                });
            }
        }
        Ok(())
    }
}

/// Draw `n` Gaussian scores per the spec, clamp, sort.
pub fn generate(spec: &SynthSpec) -> Result<ClassScores> {
    spec.validate()?;
    let mut rng = SplitMix64::new(spec.seed);
    let mut out = Vec::with_capacity(spec.n);
    while out.len() < spec.n {
        let u1 = rng.next_open01();
        let u2 = rng.next_halfopen01();
        let r = (-2.0 * u1.ln()).sqrt();
        let angle = 2.0 * std::f64::consts::PI * u2;
        for z in [r * angle.cos(), r * angle.sin()] {
            if out.len() == spec.n {
                break;
            }
            let mut v = spec.mean + spec.std_dev * z;
            if let Some((lo, hi)) = spec.clamp {
                v = v.clamp(lo, hi);
            }
            out.push(v);
        }
    }
    ClassScores::new(out)
}
