//! Percentile bootstrap for a difference of means.

use rand::Rng;

use crate::error::{Error, Result};
use crate::rng::{replicate_rng, Purpose};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BootstrapInterval {
    pub estimate: f64,
    pub lower: f64,
    pub upper: f64,
}

impl BootstrapInterval {
    pub fn excludes_zero(&self) -> bool {
        self.lower > 0.0 || self.upper < 0.0
    }
}

fn mean(x: &[f64]) -> f64 {
    x.iter().sum::<f64>() / x.len() as f64
}

/// Percentile interval for `mean(a) - mean(b)` at level `level`, resampling
/// both groups independently `resamples` times.
pub fn bootstrap_mean_difference(
    a: &[f64],
    b: &[f64],
    resamples: usize,
    level: f64,
    seed: u64,
) -> Result<BootstrapInterval> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::input("bootstrap needs two non-empty samples"));
    }
    if resamples < 2 || !(level > 0.0 && level < 1.0) {
        return Err(Error::input(
            "bootstrap needs >= 2 resamples and level in (0, 1)",
        ));
    }
    let mut rng = replicate_rng(seed, Purpose::Bootstrap, 0);
    let mut draw = |x: &[f64]| -> f64 {
        (0..x.len())
            .map(|_| x[rng.random_range(0..x.len())])
            .sum::<f64>()
            / x.len() as f64
    };
    let mut diffs: Vec<f64> = (0..resamples).map(|_| draw(a) - draw(b)).collect();
    diffs.sort_by(f64::total_cmp);
    let tail = (1.0 - level) / 2.0;
    let pick = |q: f64| diffs[((q * (resamples - 1) as f64).round() as usize).min(resamples - 1)];
    Ok(BootstrapInterval {
        estimate: mean(a) - mean(b),
        lower: pick(tail),
        upper: pick(1.0 - tail),
    })
}
