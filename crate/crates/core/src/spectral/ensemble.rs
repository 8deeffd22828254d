//! Simulated Laplacian-spectrum envelopes per geometry and the nearest-mean
//! geometry score.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{eigenvalues, EigenCurve};
use crate::error::{Error, Result};
use crate::geometry::{DiskDomain, Geometry};
use crate::graph::Graph;
use crate::models::{generate_cls, ClsModel, LatentConfiguration, Link, Positions};
use crate::rng::{replicate_rng, Purpose};

/// Per-rank summary of the spectra of `reps` simulated graphs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeometryEnsemble {
    pub geometry: Geometry,
    pub n: usize,
    pub reps: usize,
    pub radius: f64,
    pub mean: Vec<f64>,
    pub min: Vec<f64>,
    pub max: Vec<f64>,
}

fn geometry_code(g: Geometry) -> u64 {
    match g {
        Geometry::Euclidean => 0,
        Geometry::Spherical => 1,
        Geometry::Hyperbolic => 2,
    }
}

/// Replicate `index` of the ensemble model: uniform positions in the disk of
/// radius `radius`, ties with probability `1 / (1 + exp(d))`.
pub fn ensemble_member(
    geometry: Geometry,
    n: usize,
    radius: f64,
    seed: u64,
    index: u64,
) -> Result<Graph> {
    let domain = DiskDomain::new(geometry, radius)?;
    let stream = (geometry_code(geometry) << 40) | index;
    let mut rng = replicate_rng(seed, Purpose::Positions, stream);
    let config = LatentConfiguration::new(Positions::Polar(domain.sample(n, &mut rng)));
    let model = ClsModel::distance(geometry, Link::Logit { alpha: 0.0 });
    generate_cls(&model, &config, seed, stream, false)
}

pub fn build_ensemble(
    geometry: Geometry,
    n: usize,
    reps: usize,
    radius: f64,
    seed: u64,
) -> Result<GeometryEnsemble> {
    if reps < 2 {
        return Err(Error::input(format!(
            "an ensemble needs reps >= 2, got {reps}"
        )));
    }
    if n < 2 {
        return Err(Error::input(format!("an ensemble needs n >= 2, got {n}")));
    }
    DiskDomain::new(geometry, radius)?;
    let curves: Vec<EigenCurve> = (0..reps as u64)
        .into_par_iter()
        .map(|rep| eigenvalues(&ensemble_member(geometry, n, radius, seed, rep)?))
        .collect::<Result<_>>()?;
    let mut mean = vec![0.0; n];
    let mut min = vec![f64::INFINITY; n];
    let mut max = vec![f64::NEG_INFINITY; n];
    for c in &curves {
        for (k, &v) in c.values.iter().enumerate() {
            mean[k] += v;
            min[k] = min[k].min(v);
            max[k] = max[k].max(v);
        }
    }
    for k in 0..n {
        mean[k] = (mean[k] / reps as f64).clamp(min[k], max[k]);
    }
    Ok(GeometryEnsemble {
        geometry,
        n,
        reps,
        radius,
        mean,
        min,
        max,
    })
}

/// RMS distance of an observed curve to each ensemble mean.
#[derive(Debug, Clone, PartialEq)]
pub struct GeometryScores {
    pub scores: Vec<(Geometry, f64)>,
    /// All geometries attaining the minimal score.
    pub best: Vec<Geometry>,
}

impl GeometryScores {
    /// Minimizing geometries joined by `,`.
    pub fn label(&self) -> String {
        self.best
            .iter()
            .map(|g| g.name())
            .collect::<Vec<_>>()
            .join(",")
    }
}

pub fn geometry_score(
    curve: &EigenCurve,
    ensembles: &[GeometryEnsemble],
) -> Result<GeometryScores> {
    if ensembles.is_empty() {
        return Err(Error::input("no ensembles to compare against"));
    }
    let mut scores = Vec::with_capacity(ensembles.len());
    for e in ensembles {
        if e.n != curve.len() {
            return Err(Error::input(format!(
                "curve has {} values but the {} ensemble has n = {}",
                curve.len(),
                e.geometry,
                e.n
            )));
        }
        let ss: f64 = curve
            .values
            .iter()
            .zip(&e.mean)
            .map(|(a, b)| (a - b) * (a - b))
            .sum();
        scores.push((e.geometry, (ss / e.n as f64).sqrt()));
    }
    let low = scores.iter().map(|s| s.1).fold(f64::INFINITY, f64::min);
    let best = scores.iter().filter(|s| s.1 <= low).map(|s| s.0).collect();
    Ok(GeometryScores { scores, best })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn ensemble_shape_and_determinism() {
        let e = build_ensemble(Geometry::Hyperbolic, 15, 6, PI, 4).unwrap();
        assert_eq!(e.mean.len(), 15);
        for k in 0..15 {
            assert!(e.min[k] <= e.mean[k] && e.mean[k] <= e.max[k]);
        }
        assert!(e.mean[14].abs() < 1e-6);
        assert_eq!(
            e,
            build_ensemble(Geometry::Hyperbolic, 15, 6, PI, 4).unwrap()
        );
        assert!(build_ensemble(Geometry::Euclidean, 15, 1, PI, 4).is_err());
    }

    #[test]
    fn score_zero_on_own_mean_and_ties() {
        let a = build_ensemble(Geometry::Euclidean, 10, 4, PI, 1).unwrap();
        let b = build_ensemble(Geometry::Spherical, 10, 4, PI, 1).unwrap();
        let curve = EigenCurve::new(a.mean.clone());
        let s = geometry_score(&curve, &[a.clone(), b]).unwrap();
        assert_eq!(s.scores[0].1, 0.0);
        assert_eq!(s.label(), "euclidean");
        let mut twin = a.clone();
        twin.geometry = Geometry::Hyperbolic;
        let s = geometry_score(&curve, &[a.clone(), twin]).unwrap();
        assert_eq!(s.label(), "euclidean,hyperbolic");
        let short = EigenCurve::new(vec![1.0, 0.0]);
        assert!(geometry_score(&short, &[a]).is_err());
    }
}
