use crate::error::{Error, Result};
use crate::geometry::{pairwise_distances, GeometrySpace};
use crate::graph::{pair_rank, Graph};
use crate::rng::PairUniforms;

use super::kernel::{latent_distance, SimilarityKernel};
use super::latent::{LatentConfiguration, Positions};
use super::link::Link;

/// Kernel plus link.
///
/// With `rescale_distances`, distance kernels divide every latent distance by
/// the largest pairwise distance of the configuration, so distances lie in
/// `[0, 1]` and a Heaviside cutoff of 1 yields the complete graph.
#[derive(Debug, Clone, PartialEq)]
pub struct ClsModel {
    pub kernel: SimilarityKernel,
    pub link: Link,
    pub rescale_distances: bool,
}

impl ClsModel {
    pub fn new(kernel: SimilarityKernel, link: Link) -> Self {
        ClsModel {
            kernel,
            link,
            rescale_distances: false,
        }
    }

    /// Latent distance model `logit p = alpha - d` (or another link) on `space`.
    pub fn distance(space: impl Into<GeometrySpace>, link: Link) -> Self {
        Self::new(SimilarityKernel::NegativeDistance(space.into()), link)
    }

    pub fn rescaled(mut self) -> Self {
        self.rescale_distances = true;
        self
    }

    pub fn geometry(&self) -> Option<GeometrySpace> {
        self.kernel.space()
    }

    pub fn validate(&self) -> Result<()> {
        self.link.validate()?;
        if self.rescale_distances && !self.kernel.is_distance() {
            return Err(Error::input("distance rescaling needs a distance kernel"));
        }
        Ok(())
    }

    /// Tie probability for a kernel value; block-model kernels pass through.
    pub fn tie_probability(&self, similarity: f64) -> f64 {
        if self.kernel.bypasses_link() {
            similarity.clamp(0.0, 1.0)
        } else {
            self.link.probability(similarity)
        }
    }

    /// Condensed distances (pair-rank order), rescaled when requested.
    fn distances(&self, config: &LatentConfiguration) -> Option<Vec<f64>> {
        let space = self.kernel.space()?;
        let n = config.len();
        let mut d = match (&space, &config.positions) {
            (GeometrySpace::Curved(g), Positions::Polar(ps)) => pairwise_distances(*g, ps),
            _ => {
                let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
                for i in 0..n {
                    for j in (i + 1)..n {
                        out.push(latent_distance(&space, config, i, j));
                    }
                }
                out
            }
        };
        if self.rescale_distances {
            let max = d.iter().copied().fold(0.0, f64::max);
            if max > 0.0 {
                d.iter_mut().for_each(|x| *x /= max);
            }
        }
        Some(d)
    }

    /// Tie probabilities for all unordered pairs `i < j`, in pair-rank order.
    pub fn pair_probabilities(&self, config: &LatentConfiguration) -> Result<Vec<f64>> {
        self.validate()?;
        self.kernel.validate(config)?;
        let n = config.len();
        let dist = self.distances(config);
        let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        let mut k = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                let s = self.kernel.similarity_with_distance(config, i, j, || {
                    dist.as_ref().map_or(f64::NAN, |d| d[k])
                })?;
                out.push(self.tie_probability(s));
                k += 1;
            }
        }
        Ok(out)
    }
}

/// Draws a graph with independent `Bernoulli(p_ij)` ties.
///
/// Pair `k` (pair-rank order; ordered-pair rank for directed output) uses the
/// `k`-th uniform of the `(seed, stream)` tie stream, so two models run on the
/// same seed and positions share their randomness and produce nested edge sets
/// whenever their probabilities are ordered.
pub fn generate_cls(
    model: &ClsModel,
    config: &LatentConfiguration,
    seed: u64,
    stream: u64,
    directed: bool,
) -> Result<Graph> {
    let n = config.len();
    if n < 2 {
        return Err(Error::input("need at least two nodes"));
    }
    let uniforms = PairUniforms::new(seed, stream);
    if !directed {
        let probs = model.pair_probabilities(config)?;
        let mut edges = Vec::new();
        let mut k = 0;
        let mut u = uniforms.sequential();
        for i in 0..n {
            for j in (i + 1)..n {
                if u.next().unwrap_or(1.0) < probs[k] {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        return Ok(Graph::from_canonical(n, edges, false));
    }

    if !model.kernel.is_asymmetric() {
        return Err(Error::input(
            "directed output needs an asymmetric kernel (projection, bilinear, distance-with-effects)",
        ));
    }
    model.validate()?;
    model.kernel.validate(config)?;
    let dist = model.distances(config);
    let mut edges = Vec::new();
    let mut u = uniforms.sequential();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let s = model.kernel.similarity_with_distance(config, i, j, || {
                let (a, b) = if i < j { (i, j) } else { (j, i) };
                dist.as_ref().map_or(f64::NAN, |d| d[pair_rank(n, a, b)])
            })?;
            if u.next().unwrap_or(1.0) < model.tie_probability(s) {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::from_canonical(n, edges, true))
}

/// Deterministic threshold graph: `i ~ j` iff `distances[rank(i, j)] <= gamma_cut`.
pub fn heaviside_graph(n: usize, distances: &[f64], gamma_cut: f64) -> Result<Graph> {
    if distances.len() != n * n.saturating_sub(1) / 2 {
        return Err(Error::input("distance vector length does not match n"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            if gamma_cut - distances[k] >= 0.0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_canonical(n, edges, false))
}
