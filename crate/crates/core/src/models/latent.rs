use rand::Rng;
use rand_distr::{Distribution, Gamma, StandardNormal};

use crate::error::{Error, Result};
use crate::geometry::{sample_quasi_uniform_with, validate_quasi};
use crate::geometry::{DiskDomain, PolarPoint, UltrametricTree};
use crate::rng::{replicate_rng, Purpose};

/// Latent positions of all nodes.
#[derive(Debug, Clone, PartialEq)]
pub enum Positions {
    /// Intrinsic polar coordinates on a curved surface.
    Polar(Vec<PolarPoint>),
    /// Leaf indices of an ultrametric tree.
    Leaves(Vec<u64>),
    /// Vectors in `R^t` (normal draws, simplex memberships, one-hot classes).
    Vectors(Vec<Vec<f64>>),
}

impl Positions {
    pub fn len(&self) -> usize {
        match self {
            Positions::Polar(p) => p.len(),
            Positions::Leaves(l) => l.len(),
            Positions::Vectors(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Applies `perm` so that node `v` moves to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Positions {
        fn apply<T: Clone>(xs: &[T], perm: &[usize]) -> Vec<T> {
            let mut out = xs.to_vec();
            for (v, x) in xs.iter().enumerate() {
                out[perm[v]] = x.clone();
            }
            out
        }
        match self {
            Positions::Polar(p) => Positions::Polar(apply(p, perm)),
            Positions::Leaves(l) => Positions::Leaves(apply(l, perm)),
            Positions::Vectors(v) => Positions::Vectors(apply(v, perm)),
        }
    }
}

/// Latent positions plus optional node-level effects.
///
/// `sender` doubles as the sociality effect of undirected models; kernels that
/// need a receiver effect fall back to `sender` when `receiver` is absent.
#[derive(Debug, Clone, PartialEq)]
pub struct LatentConfiguration {
    pub positions: Positions,
    pub sender: Option<Vec<f64>>,
    pub receiver: Option<Vec<f64>>,
}

impl LatentConfiguration {
    pub fn new(positions: Positions) -> Self {
        LatentConfiguration {
            positions,
            sender: None,
            receiver: None,
        }
    }

    pub fn with_sender(mut self, sender: Vec<f64>) -> Self {
        self.sender = Some(sender);
        self
    }

    pub fn with_receiver(mut self, receiver: Vec<f64>) -> Self {
        self.receiver = Some(receiver);
        self
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub(crate) fn sender_effect(&self, i: usize) -> Result<f64> {
        self.sender
            .as_ref()
            .map(|a| a[i])
            .ok_or_else(|| Error::input("kernel requires sender/sociality effects"))
    }

    pub(crate) fn receiver_effect(&self, j: usize) -> Result<f64> {
        match &self.receiver {
            Some(b) => Ok(b[j]),
            None => self.sender_effect(j),
        }
    }

    pub(crate) fn validate_effects(&self) -> Result<()> {
        for (name, eff) in [("sender", &self.sender), ("receiver", &self.receiver)] {
            if let Some(e) = eff {
                if e.len() != self.len() {
                    return Err(Error::input(format!(
                        "{name} effects have length {} but there are {} nodes",
                        e.len(),
                        self.len()
                    )));
                }
                if e.iter().any(|x| !x.is_finite()) {
                    return Err(Error::input(format!("{name} effects must be finite")));
                }
            }
        }
        Ok(())
    }

    pub fn permuted(&self, perm: &[usize]) -> LatentConfiguration {
        let apply = |e: &Option<Vec<f64>>| {
            e.as_ref().map(|xs| {
                let mut out = xs.clone();
                for (v, &x) in xs.iter().enumerate() {
                    out[perm[v]] = x;
                }
                out
            })
        };
        LatentConfiguration {
            positions: self.positions.permuted(perm),
            sender: apply(&self.sender),
            receiver: apply(&self.receiver),
        }
    }
}

/// One isotropic normal component of a mixture.
#[derive(Debug, Clone, PartialEq)]
pub struct MixtureComponent {
    pub weight: f64,
    pub mean: Vec<f64>,
    pub sd: f64,
}

/// Families of latent position distributions.
#[derive(Debug, Clone, PartialEq)]
pub enum LatentDistribution {
    /// `N(0, I_t)`.
    StdNormal { dim: usize },
    /// Finite mixture of isotropic normals; weights must sum to one.
    NormalMixture { components: Vec<MixtureComponent> },
    /// Mixed-membership vectors on the simplex.
    Dirichlet { concentration: Vec<f64> },
    /// Block memberships, `Multinomial_t(1, psi)`.
    OneHot { probabilities: Vec<f64> },
    /// Area-uniform points in a geodesic disk.
    UniformDisk(DiskDomain),
    /// Hyperbolic radii with density `alpha sinh(alpha r) / (cosh(alpha R) - 1)`.
    QuasiUniform { radius: f64, alpha: f64 },
    /// Uniform leaves of an ultrametric tree.
    UniformLeaves(UltrametricTree),
}

fn check_weights(w: &[f64], what: &str) -> Result<()> {
    if w.is_empty() {
        return Err(Error::input(format!("{what} must not be empty")));
    }
    if w.iter().any(|x| !(x.is_finite() && *x >= 0.0)) {
        return Err(Error::input(format!("{what} must be nonnegative")));
    }
    let total: f64 = w.iter().sum();
    if (total - 1.0).abs() > 1e-9 {
        return Err(Error::input(format!("{what} sum to {total}, expected 1")));
    }
    Ok(())
}

fn categorical<R: Rng + ?Sized>(weights: &[f64], rng: &mut R) -> usize {
    let u: f64 = rng.random();
    let mut acc = 0.0;
    for (k, w) in weights.iter().enumerate() {
        acc += w;
        if u < acc {
            return k;
        }
    }
    // rounding in the cumulative sum
    weights.iter().rposition(|w| *w > 0.0).unwrap_or(0)
}

impl LatentDistribution {
    pub fn validate(&self) -> Result<()> {
        match self {
            LatentDistribution::StdNormal { dim } if *dim == 0 => {
                Err(Error::input("dimension must be at least 1"))
            }
            LatentDistribution::NormalMixture { components } => {
                let w: Vec<f64> = components.iter().map(|c| c.weight).collect();
                check_weights(&w, "mixture weights")?;
                let dim = components[0].mean.len();
                if dim == 0 {
                    return Err(Error::input("mixture means must be non-empty"));
                }
                for c in components {
                    if c.mean.len() != dim {
                        return Err(Error::input("mixture means differ in dimension"));
                    }
                    if !(c.sd.is_finite() && c.sd > 0.0) {
                        return Err(Error::input("mixture sd must be positive"));
                    }
                }
                Ok(())
            }
            LatentDistribution::Dirichlet { concentration } => {
                if concentration.len() < 2 {
                    return Err(Error::input("Dirichlet needs at least two components"));
                }
                if concentration.iter().any(|c| !(c.is_finite() && *c > 0.0)) {
                    return Err(Error::input("Dirichlet concentrations must be positive"));
                }
                Ok(())
            }
            LatentDistribution::OneHot { probabilities } => {
                check_weights(probabilities, "class probabilities")
            }
            LatentDistribution::QuasiUniform { radius, alpha } => validate_quasi(*radius, *alpha),
            _ => Ok(()),
        }
    }

    pub fn sample_with<R: Rng + ?Sized>(&self, n: usize, rng: &mut R) -> Result<Positions> {
        self.validate()?;
        let pos = match self {
            LatentDistribution::StdNormal { dim } => Positions::Vectors(
                (0..n)
                    .map(|_| (0..*dim).map(|_| rng.sample(StandardNormal)).collect())
                    .collect(),
            ),
            LatentDistribution::NormalMixture { components } => {
                let w: Vec<f64> = components.iter().map(|c| c.weight).collect();
                Positions::Vectors(
                    (0..n)
                        .map(|_| {
                            let c = &components[categorical(&w, rng)];
                            c.mean
                                .iter()
                                .map(|m| m + c.sd * rng.sample::<f64, _>(StandardNormal))
                                .collect()
                        })
                        .collect(),
                )
            }
            LatentDistribution::Dirichlet { concentration } => {
                let gammas = concentration
                    .iter()
                    .map(|&a| Gamma::new(a, 1.0).map_err(|e| Error::input(e.to_string())))
                    .collect::<Result<Vec<_>>>()?;
                Positions::Vectors(
                    (0..n)
                        .map(|_| {
                            let mut x: Vec<f64> = gammas.iter().map(|g| g.sample(rng)).collect();
                            let total: f64 = x.iter().sum();
                            if total > 0.0 {
                                x.iter_mut().for_each(|v| *v /= total);
                            } else {
                                // every gamma draw underflowed; fall back to the
                                // vertex of the largest concentration
                                let k = concentration
                                    .iter()
                                    .enumerate()
                                    .max_by(|a, b| a.1.total_cmp(b.1))
                                    .map_or(0, |(k, _)| k);
                                x[k] = 1.0;
                            }
                            x
                        })
                        .collect(),
                )
            }
            LatentDistribution::OneHot { probabilities } => Positions::Vectors(
                (0..n)
                    .map(|_| {
                        let mut x = vec![0.0; probabilities.len()];
                        x[categorical(probabilities, rng)] = 1.0;
                        x
                    })
                    .collect(),
            ),
            LatentDistribution::UniformDisk(domain) => Positions::Polar(domain.sample(n, rng)),
            LatentDistribution::QuasiUniform { radius, alpha } => {
                Positions::Polar(sample_quasi_uniform_with(*radius, *alpha, n, rng))
            }
            LatentDistribution::UniformLeaves(tree) => {
                Positions::Leaves((0..n).map(|_| tree.sample_leaf(rng)).collect())
            }
        };
        Ok(pos)
    }
}

/// `n` i.i.d. positions from `dist`, deterministic in `seed`.
pub fn sample_latent_distribution(
    dist: &LatentDistribution,
    n: usize,
    seed: u64,
) -> Result<LatentConfiguration> {
    let mut rng = replicate_rng(seed, Purpose::Positions, 0);
    Ok(LatentConfiguration::new(dist.sample_with(n, &mut rng)?))
}
