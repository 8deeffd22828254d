//! Continuous latent space models: kernels, links, latent distributions and
//! generators.
//!
//! A model is `logit(p_ij) = alpha + s(z_i, z_j)` (or one of the alternative
//! links in [`Link`]) with ties `Y_ij ~ Bernoulli(p_ij)` independent given the
//! latent positions.

mod generate;
mod graphon;
mod kernel;
mod krioukov;
mod latent;
mod link;

pub use generate::{generate_cls, heaviside_graph, ClsModel};
pub use graphon::{sample_graphon, GraphonSample};
pub use kernel::{evaluate_kernel, Matrix, SimilarityKernel};
pub use krioukov::{
    generate_krioukov, solve_krioukov_radius, KrioukovGraph, KrioukovParams, RadiusSolution,
};
pub use latent::{
    sample_latent_distribution, LatentConfiguration, LatentDistribution, MixtureComponent,
    Positions,
};
pub use link::{logistic, Link};
