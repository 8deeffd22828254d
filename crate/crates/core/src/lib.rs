//! Continuous latent space network models.
//!
//! Nodes sit at latent positions in a Euclidean, spherical, hyperbolic or
//! ultrametric space and ties are drawn independently given those positions.
//! The crate covers the whole loop around such models:
//!
//! - [`geometry`]: distances, disk sampling, curvature helpers and the
//!   hyperboloid / Poincaré charts.
//! - [`models`]: similarity kernels, link functions, latent distributions and
//!   graph generators (distance models, the Fermi-Dirac hyperbolic model with a
//!   quadrature-solved disk radius, graphons, block models).
//! - [`baselines`]: Erdős–Rényi, Barabási–Albert, Watts–Strogatz and ring lattices.
//! - [`graph`]: the canonical simple-graph type and traversal primitives.
//! - [`stats`]: transitivity, path length, Freeman centralizations,
//!   Girvan–Newman modularity and the cutoff sweep driver.
//! - [`spectral`]: Laplacian eigenvalue curves, simulated geometry ensembles
//!   and the nearest-ensemble geometry score.
//! - [`io`]: edge lists, bundled fixtures, CSV / JSON emitters and run manifests.
//! - [`cli`]: the `clsnet` command line.
//!
//! Every generator is deterministic in its seed; replicate `k` of an ensemble
//! draws from its own ChaCha stream (see [`rng`]), so parallel runs are
//! bit-reproducible.

pub mod baselines;
pub mod cli;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod io;
pub mod models;
pub mod rng;
pub mod spectral;
pub mod stats;

pub use error::{Error, Result};
pub use geometry::{DiskDomain, Geometry, GeometrySpace, PolarPoint, UltrametricTree};
pub use graph::Graph;
