//! Laplacian spectra and same-size ensemble comparison.
//!
//! The Laplacian is the unnormalized `D - A`. Spectra are computed densely,
//! so graphs above [`DEFAULT_DENSE_CAP`] nodes are refused.

mod eigen;
mod ensemble;

pub use eigen::symmetric_eigenvalues;
pub use ensemble::{
    build_ensemble, ensemble_member, geometry_score, GeometryEnsemble, GeometryScores,
};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest graph accepted by [`eigenvalues`].
pub const DEFAULT_DENSE_CAP: usize = 5000;

/// Dense row-major `D - A`.
#[derive(Debug, Clone, PartialEq)]
pub struct Laplacian {
    n: usize,
    data: Vec<f64>,
}

impl Laplacian {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    /// `L x`.
    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        self.data
            .chunks_exact(self.n.max(1))
            .take(self.n)
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }
}

pub fn laplacian(g: &Graph) -> Result<Laplacian> {
    g.require_undirected("the Laplacian")?;
    let n = g.node_count();
    let mut data = vec![0.0; n * n];
    for &(u, v) in g.edges() {
        data[u * n + v] = -1.0;
        data[v * n + u] = -1.0;
        data[u * n + u] += 1.0;
        data[v * n + v] += 1.0;
    }
    Ok(Laplacian { n, data })
}

/// Laplacian eigenvalues sorted in decreasing order (rank 1 is the largest).
#[derive(Debug, Clone, PartialEq)]
pub struct EigenCurve {
    pub values: Vec<f64>,
}

impl EigenCurve {
    /// Curve from eigenvalues in any order.
    pub fn new(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        EigenCurve { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Threshold below which an eigenvalue counts as zero.
    pub fn zero_tolerance(&self) -> f64 {
        1e-6 * self.values.first().copied().unwrap_or(0.0).max(1.0)
    }

    /// Multiplicity of the eigenvalue 0, i.e. the number of components.
    pub fn zero_multiplicity(&self) -> usize {
        let tol = self.zero_tolerance();
        self.values.iter().filter(|&&v| v.abs() <= tol).count()
    }

    /// Second-smallest eigenvalue; `None` below two nodes.
    pub fn algebraic_connectivity(&self) -> Option<f64> {
        let n = self.values.len();
        (n >= 2).then(|| self.values[n - 2])
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }
}

/// Full Laplacian spectrum, refusing graphs above [`DEFAULT_DENSE_CAP`] nodes.
pub fn eigenvalues(g: &Graph) -> Result<EigenCurve> {
    eigenvalues_with_cap(g, DEFAULT_DENSE_CAP)
}

pub fn eigenvalues_with_cap(g: &Graph, cap: usize) -> Result<EigenCurve> {
    g.require_undirected("the Laplacian spectrum")?;
    let n = g.node_count();
    if n > cap {
        return Err(Error::Resource(format!(
            "graph has {n} nodes, above the dense eigensolver cap of {cap}; subsample the network first"
        )));
    }
    let l = laplacian(g)?;
    Ok(EigenCurve::new(symmetric_eigenvalues(l.data, n)?))
}
