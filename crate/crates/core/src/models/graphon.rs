use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::{replicate_rng, PairUniforms, Purpose};

/// Probes used to check symmetry of a graphon before sampling.
const SYMMETRY_PROBES: usize = 256;
const SYMMETRY_TOL: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct GraphonSample {
    pub graph: Graph,
    /// Latent coordinates `z_i ~ Uniform(0, 1)`.
    pub positions: Vec<f64>,
}

fn check_value(w: f64, u: f64, v: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&w) {
        return Err(Error::input(format!(
            "graphon value W({u}, {v}) = {w} outside [0, 1]"
        )));
    }
    Ok(())
}

/// Samples `z_i ~ U(0,1)` and ties `Bernoulli(W(z_i, z_j))`.
pub fn sample_graphon<W>(w: W, n: usize, seed: u64) -> Result<GraphonSample>
where
    W: Fn(f64, f64) -> f64,
{
    if n < 1 {
        return Err(Error::input("need at least one node"));
    }
    let mut probe = replicate_rng(seed, Purpose::Probe, 0);
    for _ in 0..SYMMETRY_PROBES {
        let (u, v): (f64, f64) = (probe.random(), probe.random());
        let (a, b) = (w(u, v), w(v, u));
        check_value(a, u, v)?;
        if (a - b).abs() > SYMMETRY_TOL {
            return Err(Error::input(format!(
                "graphon is not symmetric: W({u}, {v}) = {a} but W({v}, {u}) = {b}"
            )));
        }
    }
    let mut rng = replicate_rng(seed, Purpose::Positions, 0);
    let positions: Vec<f64> = (0..n).map(|_| rng.random()).collect();
    let mut uniforms = PairUniforms::new(seed, 0).sequential();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let p = w(positions[i], positions[j]);
            check_value(p, positions[i], positions[j])?;
            if uniforms.next().unwrap_or(1.0) < p {
                edges.push((i, j));
            }
        }
    }
    Ok(GraphonSample {
        graph: Graph::from_canonical(n, edges, false),
        positions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_graphon_is_erdos_renyi() {
        let (n, p) = (200usize, 0.1);
        let pairs = (n * (n - 1) / 2) as f64;
        let sd = (p * (1.0 - p) / pairs).sqrt();
        for seed in 0..5 {
            let g = sample_graphon(|_, _| p, n, seed).unwrap().graph;
            assert!((g.density() - p).abs() < 3.0 * sd, "{}", g.density());
        }
    }

    #[test]
    fn product_graphon_density() {
        // ∫∫ uv du dv = 1/4
        let mut total = 0.0;
        for seed in 0..20 {
            total += sample_graphon(|u, v| u * v, 150, seed)
                .unwrap()
                .graph
                .density();
        }
        assert!((total / 20.0 - 0.25).abs() < 0.02);
    }

    #[test]
    fn asymmetric_rejected() {
        assert!(sample_graphon(|u, _| u, 10, 1).is_err());
        assert!(sample_graphon(|_, _| 1.5, 10, 1).is_err());
    }
}
