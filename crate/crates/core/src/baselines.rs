//! Classical random graph generators used as non-latent reference models.

use std::collections::BTreeSet;

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::{replicate_rng, Purpose};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BaselineKind {
    /// Independent ties with probability `p`.
    ErdosRenyi { p: f64 },
    /// Preferential attachment, `m` edges per arriving node, seeded with `K_{m+1}`.
    BarabasiAlbert { m: usize },
    /// Ring lattice with `k` neighbours per side, each edge rewired with probability `beta`.
    WattsStrogatz { k: usize, beta: f64 },
    /// Ring lattice with `k` neighbours per side.
    Lattice { k: usize },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BaselineSpec {
    pub kind: BaselineKind,
    pub n: usize,
}

impl BaselineSpec {
    pub fn new(kind: BaselineKind, n: usize) -> Self {
        BaselineSpec { kind, n }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        match self.kind {
            BaselineKind::ErdosRenyi { p } => {
                if !(0.0..=1.0).contains(&p) {
                    return Err(Error::input(format!("tie probability {p} outside [0, 1]")));
                }
                if n < 1 {
                    return Err(Error::input("need at least one node"));
                }
            }
            BaselineKind::BarabasiAlbert { m } => {
                if m < 1 {
                    return Err(Error::input("m must be at least 1"));
                }
                if n <= m {
                    return Err(Error::input(format!("need n > m, got n={n}, m={m}")));
                }
            }
            BaselineKind::WattsStrogatz { k, beta } => {
                if !(0.0..=1.0).contains(&beta) {
                    return Err(Error::input(format!(
                        "rewiring probability {beta} outside [0, 1]"
                    )));
                }
                check_ring(n, k)?;
            }
            BaselineKind::Lattice { k } => check_ring(n, k)?,
        }
        Ok(())
    }

    /// Draws replicate `replicate` of the model.
    pub fn generate(&self, seed: u64, replicate: u64) -> Result<Graph> {
        self.validate()?;
        let mut rng = replicate_rng(seed, Purpose::Generator, replicate);
        let g = match self.kind {
            BaselineKind::ErdosRenyi { p } => erdos_renyi(self.n, p, &mut rng),
            BaselineKind::BarabasiAlbert { m } => barabasi_albert(self.n, m, &mut rng),
            BaselineKind::WattsStrogatz { k, beta } => watts_strogatz(self.n, k, beta, &mut rng),
            BaselineKind::Lattice { k } => watts_strogatz(self.n, k, 0.0, &mut rng),
        };
        Ok(g)
    }
}

fn check_ring(n: usize, k: usize) -> Result<()> {
    if k < 1 {
        return Err(Error::input("k must be at least 1"));
    }
    if n <= 2 * k {
        return Err(Error::input(format!(
            "ring lattice needs n > 2k, got n={n}, k={k}"
        )));
    }
    Ok(())
}

pub fn generate_baseline(spec: &BaselineSpec, seed: u64) -> Result<Graph> {
    spec.generate(seed, 0)
}

fn erdos_renyi<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.random::<f64>() < p {
                edges.push((i, j));
            }
        }
    }
    Graph::from_canonical(n, edges, false)
}

fn barabasi_albert<R: Rng>(n: usize, m: usize, rng: &mut R) -> Graph {
    let mut edges = Vec::with_capacity(m * n);
    // every edge endpoint once, so a uniform pick is degree-proportional
    let mut endpoints = Vec::with_capacity(2 * m * n);
    for i in 0..=m {
        for j in (i + 1)..=m {
            edges.push((i, j));
            endpoints.push(i);
            endpoints.push(j);
        }
    }
    let mut targets = Vec::with_capacity(m);
    for v in (m + 1)..n {
        targets.clear();
        while targets.len() < m {
            let t = endpoints[rng.random_range(0..endpoints.len())];
            if !targets.contains(&t) {
                targets.push(t);
            }
        }
        for &t in &targets {
            edges.push((t, v));
            endpoints.push(t);
            endpoints.push(v);
        }
    }
    edges.sort_unstable();
    Graph::from_canonical(n, edges, false)
}

fn watts_strogatz<R: Rng>(n: usize, k: usize, beta: f64, rng: &mut R) -> Graph {
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for i in 0..n {
        for s in 1..=k {
            let j = (i + s) % n;
            adj[i].insert(j);
            adj[j].insert(i);
        }
    }
    if beta > 0.0 {
        for s in 1..=k {
            for i in 0..n {
                let j = (i + s) % n;
                if rng.random::<f64>() >= beta || !adj[i].contains(&j) {
                    continue;
                }
                if adj[i].len() >= n - 1 {
                    continue;
                }
                let w = loop {
                    let w = rng.random_range(0..n);
                    if w != i && !adj[i].contains(&w) {
                        break w;
                    }
                };
                adj[i].remove(&j);
                adj[j].remove(&i);
                adj[i].insert(w);
                adj[w].insert(i);
            }
        }
    }
    let mut edges = Vec::with_capacity(n * k);
    for (i, nb) in adj.iter().enumerate() {
        edges.extend(nb.range((i + 1)..).map(|&j| (i, j)));
    }
    Graph::from_canonical(n, edges, false)
}
