//! Network summary statistics and the cutoff sweep.
//!
//! All statistics take undirected graphs and reject directed input.
//! Closeness is normalized within components (`reachable / sum of distances`)
//! and average path length averages over reachable ordered pairs only, so both
//! stay defined on the disconnected graphs produced at small cutoffs.

mod bootstrap;
mod community;
mod sweep;

pub use bootstrap::{bootstrap_mean_difference, BootstrapInterval};
pub use community::{edge_betweenness, girvan_newman, modularity, Communities};
pub use sweep::{
    run_sweep, sweep_replicate_graphs, Statistic, SweepConfig, SweepGeometry, SweepRow,
};

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CentralityKind {
    Degree,
    Betweenness,
    Closeness,
}

impl CentralityKind {
    pub const ALL: [CentralityKind; 3] = [
        CentralityKind::Degree,
        CentralityKind::Betweenness,
        CentralityKind::Closeness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CentralityKind::Degree => "degree",
            CentralityKind::Betweenness => "betweenness",
            CentralityKind::Closeness => "closeness",
        }
    }

    /// Freeman normalizer: the star graph's `sum_v (c_max - c_v)` on `n` nodes.
    pub fn star_normalizer(self, n: usize) -> f64 {
        let n = n as f64;
        match self {
            CentralityKind::Degree => (n - 1.0) * (n - 2.0),
            CentralityKind::Betweenness => (n - 1.0) * (n - 1.0) * (n - 2.0) / 2.0,
            CentralityKind::Closeness => (n - 2.0) * (n - 1.0) / (2.0 * n - 3.0),
        }
    }
}

impl fmt::Display for CentralityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CentralityKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "degree" => Ok(CentralityKind::Degree),
            "betweenness" => Ok(CentralityKind::Betweenness),
            "closeness" => Ok(CentralityKind::Closeness),
            other => Err(Error::input(format!("unknown centrality '{other}'"))),
        }
    }
}

/// Global transitivity `3 * triangles / connected triples`; 0 without triples.
pub fn transitivity(g: &Graph) -> Result<f64> {
    g.require_undirected("transitivity")?;
    let mut triangles = 0usize;
    for &(u, v) in g.edges() {
        // count w > v adjacent to both, so each triangle u < v < w is seen once
        let (a, b) = (g.neighbors(u), g.neighbors(v));
        let (mut i, mut j) = (
            a.partition_point(|&x| x <= v),
            b.partition_point(|&x| x <= v),
        );
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    triangles += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
    }
    let triples: usize = g
        .degrees()
        .iter()
        .map(|&d| d * d.saturating_sub(1) / 2)
        .sum();
    Ok(if triples == 0 {
        0.0
    } else {
        3.0 * triangles as f64 / triples as f64
    })
}

/// BFS writing hop counts into `dist` (`u32::MAX` = unreachable); returns the visit order.
pub(crate) fn bfs_into(
    g: &Graph,
    source: usize,
    dist: &mut [u32],
    queue: &mut VecDeque<usize>,
    order: &mut Vec<usize>,
) {
    dist.iter_mut().for_each(|d| *d = u32::MAX);
    order.clear();
    queue.clear();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        let dv = dist[v];
        for &w in g.neighbors(v) {
            if dist[w] == u32::MAX {
                dist[w] = dv + 1;
                queue.push_back(w);
            }
        }
    }
}

/// Mean shortest-path length over ordered reachable pairs; `None` when no
/// pair is reachable.
pub fn average_path_length(g: &Graph) -> Result<Option<f64>> {
    g.require_undirected("average path length")?;
    let n = g.node_count();
    let mut dist = vec![u32::MAX; n];
    let mut queue = VecDeque::new();
    let mut order = Vec::new();
    let (mut total, mut pairs) = (0u64, 0u64);
    for s in 0..n {
        bfs_into(g, s, &mut dist, &mut queue, &mut order);
        for &v in &order[1..] {
            total += u64::from(dist[v]);
            pairs += 1;
        }
    }
    Ok((pairs > 0).then(|| total as f64 / pairs as f64))
}

/// Exact node betweenness (Brandes), each unordered pair counted once.
fn betweenness(g: &Graph) -> Vec<f64> {
    let n = g.node_count();
    let mut bc = vec![0.0; n];
    let mut dist = vec![u32::MAX; n];
    let mut sigma = vec![0.0f64; n];
    let mut delta = vec![0.0f64; n];
    let mut queue = VecDeque::new();
    let mut order = Vec::with_capacity(n);
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = u32::MAX);
        sigma.iter_mut().for_each(|x| *x = 0.0);
        delta.iter_mut().for_each(|x| *x = 0.0);
        order.clear();
        dist[s] = 0;
        sigma[s] = 1.0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in g.neighbors(v) {
                if dist[w] == u32::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if dist[w] == dist[v] + 1 {
                    sigma[w] += sigma[v];
                }
            }
        }
        for &w in order.iter().rev() {
            for &v in g.neighbors(w) {
                if dist[v] != u32::MAX && dist[v] + 1 == dist[w] {
                    delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
                }
            }
            if w != s {
                bc[w] += delta[w];
            }
        }
    }
    bc.iter_mut().for_each(|x| *x *= 0.5);
    bc
}

fn closeness(g: &Graph) -> Vec<f64> {
    let n = g.node_count();
    let mut dist = vec![u32::MAX; n];
    let mut queue = VecDeque::new();
    let mut order = Vec::new();
    (0..n)
        .map(|s| {
            bfs_into(g, s, &mut dist, &mut queue, &mut order);
            let reach = order.len() - 1;
            let total: u64 = order.iter().map(|&v| u64::from(dist[v])).sum();
            if reach == 0 {
                0.0
            } else {
                reach as f64 / total as f64
            }
        })
        .collect()
}

/// Per-node centrality scores.
pub fn centrality(g: &Graph, kind: CentralityKind) -> Result<Vec<f64>> {
    g.require_undirected("centrality")?;
    Ok(match kind {
        CentralityKind::Degree => g.degrees().into_iter().map(|d| d as f64).collect(),
        CentralityKind::Betweenness => betweenness(g),
        CentralityKind::Closeness => closeness(g),
    })
}

/// Freeman centralization `sum_v (c_max - c_v)` over the star-graph maximum.
///
/// With within-component closeness the star bound only holds for connected
/// graphs; disconnected graphs can exceed 1 and are reported unclamped.
pub fn centralization(g: &Graph, kind: CentralityKind) -> Result<f64> {
    let n = g.node_count();
    if n < 3 {
        return Err(Error::input(format!(
            "centralization needs n >= 3, got {n}"
        )));
    }
    let c = centrality(g, kind)?;
    let max = c.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let spread: f64 = c.iter().map(|x| max - x).sum();
    Ok(spread / kind.star_normalizer(n))
}
