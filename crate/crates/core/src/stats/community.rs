//! Girvan–Newman divisive clustering and Newman modularity.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A node partition. `labels[v]` is the community of `v`; communities are
/// numbered by first appearance in node order.
#[derive(Debug, Clone, PartialEq)]
pub struct Communities {
    pub labels: Vec<usize>,
    pub count: usize,
    /// Modularity of the partition; `None` for edgeless graphs.
    pub modularity: Option<f64>,
}

fn canonical_labels(raw: &[usize]) -> (Vec<usize>, usize) {
    let mut map = vec![usize::MAX; raw.iter().copied().max().map_or(0, |m| m + 1)];
    let mut next = 0;
    let labels = raw
        .iter()
        .map(|&c| {
            if map[c] == usize::MAX {
                map[c] = next;
                next += 1;
            }
            map[c]
        })
        .collect();
    (labels, next)
}

/// `Q = sum_c [L_c / m - (d_c / 2m)^2]`; `None` when the graph has no edges.
pub fn modularity(g: &Graph, labels: &[usize]) -> Result<Option<f64>> {
    g.require_undirected("modularity")?;
    if labels.len() != g.node_count() {
        return Err(Error::input(format!(
            "partition has {} labels for {} nodes",
            labels.len(),
            g.node_count()
        )));
    }
    let m = g.edge_count();
    if m == 0 {
        return Ok(None);
    }
    let k = labels.iter().copied().max().map_or(0, |x| x + 1);
    let mut inside = vec![0usize; k];
    let mut degree = vec![0usize; k];
    for &(u, v) in g.edges() {
        degree[labels[u]] += 1;
        degree[labels[v]] += 1;
        if labels[u] == labels[v] {
            inside[labels[u]] += 1;
        }
    }
    let m = m as f64;
    let q = inside
        .iter()
        .zip(&degree)
        .map(|(&l, &d)| l as f64 / m - (d as f64 / (2.0 * m)).powi(2))
        .sum();
    Ok(Some(q))
}

/// Mutable working graph: edge ids with liveness flags.
struct Work {
    ends: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>,
    alive: Vec<bool>,
    /// Sum over sources of the single-source dependency (each pair counted twice).
    betweenness: Vec<f64>,
    // scratch
    dist: Vec<u32>,
    sigma: Vec<f64>,
    delta: Vec<f64>,
    arcs: Vec<(u32, u32, u32)>,
    queue: VecDeque<usize>,
}

impl Work {
    fn new(g: &Graph) -> Self {
        let n = g.node_count();
        let ends = g.edges().to_vec();
        let mut adj = vec![Vec::new(); n];
        for (e, &(u, v)) in ends.iter().enumerate() {
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
        let mut w = Work {
            alive: vec![true; ends.len()],
            betweenness: vec![0.0; ends.len()],
            ends,
            adj,
            dist: vec![u32::MAX; n],
            sigma: vec![0.0; n],
            delta: vec![0.0; n],
            arcs: Vec::new(),
            queue: VecDeque::new(),
        };
        let all: Vec<usize> = (0..n).collect();
        w.recompute(&all);
        w
    }

    /// Nodes reachable from `s` over live edges.
    fn component(&self, s: usize, mark: &mut [bool]) -> Vec<usize> {
        let mut out = vec![s];
        mark[s] = true;
        let mut head = 0;
        while head < out.len() {
            let v = out[head];
            head += 1;
            for &(w, e) in &self.adj[v] {
                if self.alive[e] && !mark[w] {
                    mark[w] = true;
                    out.push(w);
                }
            }
        }
        out
    }

    /// Recompute betweenness for the live edges inside `nodes`, which must be
    /// a union of whole components.
    fn recompute(&mut self, nodes: &[usize]) {
        for &v in nodes {
            for &(_, e) in &self.adj[v] {
                self.betweenness[e] = 0.0;
            }
        }
        for &s in nodes {
            for &v in nodes {
                self.dist[v] = u32::MAX;
            }
            self.dist[s] = 0;
            self.sigma[s] = 1.0;
            self.delta[s] = 0.0;
            self.queue.push_back(s);
            // shortest-path arcs (child, parent, edge) in discovery order
            self.arcs.clear();
            while let Some(v) = self.queue.pop_front() {
                let dv = self.dist[v];
                for &(w, e) in &self.adj[v] {
                    if !self.alive[e] {
                        continue;
                    }
                    if self.dist[w] == u32::MAX {
                        self.dist[w] = dv + 1;
                        self.sigma[w] = 0.0;
                        self.delta[w] = 0.0;
                        self.queue.push_back(w);
                    }
                    if self.dist[w] == dv + 1 {
                        self.sigma[w] += self.sigma[v];
                        self.arcs.push((w as u32, v as u32, e as u32));
                    }
                }
            }
            // arcs out of a node are recorded after the arcs into it, so the
            // reverse pass sees delta[w] complete before using it
            for &(w, v, e) in self.arcs.iter().rev() {
                let (w, v) = (w as usize, v as usize);
                let c = self.sigma[v] / self.sigma[w] * (1.0 + self.delta[w]);
                self.betweenness[e as usize] += c;
                self.delta[v] += c;
            }
        }
    }

    /// Deletes edge `e`; returns the far side's component if the deletion
    /// split one.
    fn remove(&mut self, e: usize, mark: &mut [bool]) -> Option<Vec<usize>> {
        self.alive[e] = false;
        let (u, v) = self.ends[e];
        let cu = self.component(u, mark);
        let split = !mark[v];
        let mut touched = cu;
        let far = split.then(|| self.component(v, mark));
        if let Some(cv) = &far {
            touched.extend_from_slice(cv);
        }
        for &x in &touched {
            mark[x] = false;
        }
        self.recompute(&touched);
        far
    }

    /// Live edge with maximal betweenness; near-ties go to the lowest edge id.
    fn argmax(&self) -> Option<usize> {
        let max = self
            .alive
            .iter()
            .zip(&self.betweenness)
            .filter(|(a, _)| **a)
            .map(|(_, &b)| b)
            .fold(f64::NEG_INFINITY, f64::max);
        if max == f64::NEG_INFINITY {
            return None;
        }
        let tol = 1e-9 * max.max(1.0);
        (0..self.ends.len()).find(|&e| self.alive[e] && self.betweenness[e] >= max - tol)
    }
}

/// Edge betweenness of every edge, in the order of [`Graph::edges`].
pub fn edge_betweenness(g: &Graph) -> Result<Vec<f64>> {
    g.require_undirected("edge betweenness")?;
    // every unordered pair was counted from both ends
    Ok(Work::new(g)
        .betweenness
        .into_iter()
        .map(|b| 0.5 * b)
        .collect())
}

/// Girvan–Newman: repeatedly delete the edge of highest betweenness,
/// recomputing after every deletion, and return the intermediate partition of
/// maximal modularity (the coarsest one on ties).
pub fn girvan_newman(g: &Graph) -> Result<Communities> {
    g.require_undirected("community detection")?;
    let n = g.node_count();
    let initial = g.component_labels();
    let (labels, count) = canonical_labels(&initial);
    let q0 = modularity(g, &labels)?;
    let Some(q0) = q0 else {
        return Ok(Communities {
            labels,
            count,
            modularity: None,
        });
    };
    // any proper partition of a complete graph has negative modularity
    if g.edge_count() == n * n.saturating_sub(1) / 2 {
        return Ok(Communities {
            labels,
            count,
            modularity: Some(q0),
        });
    }

    let mut best = Communities {
        labels: labels.clone(),
        count,
        modularity: Some(q0),
    };
    let mut work = Work::new(g);
    let mut current = labels;
    let mut next_label = count;
    let mut mark = vec![false; n];
    while let Some(e) = work.argmax() {
        let Some(far) = work.remove(e, &mut mark) else {
            continue;
        };
        for x in far {
            current[x] = next_label;
        }
        next_label += 1;

        let (labels, count) = canonical_labels(&current);
        let q = modularity(g, &labels)?.unwrap_or(0.0);
        if q > best.modularity.unwrap_or(f64::NEG_INFINITY) + 1e-12 {
            best = Communities {
                labels,
                count,
                modularity: Some(q),
            };
        }
    }
    Ok(best)
}
