//! Simple unweighted graphs with a canonical edge ordering.
//!
//! Undirected edges are stored as `(i, j)` with `i < j`, sorted
//! lexicographically, so two graphs with the same edge set compare equal and
//! serialize to identical bytes. Adjacency is kept in CSR form with sorted
//! neighbour lists.

use std::collections::VecDeque;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    directed: bool,
    offsets: Vec<usize>,
    adjacency: Vec<usize>,
}

/// Number of unordered pairs on `n` nodes.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Rank of the unordered pair `{i, j}` (`i < j`) in row-major upper-triangle order.
pub fn pair_rank(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicates and out-of-range ids.
    pub fn new(n: usize, edges: Vec<(usize, usize)>, directed: bool) -> Result<Self> {
        let mut edges = edges;
        for e in edges.iter_mut() {
            if e.0 >= n || e.1 >= n {
                return Err(Error::input(format!("edge {e:?} out of range for n={n}")));
            }
            if e.0 == e.1 {
                return Err(Error::input(format!("self-loop on node {}", e.0)));
            }
            if !directed && e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::input(format!("duplicate edge {:?}", w[0])));
        }
        Ok(Self::from_canonical(n, edges, directed))
    }

    /// Undirected graph from an edge list.
    pub fn from_edges(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        Self::new(n, edges, false)
    }

    /// Trusted constructor: `edges` must already be canonical.
    pub(crate) fn from_canonical(n: usize, edges: Vec<(usize, usize)>, directed: bool) -> Self {
        let mut counts = vec![0usize; n + 1];
        for &(a, b) in &edges {
            counts[a + 1] += 1;
            if !directed {
                counts[b + 1] += 1;
            }
        }
        for v in 0..n {
            counts[v + 1] += counts[v];
        }
        let offsets = counts;
        let mut fill = offsets.clone();
        let mut adjacency = vec![0usize; offsets[n]];
        for &(a, b) in &edges {
            adjacency[fill[a]] = b;
            fill[a] += 1;
            if !directed {
                adjacency[fill[b]] = a;
                fill[b] += 1;
            }
        }
        if directed {
            for v in 0..n {
                adjacency[offsets[v]..offsets[v + 1]].sort_unstable();
            }
        }
        Graph {
            n,
            edges,
            directed,
            offsets,
            adjacency,
        }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_canonical(n, Vec::new(), false)
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
            .collect();
        Self::from_canonical(n, edges, false)
    }

    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_canonical(n, edges, false)
    }

    pub fn cycle(n: usize) -> Self {
        let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        if n >= 3 {
            edges.push((0, n - 1));
            edges.sort_unstable();
        }
        Self::from_canonical(n, edges, false)
    }

    /// Star with centre 0.
    pub fn star(n: usize) -> Self {
        let edges = (1..n).map(|i| (0, i)).collect();
        Self::from_canonical(n, edges, false)
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub(crate) fn require_undirected(&self, what: &str) -> Result<()> {
        if self.directed {
            Err(Error::input(format!("{what} requires an undirected graph")))
        } else {
            Ok(())
        }
    }

    /// Sorted neighbours (out-neighbours for directed graphs).
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Edge density `|E| / (n choose 2)`; 0 for fewer than two nodes.
    pub fn density(&self) -> f64 {
        let pairs = pair_count(self.n);
        if pairs == 0 {
            0.0
        } else {
            let e = if self.directed {
                self.edges.len() as f64 / 2.0
            } else {
                self.edges.len() as f64
            };
            e / pairs as f64
        }
    }

    /// Per-node component label in `0..k`, labels assigned in order of the
    /// smallest node of each component.
    pub fn component_labels(&self) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
                parent[hi] = lo;
            }
        }
        let mut label = vec![usize::MAX; self.n];
        let mut next = 0;
        (0..self.n)
            .map(|v| {
                let r = find(&mut parent, v);
                if label[r] == usize::MAX {
                    label[r] = next;
                    next += 1;
                }
                label[r]
            })
            .collect()
    }

    /// Maximal connected node sets, each sorted, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let labels = self.component_labels();
        let k = labels.iter().copied().max().map_or(0, |m| m + 1);
        let mut parts = vec![Vec::new(); k];
        for (v, &c) in labels.iter().enumerate() {
            parts[c].push(v);
        }
        parts
    }

    pub fn component_count(&self) -> usize {
        self.component_labels()
            .into_iter()
            .max()
            .map_or(0, |m| m + 1)
    }

    /// Hop counts from `source`; `None` marks unreachable nodes.
    pub fn bfs_distances(&self, source: usize) -> Result<Vec<Option<usize>>> {
        if source >= self.n {
            return Err(Error::input(format!("source {source} out of range")));
        }
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            let dv = dist[v].unwrap_or(0);
            for &w in self.neighbors(v) {
                if dist[w].is_none() {
                    dist[w] = Some(dv + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    /// Relabels node `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::input("permutation length does not match node count"));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::input("not a permutation"));
            }
        }
        let edges = self
            .edges
            .iter()
            .map(|&(a, b)| (perm[a], perm[b]))
            .collect();
        Graph::new(self.n, edges, self.directed)
    }
}
