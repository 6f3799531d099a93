//! Seeded Erdős–Rényi graph sampling.

use crate::seeding::task_rng;
use rand::Rng;
use std::io::{self, Write};
use thiserror::Error;

/// Sparse undirected graph with dense node indices `0..n`.
///
/// Invariants: adjacency is symmetric, loop-free and duplicate-free, and
/// `edge_count` equals half the sum of the adjacency list lengths. Nodes
/// are immutable after construction, so a `Graph` can be shared read-only
/// across threads.
#[derive(Debug, Clone)]
pub struct Graph {
    adjacency: Vec<Vec<u32>>,
    edge_count: u64,
}

#[derive(Debug, Error, PartialEq)]
pub enum GraphError {
    #[error("node count must be at least 1")]
    EmptyGraph,
    #[error("mean degree must be nonnegative and finite, got {0}")]
    InvalidMeanDegree(f64),
    #[error("edge probability c/n = {0} exceeds 1")]
    EdgeProbabilityTooLarge(f64),
}

/// Degree statistics of a graph.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DegreeSummary {
    pub mean_degree: f64,
    pub max_degree: u32,
    pub isolated_count: usize,
}

impl Graph {
    /// Build from an explicit edge list (test helper and file ingestion).
    /// Panics on loops or out-of-range endpoints; duplicate detection is a
    /// debug assertion (the sampler cannot produce duplicates).
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            assert!(u != v, "self-loop at node {u}");
            assert!((u as usize) < n && (v as usize) < n, "edge ({u},{v}) out of range");
            debug_assert!(!adjacency[u as usize].contains(&v), "duplicate edge ({u},{v})");
            adjacency[u as usize].push(v);
            adjacency[v as usize].push(u);
        }
        Graph { adjacency, edge_count: edges.len() as u64 }
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> u64 {
        self.edge_count
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adjacency[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adjacency[v as usize].len()
    }
}

/// Sample G(n, p) with `p = c/n`, deterministically in `(n, c, seed)`.
///
/// Uses geometric skipping over the lexicographic sequence of the
/// `n(n-1)/2` unordered pairs, so the cost is O(n + edges) rather than
/// O(n^2).
pub fn sample_er_graph(n: usize, c: f64, seed: u64) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::EmptyGraph);
    }
    if !(c >= 0.0) || !c.is_finite() {
        return Err(GraphError::InvalidMeanDegree(c));
    }
    let p = c / n as f64;
    if p > 1.0 {
        return Err(GraphError::EdgeProbabilityTooLarge(p));
    }

    let mut rng = task_rng(seed, 0x4752_4150); // fixed stream tag for graph sampling
    let total_pairs = (n as u64) * (n as u64 - 1) / 2;
    let mut edges: Vec<(u32, u32)> = Vec::new();

    if p >= 1.0 {
        for u in 0..n as u32 {
            for v in (u + 1)..n as u32 {
                edges.push((u, v));
            }
        }
    } else if p > 0.0 {
        let log1m_p = (-p).ln_1p();
        let mut cursor: u64 = 0; // next candidate pair index
        loop {
            let u: f64 = rng.gen();
            // failures before the next success in a Bernoulli(p) sequence
            let skip = ((-u).ln_1p() / log1m_p).floor();
            if skip >= (total_pairs - cursor) as f64 {
                break;
            }
            cursor += skip as u64;
            edges.push(unrank_pair(n as u64, cursor));
            cursor += 1;
            if cursor >= total_pairs {
                break;
            }
        }
    }

    Ok(Graph::from_edges(n, &edges))
}

/// Map a lexicographic pair index to the pair (u, v), u < v.
fn unrank_pair(n: u64, index: u64) -> (u32, u32) {
    // offset(u) = u*(n-1) - u*(u-1)/2 counts pairs whose first node is < u
    let offset = |u: u64| u * (n - 1) - u * (u - 1) / 2;
    // invert with the quadratic formula, then fix rounding
    let nf = n as f64 - 0.5;
    let mut u = (nf - (nf * nf - 2.0 * index as f64).max(0.0).sqrt()).floor() as u64;
    u = u.min(n - 2);
    while offset(u) > index {
        u -= 1;
    }
    while u + 1 <= n - 2 && offset(u + 1) <= index {
        u += 1;
    }
    let v = u + 1 + (index - offset(u));
    (u as u32, v as u32)
}

/// Exact degree statistics.
pub fn degree_stats(g: &Graph) -> DegreeSummary {
    let n = g.node_count();
    let mut max_degree = 0u32;
    let mut isolated_count = 0usize;
    for v in 0..n {
        let d = g.degree(v as u32) as u32;
        max_degree = max_degree.max(d);
        if d == 0 {
            isolated_count += 1;
        }
    }
    DegreeSummary {
        mean_degree: 2.0 * g.edge_count() as f64 / n as f64,
        max_degree,
        isolated_count,
    }
}

/// Dump as edge-list text: header `# n=<n> c=<c> seed=<seed>`, then one
/// `u v` pair per line.
pub fn write_edge_list<W: Write>(g: &Graph, c: f64, seed: u64, out: &mut W) -> io::Result<()> {
    writeln!(out, "# n={} c={} seed={}", g.node_count(), c, seed)?;
    for u in 0..g.node_count() as u32 {
        for &v in g.neighbors(u) {
            if u < v {
                writeln!(out, "{u} {v}")?;
            }
        }
    }
    Ok(())
}
