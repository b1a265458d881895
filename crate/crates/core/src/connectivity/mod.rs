//! Vertex and edge connectivity, independence number, and exhaustive oracles.
//!
//! `κ` works on the underlying simple graph (vertex cuts ignore multiplicity);
//! `κ'` weighs every pair by its multiplicity. Both are exact and integer-only.

mod brute;
mod flow;
mod independence;
mod mincut;

pub use brute::{
    brute_force_edge_connectivity, brute_force_vertex_connectivity, BRUTE_EDGE_LIMIT,
    BRUTE_VERTEX_LIMIT,
};
pub use flow::min_vertex_separator;
pub use independence::{independence_number, maximum_independent_set, INDEPENDENCE_LIMIT};
pub use mincut::{stoer_wagner, EdgeCut};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::par::Execution;

/// `κ`, `κ'` and the cuts that realise them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivityReport {
    pub kappa: usize,
    pub kappa_prime: u64,
    /// Empty when the underlying graph is complete.
    pub vertex_cut_witness: Vec<usize>,
    /// Crossing pairs `(u, v, m)` of a minimum edge cut.
    pub edge_cut_witness: Vec<(usize, usize, u64)>,
}

/// `κ(G)` together with a minimum separator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexCut {
    pub size: usize,
    /// Empty when the underlying graph is complete (`size = n − 1`).
    pub witness: Vec<usize>,
}

fn require_two(g: &Multigraph) -> Result<()> {
    let n = g.vertex_count();
    if n < 2 {
        Err(Error::TooFewVertices { n, required: 2 })
    } else {
        Ok(())
    }
}

/// Minimum vertex cut, minimising local separators over all non-adjacent pairs.
///
/// The pair loop runs under `exec`; the minimum is taken over `(size, witness)`
/// so the result does not depend on scheduling.
pub fn min_vertex_cut_with(g: &Multigraph, exec: Execution) -> Result<VertexCut> {
    require_two(g)?;
    let n = g.vertex_count();
    let simple = g.underlying_simple_graph();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|s| ((s + 1)..n).map(move |t| (s, t)))
        .filter(|&(s, t)| !simple.is_adjacent(s, t))
        .collect();
    if pairs.is_empty() {
        return Ok(VertexCut {
            size: n - 1,
            witness: Vec::new(),
        });
    }
    let best = exec
        .map(&pairs, |&(s, t)| min_vertex_separator(&simple, s, t))
        .into_iter()
        .min_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)))
        .expect("at least one non-adjacent pair");
    Ok(VertexCut {
        size: best.len(),
        witness: best,
    })
}

pub fn min_vertex_cut(g: &Multigraph) -> Result<VertexCut> {
    min_vertex_cut_with(g, Execution::default())
}

/// `κ(G)`: 0 when disconnected, `n − 1` when the underlying graph is complete.
pub fn vertex_connectivity(g: &Multigraph) -> Result<usize> {
    min_vertex_cut(g).map(|c| c.size)
}

/// Minimum edge cut weighted by multiplicity.
pub fn min_edge_cut(g: &Multigraph) -> Result<EdgeCut> {
    require_two(g)?;
    Ok(stoer_wagner(g).expect("n >= 2"))
}

/// `κ'(G)`: the smallest total multiplicity whose removal disconnects `G`.
pub fn edge_connectivity(g: &Multigraph) -> Result<u64> {
    min_edge_cut(g).map(|c| c.weight)
}

/// True iff `n > k` and `κ(G) ≥ k`.
pub fn is_k_connected(g: &Multigraph, k: usize) -> Result<bool> {
    let n = g.vertex_count();
    if n <= k {
        return Ok(false);
    }
    if k == 0 {
        return Ok(true);
    }
    Ok(vertex_connectivity(g)? >= k)
}

pub fn connectivity_report_with(g: &Multigraph, exec: Execution) -> Result<ConnectivityReport> {
    let vertex = min_vertex_cut_with(g, exec)?;
    let edge = min_edge_cut(g)?;
    Ok(ConnectivityReport {
        kappa: vertex.size,
        kappa_prime: edge.weight,
        vertex_cut_witness: vertex.witness,
        edge_cut_witness: edge.edges,
    })
}

pub fn connectivity_report(g: &Multigraph) -> Result<ConnectivityReport> {
    connectivity_report_with(g, Execution::default())
}
