//! Exhaustive oracles for the connectivity routines. Exponential; small graphs only.

use crate::error::{Error, Result};
use crate::graph::Multigraph;

pub const BRUTE_VERTEX_LIMIT: usize = 10;
pub const BRUTE_EDGE_LIMIT: usize = 12;

fn adjacency_masks(g: &Multigraph) -> Vec<u32> {
    (0..g.vertex_count())
        .map(|v| g.neighbors(v).fold(0u32, |m, u| m | (1 << u)))
        .collect()
}

/// Whether the vertices in `alive` induce a connected subgraph.
fn mask_connected(adj: &[u32], alive: u32) -> bool {
    if alive == 0 {
        return true;
    }
    let mut reached = alive & alive.wrapping_neg();
    loop {
        let mut next = reached;
        let mut rest = reached;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            next |= adj[v] & alive;
        }
        if next == reached {
            return reached == alive;
        }
        reached = next;
    }
}

/// Smallest `|S|` such that `G − S` is disconnected, or `n − 1` when no such set exists.
pub fn brute_force_vertex_connectivity(g: &Multigraph) -> Result<usize> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::TooFewVertices { n, required: 2 });
    }
    if n > BRUTE_VERTEX_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: BRUTE_VERTEX_LIMIT,
        });
    }
    let adj = adjacency_masks(g);
    let full: u32 = (1 << n) - 1;
    let mut best = n - 1;
    for removed in 0..=full {
        let size = removed.count_ones() as usize;
        // need at least two survivors to be disconnected
        if size >= best || size + 2 > n {
            continue;
        }
        if !mask_connected(&adj, full & !removed) {
            best = size;
        }
    }
    Ok(best)
}

/// Minimum total multiplicity crossing a proper bipartition.
pub fn brute_force_edge_connectivity(g: &Multigraph) -> Result<u64> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::TooFewVertices { n, required: 2 });
    }
    if n > BRUTE_EDGE_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: BRUTE_EDGE_LIMIT,
        });
    }
    let edges: Vec<(usize, usize, u64)> = g.edges().collect();
    // fix vertex 0 on the left to enumerate each bipartition once
    let best = (0u32..(1 << (n - 1)))
        .map(|rest| (rest << 1) | 1)
        .filter(|&left| left != (1u32 << n) - 1)
        .map(|left| {
            edges
                .iter()
                .filter(|&&(u, v, _)| ((left >> u) & 1) != ((left >> v) & 1))
                .map(|e| e.2)
                .sum::<u64>()
        })
        .min()
        .expect("n >= 2 leaves a proper bipartition");
    Ok(best)
}
