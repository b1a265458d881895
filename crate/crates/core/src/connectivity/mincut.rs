//! Global minimum cut by maximum-adjacency contraction (Stoer–Wagner) on integer weights.

use crate::graph::Multigraph;

/// A global cut: one side of the bipartition and the pairs crossing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCut {
    pub weight: u64,
    /// The side not containing vertex 0, sorted.
    pub side: Vec<usize>,
    /// Crossing pairs `(u, v, m)` with `u < v`, lexicographically sorted.
    pub edges: Vec<(usize, usize, u64)>,
}

impl EdgeCut {
    pub(crate) fn from_side(g: &Multigraph, side: &[usize]) -> EdgeCut {
        let n = g.vertex_count();
        let mut in_side = vec![false; n];
        for &v in side {
            in_side[v] = true;
        }
        if in_side[0] {
            in_side.iter_mut().for_each(|b| *b = !*b);
        }
        let side: Vec<usize> = (0..n).filter(|&v| in_side[v]).collect();
        let edges: Vec<(usize, usize, u64)> = g
            .edges()
            .filter(|&(u, v, _)| in_side[u] != in_side[v])
            .collect();
        EdgeCut {
            weight: edges.iter().map(|e| e.2).sum(),
            side,
            edges,
        }
    }

    fn preferred_over(&self, other: &EdgeCut) -> bool {
        (self.weight, &self.edges, &self.side) < (other.weight, &other.edges, &other.side)
    }
}

/// Minimum-weight cut of `g` with pair weight `m(u, v)`; `None` when `n < 2`.
///
/// Runs `n − 1` maximum-adjacency phases. Each phase starts from the lowest
/// surviving super-vertex, repeatedly adds the most tightly connected
/// super-vertex (lowest index on ties), records the cut isolating the last one
/// added, and merges the last two. Among phase cuts of equal weight the one with
/// the lexicographically smallest crossing-edge list wins.
pub fn stoer_wagner(g: &Multigraph) -> Option<EdgeCut> {
    let n = g.vertex_count();
    if n < 2 {
        return None;
    }
    let mut w: Vec<Vec<u64>> = (0..n).map(|v| g.row(v).to_vec()).collect();
    let mut members: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut best: Option<EdgeCut> = None;

    while active.len() > 1 {
        let k = active.len();
        let mut added = vec![false; k];
        let mut key = vec![0u64; k];
        let mut prev = 0usize;
        let mut last = 0usize;
        for step in 0..k {
            let next = if step == 0 {
                0
            } else {
                (0..k)
                    .filter(|&i| !added[i])
                    .max_by(|&a, &b| key[a].cmp(&key[b]).then(b.cmp(&a)))
                    .expect("unadded vertex remains")
            };
            added[next] = true;
            prev = last;
            last = next;
            let row = &w[active[next]];
            for i in 0..k {
                if !added[i] {
                    key[i] += row[active[i]];
                }
            }
        }

        let cut = EdgeCut::from_side(g, &members[active[last]]);
        debug_assert_eq!(cut.weight, key[last]);
        if best.as_ref().is_none_or(|b| cut.preferred_over(b)) {
            best = Some(cut);
        }

        // merge `last` into `prev`
        let (keep, gone) = (active[prev], active[last]);
        for &other in &active {
            if other != keep && other != gone {
                let merged = w[keep][other] + w[gone][other];
                w[keep][other] = merged;
                w[other][keep] = merged;
            }
        }
        let moved = std::mem::take(&mut members[gone]);
        members[keep].extend(moved);
        active.remove(last);
    }
    best
}
