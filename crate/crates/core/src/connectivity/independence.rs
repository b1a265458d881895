//! Exact independence number by branch and bound over vertex bitmasks.

use crate::error::{Error, Result};
use crate::graph::Multigraph;

pub const INDEPENDENCE_LIMIT: usize = 32;

struct Search {
    adj: Vec<u64>,
    best: u32,
    best_set: u64,
}

impl Search {
    fn run(&mut self, cand: u64, size: u32, chosen: u64) {
        if size + cand.count_ones() <= self.best {
            return;
        }
        // branch on the candidate with most candidate neighbours
        let mut pick = None;
        let mut pick_deg = 0;
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let deg = (self.adj[v] & cand).count_ones();
            if pick.is_none() || deg > pick_deg {
                pick = Some(v);
                pick_deg = deg;
            }
        }
        let Some(v) = pick else {
            if size > self.best {
                self.best = size;
                self.best_set = chosen;
            }
            return;
        };
        if pick_deg == 0 {
            // remaining candidates are pairwise non-adjacent
            let total = size + cand.count_ones();
            if total > self.best {
                self.best = total;
                self.best_set = chosen | cand;
            }
            return;
        }
        let bit = 1u64 << v;
        self.run(cand & !self.adj[v] & !bit, size + 1, chosen | bit);
        self.run(cand & !bit, size, chosen);
    }
}

/// A maximum independent set of the underlying simple graph, sorted.
pub fn maximum_independent_set(g: &Multigraph) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    if n > INDEPENDENCE_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: INDEPENDENCE_LIMIT,
        });
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).fold(0u64, |m, u| m | (1 << u)))
        .collect();
    let mut search = Search {
        adj,
        best: 0,
        best_set: 0,
    };
    let all = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    search.run(all, 0, 0);
    Ok((0..n).filter(|&v| (search.best_set >> v) & 1 == 1).collect())
}

/// `α(G)`.
pub fn independence_number(g: &Multigraph) -> Result<usize> {
    maximum_independent_set(g).map(|s| s.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(independence_number(&Multigraph::complete(6)).unwrap(), 1);
        assert_eq!(independence_number(&Multigraph::empty(7)).unwrap(), 7);
        assert_eq!(independence_number(&Multigraph::empty(0)).unwrap(), 0);
        assert_eq!(independence_number(&Multigraph::cycle(7).unwrap()).unwrap(), 3);
    }

    #[test]
    fn returned_set_is_independent() {
        let g = Multigraph::cycle(9).unwrap();
        let s = maximum_independent_set(&g).unwrap();
        assert_eq!(s.len(), 4);
        for &a in &s {
            for &b in &s {
                assert!(!g.is_adjacent(a, b));
            }
        }
    }

    #[test]
    fn limit() {
        assert!(independence_number(&Multigraph::empty(33)).is_err());
        assert_eq!(independence_number(&Multigraph::empty(32)).unwrap(), 32);
    }
}
