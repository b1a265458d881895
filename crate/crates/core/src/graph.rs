//! Loopless undirected multigraphs on dense vertex indices.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A loopless undirected multigraph on vertices `0..n`.
///
/// Multiplicities are stored in a dense symmetric `n × n` table; a zero entry
/// means the pair is absent. Graphs in this crate stay small (a few hundred
/// vertices at most), so the dense layout is both the simplest and the fastest
/// option for the spectral and flow routines built on top of it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    mult: Vec<u64>,
}

/// Degrees of every vertex, counted with multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSequence(Vec<u64>);

impl DegreeSequence {
    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn min(&self) -> Option<u64> {
        self.0.iter().copied().min()
    }

    pub fn max(&self) -> Option<u64> {
        self.0.iter().copied().max()
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.0
    }
}

impl Multigraph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Multigraph {
            n,
            mult: vec![0; n * n],
        }
    }

    /// Builds a graph from `(u, v, m)` triples. Repeated pairs accumulate.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, u64)>,
    {
        let mut g = Multigraph::empty(n);
        for (u, v, m) in edges {
            g.add_edges(u, v, m)?;
        }
        Ok(g)
    }

    /// Simple complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut g = Multigraph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.set(u, v, 1);
            }
        }
        g
    }

    /// Simple cycle on `n ≥ 3` vertices.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooFewVertices { n, required: 3 });
        }
        Multigraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n, 1)))
    }

    /// Adds `m` parallel edges between `u` and `v`.
    pub fn add_edges(&mut self, u: usize, v: usize, m: u64) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        let cur = self.mult[u * self.n + v];
        let next = cur
            .checked_add(m)
            .ok_or(Error::MultiplicityOverflow(u.min(v), u.max(v)))?;
        // keep every degree representable as well
        let deg_u = self.degree(u)?;
        let deg_v = self.degree(v)?;
        if deg_u.checked_add(m).is_none() || deg_v.checked_add(m).is_none() {
            return Err(Error::MultiplicityOverflow(u.min(v), u.max(v)));
        }
        self.set(u, v, next);
        Ok(())
    }

    fn set(&mut self, u: usize, v: usize, m: u64) {
        self.mult[u * self.n + v] = m;
        self.mult[v * self.n + u] = m;
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// `m(u, v)`; zero when the pair is absent or `u == v`.
    ///
    /// Panics if either index is out of range.
    #[inline]
    pub fn multiplicity_between(&self, u: usize, v: usize) -> u64 {
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.mult[u * self.n + v]
    }

    #[inline]
    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.multiplicity_between(u, v) > 0
    }

    /// Row `v` of the multiplicity table.
    pub fn row(&self, v: usize) -> &[u64] {
        &self.mult[v * self.n..(v + 1) * self.n]
    }

    /// Present pairs as `(u, v, m)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        (0..self.n).flat_map(move |u| {
            ((u + 1)..self.n).filter_map(move |v| {
                let m = self.mult[u * self.n + v];
                (m > 0).then_some((u, v, m))
            })
        })
    }

    /// Neighbors of `v` in the underlying simple graph, ascending.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v)
            .iter()
            .enumerate()
            .filter_map(|(u, &m)| (m > 0).then_some(u))
    }

    /// Total number of edges counted with multiplicity.
    pub fn edge_count(&self) -> u64 {
        self.edges().map(|(_, _, m)| m).sum()
    }

    pub fn degree(&self, v: usize) -> Result<u64> {
        self.check_vertex(v)?;
        Ok(self.row(v).iter().sum())
    }

    pub fn degrees(&self) -> DegreeSequence {
        DegreeSequence((0..self.n).map(|v| self.row(v).iter().sum()).collect())
    }

    /// `Some(d)` when every vertex has degree `d`.
    pub fn is_regular(&self) -> Option<u64> {
        let degrees = self.degrees();
        let first = *degrees.as_slice().first()?;
        degrees
            .as_slice()
            .iter()
            .all(|&d| d == first)
            .then_some(first)
    }

    /// `m(G)`, the largest multiplicity over present pairs.
    pub fn multiplicity(&self) -> Result<u64> {
        self.edges().map(|(_, _, m)| m).max().ok_or(Error::Edgeless)
    }

    /// Same adjacency with every multiplicity collapsed to one.
    pub fn underlying_simple_graph(&self) -> Multigraph {
        Multigraph {
            n: self.n,
            mult: self.mult.iter().map(|&m| u64::from(m > 0)).collect(),
        }
    }

    /// True iff every pair of distinct vertices is adjacent. Vacuous for `n ≤ 1`.
    pub fn is_underlying_complete(&self) -> bool {
        (0..self.n).all(|u| ((u + 1)..self.n).all(|v| self.is_adjacent(u, v)))
    }

    /// Breadth-first reachability from vertex 0. Empty and single-vertex graphs count as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Subgraph induced on the vertices not in `removed`, relabelled in increasing order.
    pub fn remove_vertices(&self, removed: &[usize]) -> Result<Multigraph> {
        let mut drop = vec![false; self.n];
        for &v in removed {
            self.check_vertex(v)?;
            drop[v] = true;
        }
        let keep: Vec<usize> = (0..self.n).filter(|&v| !drop[v]).collect();
        Ok(self.induced(&keep))
    }

    /// Subgraph induced on `keep`, with vertex `keep[i]` relabelled to `i`.
    pub fn induced(&self, keep: &[usize]) -> Multigraph {
        let k = keep.len();
        let mut g = Multigraph::empty(k);
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate() {
                g.mult[i * k + j] = self.mult[u * self.n + v];
            }
        }
        g
    }

    /// Copy of the graph with the listed `(u, v)` pairs removed entirely.
    pub fn remove_pairs(&self, pairs: &[(usize, usize)]) -> Result<Multigraph> {
        let mut g = self.clone();
        for &(u, v) in pairs {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            g.set(u, v, 0);
        }
        Ok(g)
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Multigraph) -> Multigraph {
        let n = self.n + other.n;
        let mut g = Multigraph::empty(n);
        for (u, v, m) in self.edges() {
            g.set(u, v, m);
        }
        for (u, v, m) in other.edges() {
            g.set(u + self.n, v + self.n, m);
        }
        g
    }
}

impl fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Multigraph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b41() -> Multigraph {
        Multigraph::from_edges(3, [(0, 1, 3), (1, 2, 1), (2, 0, 1)]).unwrap()
    }

    fn two_triangles() -> Multigraph {
        let t = Multigraph::complete(3);
        t.disjoint_union(&t)
    }

    #[test]
    fn degree_queries() {
        let g = b41();
        assert_eq!(g.degree(2).unwrap(), 2);
        assert_eq!(g.degree(0).unwrap(), 4);
        assert_eq!(Multigraph::empty(1).degree(0).unwrap(), 0);
        assert!(matches!(
            g.degree(3),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert_eq!(g.degrees().sum(), 2 * g.edge_count());
    }

    #[test]
    fn regularity() {
        assert_eq!(Multigraph::empty(1).is_regular(), Some(0));
        assert_eq!(b41().is_regular(), None);
        assert_eq!(Multigraph::complete(4).is_regular(), Some(3));
    }

    #[test]
    fn multiplicity_of_graph() {
        assert_eq!(b41().multiplicity().unwrap(), 3);
        assert_eq!(Multigraph::cycle(5).unwrap().multiplicity().unwrap(), 1);
        assert_eq!(Multigraph::empty(3).multiplicity(), Err(Error::Edgeless));
    }

    #[test]
    fn underlying_graph() {
        let u = b41().underlying_simple_graph();
        assert_eq!(u, Multigraph::complete(3));
        assert_eq!(u.underlying_simple_graph(), u);
        assert!(b41().is_underlying_complete());
        assert!(Multigraph::empty(1).is_underlying_complete());
        assert!(!Multigraph::cycle(4).unwrap().is_underlying_complete());
    }

    #[test]
    fn connectivity_basics() {
        assert!(Multigraph::empty(1).is_connected());
        assert!(!two_triangles().is_connected());
        assert_eq!(two_triangles().components(), vec![vec![0, 1, 2], vec![3, 4, 5]]);
        assert!(b41().is_connected());
    }

    #[test]
    fn loops_and_overflow_rejected() {
        let mut g = Multigraph::empty(2);
        assert_eq!(g.add_edges(1, 1, 1), Err(Error::Loop(1)));
        g.add_edges(0, 1, u64::MAX).unwrap();
        assert_eq!(g.add_edges(1, 0, 1), Err(Error::MultiplicityOverflow(0, 1)));
    }

    #[test]
    fn vertex_removal_relabels() {
        let g = b41();
        let h = g.remove_vertices(&[0]).unwrap();
        assert_eq!(h.vertex_count(), 2);
        assert_eq!(h.multiplicity_between(0, 1), 1);
    }
}
