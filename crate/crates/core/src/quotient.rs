//! Vertex partitions, quotient matrices, equitability and interlacing.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::spectral::{eigenvalues_symmetric, Spectrum, SymmetricMatrix};

/// Absolute slack allowed by [`check_interlacing`].
pub const INTERLACING_TOL: f64 = 1e-8;

/// A partition of `0..n` into non-empty blocks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl Partition {
    /// Validates that `blocks` are non-empty, disjoint and cover `0..n`.
    /// Vertex order inside a block is kept as given.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut block_of = vec![usize::MAX; n];
        for (i, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition(format!("block {i} is empty")));
            }
            for &v in block {
                if v >= n {
                    return Err(Error::InvalidPartition(format!(
                        "vertex {v} out of range for {n} vertices"
                    )));
                }
                if block_of[v] != usize::MAX {
                    return Err(Error::InvalidPartition(format!(
                        "vertex {v} appears more than once"
                    )));
                }
                block_of[v] = i;
            }
        }
        if let Some(v) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(Error::InvalidPartition(format!("vertex {v} is not covered")));
        }
        Ok(Partition { blocks, block_of })
    }

    /// Single block holding every vertex.
    pub fn trivial(n: usize) -> Result<Self> {
        Partition::new(n, vec![(0..n).collect()])
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.block_of.len()
    }

    pub fn block_of(&self, v: usize) -> usize {
        self.block_of[v]
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }
}

/// `s × s` matrix of block-averaged edge counts, `b_{i,j}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuotientMatrix {
    entries: Vec<Vec<f64>>,
    block_sizes: Vec<usize>,
}

impl QuotientMatrix {
    /// Checks shape, positive block sizes and `b_{i,j}|V_i| = b_{j,i}|V_j|`
    /// (relative slack `1e-12`).
    pub fn new(entries: Vec<Vec<f64>>, block_sizes: Vec<usize>) -> Result<Self> {
        let s = entries.len();
        if block_sizes.len() != s || entries.iter().any(|r| r.len() != s) {
            return Err(Error::DimensionMismatch(format!(
                "quotient needs {s}x{s} entries and {s} block sizes"
            )));
        }
        if block_sizes.contains(&0) {
            return Err(Error::InvalidPartition("block sizes must be positive".into()));
        }
        for i in 0..s {
            for j in 0..i {
                let a = entries[i][j] * block_sizes[i] as f64;
                let b = entries[j][i] * block_sizes[j] as f64;
                if (a - b).abs() > 1e-12 * a.abs().max(b.abs()).max(1.0) {
                    return Err(Error::DimensionMismatch(format!(
                        "b[{i}][{j}]|V_{i}| = {a} but b[{j}][{i}]|V_{j}| = {b}"
                    )));
                }
            }
        }
        Ok(QuotientMatrix {
            entries,
            block_sizes,
        })
    }

    pub fn order(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<f64>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i][j]
    }

    pub fn block_sizes(&self) -> &[usize] {
        &self.block_sizes
    }

    /// `D^{1/2} B D^{-1/2}` with `D = diag(|V_i|)`, which is symmetric and similar to `B`.
    pub fn symmetrized(&self) -> SymmetricMatrix {
        let sizes: Vec<f64> = self.block_sizes.iter().map(|&k| k as f64).collect();
        SymmetricMatrix::from_fn(self.order(), |i, j| {
            let total_ij = self.entries[i][j] * sizes[i];
            let total_ji = self.entries[j][i] * sizes[j];
            0.5 * (total_ij + total_ji) / (sizes[i] * sizes[j]).sqrt()
        })
    }
}

/// `b_{i,j}`: edges (with multiplicity) from `V_i` into `V_j`, divided by `|V_i|`.
pub fn quotient_matrix(g: &Multigraph, p: &Partition) -> Result<QuotientMatrix> {
    let totals = block_totals(g, p)?;
    let sizes = p.block_sizes();
    let entries = totals
        .iter()
        .zip(&sizes)
        .map(|(row, &k)| row.iter().map(|&e| e as f64 / k as f64).collect())
        .collect();
    QuotientMatrix::new(entries, sizes)
}

fn block_totals(g: &Multigraph, p: &Partition) -> Result<Vec<Vec<u64>>> {
    if p.vertex_count() != g.vertex_count() {
        return Err(Error::InvalidPartition(format!(
            "partition covers {} vertices, graph has {}",
            p.vertex_count(),
            g.vertex_count()
        )));
    }
    let s = p.len();
    let mut totals = vec![vec![0u64; s]; s];
    for (u, v, m) in g.edges() {
        let (bu, bv) = (p.block_of(u), p.block_of(v));
        totals[bu][bv] += m;
        totals[bv][bu] += m;
    }
    Ok(totals)
}

/// Eigenvalues of `Q`, via its symmetrisation.
pub fn quotient_eigenvalues(q: &QuotientMatrix, tol: f64) -> Result<Spectrum> {
    eigenvalues_symmetric(&q.symmetrized(), tol)
}

/// True iff every vertex of `V_i` sends the same multiplicity-weighted number
/// of edges into each `V_j`. Exact integer comparison.
pub fn is_equitable(g: &Multigraph, p: &Partition) -> Result<bool> {
    if p.vertex_count() != g.vertex_count() {
        return Err(Error::InvalidPartition(format!(
            "partition covers {} vertices, graph has {}",
            p.vertex_count(),
            g.vertex_count()
        )));
    }
    let s = p.len();
    let counts = |v: usize| {
        let mut c = vec![0u64; s];
        for (u, &m) in g.row(v).iter().enumerate() {
            c[p.block_of(u)] += m;
        }
        c
    };
    Ok(p.blocks().iter().all(|block| {
        let first = counts(block[0]);
        block[1..].iter().all(|&v| counts(v) == first)
    }))
}

/// Two-sided Cauchy interlacing of `inner` (order `m`) in `outer` (order `n`):
/// `outer_i ≥ inner_i ≥ outer_{i+n−m}` for each `i ≤ m`, with slack [`INTERLACING_TOL`].
pub fn check_interlacing(outer: &Spectrum, inner: &Spectrum) -> Result<bool> {
    upper_and_lower_interlacing(outer, inner).map(|(up, low)| up && low)
}

/// Upper (`outer_i ≥ inner_i`) and lower (`inner_i ≥ outer_{i+n−m}`) halves of
/// interlacing, reported separately.
pub fn upper_and_lower_interlacing(outer: &Spectrum, inner: &Spectrum) -> Result<(bool, bool)> {
    let (n, m) = (outer.len(), inner.len());
    if m > n {
        return Err(Error::DimensionMismatch(format!(
            "inner spectrum has {m} values, outer only {n}"
        )));
    }
    let o = outer.values();
    let i = inner.values();
    let upper = (0..m).all(|k| o[k] >= i[k] - INTERLACING_TOL);
    let lower = (0..m).all(|k| i[k] >= o[k + n - m] - INTERLACING_TOL);
    Ok((upper, lower))
}

fn check_sizes(n1: f64, n2: f64) -> Result<()> {
    if !(n1 >= 1.0 && n2 >= 1.0) {
        return Err(Error::InvalidParameter(format!(
            "block sizes must be at least 1, got n1={n1}, n2={n2}"
        )));
    }
    Ok(())
}

/// Second eigenvalue of the two-part cut-vertex quotient,
/// `d − m1/n1 − m1/(n2 + 1)`.
///
/// Here `G − v` splits into a part of `n1` vertices receiving `m1` of the cut
/// vertex's edges and the remaining `n2` vertices.
pub fn proof_quotient_lambda2_2part(d: f64, n1: f64, n2: f64, m1: f64) -> Result<f64> {
    check_sizes(n1, n2)?;
    if m1 < 0.0 {
        return Err(Error::InvalidParameter(format!("m1 must be non-negative, got {m1}")));
    }
    Ok(d - m1 / n1 - m1 / (n2 + 1.0))
}

/// Second eigenvalue of the three-part cut-vertex quotient `{V(G1), {v}, V(G2)}`:
///
/// ```text
/// (2d − s + sqrt(s² − 4·m1·m2·(n1 + n2 + 1)/(n1·n2))) / 2,   s = m1/n1 + m2/n2 + d
/// ```
///
/// The cut vertex has degree `d`, so the closed form assumes `m1 + m2 = d`.
pub fn proof_quotient_lambda2_3part(d: f64, n1: f64, n2: f64, m1: f64, m2: f64) -> Result<f64> {
    check_sizes(n1, n2)?;
    if !(m1 > 0.0 && m2 > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "m1 and m2 must be positive, got m1={m1}, m2={m2}"
        )));
    }
    let s = m1 / n1 + m2 / n2 + d;
    let disc = s * s - 4.0 * m1 * m2 * (n1 + n2 + 1.0) / (n1 * n2);
    if disc < 0.0 {
        return Err(Error::NegativeDiscriminant(disc));
    }
    Ok((2.0 * d - s + disc.sqrt()) / 2.0)
}

/// The explicit matrix behind [`proof_quotient_lambda2_2part`], with blocks
/// `V(G1)` (size `n1`) and `V(G2) ∪ {v}` (size `n2 + 1`).
pub fn proof_quotient_2part(d: f64, n1: usize, n2: usize, m1: f64) -> Result<QuotientMatrix> {
    check_sizes(n1 as f64, n2 as f64)?;
    let a = m1 / n1 as f64;
    let b = m1 / (n2 + 1) as f64;
    QuotientMatrix::new(vec![vec![d - a, a], vec![b, d - b]], vec![n1, n2 + 1])
}

/// The explicit matrix behind [`proof_quotient_lambda2_3part`], with blocks
/// `V(G1)`, `{v}`, `V(G2)` of sizes `n1`, `1`, `n2`.
pub fn proof_quotient_3part(
    d: f64,
    n1: usize,
    n2: usize,
    m1: f64,
    m2: f64,
) -> Result<QuotientMatrix> {
    check_sizes(n1 as f64, n2 as f64)?;
    let a = m1 / n1 as f64;
    let c = m2 / n2 as f64;
    QuotientMatrix::new(
        vec![
            vec![d - a, a, 0.0],
            vec![m1, 0.0, m2],
            vec![0.0, c, d - c],
        ],
        vec![n1, 1, n2],
    )
}
