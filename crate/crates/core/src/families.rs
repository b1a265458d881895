//! Extremal multigraph families, their closed-form spectra, the cone
//! construction and random models.
//!
//! "Duplicating an edge `k` times" always means the pair ends up with
//! multiplicity `k`. Vertex numbering for each family:
//!
//! | family      | vertices                                                         |
//! |-------------|------------------------------------------------------------------|
//! | `B1(d)`     | `0, 1` of degree `d` (joined by `3d/4` edges), `2` of degree `d/2` |
//! | `H1(d)`     | first copy `0, 1`; shared vertex `2`; second copy `3, 4`          |
//! | `C(d, t)`   | `0..t`                                                           |
//! | `H(d, t)`   | `x = 0`, `y = 1`, the `C(d, t)` vertices `2..t+2`                 |
//! | `F(d)`      | the 4-cycle `0-1-2-3-0`; pairs at vertex `1` carry `(d−1)/2`      |
//! | `G4(d)`     | core `0..4` with heavy pairs `{0,1}`, `{2,3}`; `x = 4`, `y = 5`   |

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::rng::SplitMix64;

/// Pairings drawn before the configuration model gives up.
pub const RESAMPLE_LIMIT: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    B1,
    H1,
    C,
    H,
    F,
    G4,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::B1 => "b1",
            Family::H1 => "h1",
            Family::C => "c",
            Family::H => "h",
            Family::F => "f",
            Family::G4 => "g4",
        }
    }

    pub fn takes_t(self) -> bool {
        matches!(self, Family::C | Family::H)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "b1" => Ok(Family::B1),
            "h1" => Ok(Family::H1),
            "c" => Ok(Family::C),
            "h" => Ok(Family::H),
            "f" => Ok(Family::F),
            "g4" => Ok(Family::G4),
            other => Err(Error::InvalidParameter(format!("unknown family '{other}'"))),
        }
    }
}

/// A family together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub d: u64,
    /// Only used by [`Family::C`] and [`Family::H`].
    pub t: Option<u64>,
}

impl FamilySpec {
    pub fn build(&self) -> Result<Multigraph> {
        let need_t = || {
            self.t.ok_or_else(|| {
                Error::InvalidParameter(format!("family {} needs t", self.family))
            })
        };
        match self.family {
            Family::B1 => build_b1(self.d),
            Family::H1 => build_h1(self.d),
            Family::C => build_c(self.d, need_t()?),
            Family::H => build_h(self.d, need_t()?),
            Family::F => build_f(self.d),
            Family::G4 => build_g4(self.d),
        }
    }

    /// Closed-form adjacency spectrum where one is known.
    pub fn expected_spectrum(&self) -> Option<Result<ExpectedSpectrum>> {
        match self.family {
            Family::H1 => Some(expected_spectrum_h1(self.d)),
            Family::H => self.t.map(|t| expected_spectrum_h(self.d, t)),
            Family::G4 => Some(expected_spectrum_g4(self.d)),
            _ => None,
        }
    }
}

/// Closed-form spectrum as `(value, multiplicity)` pairs, values descending.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExpectedSpectrum {
    entries: Vec<(f64, usize)>,
}

impl ExpectedSpectrum {
    /// Sorts descending and merges exactly equal values.
    pub fn new(mut entries: Vec<(f64, usize)>) -> Self {
        entries.retain(|e| e.1 > 0);
        entries.sort_by(|a, b| b.0.total_cmp(&a.0));
        let mut merged: Vec<(f64, usize)> = Vec::new();
        for (v, k) in entries {
            match merged.last_mut() {
                Some(last) if last.0 == v => last.1 += k,
                _ => merged.push((v, k)),
            }
        }
        ExpectedSpectrum { entries: merged }
    }

    pub fn entries(&self) -> &[(f64, usize)] {
        &self.entries
    }

    /// Total multiplicity, the order of the graph.
    pub fn len(&self) -> usize {
        self.entries.iter().map(|e| e.1).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Values repeated by multiplicity, descending.
    pub fn values(&self) -> Vec<f64> {
        self.entries
            .iter()
            .flat_map(|&(v, k)| std::iter::repeat_n(v, k))
            .collect()
    }
}

fn invalid(msg: String) -> Error {
    Error::InvalidParameter(msg)
}

/// The 3-vertex multigraph with degrees `(d, d, d/2)`: `m(0,1) = 3d/4`, `m(1,2) = m(2,0) = d/4`.
pub fn build_b1(d: u64) -> Result<Multigraph> {
    if d < 4 || !d.is_multiple_of(4) {
        return Err(invalid(format!("B1 needs d >= 4 divisible by 4, got {d}")));
    }
    Multigraph::from_edges(3, [(0, 1, 3 * d / 4), (1, 2, d / 4), (2, 0, d / 4)])
}

/// Two copies of `B1(d)` glued at their degree-`d/2` vertex; `d`-regular with cut vertex 2.
pub fn build_h1(d: u64) -> Result<Multigraph> {
    if d < 4 || !d.is_multiple_of(4) {
        return Err(invalid(format!("H1 needs d >= 4 divisible by 4, got {d}")));
    }
    let (a, b) = (3 * d / 4, d / 4);
    Multigraph::from_edges(5, [(0, 1, a), (0, 2, b), (1, 2, b), (2, 3, b), (2, 4, b), (3, 4, a)])
}

fn check_ct(d: u64, t: u64) -> Result<()> {
    if t < 2 {
        return Err(invalid(format!("t must be at least 2, got {t}")));
    }
    let step = t.checked_mul(t - 1).ok_or_else(|| invalid(format!("t = {t} too large")))?;
    if d == 0 || !d.is_multiple_of(step) {
        return Err(invalid(format!(
            "d must be a positive multiple of t(t-1) = {step}, got {d}"
        )));
    }
    Ok(())
}

/// `K_t` with every pair at multiplicity `(t−2)d / (t(t−1))`; degree `(t−2)d/t`.
/// For `t = 2` this is two isolated vertices.
pub fn build_c(d: u64, t: u64) -> Result<Multigraph> {
    check_ct(d, t)?;
    let n = t as usize;
    let k = (t - 2) * d / (t * (t - 1));
    let mut g = Multigraph::empty(n);
    if k > 0 {
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edges(u, v, k)?;
            }
        }
    }
    Ok(g)
}

/// `C(d, t)` plus nonadjacent `x`, `y` each joined to every `C` vertex by `d/t` edges.
/// `d`-regular with `κ = t` and `m(G) = d/t`.
pub fn build_h(d: u64, t: u64) -> Result<Multigraph> {
    let core = build_c(d, t)?;
    let mut g = Multigraph::empty(2).disjoint_union(&core);
    let m = d / t;
    for c in 2..(t as usize + 2) {
        g.add_edges(0, c, m)?;
        g.add_edges(1, c, m)?;
    }
    Ok(g)
}

/// `{d, −2d/t, 0, (−(t−2)d/(t(t−1)))^{(t−1)}}`.
///
/// `d` and `−2d/t` come from the equitable partition `{{x, y}, V(C)}`; the `0`
/// from the vector antisymmetric on `{x, y}`; the remaining `t − 1` values from
/// vectors summing to zero on `C`.
pub fn expected_spectrum_h(d: u64, t: u64) -> Result<ExpectedSpectrum> {
    check_ct(d, t)?;
    let (df, tf) = (d as f64, t as f64);
    Ok(ExpectedSpectrum::new(vec![
        (df, 1),
        (-2.0 * df / tf, 1),
        (0.0, 1),
        (-(((t - 2) * d / (t * (t - 1))) as f64), (t - 1) as usize),
    ]))
}

/// `{d, 3d/4, −d/4, (−3d/4)^{(2)}}`.
pub fn expected_spectrum_h1(d: u64) -> Result<ExpectedSpectrum> {
    if d < 4 || !d.is_multiple_of(4) {
        return Err(invalid(format!("H1 needs d >= 4 divisible by 4, got {d}")));
    }
    let df = d as f64;
    Ok(ExpectedSpectrum::new(vec![
        (df, 1),
        (0.75 * df, 1),
        (-0.25 * df, 1),
        (-0.75 * df, 2),
    ]))
}

/// The 4-cycle with `m(0,1) = m(1,2) = (d−1)/2` and `m(2,3) = m(3,0) = (d+1)/2`;
/// degrees `(d, d−1, d, d+1)`.
pub fn build_f(d: u64) -> Result<Multigraph> {
    if d < 3 || d.is_multiple_of(2) {
        return Err(invalid(format!("F needs odd d >= 3, got {d}")));
    }
    let (lo, hi) = ((d - 1) / 2, d.div_ceil(2));
    Multigraph::from_edges(4, [(0, 1, lo), (1, 2, lo), (2, 3, hi), (3, 0, hi)])
}

/// Closed-form `μ2(F(d)) = 3d/2 − sqrt(d² + 8)/2`.
pub fn f_mu2(d: u64) -> f64 {
    let df = d as f64;
    1.5 * df - (df * df + 8.0).sqrt() / 2.0
}

/// `K_4` with pairs `{0,1}` and `{2,3}` at multiplicity `d/2 − 2`, plus nonadjacent
/// `x = 4`, `y = 5` joined to each core vertex by `d/4` edges. `d`-regular.
pub fn build_g4(d: u64) -> Result<Multigraph> {
    if d < 8 || !d.is_multiple_of(4) {
        return Err(invalid(format!("G4 needs d >= 8 divisible by 4, got {d}")));
    }
    let heavy = d / 2 - 2;
    let q = d / 4;
    let mut edges = vec![(0, 1, heavy), (2, 3, heavy), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1)];
    for x in [4, 5] {
        edges.extend((0..4).map(|c| (x, c, q)));
    }
    Multigraph::from_edges(6, edges)
}

/// `{d, d/2 − 4, 0, (2 − d/2)^{(2)}, −d/2}`.
pub fn expected_spectrum_g4(d: u64) -> Result<ExpectedSpectrum> {
    if d < 8 || !d.is_multiple_of(4) {
        return Err(invalid(format!("G4 needs d >= 8 divisible by 4, got {d}")));
    }
    let df = d as f64;
    Ok(ExpectedSpectrum::new(vec![
        (df, 1),
        (df / 2.0 - 4.0, 1),
        (0.0, 1),
        (2.0 - df / 2.0, 2),
        (-df / 2.0, 1),
    ]))
}

/// Adds an apex (vertex `n`) joined to every vertex of `g` by `m` edges.
pub fn cone(g: &Multigraph, m: u64) -> Result<Multigraph> {
    if m == 0 {
        return Err(invalid("cone multiplicity must be at least 1".into()));
    }
    let n = g.vertex_count();
    let mut out = g.disjoint_union(&Multigraph::empty(1));
    for v in 0..n {
        out.add_edges(n, v, m)?;
    }
    Ok(out)
}

/// `d`-regular loopless multigraph from the configuration model.
///
/// Lays out `d` stubs per vertex (`0,0,..,1,1,..`), shuffles them with
/// [`SplitMix64::shuffle`] and pairs positions `2i, 2i+1`. Any pairing with a
/// loop is thrown away whole and redrawn from the same generator.
pub fn random_regular_multigraph(n: usize, d: u64, seed: u64) -> Result<Multigraph> {
    random_regular_multigraph_from(n, d, &mut SplitMix64::new(seed))
}

/// As [`random_regular_multigraph`], drawing from an existing generator.
pub fn random_regular_multigraph_from(n: usize, d: u64, rng: &mut SplitMix64) -> Result<Multigraph> {
    if n < 2 {
        return Err(invalid(format!("configuration model needs n >= 2, got {n}")));
    }
    if !(n as u64 * d).is_multiple_of(2) {
        return Err(invalid(format!("n*d must be even, got n={n}, d={d}")));
    }
    let mut stubs: Vec<usize> = (0..n)
        .flat_map(|v| std::iter::repeat_n(v, d as usize))
        .collect();
    for _ in 0..RESAMPLE_LIMIT {
        rng.shuffle(&mut stubs);
        if stubs.chunks_exact(2).all(|p| p[0] != p[1]) {
            return Multigraph::from_edges(n, stubs.chunks_exact(2).map(|p| (p[0], p[1], 1)));
        }
    }
    Err(Error::ResampleLimit(RESAMPLE_LIMIT))
}

/// Each pair present independently with probability `p`, multiplicity uniform in `1..=max_mult`.
/// Pairs are visited in lexicographic order, drawing the presence test first.
pub fn random_multigraph(n: usize, p: f64, max_mult: u64, rng: &mut SplitMix64) -> Result<Multigraph> {
    if !(0.0..=1.0).contains(&p) || max_mult == 0 {
        return Err(invalid(format!("need 0 <= p <= 1 and max_mult >= 1, got p={p}, max_mult={max_mult}")));
    }
    let mut g = Multigraph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.next_f64() < p {
                let m = rng.range_inclusive(1, max_mult);
                g.add_edges(u, v, m)?;
            }
        }
    }
    Ok(g)
}
