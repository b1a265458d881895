//! Executable checks of the eigenvalue–connectivity bounds for multigraphs.
//!
//! Every check produces a [`TheoremVerdict`]. A verdict is `violated` only when
//! its premise holds, its conclusion fails, and the graph is not one of the
//! stated exceptions. Strict premises (`λ2 < threshold`) are evaluated with a
//! [`GUARD_BAND`] so graphs sitting exactly on a threshold count as premise-false.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::connectivity::{connectivity_report_with, independence_number, ConnectivityReport, INDEPENDENCE_LIMIT};
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::par::Execution;
use crate::spectral::{adjacency_spectrum, laplacian_spectrum, Spectrum};

/// Slack applied to strict premises and to real-valued conclusions.
pub const GUARD_BAND: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremId {
    /// `μ2 ≤ κ·m(G)` for non-complete underlying graphs.
    FiedlerMultigraph,
    /// `μ2 ≤ κ'·m(G)` for non-complete underlying graphs.
    CorollaryEdge,
    /// `λ2 < θ(d, 1)` implies `κ' ≥ 2`.
    KappaPrime2,
    /// `λ2 < θ(d, t)` implies `κ' ≥ t + 1`, for `t ≥ 2`.
    KappaPrimeT,
    /// `λ2 < 3d/4` implies `κ ≥ 2`, except for two vertices.
    MainKappa2,
    /// `λ_{α(G)} ≥ 0`.
    AlphaObservation,
}

impl TheoremId {
    pub const ALL: [TheoremId; 6] = [
        TheoremId::FiedlerMultigraph,
        TheoremId::CorollaryEdge,
        TheoremId::KappaPrime2,
        TheoremId::KappaPrimeT,
        TheoremId::MainKappa2,
        TheoremId::AlphaObservation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::FiedlerMultigraph => "fiedler_multigraph",
            TheoremId::CorollaryEdge => "corollary_edge",
            TheoremId::KappaPrime2 => "kappa_prime_2",
            TheoremId::KappaPrimeT => "kappa_prime_t",
            TheoremId::MainKappa2 => "main_kappa_2",
            TheoremId::AlphaObservation => "alpha_observation",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Why a graph falls outside a theorem's hypotheses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Exemption {
    UnderlyingComplete,
    TwoVertex,
    Irregular,
    /// Fewer than two vertices, so `λ2` or `κ` is undefined.
    Trivial,
    /// 0-regular, where the degree-based thresholds degenerate.
    ZeroDegree,
}

impl Exemption {
    pub fn name(self) -> &'static str {
        match self {
            Exemption::UnderlyingComplete => "underlying_complete",
            Exemption::TwoVertex => "two_vertex",
            Exemption::Irregular => "irregular",
            Exemption::Trivial => "trivial",
            Exemption::ZeroDegree => "zero_degree",
        }
    }
}

/// Size and degree data identifying the graph a verdict was computed on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub n: usize,
    pub min_degree: u64,
    pub max_degree: u64,
    pub multiplicity: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremVerdict {
    pub theorem: TheoremId,
    /// The `t` of [`TheoremId::KappaPrimeT`].
    pub t: Option<u64>,
    pub graph: GraphSummary,
    /// `None` for theorems without a numeric premise.
    pub premise_value: Option<f64>,
    pub threshold: Option<f64>,
    pub premise_holds: bool,
    pub conclusion_value: f64,
    pub conclusion_bound: f64,
    pub conclusion_holds: bool,
    /// Signed slack of the conclusion; non-negative (up to [`GUARD_BAND`]) when it holds.
    pub margin: f64,
    pub exempt: bool,
    pub exemption: Option<Exemption>,
    pub violated: bool,
}

/// `θ(d, t)`, the sharp `λ2` threshold for `κ' ≥ t + 1`:
/// `(d − 1 + sqrt(9d² − 10d + 17))/4` for `t = 1`, `d − t` for even `t`,
/// `d − t + 1` for odd `t ≥ 3`.
pub fn theta(d: u64, t: u64) -> Result<f64> {
    if t < 1 || t + 1 > d {
        return Err(Error::InvalidParameter(format!(
            "theta needs 1 <= t <= d-1, got d={d}, t={t}"
        )));
    }
    Ok(theta_unchecked(d, t))
}

fn theta_unchecked(d: u64, t: u64) -> f64 {
    let df = d as f64;
    let tf = t as f64;
    if t == 1 {
        (df - 1.0 + (9.0 * df * df - 10.0 * df + 17.0).sqrt()) / 4.0
    } else if t.is_multiple_of(2) {
        df - tf
    } else {
        df - tf + 1.0
    }
}

/// Everything the checkers read from one graph, computed once.
#[derive(Debug, Clone)]
pub struct GraphFacts {
    pub n: usize,
    pub regular: Option<u64>,
    pub multiplicity: Option<u64>,
    pub underlying_complete: bool,
    pub adjacency: Spectrum,
    pub laplacian: Spectrum,
    /// `None` when `n < 2`.
    pub connectivity: Option<ConnectivityReport>,
    /// `None` when `n` exceeds [`INDEPENDENCE_LIMIT`].
    pub alpha: Option<usize>,
    summary: GraphSummary,
}

impl GraphFacts {
    pub fn compute(g: &Multigraph) -> Result<Self> {
        GraphFacts::compute_with(g, Execution::default())
    }

    pub fn compute_with(g: &Multigraph, exec: Execution) -> Result<Self> {
        let n = g.vertex_count();
        let degrees = g.degrees();
        let multiplicity = g.multiplicity().ok();
        let connectivity = if n >= 2 {
            Some(connectivity_report_with(g, exec)?)
        } else {
            None
        };
        let alpha = if n <= INDEPENDENCE_LIMIT {
            Some(independence_number(g)?)
        } else {
            None
        };
        Ok(GraphFacts {
            n,
            regular: g.is_regular(),
            multiplicity,
            underlying_complete: g.is_underlying_complete(),
            adjacency: adjacency_spectrum(g)?,
            laplacian: laplacian_spectrum(g)?,
            connectivity,
            alpha,
            summary: GraphSummary {
                n,
                min_degree: degrees.min().unwrap_or(0),
                max_degree: degrees.max().unwrap_or(0),
                multiplicity,
            },
        })
    }

    pub fn summary(&self) -> &GraphSummary {
        &self.summary
    }

    pub fn lambda2(&self) -> Option<f64> {
        self.adjacency.largest(2).ok()
    }

    pub fn mu2(&self) -> Option<f64> {
        self.laplacian.smallest(2).ok()
    }

    pub fn kappa(&self) -> Option<usize> {
        self.connectivity.as_ref().map(|c| c.kappa)
    }

    pub fn kappa_prime(&self) -> Option<u64> {
        self.connectivity.as_ref().map(|c| c.kappa_prime)
    }

    fn verdict(&self, theorem: TheoremId) -> TheoremVerdict {
        TheoremVerdict {
            theorem,
            t: None,
            graph: self.summary.clone(),
            premise_value: None,
            threshold: None,
            premise_holds: true,
            conclusion_value: 0.0,
            conclusion_bound: 0.0,
            conclusion_holds: true,
            margin: 0.0,
            exempt: false,
            exemption: None,
            violated: false,
        }
    }

    /// `μ2 ≤ κ·m(G)` (or `κ'·m(G)` when `edge` is set).
    fn fiedler_like(&self, theorem: TheoremId, edge: bool) -> TheoremVerdict {
        let mut v = self.verdict(theorem);
        if self.underlying_complete {
            return exempt(v, Exemption::UnderlyingComplete);
        }
        // non-complete underlying graphs have n >= 2, hence μ2 and κ exist
        let mu2 = self.mu2().expect("n >= 2");
        let conn = self.connectivity.as_ref().expect("n >= 2");
        let cut = if edge { conn.kappa_prime as f64 } else { conn.kappa as f64 };
        // edgeless: κ = κ' = 0 and μ2 = 0, so any m works
        let m = self.multiplicity.unwrap_or(0) as f64;
        let bound = cut * m;
        v.conclusion_value = mu2;
        v.conclusion_bound = bound;
        v.margin = bound - mu2;
        v.conclusion_holds = mu2 <= bound + GUARD_BAND;
        finish(v)
    }

    pub fn fiedler_multigraph(&self) -> TheoremVerdict {
        self.fiedler_like(TheoremId::FiedlerMultigraph, false)
    }

    pub fn corollary_edge(&self) -> TheoremVerdict {
        self.fiedler_like(TheoremId::CorollaryEdge, true)
    }

    /// Shared shape of the `κ'` threshold theorems.
    fn edge_threshold(&self, theorem: TheoremId, t: u64, required: u64) -> Result<TheoremVerdict> {
        let mut v = self.verdict(theorem);
        if theorem == TheoremId::KappaPrimeT {
            v.t = Some(t);
        }
        v.conclusion_bound = required as f64;
        let Some(d) = self.regular else {
            return Ok(exempt(v, Exemption::Irregular));
        };
        if self.n < 2 {
            return Ok(exempt(v, Exemption::Trivial));
        }
        if self.underlying_complete {
            return Ok(exempt(v, Exemption::UnderlyingComplete));
        }
        if d == 0 {
            return Ok(exempt(v, Exemption::ZeroDegree));
        }
        let threshold = if t == 1 { theta_unchecked(d, 1) } else { theta(d, t)? };
        let lambda2 = self.lambda2().expect("n >= 2");
        let kappa_prime = self.kappa_prime().expect("n >= 2");
        v.premise_value = Some(lambda2);
        v.threshold = Some(threshold);
        v.premise_holds = lambda2 < threshold - GUARD_BAND;
        v.conclusion_value = kappa_prime as f64;
        v.margin = kappa_prime as f64 - required as f64;
        v.conclusion_holds = kappa_prime >= required;
        Ok(finish(v))
    }

    pub fn kappa_prime_2(&self) -> TheoremVerdict {
        self.edge_threshold(TheoremId::KappaPrime2, 1, 2)
            .expect("t = 1 threshold is defined for every d")
    }

    /// Errors when `t < 2`, or when `t > d − 1` for a regular non-exempt graph.
    pub fn kappa_prime_t(&self, t: u64) -> Result<TheoremVerdict> {
        if t < 2 {
            return Err(Error::InvalidParameter(format!("t must be at least 2, got {t}")));
        }
        self.edge_threshold(TheoremId::KappaPrimeT, t, t + 1)
    }

    pub fn main_kappa_2(&self) -> TheoremVerdict {
        let mut v = self.verdict(TheoremId::MainKappa2);
        v.conclusion_bound = 2.0;
        let Some(d) = self.regular else {
            return exempt(v, Exemption::Irregular);
        };
        match self.n {
            0 | 1 => return exempt(v, Exemption::Trivial),
            2 => return exempt(v, Exemption::TwoVertex),
            _ => {}
        }
        let threshold = 0.75 * d as f64;
        let lambda2 = self.lambda2().expect("n >= 3");
        let kappa = self.kappa().expect("n >= 3");
        v.premise_value = Some(lambda2);
        v.threshold = Some(threshold);
        v.premise_holds = lambda2 < threshold - GUARD_BAND;
        v.conclusion_value = kappa as f64;
        v.margin = kappa as f64 - 2.0;
        v.conclusion_holds = kappa >= 2;
        finish(v)
    }

    /// Errors when `α` was not computed (graph too large).
    pub fn alpha_observation(&self) -> Result<TheoremVerdict> {
        let mut v = self.verdict(TheoremId::AlphaObservation);
        let alpha = self.alpha.ok_or(Error::TooLarge {
            n: self.n,
            limit: INDEPENDENCE_LIMIT,
        })?;
        if alpha == 0 {
            return Ok(exempt(v, Exemption::Trivial));
        }
        let value = self.adjacency.largest(alpha)?;
        v.conclusion_value = value;
        v.margin = value;
        v.conclusion_holds = value >= -GUARD_BAND;
        Ok(finish(v))
    }

    /// `μ2 − κ'`; `None` when `n < 2`.
    pub fn c_gap(&self) -> Option<f64> {
        Some(self.mu2()? - self.kappa_prime()? as f64)
    }
}

fn exempt(mut v: TheoremVerdict, reason: Exemption) -> TheoremVerdict {
    v.exempt = true;
    v.exemption = Some(reason);
    v.premise_holds = false;
    v.violated = false;
    v
}

fn finish(mut v: TheoremVerdict) -> TheoremVerdict {
    v.violated = v.premise_holds && !v.conclusion_holds && !v.exempt;
    v
}

pub fn check_fiedler_multigraph(g: &Multigraph) -> Result<TheoremVerdict> {
    Ok(GraphFacts::compute(g)?.fiedler_multigraph())
}

pub fn check_corollary_edge(g: &Multigraph) -> Result<TheoremVerdict> {
    Ok(GraphFacts::compute(g)?.corollary_edge())
}

pub fn check_thm_kappa_prime_2(g: &Multigraph) -> Result<TheoremVerdict> {
    Ok(GraphFacts::compute(g)?.kappa_prime_2())
}

pub fn check_thm_kappa_prime_t(g: &Multigraph, t: u64) -> Result<TheoremVerdict> {
    GraphFacts::compute(g)?.kappa_prime_t(t)
}

pub fn check_main_kappa_2(g: &Multigraph) -> Result<TheoremVerdict> {
    Ok(GraphFacts::compute(g)?.main_kappa_2())
}

pub fn check_alpha_observation(g: &Multigraph) -> Result<TheoremVerdict> {
    let n = g.vertex_count();
    if n > INDEPENDENCE_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: INDEPENDENCE_LIMIT,
        });
    }
    GraphFacts::compute(g)?.alpha_observation()
}

/// `μ2(G) − κ'(G)`.
pub fn c_gap(g: &Multigraph) -> Result<f64> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::TooFewVertices { n, required: 2 });
    }
    let mu2 = laplacian_spectrum(g)?.smallest(2)?;
    let kappa_prime = crate::connectivity::edge_connectivity(g)?;
    Ok(mu2 - kappa_prime as f64)
}
