//! Randomised verification campaigns and the `μ2 − κ'` gap explorer.
//!
//! Trial `i` of a run seeded with `s` draws everything from
//! `SplitMix64::new(trial_seed(s, i))`, so a report is a pure function of the
//! model, the suite, the trial count and the seed, whatever the thread count.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{build_f, build_h, f_mu2, random_multigraph, random_regular_multigraph_from};
use crate::graph::Multigraph;
use crate::par::Execution;
use crate::rng::{trial_seed, SplitMix64};
use crate::theorems::{Exemption, GraphFacts, TheoremId, TheoremVerdict, GUARD_BAND};

/// Largest `n` a campaign may sample.
pub const MAX_CAMPAIGN_N: usize = 14;
/// Largest `d` a campaign may sample.
pub const MAX_CAMPAIGN_D: u64 = 12;

const PAIR_DRAW_LIMIT: usize = 10_000;

/// How each trial's graph is drawn.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SamplingModel {
    /// Configuration model with fixed `n` and `d`.
    Configuration { n: usize, d: u64 },
    /// Configuration model with `n` and `d` drawn uniformly per trial
    /// (the pair is redrawn until `n·d` is even).
    RegularSweep {
        n_min: usize,
        n_max: usize,
        d_min: u64,
        d_max: u64,
    },
    /// [`random_multigraph`] with `n` drawn uniformly per trial.
    Erdos {
        n_min: usize,
        n_max: usize,
        p: f64,
        max_mult: u64,
    },
}

impl SamplingModel {
    /// Random regular multigraphs with `3 ≤ n ≤ 12` and `1 ≤ d ≤ 10`.
    pub fn default_regular() -> Self {
        SamplingModel::RegularSweep {
            n_min: 3,
            n_max: 12,
            d_min: 1,
            d_max: 10,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidParameter(m));
        match *self {
            SamplingModel::Configuration { n, d } => {
                if !(2..=MAX_CAMPAIGN_N).contains(&n) || d > MAX_CAMPAIGN_D {
                    return bad(format!(
                        "need 2 <= n <= {MAX_CAMPAIGN_N} and d <= {MAX_CAMPAIGN_D}, got n={n}, d={d}"
                    ));
                }
                if !(n as u64 * d).is_multiple_of(2) {
                    return bad(format!("n*d must be even, got n={n}, d={d}"));
                }
            }
            SamplingModel::RegularSweep {
                n_min,
                n_max,
                d_min,
                d_max,
            } => {
                if n_min < 2 || n_min > n_max || n_max > MAX_CAMPAIGN_N {
                    return bad(format!("need 2 <= n_min <= n_max <= {MAX_CAMPAIGN_N}"));
                }
                if d_min > d_max || d_max > MAX_CAMPAIGN_D {
                    return bad(format!("need d_min <= d_max <= {MAX_CAMPAIGN_D}"));
                }
                // some n in range must pair with some d to an even product
                if d_min == d_max && d_min % 2 == 1 && n_min == n_max && n_min % 2 == 1 {
                    return bad("n*d is odd for the only admissible (n, d)".into());
                }
            }
            SamplingModel::Erdos {
                n_min,
                n_max,
                p,
                max_mult,
            } => {
                if n_min < 2 || n_min > n_max || n_max > MAX_CAMPAIGN_N {
                    return bad(format!("need 2 <= n_min <= n_max <= {MAX_CAMPAIGN_N}"));
                }
                if !(0.0..=1.0).contains(&p) || max_mult == 0 {
                    return bad(format!("need 0 <= p <= 1 and max_mult >= 1, got p={p}, max_mult={max_mult}"));
                }
            }
        }
        Ok(())
    }

    pub fn sample(&self, rng: &mut SplitMix64) -> Result<Multigraph> {
        match *self {
            SamplingModel::Configuration { n, d } => random_regular_multigraph_from(n, d, rng),
            SamplingModel::RegularSweep {
                n_min,
                n_max,
                d_min,
                d_max,
            } => {
                // validate() guarantees some admissible pair has an even product
                for _ in 0..PAIR_DRAW_LIMIT {
                    let n = rng.range_inclusive(n_min as u64, n_max as u64) as usize;
                    let d = rng.range_inclusive(d_min, d_max);
                    if (n as u64 * d).is_multiple_of(2) {
                        return random_regular_multigraph_from(n, d, rng);
                    }
                }
                Err(Error::InvalidParameter(format!(
                    "no (n, d) with even n*d after {PAIR_DRAW_LIMIT} draws"
                )))
            }
            SamplingModel::Erdos {
                n_min,
                n_max,
                p,
                max_mult,
            } => {
                let n = rng.range_inclusive(n_min as u64, n_max as u64) as usize;
                random_multigraph(n, p, max_mult, rng)
            }
        }
    }
}

/// Which checkers a campaign runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    #[default]
    All,
    /// `μ2 ≤ κ·m` and `μ2 ≤ κ'·m`.
    Fiedler,
    /// `λ2 < 3d/4 ⟹ κ ≥ 2`.
    Main,
    /// The two `κ'` threshold theorems.
    Edge,
}

impl Suite {
    pub fn theorems(self) -> &'static [TheoremId] {
        match self {
            Suite::All => &TheoremId::ALL,
            Suite::Fiedler => &[TheoremId::FiedlerMultigraph, TheoremId::CorollaryEdge],
            Suite::Main => &[TheoremId::MainKappa2],
            Suite::Edge => &[TheoremId::KappaPrime2, TheoremId::KappaPrimeT],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Fiedler => "fiedler",
            Suite::Main => "main",
            Suite::Edge => "edge",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Suite::All),
            "fiedler" => Ok(Suite::Fiedler),
            "main" => Ok(Suite::Main),
            "edge" => Ok(Suite::Edge),
            other => Err(Error::InvalidParameter(format!("unknown suite '{other}'"))),
        }
    }
}

/// Edge list of a sampled graph, for reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub n: usize,
    pub edges: Vec<(usize, usize, u64)>,
}

impl From<&Multigraph> for GraphRecord {
    fn from(g: &Multigraph) -> Self {
        GraphRecord {
            n: g.vertex_count(),
            edges: g.edges().collect(),
        }
    }
}

impl GraphRecord {
    pub fn to_graph(&self) -> Result<Multigraph> {
        Multigraph::from_edges(self.n, self.edges.iter().copied())
    }
}

/// All verdicts for one graph under `suite`.
///
/// `KappaPrimeT` runs for every `t` in `2..d` (where `θ(d, t)` is defined), or
/// once to record the exemption when the graph is exempt anyway.
pub fn check_graph(facts: &GraphFacts, suite: Suite) -> Result<Vec<TheoremVerdict>> {
    let mut out = Vec::new();
    for &theorem in suite.theorems() {
        match theorem {
            TheoremId::FiedlerMultigraph => out.push(facts.fiedler_multigraph()),
            TheoremId::CorollaryEdge => out.push(facts.corollary_edge()),
            TheoremId::KappaPrime2 => out.push(facts.kappa_prime_2()),
            TheoremId::MainKappa2 => out.push(facts.main_kappa_2()),
            TheoremId::AlphaObservation => out.push(facts.alpha_observation()?),
            TheoremId::KappaPrimeT => {
                let d = facts.regular.unwrap_or(0);
                if d >= 3 {
                    for t in 2..d {
                        out.push(facts.kappa_prime_t(t)?);
                    }
                } else {
                    // θ(d, t) has no t >= 2 in range; only exemptions can be recorded
                    let v = facts.kappa_prime_t(2);
                    if let Ok(v) = v {
                        if v.exempt {
                            out.push(v);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Aggregate for one theorem over a campaign.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct TheoremStats {
    pub checked: usize,
    pub premise_held: usize,
    pub violations: usize,
    pub exempt: BTreeMap<String, usize>,
    /// Smallest conclusion margin among premise-holding verdicts.
    pub tightest_margin: Option<f64>,
    pub tightest_trial: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub trial: u64,
    pub graph: GraphRecord,
    pub verdict: TheoremVerdict,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GapWitness {
    pub trial: u64,
    pub gap: f64,
    pub mu2: f64,
    pub kappa_prime: u64,
    pub graph: GraphRecord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialError {
    pub trial: u64,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub model: SamplingModel,
    pub suite: Suite,
    pub trials: u64,
    pub seed: u64,
    pub theorems: BTreeMap<String, TheoremStats>,
    pub violations: Vec<Violation>,
    pub best_gap: Option<GapWitness>,
    pub errors: Vec<TrialError>,
}

impl CampaignReport {
    /// No violations and no solver errors.
    pub fn passes(&self) -> bool {
        self.violations.is_empty() && self.errors.is_empty()
    }

    pub fn violation_count(&self) -> usize {
        self.violations.len()
    }
}

struct TrialOutcome {
    graph: Multigraph,
    verdicts: Vec<TheoremVerdict>,
    gap: Option<(f64, f64, u64)>,
}

fn run_trial(model: &SamplingModel, suite: Suite, seed: u64, index: u64) -> Result<TrialOutcome> {
    let mut rng = SplitMix64::new(trial_seed(seed, index));
    let graph = model.sample(&mut rng)?;
    // trials are already spread across threads
    let facts = GraphFacts::compute_with(&graph, Execution::Sequential)?;
    let verdicts = check_graph(&facts, suite)?;
    let gap = match (facts.c_gap(), facts.mu2(), facts.kappa_prime()) {
        (Some(g), Some(mu2), Some(kp)) => Some((g, mu2, kp)),
        _ => None,
    };
    Ok(TrialOutcome {
        graph,
        verdicts,
        gap,
    })
}

/// Samples `trials` graphs, runs the suite on each, and aggregates in trial order.
pub fn run_campaign(
    model: &SamplingModel,
    suite: Suite,
    trials: u64,
    seed: u64,
    exec: Execution,
) -> Result<CampaignReport> {
    if trials == 0 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    model.validate()?;
    let outcomes = exec.map_range(trials as usize, |i| run_trial(model, suite, seed, i as u64));

    let mut report = CampaignReport {
        model: *model,
        suite,
        trials,
        seed,
        theorems: suite
            .theorems()
            .iter()
            .map(|t| (t.name().to_string(), TheoremStats::default()))
            .collect(),
        violations: Vec::new(),
        best_gap: None,
        errors: Vec::new(),
    };
    for (i, outcome) in outcomes.into_iter().enumerate() {
        let trial = i as u64;
        let outcome = match outcome {
            Ok(o) => o,
            Err(e) => {
                report.errors.push(TrialError {
                    trial,
                    message: e.to_string(),
                });
                continue;
            }
        };
        for v in &outcome.verdicts {
            let stats = report
                .theorems
                .get_mut(v.theorem.name())
                .expect("suite theorem registered");
            record(stats, v, trial);
            if v.violated {
                report.violations.push(Violation {
                    trial,
                    graph: GraphRecord::from(&outcome.graph),
                    verdict: v.clone(),
                });
            }
        }
        if let Some((gap, mu2, kappa_prime)) = outcome.gap {
            // strict comparison keeps the earliest trial on ties
            if report.best_gap.as_ref().is_none_or(|b| gap > b.gap) {
                report.best_gap = Some(GapWitness {
                    trial,
                    gap,
                    mu2,
                    kappa_prime,
                    graph: GraphRecord::from(&outcome.graph),
                });
            }
        }
    }
    Ok(report)
}

fn record(stats: &mut TheoremStats, v: &TheoremVerdict, trial: u64) {
    stats.checked += 1;
    if v.exempt {
        let reason = v.exemption.map_or("unknown", Exemption::name);
        *stats.exempt.entry(reason.to_string()).or_default() += 1;
        return;
    }
    if v.violated {
        stats.violations += 1;
    }
    if v.premise_holds {
        stats.premise_held += 1;
        if stats.tightest_margin.is_none_or(|m| v.margin < m) {
            stats.tightest_margin = Some(v.margin);
            stats.tightest_trial = Some(trial);
        }
    }
}

/// One row of the `H(d, t)` sharpness sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SharpnessRow {
    pub d: u64,
    pub t: u64,
    pub mu2: f64,
    pub kappa: usize,
    pub multiplicity: u64,
    pub lambda2: f64,
    /// `|μ2 − κ·m(G)|`.
    pub deviation: f64,
    /// `μ2 = κ·m(G)` within [`GUARD_BAND`], `κ = t` and `m(G) = d/t`.
    pub sharp: bool,
}

/// Builds `H(d, t)` for every valid `2 ≤ t ≤ t_max`, `d ≤ d_max` and records
/// how close `μ2` comes to `κ·m(G)`.
pub fn sharpness_sweep(d_max: u64, t_max: u64, exec: Execution) -> Result<Vec<SharpnessRow>> {
    let params: Vec<(u64, u64)> = (2..=t_max)
        .flat_map(|t| {
            let step = t * (t - 1);
            (1..=d_max / step).map(move |a| (a * step, t))
        })
        .collect();
    exec.map(&params, |&(d, t)| -> Result<SharpnessRow> {
        let g = build_h(d, t)?;
        let facts = GraphFacts::compute_with(&g, Execution::Sequential)?;
        let mu2 = facts.mu2().expect("n >= 4");
        let lambda2 = facts.lambda2().expect("n >= 4");
        let kappa = facts.kappa().expect("n >= 4");
        let multiplicity = facts.multiplicity.expect("H has edges");
        let deviation = (mu2 - (kappa as u64 * multiplicity) as f64).abs();
        Ok(SharpnessRow {
            d,
            t,
            mu2,
            kappa,
            multiplicity,
            lambda2,
            deviation,
            sharp: deviation < GUARD_BAND && kappa as u64 == t && multiplicity == d / t,
        })
    })
    .into_iter()
    .collect()
}

/// `μ2(F(d)) − κ'(F(d))` for one odd `d`, computed numerically and in closed form.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyGapRow {
    pub d: u64,
    pub gap: f64,
    pub closed_form: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GapReport {
    pub trials: u64,
    pub seed: u64,
    /// Largest `μ2 − κ'` among sampled graphs.
    pub best_sampled: Option<GapWitness>,
    pub f_family: Vec<FamilyGapRow>,
    /// Supremum over the `F` rows.
    pub f_family_sup: f64,
}

/// Samples `trials` random multigraphs (`2 ≤ n ≤ 8`, pair probability 0.6,
/// multiplicities up to 4) and evaluates the `F(d)` family for odd `d ≤ f_d_max`,
/// reporting the largest `μ2 − κ'` seen. Reports only; makes no claim of a bound.
pub fn explore_c_gap(trials: u64, seed: u64, f_d_max: u64, exec: Execution) -> Result<GapReport> {
    let model = SamplingModel::Erdos {
        n_min: 2,
        n_max: 8,
        p: 0.6,
        max_mult: 4,
    };
    let report = run_campaign(&model, Suite::Fiedler, trials, seed, exec)?;
    if let Some(e) = report.errors.first() {
        return Err(Error::InvalidParameter(format!("trial {} failed: {}", e.trial, e.message)));
    }
    let ds: Vec<u64> = (3..=f_d_max).step_by(2).collect();
    let f_family = exec
        .map(&ds, |&d| -> Result<FamilyGapRow> {
            let g = build_f(d)?;
            let gap = crate::theorems::c_gap(&g)?;
            Ok(FamilyGapRow {
                d,
                gap,
                closed_form: f_mu2(d) - (d - 1) as f64,
            })
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let f_family_sup = f_family.iter().map(|r| r.gap).fold(f64::NEG_INFINITY, f64::max);
    Ok(GapReport {
        trials,
        seed,
        best_sampled: report.best_gap,
        f_family,
        f_family_sup,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_campaign_passes() {
        let model = SamplingModel::Configuration { n: 8, d: 4 };
        let r = run_campaign(&model, Suite::All, 100, 42, Execution::default()).unwrap();
        assert!(r.passes(), "{:?}", r.violations);
        assert_eq!(r.trials, 100);
        assert_eq!(r.theorems.len(), 6);
    }

    #[test]
    fn report_independent_of_execution() {
        let model = SamplingModel::default_regular();
        let a = run_campaign(&model, Suite::All, 40, 7, Execution::Sequential).unwrap();
        let b = run_campaign(&model, Suite::All, 40, 7, Execution::Parallel).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn invalid_models_rejected() {
        let bad = SamplingModel::Configuration { n: 3, d: 3 };
        assert!(run_campaign(&bad, Suite::All, 1, 0, Execution::Sequential).is_err());
        let big = SamplingModel::Configuration { n: 20, d: 4 };
        assert!(run_campaign(&big, Suite::All, 1, 0, Execution::Sequential).is_err());
        let ok = SamplingModel::Configuration { n: 4, d: 3 };
        assert!(run_campaign(&ok, Suite::All, 0, 0, Execution::Sequential).is_err());
    }

    #[test]
    fn single_trial_matches_direct_checks() {
        let model = SamplingModel::Configuration { n: 6, d: 4 };
        let r = run_campaign(&model, Suite::Main, 1, 5, Execution::Sequential).unwrap();
        let mut rng = SplitMix64::new(trial_seed(5, 0));
        let g = model.sample(&mut rng).unwrap();
        let direct = crate::theorems::check_main_kappa_2(&g).unwrap();
        let stats = &r.theorems["main_kappa_2"];
        assert_eq!(stats.checked, 1);
        assert_eq!(stats.premise_held, usize::from(direct.premise_holds));
        assert_eq!(stats.violations, usize::from(direct.violated));
    }

    #[test]
    fn suite_names() {
        for s in [Suite::All, Suite::Fiedler, Suite::Main, Suite::Edge] {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
    }
}
