//! Machine-checking the factor, spanning-tree and bound statements over graph
//! streams.
//!
//! A [`TheoremSpec`] names a statement and its parameters; [`verify`] runs it
//! over a [`GraphSource`], testing the conclusion with exact deciders on every
//! graph that satisfies the hypothesis, and aggregates a
//! [`VerificationReport`].

pub mod enumerate;
pub mod perturb;
pub mod report;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use crate::cliques::{binomial, count_cliques, posa_clique_bound, posa_property, PosaQuery};
use crate::closure::{closure_for_k_factor, closure_for_one_factor, closure_for_spanning_k_tree};
use crate::connectivity::is_m_connected;
use crate::error::{Error, Result};
use crate::factors::{has_k_factor, has_one_factor};
use crate::families::Family;
use crate::graph::Graph;
use crate::graph6;
use crate::iso::is_isomorphic;
use crate::spectral::{hong_bound, hong_shu_fang_bound, spectral_radius, DEFAULT_TOL};
use crate::thresholds::{
    clique_threshold_1f, clique_threshold_kf, ktree_min_order, leaf_min_order, phi, psi,
    spectral_threshold_1f, spectral_threshold_kf, ThresholdQuery,
};
use crate::trees::{
    has_spanning_k_tree_with_budget, has_spanning_tree_leaf_deg_with_budget,
    kaneko_check_with_budget, SearchBudget,
};

pub use enumerate::{enumerate_labeled, fold_labeled, sample_random, Filters, EXHAUSTIVE_MAX_ORDER};
pub use perturb::{perturbation_suite, PerturbationTarget};
pub use report::{format_sig, report_emit, ReportFormat, ReportParams, VerificationReport, CSV_HEADER};

/// Slack allowed when comparing spectral radii with bounds or with each other.
pub const SPECTRAL_SLACK: f64 = 1e-9;

/// The checkable statements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    /// Clique-count condition for a 1-factor, with two exceptional closures.
    T13i,
    /// Clique-count condition for a k-factor, `k >= 2`.
    T13ii,
    /// Edge-count condition for a 1-factor.
    C15i,
    /// Edge-count condition for a k-factor.
    C15ii,
    /// Spectral condition for a 1-factor.
    C18i,
    /// Spectral condition for a k-factor.
    C18ii,
    /// Spectral condition for a spanning k-tree in an m-connected graph.
    T110,
    /// Spectral condition for a spanning tree of bounded leaf degree.
    T113,
    /// A k-factor exists iff one exists in the `(n+2k-4)`- (or `(n-1)`-) closure.
    EqT12,
    /// In an m-connected graph, a spanning k-tree exists iff one exists in the
    /// `(n-(k-2)m-1)`-closure.
    EqT19,
    /// The subset criterion holds iff a spanning tree of leaf degree `<= k` exists.
    EqT111,
    /// `ρ <= (δ-1)/2 + sqrt(2e - δn + (δ+1)²/4)`.
    BndL27,
    /// `ρ <= sqrt(2e - n + 1)` for connected graphs.
    BndL33,
    /// `N_r <= C(n-s, r) + s·C(q, r-1)` under the `(s, q)` Pósa property.
    Fact21,
}

impl TheoremId {
    pub const ALL: [TheoremId; 14] = [
        TheoremId::T13i,
        TheoremId::T13ii,
        TheoremId::C15i,
        TheoremId::C15ii,
        TheoremId::C18i,
        TheoremId::C18ii,
        TheoremId::T110,
        TheoremId::T113,
        TheoremId::EqT12,
        TheoremId::EqT19,
        TheoremId::EqT111,
        TheoremId::BndL27,
        TheoremId::BndL33,
        TheoremId::Fact21,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::T13i => "T13i",
            TheoremId::T13ii => "T13ii",
            TheoremId::C15i => "C15i",
            TheoremId::C15ii => "C15ii",
            TheoremId::C18i => "C18i",
            TheoremId::C18ii => "C18ii",
            TheoremId::T110 => "T110",
            TheoremId::T113 => "T113",
            TheoremId::EqT12 => "EQ-T12",
            TheoremId::EqT19 => "EQ-T19",
            TheoremId::EqT111 => "EQ-T111",
            TheoremId::BndL27 => "BND-L27",
            TheoremId::BndL33 => "BND-L33",
            TheoremId::Fact21 => "FACT21",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Range(format!("unknown theorem id {s:?}")))
    }
}

/// A statement together with its parameters, validated on construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TheoremSpec {
    pub id: TheoremId,
    pub params: ThresholdQuery,
}

fn require(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Range(msg()))
    }
}

impl TheoremSpec {
    pub fn new(id: TheoremId, params: ThresholdQuery) -> Result<Self> {
        let spec = TheoremSpec { id, params };
        spec.validate()?;
        Ok(spec)
    }

    /// Checks the statement's parameter ranges.
    pub fn validate(&self) -> Result<()> {
        let ThresholdQuery { n, r, k, m, delta, q, s } = self.params;
        require((1..=64).contains(&n), || format!("n = {n} outside 1..=64"))?;
        match self.id {
            TheoremId::T13i => clique_threshold_1f(n, r, delta).map(|_| ()),
            TheoremId::T13ii => clique_threshold_kf(n, r, k, delta).map(|_| ()),
            TheoremId::C15i | TheoremId::C18i => spectral_threshold_1f(n, delta).map(|_| ()),
            TheoremId::C15ii | TheoremId::C18ii => spectral_threshold_kf(n, k, delta).map(|_| ()),
            TheoremId::T110 => {
                require(m >= 1 && k >= 2, || format!("needs m >= 1 and k >= 2, got m={m}, k={k}"))?;
                let min = ktree_min_order(m, k);
                require(n >= min, || format!("needs n >= {min} for m={m}, k={k}, got n={n}"))
            }
            TheoremId::T113 => {
                require(delta >= 1 && k >= 1, || format!("needs δ >= 1 and k >= 1, got δ={delta}, k={k}"))?;
                let min = leaf_min_order(delta, k);
                require(n >= min, || format!("needs n >= {min} for δ={delta}, k={k}, got n={n}"))
            }
            TheoremId::EqT12 => require(k >= 1 && k < n, || format!("needs 1 <= k < n, got k={k}, n={n}")),
            TheoremId::EqT19 => require(m >= 1 && k >= 2 && n > k, || {
                format!("needs m >= 1, k >= 2, n >= k + 1, got m={m}, k={k}, n={n}")
            }),
            TheoremId::EqT111 => require(k >= 1, || format!("needs k >= 1, got {k}")),
            TheoremId::BndL27 | TheoremId::BndL33 => Ok(()),
            TheoremId::Fact21 => require(s >= 1 && r >= 1 && n >= s + q, || {
                format!("needs s >= 1, r >= 1, n >= s + q, got n={n}, s={s}, q={q}, r={r}")
            }),
        }
    }

    /// Structural filters implied by the hypothesis, for exhaustive scans.
    pub fn exhaustive_filters(&self) -> Filters {
        let ThresholdQuery { n, r, k, m, delta, .. } = self.params;
        let clique_edges = |threshold: u128| {
            if r == 2 {
                threshold as usize + 1
            } else {
                // N_r <= C(t, r) whenever e <= C(t, 2).
                let t = (0..=n as u64).take_while(|&t| binomial(t, r as u64) <= threshold).last();
                t.map_or(0, |t| binomial(t, 2) as usize + 1)
            }
        };
        match self.id {
            TheoremId::T13i => Filters {
                min_degree: delta,
                nk_even: Some(1),
                min_edges: clique_threshold_1f(n, r, delta).map_or(0, |t| clique_edges(t.value)),
                ..Filters::none()
            },
            TheoremId::T13ii => Filters {
                min_degree: delta,
                nk_even: Some(k),
                min_edges: clique_threshold_kf(n, r, k, delta).map_or(0, |t| clique_edges(t.value)),
                ..Filters::none()
            },
            TheoremId::C15i => Filters {
                min_degree: delta,
                nk_even: Some(1),
                min_edges: phi(n, 2, delta + 1).map_or(0, |t| t as usize + 1),
                ..Filters::none()
            },
            TheoremId::C15ii => Filters {
                min_degree: delta,
                nk_even: Some(k),
                min_edges: psi(n, 2, k, delta + 1).map_or(0, |t| t as usize + 1),
                ..Filters::none()
            },
            TheoremId::C18i => Filters { min_degree: delta, nk_even: Some(1), ..Filters::none() },
            TheoremId::C18ii => Filters { min_degree: delta, nk_even: Some(k), ..Filters::none() },
            TheoremId::T110 | TheoremId::EqT19 => Filters { connected: true, min_degree: m, ..Filters::none() },
            TheoremId::T113 => Filters { connected: true, min_degree: delta, ..Filters::none() },
            TheoremId::EqT111 | TheoremId::BndL33 => Filters::connected(),
            TheoremId::EqT12 | TheoremId::BndL27 | TheoremId::Fact21 => Filters::none(),
        }
    }
}

/// Where the graphs come from.
#[derive(Debug, Clone, PartialEq)]
pub enum GraphSource {
    /// Every labeled graph on `n <= 8` vertices that can meet the hypothesis.
    Exhaustive,
    /// Seeded `G(n, p)` samples.
    Random { count: usize, p: f64, seed: u64 },
    /// An explicit list, e.g. decoded from a graph6 file.
    Graphs { label: String, graphs: Vec<Graph> },
}

impl GraphSource {
    fn label(&self) -> String {
        match self {
            GraphSource::Exhaustive => "exhaustive".into(),
            GraphSource::Random { count, p, seed } => format!("random:{count}:{p}:seed={seed}"),
            GraphSource::Graphs { label, .. } => label.clone(),
        }
    }
}

/// Tunables of a verification run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct VerifyOptions {
    pub budget: SearchBudget,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Outcome {
    Skip,
    Conclusion,
    Exceptional,
    Budget,
    Counterexample,
}

#[derive(Debug, Default)]
struct Tally {
    scanned: u64,
    hypothesis_hits: u64,
    conclusion_hits: u64,
    exceptional_hits: u64,
    budget_exhausted: u64,
    counterexamples: Vec<String>,
}

impl Tally {
    fn add(mut self, g: &Graph, outcome: Outcome) -> Self {
        self.scanned += 1;
        match outcome {
            Outcome::Skip => return self,
            Outcome::Conclusion => self.conclusion_hits += 1,
            Outcome::Exceptional => self.exceptional_hits += 1,
            Outcome::Budget => self.budget_exhausted += 1,
            Outcome::Counterexample => self.counterexamples.push(graph6::encode(g)),
        }
        self.hypothesis_hits += 1;
        self
    }

    fn merge(mut self, other: Tally) -> Self {
        self.scanned += other.scanned;
        self.hypothesis_hits += other.hypothesis_hits;
        self.conclusion_hits += other.conclusion_hits;
        self.exceptional_hits += other.exceptional_hits;
        self.budget_exhausted += other.budget_exhausted;
        self.counterexamples.extend(other.counterexamples);
        self
    }
}

/// Per-statement state precomputed once per run.
struct Checker {
    id: TheoremId,
    p: ThresholdQuery,
    budget: SearchBudget,
    count_threshold: u128,
    spectral_threshold: f64,
    exceptions: Vec<Graph>,
}

fn one_factor_exceptions(n: usize, delta: usize) -> Result<Vec<Graph>> {
    let mut out = vec![Family::Ex1fB { n, delta }.build()?];
    if delta % 2 == 0 {
        out.push(Family::Ex1fA { n, delta }.build()?);
    }
    Ok(out)
}

impl Checker {
    fn new(spec: &TheoremSpec, options: VerifyOptions) -> Result<Self> {
        spec.validate()?;
        let p = spec.params;
        let mut c = Checker {
            id: spec.id,
            p,
            budget: options.budget,
            count_threshold: 0,
            spectral_threshold: 0.0,
            exceptions: Vec::new(),
        };
        match spec.id {
            TheoremId::T13i => {
                c.count_threshold = clique_threshold_1f(p.n, p.r, p.delta)?.value;
                c.exceptions = one_factor_exceptions(p.n, p.delta)?;
            }
            TheoremId::T13ii => c.count_threshold = clique_threshold_kf(p.n, p.r, p.k, p.delta)?.value,
            TheoremId::C15i => {
                c.count_threshold = phi(p.n, 2, p.delta + 1)?;
                c.exceptions = one_factor_exceptions(p.n, p.delta)?;
            }
            TheoremId::C15ii => c.count_threshold = psi(p.n, 2, p.k, p.delta + 1)?,
            TheoremId::C18i => {
                c.spectral_threshold = spectral_threshold_1f(p.n, p.delta)?;
                c.exceptions = one_factor_exceptions(p.n, p.delta)?;
            }
            TheoremId::C18ii => c.spectral_threshold = spectral_threshold_kf(p.n, p.k, p.delta)?,
            TheoremId::T110 => {
                let ex = Family::ExKTree { n: p.n, m: p.m, k: p.k }.build()?;
                c.spectral_threshold = spectral_radius(&ex, DEFAULT_TOL)?;
                c.exceptions = vec![ex];
            }
            TheoremId::T113 => {
                let ex = Family::ExLeaf { n: p.n, delta: p.delta, k: p.k }.build()?;
                c.spectral_threshold = spectral_radius(&ex, DEFAULT_TOL)?;
                c.exceptions = vec![ex];
            }
            TheoremId::Fact21 => c.count_threshold = posa_clique_bound(p.n, p.s, p.q, p.r)?,
            _ => {}
        }
        Ok(c)
    }

    fn rho(g: &Graph) -> f64 {
        spectral_radius(g, DEFAULT_TOL).expect("power iteration converges on graphs of order <= 64")
    }

    fn one_factor_outcome(&self, g: &Graph) -> Outcome {
        if has_one_factor(g).is_some() {
            return Outcome::Conclusion;
        }
        let closure = closure_for_one_factor(g);
        if self.exceptions.iter().any(|ex| is_isomorphic(&closure, ex)) {
            Outcome::Exceptional
        } else {
            Outcome::Counterexample
        }
    }

    fn k_factor_outcome(&self, g: &Graph) -> Outcome {
        if has_k_factor(g, self.p.k).is_some() {
            Outcome::Conclusion
        } else {
            Outcome::Counterexample
        }
    }

    fn tree_outcome<T>(&self, found: Result<Option<T>>, g: &Graph) -> Outcome {
        match found {
            Ok(Some(_)) => Outcome::Conclusion,
            Ok(None) if self.exceptions.iter().any(|ex| is_isomorphic(g, ex)) => Outcome::Exceptional,
            Ok(None) => Outcome::Counterexample,
            Err(Error::BudgetExceeded(_)) => Outcome::Budget,
            Err(e) => panic!("tree search failed on {}: {e}", graph6::encode(g)),
        }
    }

    fn equivalence<T, U>(a: Result<Option<T>>, b: Result<Option<U>>) -> Outcome {
        match (a, b) {
            (Ok(x), Ok(y)) if x.is_some() == y.is_some() => Outcome::Conclusion,
            (Ok(_), Ok(_)) => Outcome::Counterexample,
            (Err(Error::BudgetExceeded(_)), _) | (_, Err(Error::BudgetExceeded(_))) => Outcome::Budget,
            (Err(e), _) | (_, Err(e)) => panic!("decider failed: {e}"),
        }
    }

    fn check(&self, g: &Graph) -> Outcome {
        let p = &self.p;
        if g.n() != p.n {
            return Outcome::Skip;
        }
        match self.id {
            TheoremId::T13i | TheoremId::C15i | TheoremId::C18i => {
                if g.min_degree() < p.delta || !self.count_hypothesis(g) {
                    return Outcome::Skip;
                }
                self.one_factor_outcome(g)
            }
            TheoremId::T13ii | TheoremId::C15ii | TheoremId::C18ii => {
                if g.min_degree() < p.delta || !self.count_hypothesis(g) {
                    return Outcome::Skip;
                }
                self.k_factor_outcome(g)
            }
            TheoremId::T110 => {
                if g.min_degree() < p.m || Self::rho(g) < self.spectral_threshold - SPECTRAL_SLACK {
                    return Outcome::Skip;
                }
                if !is_m_connected(g, p.m) {
                    return Outcome::Skip;
                }
                self.tree_outcome(has_spanning_k_tree_with_budget(g, p.k, self.budget), g)
            }
            TheoremId::T113 => {
                if g.min_degree() != p.delta
                    || !g.is_connected()
                    || Self::rho(g) < self.spectral_threshold - SPECTRAL_SLACK
                {
                    return Outcome::Skip;
                }
                self.tree_outcome(has_spanning_tree_leaf_deg_with_budget(g, p.k, self.budget), g)
            }
            TheoremId::EqT12 => {
                let (base, closed) = if p.k == 1 {
                    (has_one_factor(g).is_some(), has_one_factor(&closure_for_one_factor(g)).is_some())
                } else {
                    let c = closure_for_k_factor(g, p.k);
                    (has_k_factor(g, p.k).is_some(), has_k_factor(&c, p.k).is_some())
                };
                if base == closed {
                    Outcome::Conclusion
                } else {
                    Outcome::Counterexample
                }
            }
            TheoremId::EqT19 => {
                if !is_m_connected(g, p.m) {
                    return Outcome::Skip;
                }
                let c = closure_for_spanning_k_tree(g, p.k, p.m);
                Self::equivalence(
                    has_spanning_k_tree_with_budget(g, p.k, self.budget),
                    has_spanning_k_tree_with_budget(&c, p.k, self.budget),
                )
            }
            TheoremId::EqT111 => {
                if !g.is_connected() {
                    return Outcome::Skip;
                }
                let criterion = kaneko_check_with_budget(g, p.k, self.budget).map(|v| v.holds().then_some(()));
                Self::equivalence(criterion, has_spanning_tree_leaf_deg_with_budget(g, p.k, self.budget))
            }
            TheoremId::BndL27 => {
                if Self::rho(g) <= hong_shu_fang_bound(g) + SPECTRAL_SLACK {
                    Outcome::Conclusion
                } else {
                    Outcome::Counterexample
                }
            }
            TheoremId::BndL33 => {
                let Ok(bound) = hong_bound(g) else {
                    return Outcome::Skip;
                };
                if Self::rho(g) <= bound + SPECTRAL_SLACK {
                    Outcome::Conclusion
                } else {
                    Outcome::Counterexample
                }
            }
            TheoremId::Fact21 => {
                if !posa_property(g, PosaQuery { s: p.s, q: p.q }) {
                    return Outcome::Skip;
                }
                if count_cliques(g, p.r) <= self.count_threshold {
                    Outcome::Conclusion
                } else {
                    Outcome::Counterexample
                }
            }
        }
    }

    fn count_hypothesis(&self, g: &Graph) -> bool {
        match self.id {
            TheoremId::T13i | TheoremId::T13ii => count_cliques(g, self.p.r) > self.count_threshold,
            TheoremId::C15i | TheoremId::C15ii => g.edge_count() as u128 > self.count_threshold,
            _ => Self::rho(g) > self.spectral_threshold,
        }
    }
}

/// Checks `spec` over `source` with default options.
pub fn verify(spec: &TheoremSpec, source: &GraphSource) -> Result<VerificationReport> {
    verify_with(spec, source, VerifyOptions::default())
}

const RANDOM_BATCH: usize = 4096;

/// Checks `spec` over `source`. Graphs whose order differs from `spec.params.n`
/// are a range error; decider budget exhaustion is counted, not raised.
pub fn verify_with(
    spec: &TheoremSpec,
    source: &GraphSource,
    options: VerifyOptions,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let checker = Checker::new(spec, options)?;
    let n = spec.params.n;
    let tally = match source {
        GraphSource::Exhaustive => fold_labeled(
            n,
            spec.exhaustive_filters(),
            Tally::default,
            |t, g| {
                let outcome = checker.check(g);
                t.add(g, outcome)
            },
            Tally::merge,
        )?,
        GraphSource::Random { count, p, seed } => {
            let mut stream = sample_random(n, *p, *count, *seed)?;
            let mut total = Tally::default();
            loop {
                let batch: Vec<Graph> = stream.by_ref().take(RANDOM_BATCH).collect();
                if batch.is_empty() {
                    break;
                }
                total = total.merge(tally_batch(&checker, &batch));
            }
            total
        }
        GraphSource::Graphs { graphs, .. } => {
            if let Some(g) = graphs.iter().find(|g| g.n() != n) {
                return Err(Error::Range(format!(
                    "input graph {} has {} vertices, expected {n}",
                    graph6::encode(g),
                    g.n()
                )));
            }
            tally_batch(&checker, graphs)
        }
    };
    let mut report = VerificationReport::new(spec.id.as_str(), spec.params.into(), source.label());
    report.scanned = tally.scanned;
    report.hypothesis_hits = tally.hypothesis_hits;
    report.conclusion_hits = tally.conclusion_hits;
    report.exceptional_hits = tally.exceptional_hits;
    report.budget_exhausted = tally.budget_exhausted;
    report.counterexamples = tally.counterexamples;
    report.finish(start.elapsed().as_secs_f64());
    Ok(report)
}

fn tally_batch(checker: &Checker, graphs: &[Graph]) -> Tally {
    graphs
        .par_iter()
        .fold(Tally::default, |t, g| {
            let outcome = checker.check(g);
            t.add(g, outcome)
        })
        .reduce(Tally::default, Tally::merge)
}
