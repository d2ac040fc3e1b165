//! Radius-one perturbations around an extremal graph.
//!
//! The extremal graph must fail its property; every one-edge augmentation
//! must gain the property and strictly raise ρ; every one-edge deletion must
//! strictly lower ρ.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::factors::has_one_factor;
use crate::families::Family;
use crate::graph::Graph;
use crate::graph6;
use crate::spectral::{spectral_radius, DEFAULT_TOL};
use crate::trees::{has_spanning_k_tree_with_budget, kaneko_check_with_budget, SearchBudget};

use super::report::{ReportParams, VerificationReport};

/// Minimum change in ρ counted as a strict increase or decrease.
pub const RHO_MARGIN: f64 = 1e-8;

/// The property an extremal family is extremal for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PerturbationTarget {
    OneFactor,
    SpanningKTree(usize),
    LeafDegree(usize),
}

impl PerturbationTarget {
    /// The property associated with a named family.
    pub fn for_family(family: &Family) -> Result<Self> {
        match *family {
            Family::Ex1fA { .. } | Family::Ex1fB { .. } => Ok(PerturbationTarget::OneFactor),
            Family::ExKTree { k, .. } | Family::ExFan { k, .. } => Ok(PerturbationTarget::SpanningKTree(k)),
            Family::ExLeaf { k, .. } => Ok(PerturbationTarget::LeafDegree(k)),
            _ => Err(Error::Range(format!("{family} has no associated extremal property"))),
        }
    }

    fn holds(self, g: &Graph, budget: SearchBudget) -> Result<bool> {
        match self {
            PerturbationTarget::OneFactor => Ok(has_one_factor(g).is_some()),
            PerturbationTarget::SpanningKTree(k) => {
                Ok(has_spanning_k_tree_with_budget(g, k, budget)?.is_some())
            }
            PerturbationTarget::LeafDegree(k) => Ok(kaneko_check_with_budget(g, k, budget)?.holds()),
        }
    }
}

fn params(family: &Family, n: usize) -> ReportParams {
    let mut p = ReportParams { n, ..ReportParams::default() };
    match *family {
        Family::Ex1fA { delta, .. } | Family::Ex1fB { delta, .. } => p.delta = delta,
        Family::ExKTree { m, k, .. } => (p.m, p.k) = (m, k),
        Family::ExLeaf { delta, k, .. } => (p.delta, p.k) = (delta, k),
        Family::ExFan { k, .. } => p.k = k,
        _ => {}
    }
    p
}

/// Runs the three perturbation checks around `family`. Every checked graph
/// is one hypothesis hit; failures are reported as graph6 counterexamples
/// and budget exhaustion is counted separately.
pub fn perturbation_suite(family: &Family, budget: SearchBudget) -> Result<VerificationReport> {
    let start = Instant::now();
    let target = PerturbationTarget::for_family(family)?;
    let g = family.build()?;
    let rho = spectral_radius(&g, DEFAULT_TOL)?;
    let mut report = VerificationReport::new(
        format!("PERTURB {family}"),
        params(family, g.n()),
        "radius-1",
    );

    let record = |report: &mut VerificationReport, h: &Graph, ok: Result<bool>| {
        report.scanned += 1;
        report.hypothesis_hits += 1;
        match ok {
            Ok(true) => report.conclusion_hits += 1,
            Ok(false) => report.counterexamples.push(graph6::encode(h)),
            Err(Error::BudgetExceeded(_)) => report.budget_exhausted += 1,
            Err(e) => return Err(e),
        }
        Ok(())
    };

    record(&mut report, &g, target.holds(&g, budget).map(|has| !has))?;
    for (u, v) in g.non_edges().collect::<Vec<_>>() {
        let h = g.with_edge(u, v);
        let raised = spectral_radius(&h, DEFAULT_TOL)? > rho + RHO_MARGIN;
        let ok = if raised { target.holds(&h, budget) } else { Ok(false) };
        record(&mut report, &h, ok)?;
    }
    for (u, v) in g.edges().collect::<Vec<_>>() {
        let h = g.without_edge(u, v);
        let lowered = spectral_radius(&h, DEFAULT_TOL)? < rho - RHO_MARGIN;
        record(&mut report, &h, Ok(lowered))?;
    }
    report.finish(start.elapsed().as_secs_f64());
    Ok(report)
}
