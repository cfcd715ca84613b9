//! Randomised property suites behind `krpack verify`. Each suite checks one
//! structural lemma on seeded random graphs whose maximum degree satisfies
//! the lemma's hypothesis, and refuses to run when it does not.

use serde::{Deserialize, Serialize};

use crate::clique::{enumerate_krs, pairwise_overlap, Mode};
use crate::error::{Error, Result};
use crate::generate::gen_planted_cliques;
use crate::graph::Graph;
use crate::intersect::{build_intersection_graph, find_claw};
use crate::packing::{
    check_disjointness_coincidence, exact_max_packing_with, greedy_maximal_packing, ExactConfig,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
#[cfg_attr(feature = "cli", derive(clap::ValueEnum))]
pub enum Suite {
    /// No induced K_{1,3} in the intersection graph.
    Claw,
    /// Intersecting K_r's share more than r/3 vertices.
    Overlap,
    /// No two K_r's share exactly one vertex; edge and vertex optima agree.
    Coincidence,
    /// Greedy maximal packings are maximum.
    Maximal,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct TrialPlan {
    pub r: usize,
    pub dmax: usize,
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub mode: Mode,
}

#[derive(Debug, Clone, Serialize)]
pub struct TrialViolation {
    pub seed: u64,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub trials: usize,
    /// Trials whose graph had at least two K_r's.
    pub nontrivial: usize,
    pub violations: Vec<TrialViolation>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// The degree hypothesis of each suite, as an error if `plan` misses it.
pub fn check_hypothesis(suite: Suite, plan: &TrialPlan) -> Result<()> {
    let (r, d) = (plan.r, plan.dmax);
    if r < 3 {
        return Err(Error::InvalidArgument(format!(
            "r must be at least 3, got {r}"
        )));
    }
    let ok = match (suite, plan.mode) {
        (Suite::Claw, Mode::Edge) => (4..=5).contains(&r) && d <= 2 * r - 2,
        (Suite::Claw | Suite::Overlap, _) => 3 * (d + 1) < 5 * r,
        (Suite::Coincidence, _) => d + 2 < 2 * r,
        (Suite::Maximal, _) => 2 * (d + 1) < 3 * r,
    };
    if ok {
        return Ok(());
    }
    let need = match (suite, plan.mode) {
        (Suite::Claw, Mode::Edge) => "r in {4, 5} and dmax <= 2r - 2",
        (Suite::Claw | Suite::Overlap, _) => "dmax < 5r/3 - 1",
        (Suite::Coincidence, _) => "dmax < 2r - 2",
        (Suite::Maximal, _) => "dmax < 3r/2 - 1",
    };
    Err(Error::Precondition(format!(
        "{suite:?} suite needs {need}; got r = {r}, dmax = {d}"
    )))
}

pub fn trial_graph(plan: &TrialPlan, k: usize) -> (u64, Graph) {
    let seed = plan.seed.wrapping_add(k as u64);
    (seed, gen_planted_cliques(plan.n, plan.r, plan.dmax, seed))
}

pub fn run_suite(suite: Suite, plan: &TrialPlan, exact: &ExactConfig) -> Result<SuiteReport> {
    check_hypothesis(suite, plan)?;
    let mut report = SuiteReport {
        suite,
        trials: plan.trials,
        nontrivial: 0,
        violations: Vec::new(),
    };
    let r = plan.r;
    for k in 0..plan.trials {
        let (seed, g) = trial_graph(plan, k);
        let cliques = enumerate_krs(&g, r)?;
        if cliques.len() >= 2 {
            report.nontrivial += 1;
        }
        let mut fail = |detail: String| report.violations.push(TrialViolation { seed, detail });
        match suite {
            Suite::Claw => {
                let h = build_intersection_graph(&g, r, plan.mode)?;
                if let Some(c) = find_claw(&h.graph) {
                    fail(format!(
                        "claw centred at {} with leaves {}, {}, {}",
                        h.nodes[c.center],
                        h.nodes[c.leaves[0]],
                        h.nodes[c.leaves[1]],
                        h.nodes[c.leaves[2]]
                    ));
                }
            }
            Suite::Overlap => {
                for (i, a) in cliques.iter().enumerate() {
                    for b in &cliques[i + 1..] {
                        let o = pairwise_overlap(a, b);
                        if o > 0 && 3 * o <= r {
                            fail(format!("{a} and {b} share only {o} vertices"));
                        }
                    }
                }
            }
            Suite::Coincidence => {
                if !check_disjointness_coincidence(&g, r)? {
                    fail("two K_r's share exactly one vertex".into());
                }
                let v = exact_max_packing_with(&g, r, Mode::Vertex, exact)?
                    .packing
                    .len();
                let e = exact_max_packing_with(&g, r, Mode::Edge, exact)?
                    .packing
                    .len();
                if v != e {
                    fail(format!("vertex optimum {v} but edge optimum {e}"));
                }
            }
            Suite::Maximal => {
                for mode in [Mode::Vertex, Mode::Edge] {
                    let greedy = greedy_maximal_packing(&g, r, mode)?.len();
                    let opt = exact_max_packing_with(&g, r, mode, exact)?.packing.len();
                    if greedy != opt {
                        fail(format!("{mode}: greedy {greedy} but optimum {opt}"));
                    }
                }
            }
        }
    }
    Ok(report)
}
