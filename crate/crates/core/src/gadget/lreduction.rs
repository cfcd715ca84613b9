//! Empirical check of the L-reduction inequalities
//!
//! (i)  opt_T(f(x)) ≤ α · opt_S(x)
//! (ii) opt_S(x) − m_S(g(y)) ≤ β · (opt_T(f(x)) − |y|)
//!
//! for every sample source instance x and a spread of feasible target
//! solutions y: the optimum, the greedy packing, random sub-packings of
//! both, images of source solutions, and random maximal packings. Both
//! optima come from exact oracles.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{EdkKind, EdkReduction, VdkrReduction};
use crate::clique::{enumerate_krs, Clique, Mode};
use crate::error::Result;
use crate::generate::rng;
use crate::graph::Graph;
use crate::packing::mis::brute_force_mis;
use crate::packing::{
    exact_max_packing_with, greedy_maximal_packing, greedy_over, ExactConfig, Packing,
};
use crate::sat::{brute_force_maxsat, count_satisfied, Assignment, Formula};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
#[cfg_attr(feature = "cli", derive(clap::ValueEnum))]
pub enum ReductionKind {
    Vdkr,
    Edk4,
    Edk5,
}

impl ReductionKind {
    pub fn alpha(self) -> usize {
        match self {
            ReductionKind::Vdkr => 1,
            ReductionKind::Edk4 => 13,
            ReductionKind::Edk5 => 9,
        }
    }

    pub fn beta(self) -> usize {
        1
    }

    pub fn edk(self) -> Option<EdkKind> {
        match self {
            ReductionKind::Vdkr => None,
            ReductionKind::Edk4 => Some(EdkKind::K4),
            ReductionKind::Edk5 => Some(EdkKind::K5),
        }
    }
}

#[derive(Debug, Clone)]
pub enum Sample {
    Graph { graph: Graph, r: usize },
    Formula(Formula),
}

#[derive(Debug, Clone, Copy)]
pub struct LCheckConfig {
    pub seed: u64,
    /// Random sub-packings drawn from each of the optimum and greedy packing.
    pub subpackings: usize,
    /// Random maximal packings per sample.
    pub maximal: usize,
    /// Random source solutions mapped forward per sample.
    pub source_images: usize,
    pub exact: ExactConfig,
}

impl Default for LCheckConfig {
    fn default() -> Self {
        LCheckConfig {
            seed: 0,
            subpackings: 6,
            maximal: 4,
            source_images: 4,
            exact: ExactConfig::default(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    pub sample: usize,
    pub check: String,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct LReductionReport {
    pub kind: ReductionKind,
    pub alpha: usize,
    pub beta: usize,
    pub samples: usize,
    pub solutions_checked: usize,
    /// Largest opt_T / opt_S seen (samples with opt_S = 0 skipped).
    pub max_alpha_ratio: f64,
    /// Largest (opt_S − m_S) / (opt_T − |y|) over strictly suboptimal y.
    pub max_beta_ratio: f64,
    /// Samples where opt_T ≠ offset + opt_S (offset is 0 for vdkr).
    pub optimum_identity_failures: usize,
    pub violations: Vec<Violation>,
}

impl LReductionReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

struct Tally {
    report: LReductionReport,
}

impl Tally {
    fn alpha(&mut self, sample: usize, opt_t: usize, opt_s: usize) {
        let a = self.report.alpha;
        if opt_s > 0 {
            let ratio = opt_t as f64 / opt_s as f64;
            self.report.max_alpha_ratio = self.report.max_alpha_ratio.max(ratio);
        }
        if opt_t > a * opt_s {
            self.report.violations.push(Violation {
                sample,
                check: "alpha".into(),
                detail: format!("opt_T = {opt_t} > {a} * opt_S = {}", a * opt_s),
            });
        }
    }

    fn beta(
        &mut self,
        sample: usize,
        opt_s: usize,
        recovered: usize,
        opt_t: usize,
        size: usize,
        what: &str,
    ) {
        self.report.solutions_checked += 1;
        let b = self.report.beta;
        let src_gap = opt_s as f64 - recovered as f64;
        let tgt_gap = opt_t as f64 - size as f64;
        if tgt_gap > 0.0 {
            self.report.max_beta_ratio = self.report.max_beta_ratio.max(src_gap / tgt_gap);
        }
        if src_gap > b as f64 * tgt_gap {
            self.report.violations.push(Violation {
                sample,
                check: "beta".into(),
                detail: format!(
                    "{what}: opt_S - m_S = {opt_s} - {recovered} > {b} * (opt_T - |y|) = {b} * ({opt_t} - {size})"
                ),
            });
        }
    }

    fn mapping(&mut self, sample: usize, detail: String) {
        self.report.violations.push(Violation {
            sample,
            check: "mapping".into(),
            detail,
        });
    }
}

/// Random sub-packing: each clique kept with probability 1/2.
fn thin(p: &Packing, rng: &mut impl Rng) -> Packing {
    let keep = p
        .cliques()
        .iter()
        .filter(|_| rng.gen_bool(0.5))
        .cloned()
        .collect();
    Packing::from_cliques(p.r(), p.mode(), keep).expect("subset of a packing")
}

/// Greedy completion in a random clique order.
fn random_maximal(cliques: &[Clique], r: usize, mode: Mode, rng: &mut impl Rng) -> Packing {
    let mut order: Vec<usize> = (0..cliques.len()).collect();
    order.shuffle(rng);
    let shuffled: Vec<Clique> = order.iter().map(|&i| cliques[i].clone()).collect();
    let picked = greedy_over(&shuffled, mode, &[]);
    Packing::from_cliques(
        r,
        mode,
        picked.into_iter().map(|i| shuffled[i].clone()).collect(),
    )
    .expect("greedy output is a packing")
}

pub fn verify_l_reduction(
    kind: ReductionKind,
    samples: &[Sample],
    cfg: &LCheckConfig,
) -> Result<LReductionReport> {
    let mut t = Tally {
        report: LReductionReport {
            kind,
            alpha: kind.alpha(),
            beta: kind.beta(),
            samples: samples.len(),
            solutions_checked: 0,
            max_alpha_ratio: 0.0,
            max_beta_ratio: 0.0,
            optimum_identity_failures: 0,
            violations: Vec::new(),
        },
    };
    for (idx, sample) in samples.iter().enumerate() {
        let mut rng = rng(cfg.seed.wrapping_add(idx as u64));
        match (kind.edk(), sample) {
            (None, Sample::Graph { graph, r }) => {
                check_vdkr(&mut t, idx, graph, *r, cfg, &mut rng)?
            }
            (Some(ek), Sample::Formula(phi)) => check_edk(&mut t, idx, ek, phi, cfg, &mut rng)?,
            _ => {
                return Err(crate::error::Error::InvalidArgument(format!(
                    "sample {} does not match reduction kind {kind:?}",
                    idx + 1
                )))
            }
        }
    }
    Ok(t.report)
}

fn check_vdkr(
    t: &mut Tally,
    idx: usize,
    g: &Graph,
    r: usize,
    cfg: &LCheckConfig,
    rng: &mut impl Rng,
) -> Result<()> {
    let red = VdkrReduction::new(g, r)?;
    let (opt_s, _) = brute_force_mis(g)?;
    let opt = exact_max_packing_with(&red.target, r, Mode::Vertex, &cfg.exact)?.packing;
    let opt_t = opt.len();
    t.alpha(idx, opt_t, opt_s);
    if opt_t != opt_s {
        t.report.optimum_identity_failures += 1;
    }

    let mut ys: Vec<(String, Packing)> = vec![("optimum".into(), opt.clone())];
    let greedy = greedy_maximal_packing(&red.target, r, Mode::Vertex)?;
    ys.push(("greedy".into(), greedy.clone()));
    for k in 0..cfg.subpackings {
        ys.push((format!("optimum subset {k}"), thin(&opt, rng)));
        ys.push((format!("greedy subset {k}"), thin(&greedy, rng)));
    }
    for k in 0..cfg.source_images {
        // Random maximal independent set of the source.
        let mut order: Vec<usize> = (0..g.vertex_count()).collect();
        order.shuffle(rng);
        let mut s: Vec<usize> = Vec::new();
        for v in order {
            if s.iter().all(|&u| !g.has_edge(u, v)) {
                s.push(v);
            }
        }
        ys.push((
            format!("independent set image {k}"),
            red.map_is_to_packing(&s)?,
        ));
    }
    let cliques = enumerate_krs(&red.target, r)?;
    for k in 0..cfg.maximal {
        ys.push((
            format!("random maximal {k}"),
            random_maximal(&cliques, r, Mode::Vertex, rng),
        ));
    }
    for (what, y) in ys {
        match red.map_packing_to_is(&y) {
            Ok(s) => t.beta(idx, opt_s, s.len(), opt_t, y.len(), &what),
            Err(e) => t.mapping(idx, format!("{what}: {e}")),
        }
    }
    Ok(())
}

fn check_edk(
    t: &mut Tally,
    idx: usize,
    kind: EdkKind,
    phi: &Formula,
    cfg: &LCheckConfig,
    rng: &mut impl Rng,
) -> Result<()> {
    let red = EdkReduction::new(kind, phi)?;
    let r = red.r();
    let (opt_s, witness) = brute_force_maxsat(phi)?;
    let opt = exact_max_packing_with(&red.target, r, Mode::Edge, &cfg.exact)?.packing;
    let opt_t = opt.len();
    t.alpha(idx, opt_t, opt_s);
    if opt_t != red.offset() + opt_s {
        t.report.optimum_identity_failures += 1;
    }

    let n = phi.variable_count();
    let mut ys: Vec<(String, Packing)> = vec![("optimum".into(), opt.clone())];
    let greedy = greedy_maximal_packing(&red.target, r, Mode::Edge)?;
    ys.push(("greedy".into(), greedy.clone()));
    for k in 0..cfg.subpackings {
        ys.push((format!("optimum subset {k}"), thin(&opt, rng)));
        ys.push((format!("greedy subset {k}"), thin(&greedy, rng)));
    }
    let mut assignments = vec![Assignment::all(n, true), Assignment::all(n, false), witness];
    for _ in 0..cfg.source_images {
        assignments.push(Assignment((0..n).map(|_| rng.gen_bool(0.5)).collect()));
    }
    for (k, f) in assignments.iter().enumerate() {
        let y = red.assignment_to_packing(f)?;
        if y.len() != red.offset() + count_satisfied(phi, f) {
            t.mapping(idx, format!("assignment image {k} has size {}", y.len()));
        }
        ys.push((format!("assignment image {k}"), y));
    }
    let cliques = enumerate_krs(&red.target, r)?;
    for k in 0..cfg.maximal {
        ys.push((
            format!("random maximal {k}"),
            random_maximal(&cliques, r, Mode::Edge, rng),
        ));
    }
    for (what, y) in ys {
        match red.packing_to_assignment(&y) {
            Ok(f) => t.beta(idx, opt_s, count_satisfied(phi, &f), opt_t, y.len(), &what),
            Err(e) => t.mapping(idx, format!("{what}: {e}")),
        }
    }
    Ok(())
}
