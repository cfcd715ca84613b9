//! `krpack` command line. Every run is a pure function of its flags; JSON
//! reports carry the full parsed configuration so they can be replayed.
//!
//! Exit codes: 0 success, 1 property violation, 2 usage or input error,
//! 3 instance over a guard.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::clique::{enumerate_krs, Mode};
use crate::error::{Error, Result};
use crate::gadget::{
    verify_l_reduction, Bundle, EdkReduction, LCheckConfig, ReductionKind, Sample, VdkrReduction,
};
use crate::generate::{gen_bounded_degree, gen_planted_cliques, gen_triangle_free_cubic};
use crate::graph::Graph;
use crate::intersect::{build_intersection_graph, find_claw};
use crate::io;
use crate::packing::{
    classify_regime, exact_max_packing_with, greedy_maximal_packing, local_improvement_packing,
    local_search_ratio, ExactConfig, DEFAULT_MAX_CLIQUES,
};
use crate::sat::random::{all_ready_two_variable_formulas, random_ready_formula};
use crate::sat::{Formula, BRUTE_FORCE_MAXSAT_LIMIT};
use crate::verify::{run_suite, Suite, TrialPlan};

pub const REPORT_SCHEMA: u32 = 1;

pub const EXIT_OK: u8 = 0;
pub const EXIT_VIOLATION: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_GUARD: u8 = 3;

#[derive(Debug, Parser, Serialize)]
#[command(
    name = "krpack",
    version,
    about = "K_r packing solvers, reductions and property checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Report format on stdout.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,

    /// Refuse exact searches over more K_r's than this.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_CLIQUES)]
    pub max_cliques: usize,

    /// Refuse brute-force MaxSAT over more variables than this.
    #[arg(long, global = true, default_value_t = BRUTE_FORCE_MAXSAT_LIMIT)]
    pub max_vars: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    /// Write a seeded random graph (DIMACS) or formula (CNF).
    Generate(GenerateArgs),
    /// Pack K_r's in a DIMACS graph.
    Solve(SolveArgs),
    /// Complexity regime for (r, Δ).
    Classify(ClassifyArgs),
    /// Build a hardness reduction bundle (DIMACS target + JSON sidecar).
    Reduce(ReduceArgs),
    /// Run a randomised or exhaustive property suite.
    Verify(VerifyArgs),
    /// Build the K_r intersection graph and look for a claw.
    Intersect(IntersectArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GenKind {
    /// Triangle-free, Δ ≤ 3.
    CubicTf,
    /// Δ ≤ dmax with planted cliques.
    Bounded,
    /// Δ ≤ dmax, rich in overlapping K_r's.
    Planted,
    /// Reduction-ready MAX2SAT(3) formula over n variables.
    Formula,
}

#[derive(Debug, Args, Serialize)]
pub struct GenerateArgs {
    #[arg(value_enum)]
    pub kind: GenKind,
    #[arg(short)]
    pub n: usize,
    #[arg(long)]
    pub dmax: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output file; stdout if omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Greedy,
    Exact,
    Local,
}

#[derive(Debug, Args, Serialize)]
pub struct SolveArgs {
    pub graph: PathBuf,
    #[arg(long)]
    pub r: usize,
    #[arg(long, value_enum, default_value_t = Mode::Vertex)]
    pub mode: Mode,
    #[arg(long, value_enum, default_value_t = Method::Exact)]
    pub method: Method,
    /// Swap size for the local method.
    #[arg(long, default_value_t = 2)]
    pub t: usize,
    /// Write the packing as JSON here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
pub struct ClassifyArgs {
    #[arg(long)]
    pub r: usize,
    /// Maximum degree; read from --graph if omitted.
    #[arg(long, required_unless_present = "graph")]
    pub delta: Option<usize>,
    #[arg(long, conflicts_with = "delta")]
    pub graph: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Mode::Vertex)]
    pub mode: Mode,
}

#[derive(Debug, Args, Serialize)]
pub struct ReduceArgs {
    #[arg(value_enum)]
    pub kind: ReductionKind,
    /// DIMACS graph (vdkr) or CNF formula (edk4, edk5).
    pub input: PathBuf,
    /// Clique size for vdkr.
    #[arg(long)]
    pub r: Option<usize>,
    /// Target graph path; the sidecar goes next to it with a .json extension.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VerifySuite {
    Claw,
    Overlap,
    Coincidence,
    Maximal,
    Lreduction,
}

#[derive(Debug, Args, Serialize)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: VerifySuite,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub dmax: Option<usize>,
    /// Vertices per random graph.
    #[arg(short, long, default_value_t = 12)]
    pub n: usize,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Mode::Vertex)]
    pub mode: Mode,
    /// Reduction for the lreduction suite.
    #[arg(long, value_enum)]
    pub kind: Option<ReductionKind>,
    /// Use every reduction-ready two-variable formula instead of random ones.
    #[arg(long)]
    pub exhaustive_2var: bool,
    /// Variables per random formula.
    #[arg(long, default_value_t = 3)]
    pub vars: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct IntersectArgs {
    pub graph: PathBuf,
    #[arg(long)]
    pub r: usize,
    #[arg(long, value_enum, default_value_t = Mode::Vertex)]
    pub mode: Mode,
    /// Write the intersection graph as DIMACS here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Exit code for an error that stopped a run.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::GuardExceeded { .. } => EXIT_GUARD,
        Error::Corrupt(_) => EXIT_VIOLATION,
        _ => EXIT_USAGE,
    }
}

struct Run<'a, W: Write> {
    cli: &'a Cli,
    out: W,
}

impl<W: Write> Run<'_, W> {
    fn exact(&self) -> ExactConfig {
        ExactConfig {
            max_cliques: self.cli.max_cliques,
        }
    }

    /// Prints `text` or a JSON report wrapping `result` with the run config.
    fn report(&mut self, text: &str, result: Value) -> Result<()> {
        let w = &mut self.out;
        let io_err = |e| Error::io("<stdout>", e);
        match self.cli.format {
            Format::Text => writeln!(w, "{}", text.trim_end()).map_err(io_err),
            Format::Json => {
                let doc = json!({
                    "schema": REPORT_SCHEMA,
                    "config": self.cli,
                    "result": result,
                });
                writeln!(w, "{}", serde_json::to_string_pretty(&doc)?).map_err(io_err)
            }
        }
    }
}

fn need<T: Copy>(v: Option<T>, flag: &str, verb: &str) -> Result<T> {
    v.ok_or_else(|| Error::InvalidArgument(format!("{verb} needs --{flag}")))
}

/// Runs one parsed command; returns the exit code on success paths
/// (0, or 1 when a property suite found violations).
pub fn run(cli: &Cli, out: impl Write) -> Result<u8> {
    let mut run = Run { cli, out };
    match &cli.command {
        Command::Generate(a) => generate(&mut run, a),
        Command::Solve(a) => solve(&mut run, a),
        Command::Classify(a) => classify(&mut run, a),
        Command::Reduce(a) => reduce(&mut run, a),
        Command::Verify(a) => verify(&mut run, a),
        Command::Intersect(a) => intersect(&mut run, a),
    }
}

fn generate<W: Write>(run: &mut Run<W>, a: &GenerateArgs) -> Result<u8> {
    let text = match a.kind {
        GenKind::CubicTf => io::write_dimacs(&gen_triangle_free_cubic(a.n, a.seed)),
        GenKind::Bounded => io::write_dimacs(&gen_bounded_degree(
            a.n,
            need(a.dmax, "dmax", "generate bounded")?,
            a.seed,
        )),
        GenKind::Planted => {
            let r = need(a.r, "r", "generate planted")?;
            let dmax = need(a.dmax, "dmax", "generate planted")?;
            io::write_dimacs(&gen_planted_cliques(a.n, r, dmax, a.seed))
        }
        GenKind::Formula => {
            if a.n < 2 {
                return Err(Error::InvalidArgument(
                    "generate formula needs -n >= 2".into(),
                ));
            }
            io::write_cnf(&random_ready_formula(a.n, a.seed))
        }
    };
    match &a.out {
        Some(p) => {
            io::write_text(p, &text)?;
            run.report(&format!("wrote {}", p.display()), json!({ "path": p }))?;
        }
        None => {
            run.out
                .write_all(text.as_bytes())
                .map_err(|e| Error::io("<stdout>", e))?;
        }
    }
    Ok(EXIT_OK)
}

fn solve<W: Write>(run: &mut Run<W>, a: &SolveArgs) -> Result<u8> {
    let g = io::read_graph(&a.graph)?;
    let delta = g.max_degree();
    let regime = if a.r >= 3 {
        Some(classify_regime(a.r, delta, a.mode)?)
    } else {
        None
    };
    let (packing, extra) = match a.method {
        Method::Greedy => (greedy_maximal_packing(&g, a.r, a.mode)?, Value::Null),
        Method::Local => {
            let k = match a.mode {
                Mode::Vertex => a.r as u64,
                Mode::Edge => (a.r * (a.r - 1) / 2) as u64,
            };
            let (num, den) = local_search_ratio(k, a.t);
            (
                local_improvement_packing(&g, a.r, a.mode, a.t)?,
                json!({ "t": a.t, "ratio_bound": [num, den] }),
            )
        }
        Method::Exact => {
            let o = exact_max_packing_with(&g, a.r, a.mode, &run.exact())?;
            let extra = json!({
                "clique_count": o.clique_count,
                "intersection_edges": o.intersection_edges,
                "search": o.stats,
            });
            (o.packing, extra)
        }
    };
    let record = packing.to_record();
    if let Some(p) = &a.out {
        io::write_text(p, &(serde_json::to_string_pretty(&record)? + "\n"))?;
    }
    let mut text = format!(
        "{} packing of K_{} ({} mode): size {}\nΔ = {delta}",
        match a.method {
            Method::Greedy => "greedy",
            Method::Exact => "exact",
            Method::Local => "local",
        },
        a.r,
        a.mode,
        packing.len()
    );
    if let Some(reg) = &regime {
        text += &format!(", regime {} ({})", reg.tag, reg.threshold_note);
    }
    text.push('\n');
    for c in &record.cliques {
        text += &format!("  {c:?}\n");
    }
    run.report(
        &text,
        json!({
            "size": packing.len(),
            "max_degree": delta,
            "regime": regime,
            "packing": record,
            "details": extra,
        }),
    )?;
    Ok(EXIT_OK)
}

fn classify<W: Write>(run: &mut Run<W>, a: &ClassifyArgs) -> Result<u8> {
    let delta = match (a.delta, &a.graph) {
        (Some(d), _) => d,
        (None, Some(p)) => io::read_graph(p)?.max_degree(),
        (None, None) => {
            return Err(Error::InvalidArgument(
                "classify needs --delta or --graph".into(),
            ))
        }
    };
    let reg = classify_regime(a.r, delta, a.mode)?;
    run.report(
        &format!("r = {}, Δ = {delta}, {} mode: {} ({})", a.r, a.mode, reg.tag, reg.threshold_note),
        json!({ "r": a.r, "delta": delta, "mode": a.mode, "regime": reg, "polynomial": reg.tag.is_polynomial() }),
    )?;
    Ok(EXIT_OK)
}

fn source_name(p: &Path) -> String {
    p.file_name()
        .map(|f| f.to_string_lossy().into_owned())
        .unwrap_or_default()
}

fn reduce<W: Write>(run: &mut Run<W>, a: &ReduceArgs) -> Result<u8> {
    let (target, bundle, expected_delta) = match a.kind {
        ReductionKind::Vdkr => {
            let r = need(a.r, "r", "reduce vdkr")?;
            let g = io::read_graph(&a.input)?;
            let red = VdkrReduction::new(&g, r)?;
            let expect = if g.edge_count() > 0 {
                (5 * r).div_ceil(3) - 1
            } else {
                r - 1
            };
            let b = Bundle::from_vdkr(&red, Some(&source_name(&a.input)));
            (red.target, b, expect)
        }
        kind => {
            let phi = io::read_formula(&a.input)?;
            let red = EdkReduction::new(kind.edk().expect("edk kind"), &phi)?;
            let expect = red.kind.max_degree();
            let b = Bundle::from_edk(&red, Some(&source_name(&a.input)));
            (red.target, b, expect)
        }
    };
    let sidecar = bundle.write(&a.out, &target)?;
    let mut text = format!(
        "{} bundle: {} vertices, {} edges, Δ = {} (expected {expected_delta})\n",
        bundle.kind, bundle.vertex_count, bundle.edge_count, bundle.max_degree
    );
    let families: Vec<(String, usize)> = bundle
        .cliques
        .iter()
        .map(|(k, v)| (k.clone(), v.len()))
        .collect();
    let total: usize = families.iter().map(|f| f.1).sum();
    text += &format!("{total} named cliques in {} families\n", families.len());
    text += &format!("wrote {} and {}\n", a.out.display(), sidecar.display());
    run.report(
        &text,
        json!({
            "graph": a.out,
            "sidecar": sidecar,
            "vertex_count": bundle.vertex_count,
            "edge_count": bundle.edge_count,
            "max_degree": bundle.max_degree,
            "expected_max_degree": expected_delta,
            "clique_families": families.into_iter().collect::<std::collections::BTreeMap<_, _>>(),
        }),
    )?;
    Ok(EXIT_OK)
}

fn verify<W: Write>(run: &mut Run<W>, a: &VerifyArgs) -> Result<u8> {
    if a.suite == VerifySuite::Lreduction {
        return verify_lreduction(run, a);
    }
    let suite = match a.suite {
        VerifySuite::Claw => Suite::Claw,
        VerifySuite::Overlap => Suite::Overlap,
        VerifySuite::Coincidence => Suite::Coincidence,
        VerifySuite::Maximal => Suite::Maximal,
        VerifySuite::Lreduction => unreachable!(),
    };
    let plan = TrialPlan {
        r: need(a.r, "r", "verify")?,
        dmax: need(a.dmax, "dmax", "verify")?,
        n: a.n,
        trials: a.trials,
        seed: a.seed,
        mode: a.mode,
    };
    let rep = run_suite(suite, &plan, &run.exact())?;
    let mut text = format!(
        "{suite:?}: {} trials ({} with ≥ 2 K_{}), {} violations\n",
        rep.trials,
        rep.nontrivial,
        plan.r,
        rep.violations.len()
    );
    for v in &rep.violations {
        text += &format!("  seed {}: {}\n", v.seed, v.detail);
    }
    run.report(&text, serde_json::to_value(&rep)?)?;
    Ok(if rep.ok() { EXIT_OK } else { EXIT_VIOLATION })
}

fn verify_lreduction<W: Write>(run: &mut Run<W>, a: &VerifyArgs) -> Result<u8> {
    let kind = need(a.kind, "kind", "verify lreduction")?;
    let samples: Vec<Sample> = match kind {
        ReductionKind::Vdkr => {
            let r = a.r.unwrap_or(3);
            (0..a.trials)
                .map(|k| Sample::Graph {
                    graph: gen_triangle_free_cubic(a.n, a.seed.wrapping_add(k as u64)),
                    r,
                })
                .collect()
        }
        _ => {
            let formulas: Vec<Formula> = if a.exhaustive_2var {
                all_ready_two_variable_formulas()
            } else {
                if a.vars < 2 {
                    return Err(Error::InvalidArgument("--vars must be at least 2".into()));
                }
                (0..a.trials)
                    .map(|k| random_ready_formula(a.vars, a.seed.wrapping_add(k as u64)))
                    .collect()
            };
            if let Some(f) = formulas
                .iter()
                .find(|f| f.variable_count() > run.cli.max_vars)
            {
                return Err(Error::GuardExceeded {
                    what: "variables for brute-force MaxSAT",
                    limit: run.cli.max_vars,
                    actual: f.variable_count(),
                });
            }
            formulas.into_iter().map(Sample::Formula).collect()
        }
    };
    let cfg = LCheckConfig {
        seed: a.seed,
        exact: run.exact(),
        ..LCheckConfig::default()
    };
    let rep = verify_l_reduction(kind, &samples, &cfg)?;
    let mut text = format!(
        "{kind:?}: {} samples, {} target solutions, α = {}, β = {}\n\
         max opt_T/opt_S = {:.4}, max source/target gap ratio = {:.4}, optimum identity failures = {}\n\
         {} violations\n",
        rep.samples,
        rep.solutions_checked,
        rep.alpha,
        rep.beta,
        rep.max_alpha_ratio,
        rep.max_beta_ratio,
        rep.optimum_identity_failures,
        rep.violations.len()
    );
    for v in &rep.violations {
        text += &format!("  sample {} [{}]: {}\n", v.sample + 1, v.check, v.detail);
    }
    run.report(&text, serde_json::to_value(&rep)?)?;
    Ok(if rep.ok() { EXIT_OK } else { EXIT_VIOLATION })
}

fn intersect<W: Write>(run: &mut Run<W>, a: &IntersectArgs) -> Result<u8> {
    let g: Graph = io::read_graph(&a.graph)?;
    let h = build_intersection_graph(&g, a.r, a.mode)?;
    if let Some(p) = &a.out {
        io::write_graph(p, &h.graph)?;
    }
    let claw = find_claw(&h.graph);
    let text = match &claw {
        Some(c) => format!(
            "{} K_{}'s, {} intersecting pairs; claw at {} with leaves {}, {}, {}",
            h.node_count(),
            a.r,
            h.edge_count(),
            h.nodes[c.center],
            h.nodes[c.leaves[0]],
            h.nodes[c.leaves[1]],
            h.nodes[c.leaves[2]]
        ),
        None => format!(
            "{} K_{}'s, {} intersecting pairs; claw-free",
            h.node_count(),
            a.r,
            h.edge_count()
        ),
    };
    let one = |i: usize| {
        h.nodes[i]
            .vertices()
            .iter()
            .map(|v| v + 1)
            .collect::<Vec<_>>()
    };
    run.report(
        &text,
        json!({
            "cliques": enumerate_krs(&g, a.r)?.len(),
            "intersection_edges": h.edge_count(),
            "claw": claw.map(|c| json!({
                "center": one(c.center),
                "leaves": c.leaves.iter().map(|&l| one(l)).collect::<Vec<_>>(),
            })),
        }),
    )?;
    Ok(EXIT_OK)
}
