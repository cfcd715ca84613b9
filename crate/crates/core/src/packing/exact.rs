use crate::clique::{enumerate_krs, Clique, Mode};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::intersect::IntersectionGraph;

use super::mis::{maximum_independent_set, SearchStats};
use super::Packing;

pub const DEFAULT_MAX_CLIQUES: usize = 10_000;

#[derive(Debug, Clone, Copy)]
pub struct ExactConfig {
    /// Refuse instances with more K_r's than this.
    pub max_cliques: usize,
}

impl Default for ExactConfig {
    fn default() -> Self {
        ExactConfig {
            max_cliques: DEFAULT_MAX_CLIQUES,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ExactOutcome {
    pub packing: Packing,
    pub stats: SearchStats,
    pub clique_count: usize,
    pub intersection_edges: usize,
}

/// Maximum packing with the default clique guard.
pub fn exact_max_packing(g: &Graph, r: usize, mode: Mode) -> Result<Packing> {
    Ok(exact_max_packing_with(g, r, mode, &ExactConfig::default())?.packing)
}

/// Maximum packing found as a maximum independent set of the mode's
/// intersection graph. Among maximum packings the one with the
/// lexicographically least set of clique indices (in enumeration order) is
/// returned.
pub fn exact_max_packing_with(
    g: &Graph,
    r: usize,
    mode: Mode,
    cfg: &ExactConfig,
) -> Result<ExactOutcome> {
    let cliques = enumerate_krs(g, r)?;
    exact_over(cliques, r, mode, cfg)
}

/// Same as [`exact_max_packing_with`] over an explicit clique list.
pub fn exact_over(
    cliques: Vec<Clique>,
    r: usize,
    mode: Mode,
    cfg: &ExactConfig,
) -> Result<ExactOutcome> {
    if cliques.len() > cfg.max_cliques {
        return Err(Error::GuardExceeded {
            what: "cliques for exact search",
            limit: cfg.max_cliques,
            actual: cliques.len(),
        });
    }
    let clique_count = cliques.len();
    let h = IntersectionGraph::from_cliques(cliques, mode);
    let mut stats = SearchStats::default();
    let chosen = maximum_independent_set(&h.graph, &mut stats);
    let intersection_edges = h.edge_count();
    let picked: Vec<Clique> = chosen.into_iter().map(|i| h.nodes[i].clone()).collect();
    Ok(ExactOutcome {
        packing: Packing::from_cliques(r, mode, picked)?,
        stats,
        clique_count,
        intersection_edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::intersect::build_intersection_graph;
    use crate::packing::mis::brute_force_mis;

    #[test]
    fn examples() {
        assert_eq!(
            exact_max_packing(&bowtie(), 3, Mode::Vertex).unwrap().len(),
            1
        );
        assert_eq!(
            exact_max_packing(&bowtie(), 3, Mode::Edge).unwrap().len(),
            2
        );
        assert_eq!(
            exact_max_packing(&Graph::complete(4), 3, Mode::Edge)
                .unwrap()
                .len(),
            1
        );
        assert_eq!(
            exact_max_packing(&petersen(), 3, Mode::Vertex)
                .unwrap()
                .len(),
            0
        );
    }

    #[test]
    fn guard() {
        let cfg = ExactConfig { max_cliques: 5 };
        let err = exact_max_packing_with(&Graph::complete(5), 3, Mode::Vertex, &cfg).unwrap_err();
        assert!(err.is_guard());
    }

    #[test]
    fn lexicographic_tie_break() {
        // Bowtie vertex mode: both triangles are maximum; the first wins.
        let p = exact_max_packing(&bowtie(), 3, Mode::Vertex).unwrap();
        assert_eq!(p.cliques(), &[Clique::new(vec![0, 1, 2])]);
    }

    #[test]
    fn agrees_with_brute_force_on_intersection_graph() {
        let mut checked = 0;
        for seed in 0..300 {
            let g = crate::generate::gen_bounded_degree(10, 5, seed);
            for mode in [Mode::Vertex, Mode::Edge] {
                let h = build_intersection_graph(&g, 3, mode).unwrap();
                if h.node_count() > 20 {
                    continue;
                }
                let (opt, _) = brute_force_mis(&h.graph).unwrap();
                assert_eq!(
                    exact_max_packing(&g, 3, mode).unwrap().len(),
                    opt,
                    "seed {seed} {mode}"
                );
                checked += 1;
            }
        }
        assert!(checked > 100);
    }

    #[test]
    fn edge_optimum_dominates_vertex_optimum() {
        for seed in 0..100 {
            let g = crate::generate::gen_bounded_degree(11, 6, seed);
            let v = exact_max_packing(&g, 3, Mode::Vertex).unwrap().len();
            let e = exact_max_packing(&g, 3, Mode::Edge).unwrap().len();
            assert!(e >= v, "seed {seed}");
        }
    }
}
