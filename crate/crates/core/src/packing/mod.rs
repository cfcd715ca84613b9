//! Vertex- and edge-disjoint K_r packings: the packing type, solvers, and
//! the complexity-regime classifier.

mod exact;
mod greedy;
mod local;
pub mod mis;
mod regime;

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

pub use exact::{
    exact_max_packing, exact_max_packing_with, exact_over, ExactConfig, ExactOutcome,
    DEFAULT_MAX_CLIQUES,
};
pub use greedy::{greedy_maximal_packing, greedy_over};
pub use local::{
    find_improving_swap, local_improvement_from, local_improvement_packing, local_search_ratio,
    Swap,
};
pub use regime::{classify_regime, Regime, RegimeTag};

use crate::clique::{enumerate_krs, Clique, Mode};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// A set of K_r's that are pairwise vertex-disjoint (`Mode::Vertex`) or
/// pairwise share at most one vertex (`Mode::Edge`). Cliques are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Packing {
    mode: Mode,
    r: usize,
    cliques: Vec<Clique>,
}

impl Packing {
    pub fn empty(r: usize, mode: Mode) -> Self {
        Packing {
            mode,
            r,
            cliques: Vec::new(),
        }
    }

    /// Validates that every clique is a K_r of `g` and that the set is
    /// disjoint under `mode`.
    pub fn new(g: &Graph, r: usize, mode: Mode, cliques: Vec<Clique>) -> Result<Self> {
        for c in &cliques {
            if c.len() != r {
                return Err(Error::InvalidPacking(format!(
                    "{c} has {} vertices, expected {r}",
                    c.len()
                )));
            }
            if let Some(&v) = c.vertices().iter().find(|&&v| v >= g.vertex_count()) {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    count: g.vertex_count(),
                });
            }
            if !c.is_clique_in(g) {
                return Err(Error::InvalidPacking(format!(
                    "{c} is not a clique of the graph"
                )));
            }
        }
        Packing::from_cliques(r, mode, cliques)
    }

    /// Checks disjointness only; the caller vouches the cliques are K_r's.
    pub fn from_cliques(r: usize, mode: Mode, mut cliques: Vec<Clique>) -> Result<Self> {
        cliques.sort();
        if cliques.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidPacking("clique listed twice".into()));
        }
        let mut occ = Occupancy::new(mode);
        for c in &cliques {
            if !occ.fits(c) {
                return Err(Error::InvalidPacking(format!(
                    "{c} is not {mode}-disjoint from the rest"
                )));
            }
            occ.insert(c);
        }
        Ok(Packing { mode, r, cliques })
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn cliques(&self) -> &[Clique] {
        &self.cliques
    }

    pub fn into_cliques(self) -> Vec<Clique> {
        self.cliques
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn contains(&self, c: &Clique) -> bool {
        self.cliques.binary_search(c).is_ok()
    }

    /// True when no clique of `candidates` can be added.
    pub fn is_maximal_among(&self, candidates: &[Clique]) -> bool {
        let mut occ = Occupancy::new(self.mode);
        for c in &self.cliques {
            occ.insert(c);
        }
        candidates.iter().all(|c| self.contains(c) || !occ.fits(c))
    }

    pub fn is_maximal_in(&self, g: &Graph) -> Result<bool> {
        Ok(self.is_maximal_among(&enumerate_krs(g, self.r)?))
    }

    pub fn to_record(&self) -> PackingRecord {
        PackingRecord {
            mode: self.mode,
            r: self.r,
            cliques: self
                .cliques
                .iter()
                .map(|c| c.vertices().iter().map(|v| v + 1).collect())
                .collect(),
            size: self.len(),
        }
    }
}

/// JSON form of a packing. Vertices are 1-based, as in the DIMACS files.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PackingRecord {
    pub mode: Mode,
    pub r: usize,
    pub cliques: Vec<Vec<usize>>,
    pub size: usize,
}

impl PackingRecord {
    pub fn into_packing(self, g: &Graph) -> Result<Packing> {
        if self.size != self.cliques.len() {
            return Err(Error::InvalidPacking(format!(
                "size field {} disagrees with {} cliques",
                self.size,
                self.cliques.len()
            )));
        }
        let mut cliques = Vec::with_capacity(self.cliques.len());
        for c in self.cliques {
            if c.contains(&0) {
                return Err(Error::InvalidPacking("vertex ids are 1-based".into()));
            }
            cliques.push(Clique::new(c.into_iter().map(|v| v - 1).collect()));
        }
        Packing::new(g, self.r, self.mode, cliques)
    }
}

/// Tracks which vertices (vertex mode) or edges (edge mode) are in use.
#[derive(Debug, Clone)]
pub(crate) struct Occupancy {
    mode: Mode,
    vertices: HashSet<VertexId>,
    edges: HashSet<(VertexId, VertexId)>,
}

impl Occupancy {
    pub(crate) fn new(mode: Mode) -> Self {
        Occupancy {
            mode,
            vertices: HashSet::new(),
            edges: HashSet::new(),
        }
    }

    pub(crate) fn fits(&self, c: &Clique) -> bool {
        match self.mode {
            Mode::Vertex => c.vertices().iter().all(|v| !self.vertices.contains(v)),
            Mode::Edge => c.edges().all(|e| !self.edges.contains(&e)),
        }
    }

    pub(crate) fn insert(&mut self, c: &Clique) {
        match self.mode {
            Mode::Vertex => self.vertices.extend(c.vertices().iter().copied()),
            Mode::Edge => self.edges.extend(c.edges()),
        }
    }
}

/// True iff no two distinct K_r's of `g` share exactly one vertex, in which
/// case edge-disjoint and vertex-disjoint packings coincide.
///
/// Only meaningful (and only accepted) when Δ(g) < 2r − 2.
pub fn check_disjointness_coincidence(g: &Graph, r: usize) -> Result<bool> {
    let delta = g.max_degree();
    if delta + 2 >= 2 * r {
        return Err(Error::Precondition(format!(
            "coincidence check needs max degree < 2r - 2 = {}, graph has {delta}",
            (2 * r).saturating_sub(2)
        )));
    }
    let cliques = enumerate_krs(g, r)?;
    let mut ok = true;
    crate::intersect::for_each_overlap(&cliques, |_, _, shared| {
        ok = shared != 1;
        ok
    });
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn packing_validation() {
        let g = bowtie();
        let a = Clique::new(vec![0, 1, 2]);
        let b = Clique::new(vec![2, 3, 4]);
        assert!(Packing::new(&g, 3, Mode::Vertex, vec![a.clone(), b.clone()]).is_err());
        let p = Packing::new(&g, 3, Mode::Edge, vec![b.clone(), a.clone()]).unwrap();
        assert_eq!(p.cliques(), &[a.clone(), b]);
        assert!(Packing::new(&g, 3, Mode::Edge, vec![Clique::new(vec![0, 1, 3])]).is_err());
        assert!(Packing::new(&g, 3, Mode::Edge, vec![a.clone(), a]).is_err());
    }

    #[test]
    fn record_round_trip() {
        let g = bowtie();
        let p = Packing::new(&g, 3, Mode::Edge, enumerate_krs(&g, 3).unwrap()).unwrap();
        let json = serde_json::to_string(&p.to_record()).unwrap();
        assert_eq!(
            json,
            r#"{"mode":"edge","r":3,"cliques":[[1,2,3],[3,4,5]],"size":2}"#
        );
        let back: PackingRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back.into_packing(&g).unwrap(), p);
    }

    #[test]
    fn coincidence_examples() {
        let mut g = Graph::new(12);
        g.add_clique(&[0, 1, 2, 3, 4, 5]).unwrap();
        g.add_clique(&[6, 7, 8, 9, 10, 11]).unwrap();
        assert!(check_disjointness_coincidence(&g, 6).unwrap());
        // K_4 with r = 3: Δ = 3 < 4 and every triangle pair shares 2 vertices.
        assert!(check_disjointness_coincidence(&Graph::complete(4), 3).unwrap());
        // Bowtie: Δ = 4 is not below 2·3 − 2.
        assert!(matches!(
            check_disjointness_coincidence(&bowtie(), 3),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn coincidence_on_bounded_graphs() {
        for r in 4..=7 {
            for seed in 0..15 {
                let g = crate::generate::gen_planted_cliques(14, r, 2 * r - 3, seed);
                assert!(
                    check_disjointness_coincidence(&g, r).unwrap(),
                    "r={r} seed={seed}"
                );
            }
        }
    }
}
