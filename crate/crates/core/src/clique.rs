//! K_r enumeration and the clique value type.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Which disjointness a packing (or intersection graph) is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
#[cfg_attr(feature = "cli", derive(clap::ValueEnum))]
pub enum Mode {
    Vertex,
    Edge,
}

impl Mode {
    /// Smallest overlap at which two cliques conflict under this mode.
    pub fn conflict_overlap(self) -> usize {
        match self {
            Mode::Vertex => 1,
            Mode::Edge => 2,
        }
    }

    pub fn conflicts(self, a: &Clique, b: &Clique) -> bool {
        pairwise_overlap(a, b) >= self.conflict_overlap()
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Vertex => "vertex",
            Mode::Edge => "edge",
        })
    }
}

/// A complete subgraph, stored as its sorted vertex list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Clique(Vec<VertexId>);

impl Clique {
    /// Sorts and deduplicates; does not check adjacency.
    pub fn new(mut vertices: Vec<VertexId>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Clique(vertices)
    }

    /// Like [`Clique::new`] but verifies the vertices are pairwise adjacent in `g`.
    pub fn checked(g: &Graph, vertices: Vec<VertexId>) -> Result<Self> {
        let c = Clique::new(vertices);
        for &v in &c.0 {
            if v >= g.vertex_count() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    count: g.vertex_count(),
                });
            }
        }
        if !c.is_clique_in(g) {
            return Err(Error::InvalidPacking(format!(
                "{c} is not a clique of the graph"
            )));
        }
        Ok(c)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_clique_in(&self, g: &Graph) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &u)| self.0[i + 1..].iter().all(|&v| g.has_edge(u, v)))
    }

    /// Unordered vertex pairs `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(move |(i, &u)| self.0[i + 1..].iter().map(move |&v| (u, v)))
    }

    pub fn map(&self, f: impl Fn(VertexId) -> VertexId) -> Clique {
        Clique::new(self.0.iter().map(|&v| f(v)).collect())
    }
}

impl fmt::Display for Clique {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// |a ∩ b| by sorted merge.
pub fn pairwise_overlap(a: &Clique, b: &Clique) -> usize {
    let (x, y) = (&a.0, &b.0);
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < x.len() && j < y.len() {
        match x[i].cmp(&y[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

/// All K_r subgraphs of `g` in lexicographic order of their sorted vertex lists.
///
/// Each clique is grown from its smallest vertex through higher-indexed common
/// neighbours only, so every K_r is produced exactly once.
pub fn enumerate_krs(g: &Graph, r: usize) -> Result<Vec<Clique>> {
    if r < 2 {
        return Err(Error::InvalidArgument(format!(
            "clique size r must be at least 2, got {r}"
        )));
    }
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(r);
    for v in 0..g.vertex_count() {
        let higher: Vec<VertexId> = g.neighbors(v).iter().copied().filter(|&w| w > v).collect();
        if higher.len() + 1 < r {
            continue;
        }
        stack.push(v);
        extend(g, r, &mut stack, &higher, &mut out);
        stack.pop();
    }
    Ok(out)
}

fn extend(
    g: &Graph,
    r: usize,
    stack: &mut Vec<VertexId>,
    cand: &[VertexId],
    out: &mut Vec<Clique>,
) {
    if stack.len() == r {
        out.push(Clique(stack.clone()));
        return;
    }
    let need = r - stack.len();
    for (i, &w) in cand.iter().enumerate() {
        if cand.len() - i < need {
            break;
        }
        let next: Vec<VertexId> = cand[i + 1..]
            .iter()
            .copied()
            .filter(|&x| g.has_edge(w, x))
            .collect();
        if next.len() + 1 < need {
            continue;
        }
        stack.push(w);
        extend(g, r, stack, &next, out);
        stack.pop();
    }
}
