//! K_r vertex- and edge-intersection graphs, and claw detection.

use crate::clique::{enumerate_krs, Clique, Mode};
use crate::error::Result;
use crate::graph::Graph;

/// One node per K_r of the host graph; two nodes are adjacent when their
/// cliques conflict under `mode` (share a vertex, or share an edge).
#[derive(Debug, Clone)]
pub struct IntersectionGraph {
    pub nodes: Vec<Clique>,
    pub graph: Graph,
    pub mode: Mode,
}

impl IntersectionGraph {
    /// Builds the intersection graph over a given clique list.
    pub fn from_cliques(nodes: Vec<Clique>, mode: Mode) -> Self {
        let threshold = mode.conflict_overlap();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nodes.len()];
        for_each_overlap(&nodes, |i, j, shared| {
            if shared >= threshold {
                adj[i].push(j);
                adj[j].push(i);
            }
            true
        });
        // Pairs arrive sorted by (i, j), so every list is already ascending.
        IntersectionGraph {
            nodes,
            graph: Graph::from_sorted_adjacency(adj),
            mode,
        }
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// Restriction to the listed node indices (in the given order).
    pub fn induced(&self, keep: &[usize]) -> IntersectionGraph {
        IntersectionGraph::from_cliques(
            keep.iter().map(|&i| self.nodes[i].clone()).collect(),
            self.mode,
        )
    }
}

/// Calls `f(i, j, shared)` for every pair `i < j` of cliques sharing at
/// least one vertex, in ascending `(i, j)` order, until `f` returns false.
pub(crate) fn for_each_overlap(nodes: &[Clique], mut f: impl FnMut(usize, usize, usize) -> bool) {
    let mut by_vertex: std::collections::HashMap<usize, Vec<usize>> = Default::default();
    for (i, c) in nodes.iter().enumerate() {
        for &v in c.vertices() {
            by_vertex.entry(v).or_default().push(i);
        }
    }
    let mut shared = vec![0usize; nodes.len()];
    let mut touched = Vec::new();
    for (i, c) in nodes.iter().enumerate() {
        for v in c.vertices() {
            for &j in &by_vertex[v] {
                if j > i {
                    if shared[j] == 0 {
                        touched.push(j);
                    }
                    shared[j] += 1;
                }
            }
        }
        touched.sort_unstable();
        let mut go = true;
        for &j in &touched {
            go = go && f(i, j, shared[j]);
            shared[j] = 0;
        }
        if !go {
            return;
        }
        touched.clear();
    }
}

pub fn build_intersection_graph(g: &Graph, r: usize, mode: Mode) -> Result<IntersectionGraph> {
    Ok(IntersectionGraph::from_cliques(enumerate_krs(g, r)?, mode))
}

/// An induced K_{1,3}: `center` adjacent to each leaf, leaves pairwise
/// non-adjacent, `leaves` ascending.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Claw {
    pub center: usize,
    pub leaves: [usize; 3],
}

/// Above this many vertices `find_claw` stops using a dense bit matrix.
const DENSE_CLAW_LIMIT: usize = 16_384;

/// Lexicographically smallest claw `(center, l1, l2, l3)`, if any.
pub fn find_claw(g: &Graph) -> Option<Claw> {
    if g.vertex_count() <= DENSE_CLAW_LIMIT {
        find_claw_dense(g)
    } else {
        find_claw_sparse(g)
    }
}

fn find_claw_sparse(g: &Graph) -> Option<Claw> {
    for c in 0..g.vertex_count() {
        let ns = g.neighbors(c);
        for (i, &a) in ns.iter().enumerate() {
            for (j, &b) in ns.iter().enumerate().skip(i + 1) {
                if g.has_edge(a, b) {
                    continue;
                }
                for &d in &ns[j + 1..] {
                    if !g.has_edge(a, d) && !g.has_edge(b, d) {
                        return Some(Claw {
                            center: c,
                            leaves: [a, b, d],
                        });
                    }
                }
            }
        }
    }
    None
}

/// Same search with one bit row per vertex: for each centre c and leaf a,
/// the candidates for b are N(c) \ N[a] above a, and d must lie in that set
/// minus N[b] above b. Dense intersection graphs have few such b's.
fn find_claw_dense(g: &Graph) -> Option<Claw> {
    let n = g.vertex_count();
    let words = n.div_ceil(64);
    let mut rows = vec![0u64; n * words];
    for u in 0..n {
        for &v in g.neighbors(u) {
            rows[u * words + v / 64] |= 1 << (v % 64);
        }
    }
    let row = |u: usize| &rows[u * words..(u + 1) * words];
    // Bits strictly above `x`, as a word mask for word `w`.
    let above = |x: usize, w: usize| -> u64 {
        match (w * 64).cmp(&(x + 1)) {
            std::cmp::Ordering::Greater | std::cmp::Ordering::Equal => !0,
            _ if w == x / 64 => (!0u64).checked_shl((x % 64) as u32 + 1).unwrap_or(0),
            _ => 0,
        }
    };
    let mut cand = vec![0u64; words];
    for c in 0..n {
        if g.degree(c) < 3 {
            continue;
        }
        let nc = row(c);
        for &a in g.neighbors(c) {
            let ra = row(a);
            for w in 0..words {
                cand[w] = nc[w] & !ra[w] & above(a, w);
            }
            for w in 0..words {
                let mut bits = cand[w];
                while bits != 0 {
                    let b = w * 64 + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    let rb = row(b);
                    for w2 in w..words {
                        let d_bits = cand[w2] & !rb[w2] & above(b, w2);
                        if d_bits != 0 {
                            let d = w2 * 64 + d_bits.trailing_zeros() as usize;
                            return Some(Claw {
                                center: c,
                                leaves: [a, b, d],
                            });
                        }
                    }
                }
            }
        }
    }
    None
}
