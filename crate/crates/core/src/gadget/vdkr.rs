//! Maximum independent set on triangle-free graphs with Δ ≤ 3 reduced to
//! VDK_r.
//!
//! Every source vertex v_i becomes a K_r `U_i`. For every source edge
//! {v_i, v_j}, ⌊r/3⌋ vertices of `U_i` are identified with ⌊r/3⌋ vertices of
//! `U_j`; the merged vertices form `W_ij`. Since a vertex has at most three
//! edges, `U_i` never runs out of slots. The K_r's of the result are exactly
//! the `U_i`, and two of them meet iff the source vertices are adjacent.

use std::collections::HashMap;

use crate::clique::{Clique, Mode};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::packing::Packing;

#[derive(Debug, Clone)]
pub struct VdkrReduction {
    pub source: Graph,
    pub r: usize,
    pub target: Graph,
    /// `U_i`, indexed by source vertex.
    pub cliques: Vec<Clique>,
    /// `W_ij` per source edge, edges in ascending order.
    pub shared: Vec<((VertexId, VertexId), Vec<VertexId>)>,
    /// `X_i`: the vertices of `U_i` in no `W` set. May be empty.
    pub free: Vec<Vec<VertexId>>,
    index: HashMap<Clique, usize>,
}

impl VdkrReduction {
    pub fn new(source: &Graph, r: usize) -> Result<Self> {
        if r < 3 {
            return Err(Error::InvalidArgument(format!(
                "vdkr needs r >= 3, got {r}"
            )));
        }
        if let Some(v) = (0..source.vertex_count()).find(|&v| source.degree(v) > 3) {
            return Err(Error::Precondition(format!(
                "source vertex {} has degree {} > 3",
                v + 1,
                source.degree(v)
            )));
        }
        if let Some((u, v)) = source.edges().find(|&(u, v)| {
            crate::graph::sorted_intersect(source.neighbors(u), source.neighbors(v))
        }) {
            return Err(Error::Precondition(format!(
                "source is not triangle-free: edge {{{}, {}}} lies in a triangle",
                u + 1,
                v + 1
            )));
        }

        let n = source.vertex_count();
        let q = r / 3;
        let mut pre = Graph::new(n * r);
        let mut labels = Vec::with_capacity(n * r);
        for i in 0..n {
            let members: Vec<VertexId> = (i * r..(i + 1) * r).collect();
            pre.add_clique(&members)?;
            labels.extend((1..=r).map(|k| format!("u{}^{k}", i + 1)));
        }
        pre.set_labels(labels)?;

        let mut next_slot = vec![0usize; n];
        let mut pairs = Vec::new();
        let mut pre_shared = Vec::new();
        for (i, j) in source.edges() {
            let mut w = Vec::with_capacity(q);
            for _ in 0..q {
                let a = i * r + next_slot[i];
                let b = j * r + next_slot[j];
                next_slot[i] += 1;
                next_slot[j] += 1;
                pairs.push((a, b));
                w.push(a);
            }
            pre_shared.push(((i, j), w));
        }
        let (target, map) = pre.identify_pairs(&pairs)?;

        let cliques: Vec<Clique> = (0..n)
            .map(|i| Clique::new((i * r..(i + 1) * r).map(|v| map[v]).collect()))
            .collect();
        let shared: Vec<_> = pre_shared
            .into_iter()
            .map(|(e, w)| (e, w.into_iter().map(|v| map[v]).collect::<Vec<_>>()))
            .collect();
        let free = (0..n)
            .map(|i| {
                (i * r + next_slot[i]..(i + 1) * r)
                    .map(|v| map[v])
                    .collect()
            })
            .collect();
        let index = cliques
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, c)| (c, i))
            .collect();
        Ok(VdkrReduction {
            source: source.clone(),
            r,
            target,
            cliques,
            shared,
            free,
            index,
        })
    }

    /// `{U_i : v_i ∈ s}`.
    pub fn map_is_to_packing(&self, s: &[VertexId]) -> Result<Packing> {
        let n = self.source.vertex_count();
        for (k, &u) in s.iter().enumerate() {
            if u >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: u,
                    count: n,
                });
            }
            if let Some(&v) = s[k + 1..]
                .iter()
                .find(|&&v| v == u || self.source.has_edge(u, v))
            {
                return Err(Error::InvalidArgument(format!(
                    "vertices {} and {} are not independent",
                    u + 1,
                    v + 1
                )));
            }
        }
        Packing::from_cliques(
            self.r,
            Mode::Vertex,
            s.iter().map(|&i| self.cliques[i].clone()).collect(),
        )
    }

    /// `{v_i : U_i ∈ t}`, sorted. Works for packings of either mode.
    pub fn map_packing_to_is(&self, t: &Packing) -> Result<Vec<VertexId>> {
        let mut out = Vec::with_capacity(t.len());
        for c in t.cliques() {
            match self.index.get(c) {
                Some(&i) => out.push(i),
                None => return Err(Error::Corrupt(format!("{c} is not one of the U_i"))),
            }
        }
        out.sort_unstable();
        for (k, &u) in out.iter().enumerate() {
            if let Some(&v) = out[k + 1..].iter().find(|&&v| self.source.has_edge(u, v)) {
                return Err(Error::InvalidPacking(format!(
                    "U_{} and U_{} overlap, the packing is not vertex-disjoint",
                    u + 1,
                    v + 1
                )));
            }
        }
        Ok(out)
    }

    pub fn clique_index(&self, c: &Clique) -> Option<usize> {
        self.index.get(c).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clique::enumerate_krs;
    use crate::generate::gen_triangle_free_cubic;
    use crate::graph::fixtures::*;

    #[test]
    fn single_edge() {
        let edge = path(2);
        let red = VdkrReduction::new(&edge, 3).unwrap();
        assert_eq!(red.target.vertex_count(), 5);
        assert_eq!(red.target.max_degree(), 4);
        assert_eq!(red.shared[0].1.len(), 1);

        let red = VdkrReduction::new(&edge, 4).unwrap();
        assert_eq!(red.target.vertex_count(), 7);
        assert_eq!(red.target.max_degree(), 6);
        assert_eq!(red.target.degree(red.shared[0].1[0]), 6);
    }

    #[test]
    fn edgeless_source() {
        let red = VdkrReduction::new(&Graph::new(3), 5).unwrap();
        assert_eq!(red.target.vertex_count(), 15);
        assert_eq!(red.target.max_degree(), 4);
        assert_eq!(red.free.iter().map(Vec::len).sum::<usize>(), 15);
    }

    #[test]
    fn rejects_bad_sources() {
        assert!(VdkrReduction::new(&Graph::complete(3), 3).is_err());
        let star = Graph::new(1).append_disconnected_star(4).unwrap();
        assert!(VdkrReduction::new(&star, 3)
            .unwrap_err()
            .to_string()
            .contains("degree 4"));
        assert!(VdkrReduction::new(&path(2), 2).is_err());
    }

    #[test]
    fn path_endpoints() {
        let red = VdkrReduction::new(&path(3), 3).unwrap();
        let p = red.map_is_to_packing(&[0, 2]).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(red.map_packing_to_is(&p).unwrap(), vec![0, 2]);
        assert!(red.map_is_to_packing(&[0, 1]).is_err());
        assert!(red.map_is_to_packing(&[]).unwrap().is_empty());
    }

    #[test]
    fn structure_on_random_sources() {
        for seed in 0..60 {
            let g = gen_triangle_free_cubic(4 + seed as usize % 8, seed);
            for r in 3..=9 {
                let red = VdkrReduction::new(&g, r).unwrap();
                let q = r / 3;
                let t = &red.target;
                assert_eq!(t.vertex_count(), g.vertex_count() * r - g.edge_count() * q);
                let mut found = enumerate_krs(t, r).unwrap();
                found.sort();
                let mut want = red.cliques.clone();
                want.sort();
                assert_eq!(found, want, "seed {seed} r {r}");
                for (_, w) in &red.shared {
                    assert_eq!(w.len(), q);
                    for &v in w {
                        assert_eq!(t.degree(v), 2 * r - q - 1);
                    }
                }
                for x in red.free.iter().flatten() {
                    assert_eq!(t.degree(*x), r - 1);
                }
                let covered = red.shared.iter().map(|(_, w)| w.len()).sum::<usize>()
                    + red.free.iter().map(Vec::len).sum::<usize>();
                assert_eq!(covered, t.vertex_count());
                if g.edge_count() > 0 {
                    assert_eq!(t.max_degree(), (5 * r).div_ceil(3) - 1);
                }
            }
        }
    }

    #[test]
    fn deterministic_bytes() {
        let g = gen_triangle_free_cubic(10, 4);
        let a = crate::io::write_dimacs(&VdkrReduction::new(&g, 5).unwrap().target);
        let b = crate::io::write_dimacs(&VdkrReduction::new(&g, 5).unwrap().target);
        assert_eq!(a, b);
    }
}
