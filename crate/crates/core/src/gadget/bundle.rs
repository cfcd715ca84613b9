//! On-disk form of a reduction: the target graph as DIMACS plus a JSON
//! sidecar naming the role of every vertex and clique. All numbers in the
//! sidecar are 1-based vertex ids, matching the DIMACS file.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{EdkReduction, VdkrReduction};
use crate::clique::Clique;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io;

pub const BUNDLE_SCHEMA: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Bundle {
    pub schema: u32,
    pub kind: String,
    pub r: usize,
    pub source: Option<String>,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub max_degree: usize,
    pub labels: BTreeMap<usize, String>,
    /// Named clique families, e.g. `U:3`, `even:x1`, `P:C2.1`.
    pub cliques: BTreeMap<String, Vec<Vec<usize>>>,
    /// Named vertex sets, e.g. `W:1-2`, `X:4`.
    pub sets: BTreeMap<String, Vec<usize>>,
}

fn one_based(c: &Clique) -> Vec<usize> {
    c.vertices().iter().map(|v| v + 1).collect()
}

fn labels_of(g: &Graph) -> BTreeMap<usize, String> {
    g.labels()
        .map(|ls| {
            ls.iter()
                .enumerate()
                .map(|(v, l)| (v + 1, l.clone()))
                .collect()
        })
        .unwrap_or_default()
}

impl Bundle {
    fn base(kind: &str, r: usize, target: &Graph, source: Option<&str>) -> Bundle {
        Bundle {
            schema: BUNDLE_SCHEMA,
            kind: kind.into(),
            r,
            source: source.map(str::to_owned),
            vertex_count: target.vertex_count(),
            edge_count: target.edge_count(),
            max_degree: target.max_degree(),
            labels: labels_of(target),
            cliques: BTreeMap::new(),
            sets: BTreeMap::new(),
        }
    }

    pub fn from_vdkr(red: &VdkrReduction, source: Option<&str>) -> Bundle {
        let mut b = Bundle::base("vdkr", red.r, &red.target, source);
        for (i, c) in red.cliques.iter().enumerate() {
            b.cliques.insert(format!("U:{}", i + 1), vec![one_based(c)]);
        }
        for ((i, j), w) in &red.shared {
            b.sets.insert(
                format!("W:{}-{}", i + 1, j + 1),
                w.iter().map(|v| v + 1).collect(),
            );
        }
        for (i, x) in red.free.iter().enumerate() {
            b.sets
                .insert(format!("X:{}", i + 1), x.iter().map(|v| v + 1).collect());
        }
        b
    }

    pub fn from_edk(red: &EdkReduction, source: Option<&str>) -> Bundle {
        let mut b = Bundle::base(&red.kind.to_string(), red.r(), &red.target, source);
        for (i, (ev, od)) in red.even.iter().zip(&red.odd).enumerate() {
            b.cliques.insert(
                format!("even:x{}", i + 1),
                ev.iter().map(one_based).collect(),
            );
            b.cliques.insert(
                format!("odd:x{}", i + 1),
                od.iter().map(one_based).collect(),
            );
        }
        for cc in &red.clause_cliques {
            b.cliques.insert(
                format!("P:C{}.{}", cc.clause + 1, cc.position + 1),
                vec![one_based(&cc.clique)],
            );
        }
        b
    }

    /// Checks the sidecar against its graph: sizes, Δ, and that every named
    /// clique is a K_r.
    pub fn audit(&self, g: &Graph) -> Result<()> {
        if self.schema != BUNDLE_SCHEMA {
            return Err(Error::Corrupt(format!(
                "unknown bundle schema {}",
                self.schema
            )));
        }
        if self.vertex_count != g.vertex_count() || self.edge_count != g.edge_count() {
            return Err(Error::Corrupt(format!(
                "sidecar says {} vertices / {} edges, graph has {} / {}",
                self.vertex_count,
                self.edge_count,
                g.vertex_count(),
                g.edge_count()
            )));
        }
        if self.max_degree != g.max_degree() {
            return Err(Error::Corrupt(format!(
                "sidecar says Δ = {}, graph has {}",
                self.max_degree,
                g.max_degree()
            )));
        }
        for (name, list) in &self.cliques {
            for vs in list {
                let c = Clique::checked(g, vs.iter().map(|v| v.wrapping_sub(1)).collect())
                    .map_err(|e| Error::Corrupt(format!("{name}: {e}")))?;
                if c.len() != self.r {
                    return Err(Error::Corrupt(format!("{name}: {c} is not a K_{}", self.r)));
                }
            }
        }
        Ok(())
    }

    /// Sidecar path for a graph path: same stem, `.json` extension.
    pub fn sidecar_path(graph_path: &Path) -> PathBuf {
        graph_path.with_extension("json")
    }

    pub fn write(&self, graph_path: &Path, g: &Graph) -> Result<PathBuf> {
        let side = Bundle::sidecar_path(graph_path);
        if side == graph_path {
            return Err(Error::InvalidArgument(format!(
                "graph path {} would collide with its JSON sidecar",
                graph_path.display()
            )));
        }
        io::write_graph(graph_path, g)?;
        io::write_text(&side, &(serde_json::to_string_pretty(self)? + "\n"))?;
        Ok(side)
    }

    pub fn read(graph_path: &Path) -> Result<(Graph, Bundle)> {
        let g = io::read_graph(graph_path)?;
        let side = Bundle::sidecar_path(graph_path);
        let b: Bundle = serde_json::from_str(&io::read_text(&side)?)?;
        b.audit(&g)?;
        Ok((g, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadget::EdkKind;
    use crate::graph::fixtures::path;
    use crate::sat::Formula;

    #[test]
    fn vdkr_single_edge_bundle() {
        let red = VdkrReduction::new(&path(2), 3).unwrap();
        let b = Bundle::from_vdkr(&red, Some("edge.dimacs"));
        assert_eq!((b.vertex_count, b.max_degree), (5, 4));
        assert_eq!(b.cliques["U:1"], vec![vec![1, 2, 3]]);
        assert_eq!(b.sets["W:1-2"], vec![1]);
        assert_eq!(b.labels[&1], "u1^1=u2^1");
        b.audit(&red.target).unwrap();
    }

    #[test]
    fn edk_round_trip_on_disk() {
        let phi = Formula::from_dimacs(2, &[&[1, 2], &[-1, -2]]).unwrap();
        let red = EdkReduction::new(EdkKind::K4, &phi).unwrap();
        let b = Bundle::from_edk(&red, None);
        assert_eq!(b.cliques["even:x1"].len(), 6);
        assert_eq!(b.cliques.keys().filter(|k| k.starts_with("P:")).count(), 4);

        let dir = tempfile::tempdir().unwrap();
        let gp = dir.path().join("t.dimacs");
        let side = b.write(&gp, &red.target).unwrap();
        assert!(side.ends_with("t.json"));
        let (g, back) = Bundle::read(&gp).unwrap();
        assert_eq!(back, b);
        assert_eq!(g.edge_count(), red.target.edge_count());

        let mut broken = b.clone();
        broken.cliques.insert("bogus".into(), vec![vec![1, 42]]);
        assert!(broken.audit(&g).is_err());
        assert!(b.write(&dir.path().join("x.json"), &g).is_err());
    }
}
