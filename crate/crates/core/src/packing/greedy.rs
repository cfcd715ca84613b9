use crate::clique::{enumerate_krs, Clique, Mode};
use crate::error::Result;
use crate::graph::Graph;

use super::{Occupancy, Packing};

/// A maximal packing built in one pass.
///
/// Vertices are scanned in ascending order and, at each vertex, every K_r
/// through it is taken in lexicographic order if it still fits. Because the
/// clique list is lexicographic, this is a single scan of the enumeration.
pub fn greedy_maximal_packing(g: &Graph, r: usize, mode: Mode) -> Result<Packing> {
    let cliques = enumerate_krs(g, r)?;
    let picked = greedy_over(&cliques, mode, &[]);
    Packing::from_cliques(
        r,
        mode,
        picked.into_iter().map(|i| cliques[i].clone()).collect(),
    )
}

/// Extends the packing `start` (indices into `cliques`) to a maximal one by
/// scanning `cliques` in order. Returns sorted indices.
pub fn greedy_over(cliques: &[Clique], mode: Mode, start: &[usize]) -> Vec<usize> {
    let mut occ = Occupancy::new(mode);
    let mut taken = vec![false; cliques.len()];
    for &i in start {
        occ.insert(&cliques[i]);
        taken[i] = true;
    }
    for (i, c) in cliques.iter().enumerate() {
        if !taken[i] && occ.fits(c) {
            occ.insert(c);
            taken[i] = true;
        }
    }
    (0..cliques.len()).filter(|&i| taken[i]).collect()
}
