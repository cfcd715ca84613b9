//! Local-improvement packing in the style of Hurkens and Schrijver: keep
//! swapping out at most `t` packed cliques for `t + 1` unpacked ones until no
//! such swap exists.

use crate::clique::{enumerate_krs, Clique, Mode};
use crate::error::Result;
use crate::graph::Graph;
use crate::intersect::IntersectionGraph;

use super::greedy::greedy_over;
use super::Packing;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Swap {
    pub remove: Vec<usize>,
    pub insert: Vec<usize>,
}

/// Greedy start followed by `(≤ t, t + 1)` swaps until none applies.
pub fn local_improvement_packing(g: &Graph, r: usize, mode: Mode, t: usize) -> Result<Packing> {
    let cliques = enumerate_krs(g, r)?;
    let start = greedy_over(&cliques, mode, &[]);
    let packed = local_improvement_from(&cliques, mode, start, t);
    Packing::from_cliques(
        r,
        mode,
        packed.into_iter().map(|i| cliques[i].clone()).collect(),
    )
}

/// Improves `packing` (indices into `cliques`) until it admits no swap of
/// size at most `t`. Returns sorted indices.
pub fn local_improvement_from(
    cliques: &[Clique],
    mode: Mode,
    packing: Vec<usize>,
    t: usize,
) -> Vec<usize> {
    let h = IntersectionGraph::from_cliques(cliques.to_vec(), mode);
    let mut packing = packing;
    packing.sort_unstable();
    while let Some(swap) = swap_in(&h.graph, &packing, t) {
        packing.retain(|i| !swap.remove.contains(i));
        packing.extend(swap.insert);
        packing.sort_unstable();
    }
    packing
}

/// First improving swap in lexicographic order: `s + 1` pairwise compatible
/// unpacked cliques whose conflicts with the packing number at most `s`,
/// for the smallest `s ≤ t` that has one.
pub fn find_improving_swap(
    cliques: &[Clique],
    mode: Mode,
    packing: &[usize],
    t: usize,
) -> Option<Swap> {
    let h = IntersectionGraph::from_cliques(cliques.to_vec(), mode);
    swap_in(&h.graph, packing, t)
}

fn swap_in(conflict: &Graph, packing: &[usize], t: usize) -> Option<Swap> {
    let n = conflict.vertex_count();
    let mut packed = vec![false; n];
    for &i in packing {
        packed[i] = true;
    }
    let outside: Vec<usize> = (0..n).filter(|&i| !packed[i]).collect();
    for s in 0..=t {
        let mut insert = Vec::with_capacity(s + 1);
        let mut remove = Vec::new();
        if grow(conflict, &packed, &outside, 0, s, &mut insert, &mut remove) {
            remove.sort_unstable();
            return Some(Swap { remove, insert });
        }
    }
    None
}

fn grow(
    conflict: &Graph,
    packed: &[bool],
    outside: &[usize],
    from: usize,
    s: usize,
    insert: &mut Vec<usize>,
    remove: &mut Vec<usize>,
) -> bool {
    if insert.len() == s + 1 {
        return true;
    }
    for (k, &c) in outside.iter().enumerate().skip(from) {
        if insert.iter().any(|&x| conflict.has_edge(x, c)) {
            continue;
        }
        let before = remove.len();
        for &p in conflict.neighbors(c) {
            if packed[p] && !remove.contains(&p) {
                remove.push(p);
            }
        }
        if remove.len() <= s {
            insert.push(c);
            if grow(conflict, packed, outside, k + 1, s, insert, remove) {
                return true;
            }
            insert.pop();
        }
        remove.truncate(before);
    }
    false
}

/// Worst-case ratio `opt / |packing|` guaranteed for packings of `k`-element
/// sets that admit no `(≤ t, t + 1)` swap, as a fraction `(num, den)`.
///
/// With `q = t + 1` cliques swapped in at a time: for `q = 2p − 1` the bound
/// is `(k(k−1)^p − k) / (2(k−1)^p − k)`, for `q = 2p` it is
/// `(k(k−1)^p − 2) / (2(k−1)^p − 2)`. `t = 0` gives `k` (plain maximality).
/// For `k ≤ 2` the maximality bound `k` is returned.
pub fn local_search_ratio(k: u64, t: usize) -> (u128, u128) {
    if k <= 2 {
        return (k.max(1) as u128, 1);
    }
    let q = t as u32 + 1;
    let k = k as u128;
    let p = q.div_ceil(2);
    let pow = (k - 1).pow(p);
    let (num, den) = if q % 2 == 1 {
        (k * pow - k, 2 * pow - k)
    } else {
        (k * pow - 2, 2 * pow - 2)
    };
    let g = gcd(num, den);
    (num / g, den / g)
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
