//! Maximum independent set search used as the exact packing back end.
//!
//! Branch and bound over bitsets, one connected component at a time:
//! vertices of degree ≤ 1 are taken greedily, otherwise the search branches
//! on a maximum-degree vertex (take it / drop it). The bound is a greedy
//! clique cover of the remaining candidates, i.e. a greedy colouring of the
//! complement graph.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Search-tree nodes visited.
    pub nodes: u64,
    /// Subtrees cut by the clique-cover bound.
    pub prunes: u64,
}

#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn full(n: usize) -> Self {
        let mut b = Bits::empty(n);
        for i in 0..n {
            b.set(i);
        }
        b
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn clear(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    fn has(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn count_and(&self, other: &Bits) -> usize {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    fn and_not(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & !b).collect())
    }

    fn and_assign(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a &= b;
        }
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let t = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * 64 + t)
            })
        })
    }
}

/// Search state for one connected component.
struct Component<'s> {
    adj: Vec<Bits>,
    /// Closed neighbourhoods.
    closed: Vec<Bits>,
    stats: &'s mut SearchStats,
}

impl<'s> Component<'s> {
    fn new(g: &Graph, verts: &[usize], stats: &'s mut SearchStats) -> Self {
        let k = verts.len();
        let mut local = std::collections::HashMap::with_capacity(k);
        for (i, &v) in verts.iter().enumerate() {
            local.insert(v, i);
        }
        let mut adj = vec![Bits::empty(k); k];
        for (i, &v) in verts.iter().enumerate() {
            for w in g.neighbors(v) {
                if let Some(&j) = local.get(w) {
                    adj[i].set(j);
                }
            }
        }
        let closed = adj
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let mut c = a.clone();
                c.set(i);
                c
            })
            .collect();
        Component { adj, closed, stats }
    }

    fn clique_cover(&self, cand: &Bits) -> usize {
        // (members' common neighbourhood) per clique
        let mut covers: Vec<Bits> = Vec::new();
        'next: for v in cand.iter() {
            for common in covers.iter_mut() {
                if common.has(v) {
                    common.and_assign(&self.adj[v]);
                    continue 'next;
                }
            }
            covers.push(self.adj[v].clone());
        }
        covers.len()
    }

    /// Raises `best` to the largest independent set size in `cand` (plus
    /// `size`), stopping early once `best >= stop_at`.
    fn search(&mut self, mut cand: Bits, mut size: usize, best: &mut usize, stop_at: usize) {
        self.stats.nodes += 1;
        if *best >= stop_at {
            return;
        }
        loop {
            let low = cand.iter().find(|&v| self.adj[v].count_and(&cand) <= 1);
            match low {
                Some(v) => {
                    size += 1;
                    cand = cand.and_not(&self.closed[v]);
                }
                None => break,
            }
        }
        if cand.is_empty() {
            *best = (*best).max(size);
            return;
        }
        if size + self.clique_cover(&cand) <= *best {
            self.stats.prunes += 1;
            return;
        }
        let mut pivot = usize::MAX;
        let mut pivot_deg = 0;
        for v in cand.iter() {
            let d = self.adj[v].count_and(&cand);
            if pivot == usize::MAX || d > pivot_deg {
                pivot = v;
                pivot_deg = d;
            }
        }
        self.search(cand.and_not(&self.closed[pivot]), size + 1, best, stop_at);
        let mut without = cand;
        without.clear(pivot);
        self.search(without, size, best, stop_at);
    }

    fn maximum(&mut self, cand: &Bits) -> usize {
        let mut best = 0;
        self.search(cand.clone(), 0, &mut best, usize::MAX);
        best
    }

    fn at_least(&mut self, cand: &Bits, target: usize) -> bool {
        if target == 0 {
            return true;
        }
        let mut best = target - 1;
        self.search(cand.clone(), 0, &mut best, target);
        best >= target
    }

    /// Lexicographically least maximum independent set (local indices).
    fn lex_least(&mut self, k: usize) -> Vec<usize> {
        let mut cand = Bits::full(k);
        let mut need = self.maximum(&cand);
        let mut chosen = Vec::with_capacity(need);
        for v in 0..k {
            if need == 0 {
                break;
            }
            if !cand.has(v) {
                continue;
            }
            let rest = cand.and_not(&self.closed[v]);
            if self.at_least(&rest, need - 1) {
                chosen.push(v);
                cand = rest;
                need -= 1;
            } else {
                cand.clear(v);
            }
        }
        chosen
    }
}

fn components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            i += 1;
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// The lexicographically least maximum independent set of `g`, sorted.
pub fn maximum_independent_set(g: &Graph, stats: &mut SearchStats) -> Vec<usize> {
    let mut out = Vec::new();
    for comp in components(g) {
        let mut c = Component::new(g, &comp, stats);
        out.extend(c.lex_least(comp.len()).into_iter().map(|i| comp[i]));
    }
    out.sort_unstable();
    out
}

/// Independence number of `g` without constructing a witness.
pub fn independence_number(g: &Graph, stats: &mut SearchStats) -> usize {
    components(g)
        .into_iter()
        .map(|comp| {
            let mut c = Component::new(g, &comp, stats);
            c.maximum(&Bits::full(comp.len()))
        })
        .sum()
}

pub const BRUTE_FORCE_MIS_LIMIT: usize = 26;

/// Exhaustive maximum independent set over all vertex subsets. Independent
/// of the branch-and-bound search; meant for small graphs only.
pub fn brute_force_mis(g: &Graph) -> Result<(usize, Vec<usize>)> {
    let n = g.vertex_count();
    if n > BRUTE_FORCE_MIS_LIMIT {
        return Err(Error::GuardExceeded {
            what: "vertices for brute-force independent set",
            limit: BRUTE_FORCE_MIS_LIMIT,
            actual: n,
        });
    }
    let nbr: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let mut best_mask = 0u32;
    let mut best = 0;
    for mask in 0u32..(1u32 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let independent = (0..n).all(|v| mask >> v & 1 == 0 || nbr[v] & mask == 0);
        if independent {
            best = size;
            best_mask = mask;
        }
    }
    Ok((best, (0..n).filter(|&v| best_mask >> v & 1 == 1).collect()))
}
