//! Seeded random instance generators.
//!
//! All generators use ChaCha8 seeded from a `u64`, so a given seed produces the
//! same graph on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

pub(crate) fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random triangle-free graph with maximum degree at most 3.
///
/// Vertex pairs are visited in a shuffled order; a pair becomes an edge unless
/// that would push an endpoint past degree 3 or close a triangle.
pub fn gen_triangle_free_cubic(n: usize, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let mut g = Graph::new(n);
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(&mut rng);
    for (u, v) in pairs {
        if g.degree(u) >= 3 || g.degree(v) >= 3 {
            continue;
        }
        if crate::graph::sorted_intersect(g.neighbors(u), g.neighbors(v)) {
            continue;
        }
        g.add_edge(u, v).expect("fresh pair");
    }
    g
}

/// Random simple graph with Δ ≤ `dmax`.
///
/// A handful of random cliques of assorted sizes are planted first so that
/// the result actually contains K_r's of interest, then random edges are
/// sprinkled in wherever the degree budget allows.
pub fn gen_bounded_degree(n: usize, dmax: usize, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let mut g = Graph::new(n);
    if n < 2 || dmax == 0 {
        return g;
    }
    let max_size = (dmax + 1).min(n);
    for _ in 0..n {
        let size = rng.gen_range(2..=max_size);
        let mut members: Vec<usize> = (0..n).collect();
        members.shuffle(&mut rng);
        members.truncate(size);
        try_plant(&mut g, &members, dmax);
    }
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(&mut rng);
    for (u, v) in pairs {
        if rng.gen_bool(0.5) && g.degree(u) < dmax && g.degree(v) < dmax {
            g.add_edge(u, v).expect("in range");
        }
    }
    g
}

/// Random graph with Δ ≤ `dmax` built from overlapping planted K_r's.
///
/// Each attempt either starts fresh or reuses a random part of an earlier
/// clique, so the K_r intersection structure is rich. Attempts that would
/// exceed the degree budget are skipped, which is exactly what stresses the
/// degree-threshold lemmas.
pub fn gen_planted_cliques(n: usize, r: usize, dmax: usize, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let mut g = Graph::new(n);
    if r < 2 || r > n {
        return g;
    }
    let mut planted: Vec<Vec<usize>> = Vec::new();
    for _ in 0..3 * n {
        let mut members: Vec<usize> = Vec::with_capacity(r);
        if !planted.is_empty() && rng.gen_bool(0.7) {
            let base = &planted[rng.gen_range(0..planted.len())];
            let keep = rng.gen_range(1..r);
            let mut base = base.clone();
            base.shuffle(&mut rng);
            members.extend_from_slice(&base[..keep]);
        }
        let mut rest: Vec<usize> = (0..n).filter(|v| !members.contains(v)).collect();
        rest.shuffle(&mut rng);
        members.extend(rest.into_iter().take(r - members.len()));
        members.sort_unstable();
        if try_plant(&mut g, &members, dmax) {
            planted.push(members);
        }
    }
    // A little noise between the cliques.
    for _ in 0..n {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v && g.degree(u) < dmax && g.degree(v) < dmax {
            g.add_edge(u, v).expect("in range");
        }
    }
    g
}

fn try_plant(g: &mut Graph, members: &[usize], dmax: usize) -> bool {
    let fits = members.iter().all(|&u| {
        let missing = members
            .iter()
            .filter(|&&v| v != u && !g.has_edge(u, v))
            .count();
        g.degree(u) + missing <= dmax
    });
    if fits {
        g.add_clique(members).expect("in range");
    }
    fits
}
