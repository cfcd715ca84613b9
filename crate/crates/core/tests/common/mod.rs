//! Brute-force oracles shared by the integration suites. Nothing here calls
//! the library's own solvers, so they can cross-check them.

#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;
use krpack::{Formula, Graph};

/// All K_r's of `g`, found by extending each vertex with (r−1)-subsets of its
/// higher-numbered neighbours.
pub fn oracle_cliques(g: &Graph, r: usize) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    for v in 0..g.vertex_count() {
        let up: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| u > v).collect();
        for rest in up.iter().copied().combinations(r - 1) {
            if rest
                .iter()
                .tuple_combinations()
                .all(|(&a, &b)| g.has_edge(a, b))
            {
                let mut c = vec![v];
                c.extend(rest);
                c.sort_unstable();
                out.insert(c);
            }
        }
    }
    out
}

pub fn overlap(a: &[usize], b: &[usize]) -> usize {
    a.iter().filter(|v| b.contains(v)).count()
}

/// Adjacency matrix of the intersection graph: edge when two cliques share
/// at least `min_shared` vertices.
pub fn oracle_intersection(cliques: &[Vec<usize>], min_shared: usize) -> Vec<Vec<bool>> {
    let k = cliques.len();
    let mut adj = vec![vec![false; k]; k];
    for i in 0..k {
        for j in 0..k {
            adj[i][j] = i != j && overlap(&cliques[i], &cliques[j]) >= min_shared;
        }
    }
    adj
}

/// Whether some node has three pairwise non-adjacent neighbours. Works
/// from the leaves: for every non-adjacent pair {a, b}, look for a common
/// neighbour c and a node d outside N[a] ∪ N[b] adjacent to c. Returns the
/// centre and leaves of the first claw found.
pub fn oracle_claw(adj: &[Vec<bool>]) -> Option<(usize, [usize; 3])> {
    let k = adj.len();
    for a in 0..k {
        for b in a + 1..k {
            if adj[a][b] {
                continue;
            }
            let far: Vec<usize> = (0..k)
                .filter(|&d| d != a && d != b && !adj[a][d] && !adj[b][d])
                .collect();
            if far.is_empty() {
                continue;
            }
            for c in (0..k).filter(|&c| adj[a][c] && adj[b][c]) {
                if let Some(&d) = far.iter().find(|&&d| adj[c][d]) {
                    return Some((c, [a, b, d]));
                }
            }
        }
    }
    None
}

/// Largest set of pairwise non-adjacent nodes of `adj`, by plain branching.
pub fn oracle_max_independent(adj: &[Vec<bool>]) -> usize {
    fn go(adj: &[Vec<bool>], cand: &[usize], size: usize, best: &mut usize) {
        if size + cand.len() <= *best {
            return;
        }
        let Some((&v, rest)) = cand.split_first() else {
            *best = size;
            return;
        };
        let without_nb: Vec<usize> = rest.iter().copied().filter(|&u| !adj[v][u]).collect();
        go(adj, &without_nb, size + 1, best);
        go(adj, rest, size, best);
    }
    let cand: Vec<usize> = (0..adj.len()).collect();
    let mut best = 0;
    go(adj, &cand, 0, &mut best);
    best
}

/// Maximum independent set size of `g` by enumerating vertex subsets.
pub fn oracle_mis(g: &Graph) -> usize {
    let n = g.vertex_count();
    assert!(n <= 20);
    let edges: Vec<(usize, usize)> = g.edges().collect();
    (0u32..1 << n)
        .filter(|&m| {
            edges
                .iter()
                .all(|&(u, v)| m >> u & 1 == 0 || m >> v & 1 == 0)
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn oracle_satisfied(phi: &Formula, values: &[bool]) -> usize {
    phi.clauses()
        .iter()
        .filter(|c| c.iter().any(|l| values[l.var] == l.positive))
        .count()
}

/// MaxSAT optimum by enumerating all assignments.
pub fn oracle_maxsat(phi: &Formula) -> usize {
    let n = phi.variable_count();
    assert!(n <= 20);
    (0u32..1 << n)
        .map(|m| {
            let values: Vec<bool> = (0..n).map(|i| m >> i & 1 == 1).collect();
            oracle_satisfied(phi, &values)
        })
        .max()
        .unwrap_or(0)
}

/// Σ_i m_i over all variables.
pub fn total_occurrences(phi: &Formula) -> usize {
    phi.clauses().iter().map(Vec::len).sum()
}

pub fn oracle_max_degree(g: &Graph) -> usize {
    let mut deg = vec![0usize; g.vertex_count()];
    for (u, v) in g.edges() {
        deg[u] += 1;
        deg[v] += 1;
    }
    deg.into_iter().max().unwrap_or(0)
}

/// Whether the graph given by `adj` is one cycle through all its nodes.
pub fn is_single_cycle(adj: &[Vec<bool>]) -> bool {
    let k = adj.len();
    if k < 3 || (0..k).any(|i| adj[i].iter().filter(|&&b| b).count() != 2) {
        return false;
    }
    let mut seen = vec![false; k];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for u in 0..k {
            if adj[v][u] && !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    seen.into_iter().all(|s| s)
}
