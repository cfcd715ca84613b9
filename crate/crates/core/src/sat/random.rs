//! Seeded formula generators.

use rand::seq::SliceRandom;
use rand::Rng;

use super::{Clause, Formula, Literal, MAX_OCCURRENCES};
use crate::generate::rng;

/// A random MAX2SAT(3) formula over `n` variables: clauses are drawn until
/// no variable has a free occurrence slot left or a draw fails. Roughly one
/// clause in five is a unit clause.
pub fn random_formula(n: usize, seed: u64) -> Formula {
    let mut rng = rng(seed);
    let mut free = vec![MAX_OCCURRENCES; n];
    let mut clauses: Vec<Clause> = Vec::new();
    let target = rng.gen_range(0..=3 * n / 2 + 1);
    for _ in 0..target {
        let open: Vec<usize> = (0..n).filter(|&v| free[v] > 0).collect();
        if open.is_empty() {
            break;
        }
        let len = if open.len() >= 2 && rng.gen_bool(0.8) {
            2
        } else {
            1
        };
        let vars: Vec<usize> = open.choose_multiple(&mut rng, len).copied().collect();
        let clause: Clause = vars
            .iter()
            .map(|&v| {
                free[v] -= 1;
                Literal {
                    var: v,
                    positive: rng.gen_bool(0.5),
                }
            })
            .collect();
        clauses.push(clause);
    }
    Formula::new(n, clauses).expect("generator respects occurrence bounds")
}

/// A random reduction-ready formula over `n ≥ 2` variables made of two-literal
/// clauses on distinct variables (so every m_i is 2 or 3). Retries internally
/// until the occurrence profile fits.
pub fn random_ready_formula(n: usize, seed: u64) -> Formula {
    assert!(n >= 2, "need at least two variables");
    let mut rng = rng(seed);
    loop {
        // Occurrence budget per variable, total even.
        let mut m: Vec<usize> = (0..n).map(|_| rng.gen_range(2..=3)).collect();
        if m.iter().sum::<usize>() % 2 == 1 {
            let v = rng.gen_range(0..n);
            m[v] = if m[v] == 2 { 3 } else { 2 };
        }
        let mut slots: Vec<usize> = m
            .iter()
            .enumerate()
            .flat_map(|(v, &k)| std::iter::repeat_n(v, k))
            .collect();
        slots.shuffle(&mut rng);
        let pairs: Vec<(usize, usize)> = slots.chunks(2).map(|c| (c[0], c[1])).collect();
        if pairs.iter().any(|&(a, b)| a == b) {
            continue;
        }
        let clauses = pairs
            .into_iter()
            .map(|(a, b)| {
                vec![
                    Literal {
                        var: a,
                        positive: rng.gen_bool(0.5),
                    },
                    Literal {
                        var: b,
                        positive: rng.gen_bool(0.5),
                    },
                ]
            })
            .collect();
        return Formula::new(n, clauses).expect("occurrence profile is 2 or 3");
    }
}

/// Every reduction-ready formula over two variables built from two-literal
/// clauses: each of the 8 ordered clause shapes `(±x_a ∨ ±x_b)`, `a ≠ b`,
/// in sequences of length 2 or 3.
pub fn all_ready_two_variable_formulas() -> Vec<Formula> {
    let mut shapes: Vec<Clause> = Vec::new();
    for (a, b) in [(0, 1), (1, 0)] {
        for pa in [true, false] {
            for pb in [true, false] {
                shapes.push(vec![
                    Literal {
                        var: a,
                        positive: pa,
                    },
                    Literal {
                        var: b,
                        positive: pb,
                    },
                ]);
            }
        }
    }
    let mut out = Vec::new();
    for len in 2..=3u32 {
        for code in 0..shapes.len().pow(len) {
            let clauses = (0..len)
                .rev()
                .map(|k| shapes[code / shapes.len().pow(k) % shapes.len()].clone())
                .collect();
            out.push(Formula::new(2, clauses).expect("two or three clauses over two variables"));
        }
    }
    out
}
