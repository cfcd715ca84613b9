use serde::Serialize;

use super::{Assignment, Clause, Formula, Literal};
use crate::error::{Error, Result};

pub fn count_satisfied(phi: &Formula, f: &Assignment) -> usize {
    phi.clauses()
        .iter()
        .filter(|c| c.iter().any(|l| l.is_true_under(f.values())))
        .count()
}

/// Result of [`preprocess_single_occurrence`].
#[derive(Debug, Clone, Serialize)]
pub struct Preprocessed {
    /// Residual formula over the surviving variables, renumbered densely.
    pub formula: Formula,
    /// Per original variable: the forced value, or `None` if it survives.
    pub fixed: Vec<Option<bool>>,
    /// `kept[k]` is the original index of residual variable `k`.
    pub kept: Vec<usize>,
    /// Clauses satisfied by the forced values and dropped.
    pub removed_clauses: usize,
}

impl Preprocessed {
    /// Full assignment of the original formula from one of the residual.
    pub fn lift(&self, residual: &Assignment) -> Assignment {
        let mut values: Vec<bool> = self.fixed.iter().map(|v| v.unwrap_or(false)).collect();
        for (k, &orig) in self.kept.iter().enumerate() {
            values[orig] = residual.get(k);
        }
        Assignment(values)
    }

    pub fn partial(&self) -> Vec<(usize, bool)> {
        self.fixed
            .iter()
            .enumerate()
            .filter_map(|(v, x)| x.map(|b| (v, b)))
            .collect()
    }
}

/// Fixes every variable that occurs in exactly one clause to the value
/// satisfying that clause and drops the clause, until no such variable is
/// left. Variables left with no occurrences are fixed to false. The optimum
/// of the input equals the optimum of the residual plus `removed_clauses`.
pub fn preprocess_single_occurrence(phi: &Formula) -> Preprocessed {
    let n = phi.variable_count();
    let mut alive = vec![true; phi.clause_count()];
    let mut fixed: Vec<Option<bool>> = vec![None; n];
    let mut removed = 0;
    loop {
        let mut occ = vec![0usize; n];
        let mut last: Vec<Option<Literal>> = vec![None; n];
        let mut where_: Vec<usize> = vec![0; n];
        for (ci, c) in phi.clauses().iter().enumerate() {
            if !alive[ci] {
                continue;
            }
            for &l in c {
                occ[l.var] += 1;
                last[l.var] = Some(l);
                where_[l.var] = ci;
            }
        }
        let single = (0..n).find(|&v| fixed[v].is_none() && occ[v] == 1);
        match single {
            Some(v) => {
                fixed[v] = Some(last[v].unwrap().positive);
                alive[where_[v]] = false;
                removed += 1;
            }
            None => {
                for v in 0..n {
                    if fixed[v].is_none() && occ[v] == 0 {
                        fixed[v] = Some(false);
                    }
                }
                break;
            }
        }
    }
    let kept: Vec<usize> = (0..n).filter(|&v| fixed[v].is_none()).collect();
    let mut renumber = vec![usize::MAX; n];
    for (k, &v) in kept.iter().enumerate() {
        renumber[v] = k;
    }
    let clauses: Vec<Clause> = phi
        .clauses()
        .iter()
        .enumerate()
        .filter(|&(ci, _)| alive[ci])
        .map(|(_, c)| {
            c.iter()
                .map(|l| Literal {
                    var: renumber[l.var],
                    positive: l.positive,
                })
                .collect()
        })
        .collect();
    let formula = Formula::new(kept.len(), clauses).expect("residual of a valid formula is valid");
    Preprocessed {
        formula,
        fixed,
        kept,
        removed_clauses: removed,
    }
}

/// Satisfies at least half of the clauses.
///
/// Repeatedly takes the unset variable whose better polarity satisfies the
/// most not-yet-satisfied clauses (ties: lower index, then positive) and
/// sets it that way. Each step satisfies at least as many clauses as it can
/// falsify, hence the bound.
pub fn greedy_half(phi: &Formula) -> Assignment {
    let n = phi.variable_count();
    let mut values = vec![false; n];
    let mut set = vec![false; n];
    let mut satisfied = vec![false; phi.clause_count()];
    for _ in 0..n {
        let mut pos = vec![0usize; n];
        let mut neg = vec![0usize; n];
        for (ci, c) in phi.clauses().iter().enumerate() {
            if satisfied[ci] {
                continue;
            }
            for l in c {
                if l.positive {
                    pos[l.var] += 1;
                } else {
                    neg[l.var] += 1;
                }
            }
        }
        let mut best: Option<(usize, usize)> = None;
        for v in (0..n).filter(|&v| !set[v]) {
            let score = pos[v].max(neg[v]);
            if best.is_none_or(|(_, s)| score > s) {
                best = Some((v, score));
            }
        }
        let Some((v, _)) = best else { break };
        set[v] = true;
        values[v] = pos[v] >= neg[v];
        for (ci, c) in phi.clauses().iter().enumerate() {
            if c.iter().any(|l| l.var == v && l.positive == values[v]) {
                satisfied[ci] = true;
            }
        }
    }
    Assignment(values)
}

pub const BRUTE_FORCE_MAXSAT_LIMIT: usize = 24;

/// Exact optimum over all assignments, with the lexicographically least
/// optimal assignment (x1 first, false before true).
pub fn brute_force_maxsat(phi: &Formula) -> Result<(usize, Assignment)> {
    let n = phi.variable_count();
    if n > BRUTE_FORCE_MAXSAT_LIMIT {
        return Err(Error::GuardExceeded {
            what: "variables for brute-force MaxSAT",
            limit: BRUTE_FORCE_MAXSAT_LIMIT,
            actual: n,
        });
    }
    // x_i is bit n-1-i, so ascending masks run in lexicographic order.
    let bit = |v: usize| 1u32 << (n - 1 - v);
    let masks: Vec<(u32, u32)> = phi
        .clauses()
        .iter()
        .map(|c| {
            c.iter().fold((0, 0), |(p, q), l| {
                if l.positive {
                    (p | bit(l.var), q)
                } else {
                    (p, q | bit(l.var))
                }
            })
        })
        .collect();
    let mut best = 0;
    let mut best_mask = 0u32;
    let mut found = false;
    for mask in 0u32..(1u32 << n) {
        let sat = masks
            .iter()
            .filter(|&&(p, q)| mask & p != 0 || !mask & q != 0)
            .count();
        if !found || sat > best {
            best = sat;
            best_mask = mask;
            found = true;
            if best == masks.len() {
                break;
            }
        }
    }
    Ok((
        best,
        Assignment((0..n).map(|v| best_mask & bit(v) != 0).collect()),
    ))
}
