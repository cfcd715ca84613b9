//! MAX2SAT(3): clauses of one or two literals, every variable in at most
//! three clauses.

mod maxsat;
pub mod random;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use maxsat::{
    brute_force_maxsat, count_satisfied, greedy_half, preprocess_single_occurrence, Preprocessed,
    BRUTE_FORCE_MAXSAT_LIMIT,
};

/// Most occurrences any variable may have.
pub const MAX_OCCURRENCES: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Literal {
    /// 0-based variable index.
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal {
            var,
            positive: true,
        }
    }

    pub fn neg(var: usize) -> Self {
        Literal {
            var,
            positive: false,
        }
    }

    /// DIMACS form: `±(var + 1)`.
    pub fn to_dimacs(self) -> i64 {
        let v = self.var as i64 + 1;
        if self.positive {
            v
        } else {
            -v
        }
    }

    pub fn from_dimacs(lit: i64) -> Option<Self> {
        if lit == 0 {
            return None;
        }
        Some(Literal {
            var: lit.unsigned_abs() as usize - 1,
            positive: lit > 0,
        })
    }

    pub fn is_true_under(self, values: &[bool]) -> bool {
        values[self.var] == self.positive
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.positive {
            write!(f, "¬")?;
        }
        write!(f, "x{}", self.var + 1)
    }
}

pub type Clause = Vec<Literal>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Formula {
    variable_count: usize,
    clauses: Vec<Clause>,
}

impl Formula {
    pub fn new(variable_count: usize, clauses: Vec<Clause>) -> Result<Self> {
        let mut occ = vec![0usize; variable_count];
        for (ci, clause) in clauses.iter().enumerate() {
            if clause.is_empty() || clause.len() > 2 {
                return Err(Error::Formula(format!(
                    "clause {} has {} literals, expected 1 or 2",
                    ci + 1,
                    clause.len()
                )));
            }
            for lit in clause {
                if lit.var >= variable_count {
                    return Err(Error::Formula(format!(
                        "clause {} mentions x{} but there are only {variable_count} variables",
                        ci + 1,
                        lit.var + 1
                    )));
                }
                occ[lit.var] += 1;
            }
        }
        if let Some(v) = occ.iter().position(|&m| m > MAX_OCCURRENCES) {
            return Err(Error::Formula(format!(
                "x{} occurs {} times, at most {MAX_OCCURRENCES} allowed",
                v + 1,
                occ[v]
            )));
        }
        Ok(Formula {
            variable_count,
            clauses,
        })
    }

    /// Builds from DIMACS-style signed literals, e.g. `&[&[1, 2], &[-1, -2]]`.
    pub fn from_dimacs(variable_count: usize, clauses: &[&[i64]]) -> Result<Self> {
        let clauses = clauses
            .iter()
            .map(|c| {
                c.iter()
                    .map(|&l| {
                        Literal::from_dimacs(l)
                            .ok_or_else(|| Error::Formula("literal 0 inside a clause".into()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Formula::new(variable_count, clauses)
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn clause_count(&self) -> usize {
        self.clauses.len()
    }

    /// m_i for every variable.
    pub fn occurrences(&self) -> Vec<usize> {
        let mut occ = vec![0; self.variable_count];
        for lit in self.clauses.iter().flatten() {
            occ[lit.var] += 1;
        }
        occ
    }

    /// Every variable occurs two or three times.
    pub fn is_reduction_ready(&self) -> bool {
        self.occurrences().iter().all(|&m| (2..=3).contains(&m))
    }

    /// Error naming the first variable outside `2 ≤ m_i ≤ 3`.
    pub fn check_reduction_ready(&self) -> Result<()> {
        for (v, &m) in self.occurrences().iter().enumerate() {
            if !(2..=3).contains(&m) {
                return Err(Error::Formula(format!(
                    "x{} occurs {m} times; reductions need 2 or 3 occurrences",
                    v + 1
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.clauses.is_empty() {
            return write!(f, "⊤");
        }
        for (i, c) in self.clauses.iter().enumerate() {
            if i > 0 {
                write!(f, " ∧ ")?;
            }
            write!(f, "(")?;
            for (j, l) in c.iter().enumerate() {
                if j > 0 {
                    write!(f, " ∨ ")?;
                }
                write!(f, "{l}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Assignment(pub Vec<bool>);

impl Assignment {
    pub fn all(n: usize, value: bool) -> Self {
        Assignment(vec![value; n])
    }

    pub fn values(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, var: usize) -> bool {
        self.0[var]
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            write!(f, "{}", if b { 'T' } else { 'F' })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Formula::from_dimacs(2, &[&[1, 2], &[-1, -2]]).is_ok());
        assert!(Formula::from_dimacs(0, &[]).is_ok());
        assert!(Formula::from_dimacs(2, &[&[1, 2, -1]]).is_err());
        assert!(Formula::new(1, vec![vec![]]).is_err());
        assert!(Formula::from_dimacs(1, &[&[2]]).is_err());
        let err = Formula::from_dimacs(1, &[&[1], &[1], &[-1], &[1]]).unwrap_err();
        assert!(err.to_string().contains("x1"));
    }

    #[test]
    fn occurrences_and_readiness() {
        let f = Formula::from_dimacs(2, &[&[1, 2], &[-1, -2]]).unwrap();
        assert_eq!(f.occurrences(), vec![2, 2]);
        assert!(f.is_reduction_ready());
        let g = Formula::from_dimacs(2, &[&[1, 2]]).unwrap();
        assert!(!g.is_reduction_ready());
        assert!(g
            .check_reduction_ready()
            .unwrap_err()
            .to_string()
            .contains("x1"));
    }

    #[test]
    fn display() {
        let f = Formula::from_dimacs(2, &[&[1, -2]]).unwrap();
        assert_eq!(f.to_string(), "(x1 ∨ ¬x2)");
        assert_eq!(Assignment(vec![true, false]).to_string(), "TF");
    }
}
