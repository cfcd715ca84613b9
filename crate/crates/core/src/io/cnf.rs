use std::fmt::Write;

use super::{content_lines, parse_num};
use crate::error::{Error, Result};
use crate::sat::{Formula, Literal};

/// DIMACS CNF restricted to clauses of one or two literals. A clause may
/// span lines; it ends at `0`.
pub fn parse_cnf(text: &str, ctx: &str) -> Result<Formula> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<Vec<Literal>> = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    for (line, l) in content_lines(text) {
        let mut tok = l.split_whitespace().peekable();
        if tok.peek() == Some(&"p") {
            tok.next();
            if header.is_some() {
                return Err(Error::parse(ctx, line, "second problem line"));
            }
            if tok.next() != Some("cnf") {
                return Err(Error::parse(ctx, line, "expected `p cnf`"));
            }
            let n = parse_num(tok.next(), ctx, line, "variable count")?;
            let m = parse_num(tok.next(), ctx, line, "clause count")?;
            header = Some((n, m));
            continue;
        }
        let Some((n, _)) = header else {
            return Err(Error::parse(ctx, line, "clause before problem line"));
        };
        for t in tok {
            let lit: i64 = parse_num(Some(t), ctx, line, "literal")?;
            if lit == 0 {
                if current.is_empty() {
                    return Err(Error::parse(
                        ctx,
                        line,
                        format!("clause {} is empty", clauses.len() + 1),
                    ));
                }
                clauses.push(std::mem::take(&mut current));
                continue;
            }
            let var = lit.unsigned_abs() as usize;
            if var > n {
                return Err(Error::parse(
                    ctx,
                    line,
                    format!(
                        "clause {} mentions x{var} but the header declares {n} variables",
                        clauses.len() + 1
                    ),
                ));
            }
            current.push(Literal::from_dimacs(lit).expect("nonzero"));
            if current.len() > 2 {
                return Err(Error::parse(
                    ctx,
                    line,
                    format!("clause {} has more than two literals", clauses.len() + 1),
                ));
            }
        }
    }
    let Some((n, m)) = header else {
        return Err(Error::parse(ctx, 0, "no problem line"));
    };
    if !current.is_empty() {
        return Err(Error::parse(
            ctx,
            0,
            format!("clause {} not terminated by 0", clauses.len() + 1),
        ));
    }
    if clauses.len() != m {
        return Err(Error::parse(
            ctx,
            0,
            format!("header promises {m} clauses, found {}", clauses.len()),
        ));
    }
    Formula::new(n, clauses)
}

pub fn write_cnf(phi: &Formula) -> String {
    let mut s = String::new();
    writeln!(s, "p cnf {} {}", phi.variable_count(), phi.clause_count()).unwrap();
    for c in phi.clauses() {
        for l in c {
            write!(s, "{} ", l.to_dimacs()).unwrap();
        }
        s.push_str("0\n");
    }
    s
}
