//! Text formats. Vertex and variable numbers on disk are 1-based.
//!
//! * graphs: DIMACS edge format, `p edge <n> <m>` then `e <u> <v>` lines;
//! * formulas: DIMACS CNF, `p cnf <vars> <clauses>` then clauses ending in `0`;
//! * clique lists: one `k <v1> ... <vr>` line per clique.
//!
//! Lines starting with `c` are comments everywhere.

mod cnf;
mod dimacs;

use std::fs;
use std::path::Path;

use crate::clique::Clique;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sat::Formula;

pub use cnf::{parse_cnf, write_cnf};
pub use dimacs::{parse_clique_list, parse_dimacs, write_clique_list, write_dimacs};

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::io(path, e))
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    parse_dimacs(&read_text(path)?, &path.display().to_string())
}

pub fn write_graph(path: &Path, g: &Graph) -> Result<()> {
    write_text(path, &write_dimacs(g))
}

pub fn read_formula(path: &Path) -> Result<Formula> {
    parse_cnf(&read_text(path)?, &path.display().to_string())
}

pub fn write_formula(path: &Path, phi: &Formula) -> Result<()> {
    write_text(path, &write_cnf(phi))
}

pub fn read_cliques(path: &Path, g: &Graph) -> Result<Vec<Clique>> {
    parse_clique_list(&read_text(path)?, g, &path.display().to_string())
}

/// Meaningful lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('c') && !l.starts_with('%'))
}

fn parse_num<T: std::str::FromStr>(
    tok: Option<&str>,
    ctx: &str,
    line: usize,
    what: &str,
) -> Result<T> {
    let tok = tok.ok_or_else(|| Error::parse(ctx, line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| Error::parse(ctx, line, format!("bad {what} `{tok}`")))
}
