use std::fmt::Write;

use super::{content_lines, parse_num};
use crate::clique::Clique;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_dimacs(text: &str, ctx: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut g = Graph::new(0);
    let mut seen = 0;
    for (line, l) in content_lines(text) {
        let mut tok = l.split_whitespace();
        match tok.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(Error::parse(ctx, line, "second problem line"));
                }
                match tok.next() {
                    Some("edge") | Some("col") => {}
                    other => {
                        return Err(Error::parse(
                            ctx,
                            line,
                            format!("expected `p edge`, got {other:?}"),
                        ));
                    }
                }
                let n = parse_num(tok.next(), ctx, line, "vertex count")?;
                let m = parse_num(tok.next(), ctx, line, "edge count")?;
                header = Some((n, m));
                g = Graph::new(n);
            }
            Some("e") => {
                let Some((n, _)) = header else {
                    return Err(Error::parse(ctx, line, "edge before problem line"));
                };
                let u: usize = parse_num(tok.next(), ctx, line, "endpoint")?;
                let v: usize = parse_num(tok.next(), ctx, line, "endpoint")?;
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(Error::parse(
                            ctx,
                            line,
                            format!("vertex {x} outside 1..={n}"),
                        ));
                    }
                }
                if u == v {
                    return Err(Error::parse(ctx, line, format!("self-loop at {u}")));
                }
                if !g.add_edge(u - 1, v - 1)? {
                    return Err(Error::parse(ctx, line, format!("duplicate edge {u} {v}")));
                }
                seen += 1;
            }
            Some(other) => {
                return Err(Error::parse(
                    ctx,
                    line,
                    format!("unknown line type `{other}`"),
                ))
            }
            None => {}
        }
    }
    let Some((_, m)) = header else {
        return Err(Error::parse(ctx, 0, "no problem line"));
    };
    if seen != m {
        return Err(Error::parse(
            ctx,
            0,
            format!("header promises {m} edges, found {seen}"),
        ));
    }
    Ok(g)
}

/// Edges come out sorted, so equal graphs give equal bytes.
pub fn write_dimacs(g: &Graph) -> String {
    let mut s = String::new();
    writeln!(s, "p edge {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(s, "e {} {}", u + 1, v + 1).unwrap();
    }
    s
}

/// Reads `k v1 ... vr` lines; each must be a clique of `g`.
pub fn parse_clique_list(text: &str, g: &Graph, ctx: &str) -> Result<Vec<Clique>> {
    let mut out = Vec::new();
    for (line, l) in content_lines(text) {
        let mut tok = l.split_whitespace();
        if tok.next() != Some("k") {
            return Err(Error::parse(ctx, line, "expected `k v1 ... vr`"));
        }
        let mut vs = Vec::new();
        for t in tok {
            let v: usize = parse_num(Some(t), ctx, line, "vertex")?;
            if v == 0 || v > g.vertex_count() {
                return Err(Error::parse(
                    ctx,
                    line,
                    format!("vertex {v} outside 1..={}", g.vertex_count()),
                ));
            }
            vs.push(v - 1);
        }
        let c = Clique::checked(g, vs).map_err(|e| Error::parse(ctx, line, e.to_string()))?;
        out.push(c);
    }
    Ok(out)
}

pub fn write_clique_list(cliques: &[Clique]) -> String {
    let mut s = String::new();
    for c in cliques {
        s.push('k');
        for v in c.vertices() {
            write!(s, " {}", v + 1).unwrap();
        }
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn round_trip() {
        for g in [bowtie(), petersen(), Graph::new(3)] {
            let text = write_dimacs(&g);
            let h = parse_dimacs(&text, "t").unwrap();
            assert_eq!(write_dimacs(&h), text);
        }
        assert_eq!(write_dimacs(&bowtie()).lines().next(), Some("p edge 5 6"));
    }

    #[test]
    fn comments_and_header() {
        let g = parse_dimacs("c hello\np edge 3 2\ne 1 2\n\ne 3 2\n", "t").unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(g.has_edge(1, 2));
    }

    #[test]
    fn rejects_bad_input() {
        let cases = [
            ("p edge 2 1\ne 1 1\n", "self-loop"),
            ("p edge 2 2\ne 1 2\ne 2 1\n", "duplicate"),
            ("p edge 2 2\ne 1 2\n", "promises 2"),
            ("p edge 2 1\ne 1 3\n", "outside"),
            ("e 1 2\n", "before problem"),
            ("p edge 2 1\ne 1 x\n", "bad endpoint"),
            ("", "no problem line"),
        ];
        for (text, needle) in cases {
            let msg = parse_dimacs(text, "t").unwrap_err().to_string();
            assert!(msg.contains(needle), "{text:?}: {msg}");
        }
        let msg = parse_dimacs("p edge 2 1\n\ne 1 1\n", "g.txt")
            .unwrap_err()
            .to_string();
        assert!(msg.starts_with("g.txt, line 3"), "{msg}");
    }

    #[test]
    fn clique_lists() {
        let g = bowtie();
        let cs = vec![Clique::new(vec![0, 1, 2]), Clique::new(vec![2, 3, 4])];
        let text = write_clique_list(&cs);
        assert_eq!(text, "k 1 2 3\nk 3 4 5\n");
        assert_eq!(parse_clique_list(&text, &g, "t").unwrap(), cs);
        assert!(parse_clique_list("k 1 2 4\n", &g, "t").is_err());
        assert!(parse_clique_list("k 1 9\n", &g, "t").is_err());
        assert!(parse_clique_list("1 2 3\n", &g, "t").is_err());
    }
}
