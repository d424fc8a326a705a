//! Text formats: a plain edge list and the DIMACS `.col` subset.
//!
//! Edge list:
//!
//! ```text
//! # comment
//! n 3
//! 0 1
//! 1 2
//! ```
//!
//! DIMACS uses 1-based vertices: `c` comments, one `p edge <n> <m>` line,
//! then `e <u> <v>` lines.

use super::Graph;
use crate::error::{Error, Result};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_num(tok: &str, line: usize) -> Result<usize> {
    tok.parse::<usize>().map_err(|_| {
        parse_err(
            line,
            format!("expected a non-negative integer, found `{tok}`"),
        )
    })
}

fn check_endpoint(v: usize, n: usize, line: usize) -> Result<()> {
    if v >= n {
        return Err(parse_err(
            line,
            format!("endpoint {v} out of range for {n} vertices"),
        ));
    }
    Ok(())
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        match toks.as_slice() {
            ["n", count] => {
                if n.is_some() {
                    return Err(parse_err(line, "duplicate `n` header"));
                }
                n = Some(parse_num(count, line)?);
            }
            [a, b] => {
                let count = n.ok_or_else(|| parse_err(line, "edge before `n <count>` header"))?;
                let (u, v) = (parse_num(a, line)?, parse_num(b, line)?);
                check_endpoint(u, count, line)?;
                check_endpoint(v, count, line)?;
                if u == v {
                    return Err(parse_err(line, format!("self-loop at vertex {u}")));
                }
                edges.push((u, v));
            }
            _ => return Err(parse_err(line, format!("malformed line `{content}`"))),
        }
    }
    let n = n.ok_or_else(|| parse_err(0, "missing `n <count>` header"))?;
    Graph::from_edges(n, edges)
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        match toks.as_slice() {
            ["c", ..] => {}
            ["p", format, n, m] => {
                if header.is_some() {
                    return Err(parse_err(line, "duplicate `p` line"));
                }
                if *format != "edge" && *format != "col" {
                    return Err(parse_err(
                        line,
                        format!("unsupported problem format `{format}`"),
                    ));
                }
                header = Some((parse_num(n, line)?, parse_num(m, line)?));
            }
            ["e", a, b] => {
                let (n, _) = header.ok_or_else(|| parse_err(line, "edge before `p` line"))?;
                let (u, v) = (parse_num(a, line)?, parse_num(b, line)?);
                for w in [u, v] {
                    if w == 0 || w > n {
                        return Err(parse_err(
                            line,
                            format!("endpoint {w} out of range 1..={n}"),
                        ));
                    }
                }
                if u == v {
                    return Err(parse_err(line, format!("self-loop at vertex {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            _ => return Err(parse_err(line, format!("malformed line `{content}`"))),
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(0, "missing `p edge <n> <m>` line"))?;
    let lines = edges.len();
    let g = Graph::from_edges(n, edges)?;
    if g.edge_count() != lines {
        log::warn!(
            "collapsed {} duplicate edge line(s) in DIMACS input",
            lines - g.edge_count()
        );
    }
    if lines != m {
        log::warn!("DIMACS header declares {m} edges, found {lines} edge lines");
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn to_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}
