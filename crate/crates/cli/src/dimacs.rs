//! DIMACS edge format: `p edge <n> <m>`, then `m` lines `e <u> <v>` with
//! 1-indexed endpoints. Lines starting with `c` are comments.

use std::fmt::Write;

use recolor_core::Graph;

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedGraph {
    pub graph: Graph,
    /// Edge lines that repeated an earlier edge.
    pub duplicates: usize,
}

fn number(token: Option<&str>, line: usize, what: &str) -> Result<usize, CliError> {
    let token = token.ok_or_else(|| CliError::parse(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| CliError::parse(line, format!("invalid {what} `{token}`")))
}

pub fn parse_graph(text: &str) -> Result<ParsedGraph, CliError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut tokens = raw.split_whitespace();
        match tokens.next() {
            None => continue,
            Some(t) if t.starts_with('c') => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(CliError::parse(line, "second problem line"));
                }
                match tokens.next() {
                    Some("edge" | "col") => {}
                    other => {
                        return Err(CliError::parse(
                            line,
                            format!("expected `p edge`, found `p {}`", other.unwrap_or("")),
                        ))
                    }
                }
                let n = number(tokens.next(), line, "vertex count")?;
                let m = number(tokens.next(), line, "edge count")?;
                header = Some((n, m, line));
            }
            Some("e") => {
                let Some((n, _, _)) = header else {
                    return Err(CliError::parse(line, "edge before the problem line"));
                };
                let u = number(tokens.next(), line, "endpoint")?;
                let v = number(tokens.next(), line, "endpoint")?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(CliError::parse(line, format!("endpoint out of range 1..={n}")));
                }
                if u == v {
                    return Err(CliError::parse(line, format!("loop at vertex {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            Some(t) => return Err(CliError::parse(line, format!("unexpected line type `{t}`"))),
        }
        if tokens.next().is_some() {
            return Err(CliError::parse(line, "trailing tokens"));
        }
    }
    let (n, m, header_line) = header.ok_or_else(|| CliError::parse(0, "missing `p edge` line"))?;
    if edges.len() != m {
        return Err(CliError::parse(
            header_line,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    let graph = Graph::new(n, edges.iter().copied())?;
    let duplicates = edges.len() - graph.edge_count();
    Ok(ParsedGraph { graph, duplicates })
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}
