//! Plain text graph format: a header `n m`, then `m` lines `u v [mult]` with
//! 0-indexed endpoints. Blank lines and `#` comments are ignored.

use std::fmt::Write as _;

use super::{Graph, Vertex, VertexSet};
use crate::error::{Error, Result};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Parses a graph. A third column with a multiplicity above one turns the
/// result into a pattern graph.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let nums: Vec<&str> = header.split_whitespace().collect();
    if nums.len() != 2 {
        return Err(parse_err(hline, "header must be `n m`"));
    }
    let n: usize = nums[0]
        .parse()
        .map_err(|_| parse_err(hline, "bad vertex count"))?;
    let m: usize = nums[1]
        .parse()
        .map_err(|_| parse_err(hline, "bad edge count"))?;

    let mut g = Graph::new(n);
    let mut count = 0;
    for (lno, line) in lines {
        let cols: Vec<&str> = line.split_whitespace().collect();
        if cols.len() < 2 || cols.len() > 3 {
            return Err(parse_err(lno, "expected `u v [mult]`"));
        }
        let num = |s: &str| -> Result<usize> {
            s.parse()
                .map_err(|_| parse_err(lno, format!("not a number: {s}")))
        };
        let (u, v) = (num(cols[0])?, num(cols[1])?);
        let mult = match cols.get(2) {
            Some(s) => num(s)? as u32,
            None => 1,
        };
        if u >= n || v >= n {
            return Err(parse_err(lno, format!("vertex out of range in {u} {v}")));
        }
        if u == v {
            return Err(parse_err(lno, format!("self-loop on {u}")));
        }
        if mult == 0 {
            return Err(parse_err(lno, "multiplicity must be positive"));
        }
        if mult > 1 {
            g.set_pattern(true);
        }
        g.add_edge_with_multiplicity(u, v, mult)
            .map_err(|e| parse_err(lno, e.to_string()))?;
        count += 1;
    }
    if count != m {
        return Err(parse_err(
            hline,
            format!("header declares {m} edges, found {count}"),
        ));
    }
    Ok(g)
}

/// Canonical serialization: vertices relabelled `0..n` by order, edges sorted.
pub fn serialize_graph(g: &Graph) -> String {
    let r = g.relabeled();
    let mut out = format!("{} {}\n", r.n(), r.m());
    for (u, v) in r.edges() {
        let m = r.multiplicity(u, v);
        if m > 1 {
            writeln!(out, "{u} {v} {m}").unwrap();
        } else {
            writeln!(out, "{u} {v}").unwrap();
        }
    }
    out
}

impl serde::Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&serialize_graph(self))
    }
}

/// Parses whitespace or comma separated vertex ids, or a JSON array.
pub fn parse_vertex_set(text: &str) -> Result<VertexSet> {
    let trimmed = text.trim();
    if trimmed.starts_with('[') {
        let v: Vec<Vertex> =
            serde_json::from_str(trimmed).map_err(|e| parse_err(1, e.to_string()))?;
        return Ok(v.into_iter().collect());
    }
    let mut out = VertexSet::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        for tok in line.split(|c: char| c.is_whitespace() || c == ',') {
            if tok.is_empty() {
                continue;
            }
            let v = tok
                .parse()
                .map_err(|_| parse_err(i + 1, format!("not a vertex id: {tok}")))?;
            out.insert(v);
        }
    }
    Ok(out)
}
