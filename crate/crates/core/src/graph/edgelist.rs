//! Plain-text edge lists: a header line `n m` followed by one `u v` pair per line.

use std::fmt::Write;

use super::Graph;
use crate::error::{Error, Result};

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::with_capacity(8 * (g.m() + 1));
    writeln!(out, "{} {}", g.n(), g.m()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Blank lines and lines starting with `#` are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = lines.next().ok_or(Error::EdgeList {
        line: 0,
        msg: "missing header".into(),
    })?;
    let [n, m] = parse_pair(line, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        let [u, v] = parse_pair(line, l)?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::EdgeList {
            line,
            msg: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    let g = Graph::from_edges(n, edges)?;
    if g.m() != m {
        return Err(Error::EdgeList {
            line,
            msg: "duplicate edges".into(),
        });
    }
    Ok(g)
}

fn parse_pair(line: usize, text: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::EdgeList {
            line,
            msg: format!("expected two integers, got {text:?}"),
        });
    }
    let parse = |s: &str| {
        s.parse::<usize>().map_err(|e| Error::EdgeList {
            line,
            msg: format!("{s:?}: {e}"),
        })
    };
    Ok([parse(fields[0])?, parse(fields[1])?])
}
