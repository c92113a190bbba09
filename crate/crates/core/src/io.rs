//! Plain-text edge lists.
//!
//! ```text
//! # comment lines start with '#'
//! n m
//! u v      (m lines, 0-based vertex indices)
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let pair = |line: usize, l: &str| -> Result<(usize, usize)> {
        let toks: Vec<&str> = l.split_whitespace().collect();
        let [a, b] = toks.as_slice() else {
            return Err(Error::Parse { line, msg: format!("expected two integers, got {l:?}") });
        };
        let num = |t: &str| t.parse::<usize>().map_err(|_| Error::Parse { line, msg: format!("bad integer {t:?}") });
        Ok((num(a)?, num(b)?))
    };
    let (hline, header) = lines.next().ok_or(Error::Parse { line: 0, msg: "missing header line \"n m\"".into() })?;
    let (n, m) = pair(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        if edges.len() == m {
            return Err(Error::Parse { line, msg: format!("more than the declared {m} edges") });
        }
        edges.push(pair(line, l)?);
    }
    if edges.len() != m {
        return Err(Error::Parse { line: 0, msg: format!("declared {m} edges, found {}", edges.len()) });
    }
    Graph::new(n, &edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
