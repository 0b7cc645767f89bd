//! Plain-text graph files.
//!
//! ```text
//! # family: cycle 4
//! n 4
//! 0 1 1
//! 0 3 1
//! 1 2
//! 2 3 1
//! ```
//!
//! The first data line is `n <count>`; each further line is `u v [m]` with
//! 0-based endpoints and multiplicity `m` (default 1). Everything after `#`
//! is a comment, except that a `# family: <spec>` comment records the
//! generator the graph came from.

use crate::error::{Error, Result};
use crate::graph::{Family, MultiGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: MultiGraph,
    pub family: Option<Family>,
}

pub fn parse_graph(text: &str) -> Result<GraphFile> {
    let mut n: Option<usize> = None;
    let mut family = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let perr = |msg: String| Error::Parse { line: line_no, msg };
        let (data, comment) = match raw.find('#') {
            Some(p) => (&raw[..p], Some(&raw[p + 1..])),
            None => (raw, None),
        };
        if let Some(tag) = comment.and_then(|c| c.trim().strip_prefix("family:")) {
            family = Some(tag.trim().parse::<Family>().map_err(|e| perr(e.to_string()))?);
        }
        let words: Vec<&str> = data.split_whitespace().collect();
        if words.is_empty() {
            continue;
        }
        let num = |w: &str| w.parse::<u64>().map_err(|_| perr(format!("expected a number, got {w:?}")));
        match n {
            None => {
                if words.len() != 2 || words[0] != "n" {
                    return Err(perr("expected `n <count>`".into()));
                }
                n = Some(num(words[1])? as usize);
            }
            Some(_) => {
                let m = match words.len() {
                    2 => 1,
                    3 => num(words[2])?,
                    _ => return Err(perr("expected `u v [m]`".into())),
                };
                edges.push((num(words[0])? as usize, num(words[1])? as usize, m));
            }
        }
    }
    let n = n.ok_or(Error::Parse { line: 0, msg: "missing `n <count>` line".into() })?;
    Ok(GraphFile { graph: MultiGraph::new(n, edges)?, family })
}

/// Canonical text form: optional family tag, `n` line, then sorted `u v m`.
pub fn write_graph(g: &MultiGraph, family: Option<&Family>) -> String {
    let mut out = String::new();
    if let Some(f) = family {
        out.push_str(&format!("# family: {f}\n"));
    }
    out.push_str(&format!("n {}\n", g.n()));
    for &(u, v, m) in g.edges() {
        out.push_str(&format!("{u} {v} {m}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate_family;

    #[test]
    fn parses_defaults_and_comments() {
        let f = parse_graph("# a banana\nn 2\n0 1 3 # three copies\n").unwrap();
        assert_eq!(f.graph.multiplicity(0, 1), 3);
        let f = parse_graph("n 3\n0 1\n1 2\n").unwrap();
        assert_eq!(f.graph.edge_count(), 2);
        assert_eq!(f.family, None);
    }

    #[test]
    fn round_trip_is_bit_exact() {
        let fam = Family::Rook(3, 3);
        let g = generate_family(&fam).unwrap();
        let text = write_graph(&g, Some(&fam));
        let back = parse_graph(&text).unwrap();
        assert_eq!(back.graph, g);
        assert_eq!(back.family, Some(fam.clone()));
        assert_eq!(write_graph(&back.graph, back.family.as_ref()), text);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert!(matches!(parse_graph("n 2\n0 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("0 1\n"), Err(Error::Parse { line: 1, .. })));
        assert_eq!(parse_graph("n 4\n0 1\n2 3\n"), Err(Error::Disconnected));
    }
}
