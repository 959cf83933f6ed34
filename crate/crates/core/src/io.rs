//! Text formats for colorings and partitions.
//!
//! Coloring file: a header line `n r`, then one `u v c` line per edge with
//! `0 <= u < v < n` and `1 <= c <= r`. Lines whose first non-blank character
//! is `#` are comments. Edges may come in any order; a repeated pair is an
//! error. The graph counts as complete when all `C(n,2)` pairs are listed.
//!
//! Partition file: one line per tree,
//! `tree <v0> <v1> ... ; edges (u,v) (u,v) ...`. Edge colors are looked up in
//! the coloring the partition belongs to.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::coloring::{choose2, Color, Edge, EdgeColoring, RawColoring, Tree, TreePartition, Vertex};
use crate::error::{Error, Result};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn number<T: std::str::FromStr>(line: usize, tok: &str, what: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("expected {what}, found `{tok}`")))
}

/// Parses the coloring format without semantic checks beyond syntax,
/// vertex ranges and duplicate pairs (which are reported with line numbers).
pub fn parse_coloring_raw(text: &str) -> Result<RawColoring> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing `n r` header"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(parse_err(hline, "header must be `n r`"));
    }
    let n: usize = number(hline, toks[0], "vertex count")?;
    let r: Color = number(hline, toks[1], "color count")?;

    let mut first_seen: BTreeMap<(Vertex, Vertex), usize> = BTreeMap::new();
    let mut edges = Vec::new();
    for (lineno, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 3 {
            return Err(parse_err(lineno, "edge line must be `u v c`"));
        }
        let u: Vertex = number(lineno, toks[0], "vertex")?;
        let v: Vertex = number(lineno, toks[1], "vertex")?;
        let c: Color = number(lineno, toks[2], "color")?;
        if u >= v || v >= n {
            return Err(parse_err(lineno, format!("edge {u} {v} needs 0 <= u < v < {n}")));
        }
        if c == 0 || c > r {
            return Err(parse_err(lineno, format!("color {c} outside 1..={r}")));
        }
        if let Some(prev) = first_seen.insert((u, v), lineno) {
            return Err(parse_err(lineno, format!("duplicate edge {u} {v} (first on line {prev})")));
        }
        edges.push((u, v, c));
    }
    let complete = edges.len() == choose2(n);
    Ok(RawColoring {
        n,
        r,
        complete,
        edges,
    })
}

pub fn parse_coloring(text: &str) -> Result<EdgeColoring> {
    EdgeColoring::from_raw(&parse_coloring_raw(text)?)
}

/// Header plus edges in lexicographic order. Deterministic.
pub fn write_coloring(c: &EdgeColoring) -> String {
    let mut out = String::with_capacity(16 + 8 * c.edge_count());
    writeln!(out, "{} {}", c.n(), c.r()).unwrap();
    for &(e, col) in c.edges() {
        writeln!(out, "{} {} {}", e.u(), e.v(), col).unwrap();
    }
    out
}

pub fn write_partition(p: &TreePartition) -> String {
    let mut out = String::new();
    for t in &p.trees {
        out.push_str("tree");
        for v in &t.vertices {
            write!(out, " {v}").unwrap();
        }
        out.push_str(" ; edges");
        for (e, _) in &t.edges {
            write!(out, " {e}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// Reads a partition file, taking edge colors from `c`. Edges missing from
/// `c` are kept with color 0 so that [`crate::check_partition`] reports them.
pub fn parse_partition(text: &str, c: &EdgeColoring) -> Result<TreePartition> {
    let mut trees = Vec::new();
    for (lineno, line) in content_lines(text) {
        let rest = line
            .strip_prefix("tree")
            .ok_or_else(|| parse_err(lineno, "line must start with `tree`"))?;
        let (verts, edges) = rest
            .split_once(';')
            .ok_or_else(|| parse_err(lineno, "missing `;` between vertices and edges"))?;
        let vertices = verts
            .split_whitespace()
            .map(|t| number(lineno, t, "vertex"))
            .collect::<Result<Vec<Vertex>>>()?;
        let edges = edges.trim();
        let edges = edges
            .strip_prefix("edges")
            .ok_or_else(|| parse_err(lineno, "expected `edges` after `;`"))?;
        let mut tree_edges = Vec::new();
        for tok in edges.split_whitespace() {
            let inner = tok
                .strip_prefix('(')
                .and_then(|t| t.strip_suffix(')'))
                .ok_or_else(|| parse_err(lineno, format!("expected `(u,v)`, found `{tok}`")))?;
            let (a, b) = inner
                .split_once(',')
                .ok_or_else(|| parse_err(lineno, format!("expected `(u,v)`, found `{tok}`")))?;
            let a: Vertex = number(lineno, a.trim(), "vertex")?;
            let b: Vertex = number(lineno, b.trim(), "vertex")?;
            if a == b {
                return Err(parse_err(lineno, format!("loop ({a},{b})")));
            }
            let e = Edge::new(a, b);
            tree_edges.push((e, c.color_of(e).unwrap_or(0)));
        }
        trees.push(Tree {
            vertices,
            edges: tree_edges,
        });
    }
    Ok(TreePartition { trees })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{is_partition_valid, Violation};

    #[test]
    fn parses_with_comments_and_any_order() {
        let text = "# rainbow triangle\n3 3\n1 2 3\n# middle\n0 1 1\n0 2 2\n";
        let c = parse_coloring(text).unwrap();
        assert!(c.is_complete());
        assert_eq!(c.color(1, 2), Some(3));
        assert_eq!(write_coloring(&c), "3 3\n0 1 1\n0 2 2\n1 2 3\n");
    }

    #[test]
    fn errors_carry_line_numbers() {
        let dup = "3 1\n0 1 1\n\n0 1 1\n";
        match parse_coloring(dup) {
            Err(Error::Parse { line, message }) => {
                assert_eq!(line, 4);
                assert!(message.contains("line 2"));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_coloring("3 1\n0 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_coloring("3 1\n1 0 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_coloring("3 1\n0 1 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_coloring("x 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_coloring(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn unused_color_is_rejected_after_parsing() {
        match parse_coloring("3 2\n0 1 1\n0 2 1\n1 2 1\n") {
            Err(Error::InvalidColoring(v)) => assert_eq!(v, vec![Violation::MissingColor(2)]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn partition_round_trip() {
        let c = EdgeColoring::rainbow(4).unwrap();
        let text = "tree 0 1 2 ; edges (0,1) (1,2)\ntree 3 ; edges\n";
        let p = parse_partition(text, &c).unwrap();
        assert!(is_partition_valid(&c, &p));
        assert_eq!(p.trees[0].edges[1].1, c.color(1, 2).unwrap());
        assert_eq!(write_partition(&p), text);
    }

    #[test]
    fn partition_with_missing_edge_is_invalid() {
        let c = parse_coloring("3 1\n0 1 1\n").unwrap();
        let p = parse_partition("tree 0 1 2 ; edges (0,1) (1,2)\n", &c).unwrap();
        assert!(!is_partition_valid(&c, &p));
        assert!(parse_partition("tree 0 1 ; edges 0,1\n", &c).is_err());
        assert!(parse_partition("leaf 0\n", &c).is_err());
    }
}
