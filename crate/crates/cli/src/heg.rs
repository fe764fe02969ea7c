//! The `heg` graph format.
//!
//! ```text
//! heg 1
//! vertices 3
//! edge 0 1
//! loop 2
//! half 2
//! ```
//!
//! Records are applied in order: `edge u v` appends the arcs `u→v, v→u`,
//! `loop v` appends a pair of mutually inverse arcs at `v`, `half v`
//! appends one self-inverse arc. Blank lines and `#` comments are ignored.

use schreier_core::{ArcData, ArcId, EdgeKind, Graph, VertexId};

use crate::error::ParseError;

pub const VERSION: u32 = 1;

/// Iterates over the meaningful lines of a document with their 1-based
/// numbers, stripping comments and surrounding whitespace.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

pub(crate) fn parse_index(
    line: usize,
    token: Option<&str>,
    what: &str,
) -> Result<usize, ParseError> {
    let token = token.ok_or_else(|| ParseError::new(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| ParseError::new(line, format!("bad {what} `{token}`")))
}

pub(crate) fn expect_end(
    line: usize,
    mut tokens: std::str::SplitWhitespace<'_>,
) -> Result<(), ParseError> {
    match tokens.next() {
        None => Ok(()),
        Some(t) => Err(ParseError::new(line, format!("unexpected `{t}`"))),
    }
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    parse_graph_lines(content_lines(text))
}

pub(crate) fn parse_graph_lines<'a>(
    mut lines: impl Iterator<Item = (usize, &'a str)>,
) -> Result<Graph, ParseError> {
    let (line, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(0, "empty document"))?;
    let mut tokens = header.split_whitespace();
    if tokens.next() != Some("heg") {
        return Err(ParseError::new(line, "expected `heg <version>` header"));
    }
    let version = parse_index(line, tokens.next(), "version")?;
    if version != VERSION as usize {
        return Err(ParseError::new(
            line,
            format!("unsupported version {version}"),
        ));
    }
    expect_end(line, tokens)?;

    let (line, count) = lines
        .next()
        .ok_or_else(|| ParseError::new(line, "missing `vertices` line"))?;
    let mut tokens = count.split_whitespace();
    if tokens.next() != Some("vertices") {
        return Err(ParseError::new(line, "expected `vertices <count>`"));
    }
    let n = parse_index(line, tokens.next(), "vertex count")?;
    expect_end(line, tokens)?;

    let mut g = Graph::new(n);
    for (line, record) in lines {
        let mut tokens = record.split_whitespace();
        let keyword = tokens.next().unwrap_or_default();
        let vertex = |tokens: &mut std::str::SplitWhitespace<'_>| -> Result<VertexId, ParseError> {
            let v = parse_index(line, tokens.next(), "vertex")?;
            if v >= n {
                return Err(ParseError::new(
                    line,
                    format!("vertex {v} out of range (count {n})"),
                ));
            }
            Ok(VertexId(v))
        };
        let added = match keyword {
            "edge" => {
                let u = vertex(&mut tokens)?;
                let v = vertex(&mut tokens)?;
                if u == v {
                    return Err(ParseError::new(line, "edge endpoints coincide, use `loop`"));
                }
                g.add_edge(u, v)
            }
            "loop" => g.add_loop(vertex(&mut tokens)?),
            "half" => g.add_half_edge(vertex(&mut tokens)?),
            other => return Err(ParseError::new(line, format!("unknown record `{other}`"))),
        };
        added.map_err(|e| ParseError::new(line, e.to_string()))?;
        expect_end(line, tokens)?;
    }
    Ok(g)
}

/// Canonical text of a graph: records sorted by endpoints, edges written
/// with the smaller endpoint first.
pub fn serialize_graph(g: &Graph) -> String {
    let (canonical, _) = canonicalize(g);
    let mut out = format!("heg {VERSION}\nvertices {}\n", canonical.vertex_count());
    for e in canonical.edges() {
        let (u, v) = canonical.endpoints(e);
        let line = match canonical.kind(e.arc()) {
            EdgeKind::HalfEdge => format!("half {u}\n"),
            EdgeKind::Loop => format!("loop {u}\n"),
            EdgeKind::Ordinary => format!("edge {u} {v}\n"),
        };
        out.push_str(&line);
    }
    out
}

/// Rebuilds `g` with its arcs in canonical record order. Returns the new
/// graph and, for every old arc id, its new id. Vertex ids are unchanged.
pub fn canonicalize(g: &Graph) -> (Graph, Vec<ArcId>) {
    let rank = |a: ArcId| u8::from(g.is_half_edge(a));
    let mut records: Vec<(usize, usize, u8, ArcId)> = g
        .edges()
        .map(|e| {
            let (u, v) = g.endpoints(e);
            let first = if u <= v { e.arc() } else { g.inv(e.arc()) };
            (u.0.min(v.0), u.0.max(v.0), rank(e.arc()), first)
        })
        .collect();
    records.sort();

    let mut new_of_old = vec![ArcId(usize::MAX); g.arc_count()];
    let mut order = Vec::with_capacity(g.arc_count());
    for &(_, _, _, first) in &records {
        new_of_old[first.0] = ArcId(order.len());
        order.push(first);
        let second = g.inv(first);
        if second != first {
            new_of_old[second.0] = ArcId(order.len());
            order.push(second);
        }
    }
    let arcs = order
        .iter()
        .map(|&old| {
            let d = g.arc(old);
            ArcData {
                iota: d.iota,
                tau: d.tau,
                inv: new_of_old[d.inv.0],
            }
        })
        .collect();
    (Graph::from_arcs(g.vertex_count(), arcs), new_of_old)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_half_edge() {
        let g = parse_graph("heg 1\nvertices 1\nhalf 0").unwrap();
        assert_eq!(g.regularity().unwrap(), Some(1));
        assert!(g.is_half_edge(ArcId(0)));
    }

    #[test]
    fn double_edge() {
        let g = parse_graph("heg 1\nvertices 2\nedge 0 1\nedge 0 1").unwrap();
        assert_eq!(g.degree(VertexId(0)).unwrap(), 2);
        assert_eq!(g.degree(VertexId(1)).unwrap(), 2);
    }

    #[test]
    fn records_build_arcs_in_order() {
        let g = parse_graph("heg 1\nvertices 2\nedge 1 0\nloop 0\nhalf 1\n").unwrap();
        assert_eq!(g.arc_count(), 5);
        assert_eq!(
            (g.iota(ArcId(0)), g.tau(ArcId(0))),
            (VertexId(1), VertexId(0))
        );
        assert!(g.is_loop(ArcId(2)) && !g.is_half_edge(ArcId(2)));
        assert!(g.is_half_edge(ArcId(4)));
    }

    #[test]
    fn comments_and_blank_lines() {
        let g =
            parse_graph("# a comment\n\nheg 1  # header\nvertices 2\n\nedge 0 1 # e\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_graph("heg 1\nvertices 2\nedge 0 2\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(err.to_string().contains("out of range"));
        assert_eq!(parse_graph("heg 2\nvertices 1\n").unwrap_err().line, 1);
        assert_eq!(
            parse_graph("heg 1\nvertices 1\nfoo 0\n").unwrap_err().line,
            3
        );
        assert_eq!(parse_graph("heg 1\nvertices x\n").unwrap_err().line, 2);
        assert_eq!(
            parse_graph("heg 1\nvertices 1\nhalf 0 0\n")
                .unwrap_err()
                .line,
            3
        );
        assert_eq!(
            parse_graph("heg 1\nvertices 2\nedge 1 1\n")
                .unwrap_err()
                .line,
            3
        );
        assert_eq!(parse_graph("").unwrap_err().line, 0);
    }

    #[test]
    fn canonical_text_is_sorted() {
        let g = parse_graph("heg 1\nvertices 3\nhalf 2\nedge 2 0\nloop 1\nedge 0 1\n").unwrap();
        assert_eq!(
            serialize_graph(&g),
            "heg 1\nvertices 3\nedge 0 1\nedge 0 2\nloop 1\nhalf 2\n"
        );
    }

    #[test]
    fn canonicalize_tracks_arcs() {
        let g = parse_graph("heg 1\nvertices 2\nhalf 1\nedge 1 0\n").unwrap();
        let (c, new_of_old) = canonicalize(&g);
        assert!(c.validate().is_empty());
        for a in g.arc_ids() {
            let b = new_of_old[a.0];
            assert_eq!(g.iota(a), c.iota(b));
            assert_eq!(g.tau(a), c.tau(b));
            assert_eq!(new_of_old[g.inv(a).0], c.inv(b));
        }
        assert_eq!(new_of_old, vec![ArcId(2), ArcId(1), ArcId(0)]);
    }
}
