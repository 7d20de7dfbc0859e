//! The plain-text graph format.
//!
//! ```text
//! # optional comment
//! vertices: 3
//! 0: 0 1
//! 1: 1 2
//! 2: 0 2
//! ```
//!
//! The header names the vertex set `0..n`; each edge line is
//! `id: tail head` with the written order fixing the orientation. Blank
//! lines and lines starting with `#` are skipped. Writing a graph and
//! parsing it back reproduces the graph exactly — ids, endpoints, and
//! orientations included.

use super::{EdgeId, Multigraph, VertexId};
use crate::{Error, Result};

impl Multigraph {
    pub fn parse_text(input: &str) -> Result<Multigraph> {
        let mut graph: Option<Multigraph> = None;
        for (i, raw) in input.lines().enumerate() {
            let lineno = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: String| Error::Parse { line: lineno, msg };
            let (label, rest) = line
                .split_once(':')
                .ok_or_else(|| err("expected `vertices: n` or `id: tail head`".into()))?;
            let label = label.trim();
            let rest = rest.trim();
            match &mut graph {
                None => {
                    if label != "vertices" {
                        return Err(err("first line must be `vertices: n`".into()));
                    }
                    let n: u32 = rest
                        .parse()
                        .map_err(|_| err(format!("bad vertex count {rest:?}")))?;
                    graph = Some(Multigraph::new(n));
                }
                Some(g) => {
                    let id: u32 = label
                        .parse()
                        .map_err(|_| err(format!("bad edge id {label:?}")))?;
                    let mut parts = rest.split_whitespace();
                    let (tail, head) = match (parts.next(), parts.next(), parts.next()) {
                        (Some(t), Some(h), None) => (t, h),
                        _ => return Err(err("edge line needs exactly `tail head`".into())),
                    };
                    let tail: u32 = tail
                        .parse()
                        .map_err(|_| err(format!("bad tail {tail:?}")))?;
                    let head: u32 = head
                        .parse()
                        .map_err(|_| err(format!("bad head {head:?}")))?;
                    g.add_edge_with_id(EdgeId(id), VertexId(tail), VertexId(head))
                        .map_err(|e| err(e.to_string()))?;
                }
            }
        }
        graph.ok_or(Error::Parse {
            line: input.lines().count(),
            msg: "missing `vertices: n` header".into(),
        })
    }

    /// Render in the text format. The graph's vertices must be exactly
    /// `0..n` (graphs derived by contraction have gaps and are not
    /// representable without relabeling).
    pub fn to_text(&self) -> Result<String> {
        let n = self.vertex_count() as u32;
        for (i, v) in self.vertices().iter().enumerate() {
            if v.0 != i as u32 {
                return Err(Error::Unwritable(format!(
                    "vertex ids must be 0..{n}, found {v}"
                )));
            }
        }
        let mut out = format!("vertices: {n}\n");
        for e in self.edges() {
            out.push_str(&format!("{}: {} {}\n", e.id.0, e.tail.0, e.head.0));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_exact() {
        let g = Multigraph::from_edges(4, &[(1, 0), (1, 2), (2, 3), (3, 1)]);
        let text = g.to_text().unwrap();
        let back = Multigraph::parse_text(&text).unwrap();
        assert_eq!(g, back);
        assert_eq!(back.to_text().unwrap(), text);
    }

    #[test]
    fn comments_blanks_and_spacing_are_tolerated() {
        let src = "# a triangle\n\nvertices: 3\n  0:  0 1\n# middle comment\n1: 1 2\n2: 2 0\n";
        let g = Multigraph::parse_text(src).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        // Orientation preserved as written.
        let e = g.edge(EdgeId(2)).unwrap();
        assert_eq!((e.tail, e.head), (VertexId(2), VertexId(0)));
    }

    #[test]
    fn sparse_edge_ids_and_loops_round_trip() {
        let src = "vertices: 2\n3: 0 1\n7: 1 1\n";
        let g = Multigraph::parse_text(src).unwrap();
        assert_eq!(g.edge_ids(), vec![EdgeId(3), EdgeId(7)]);
        assert!(g.edge(EdgeId(7)).unwrap().is_loop());
        assert_eq!(g.to_text().unwrap(), src);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let missing_header = "0: 0 1\n";
        match Multigraph::parse_text(missing_header) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
        let bad_endpoint = "vertices: 2\n0: 0 5\n";
        match Multigraph::parse_text(bad_endpoint) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        let dup_id = "vertices: 2\n0: 0 1\n0: 1 0\n";
        match Multigraph::parse_text(dup_id) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        let garbage = "vertices: 2\nnot an edge\n";
        assert!(Multigraph::parse_text(garbage).is_err());
    }

    #[test]
    fn contracted_graphs_refuse_to_serialize() {
        let g = Multigraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        // Contracting edge 0 merges vertex 1 into 0, leaving {0, 2}: a gap.
        let (c, _) = g.contract_edge(EdgeId(0)).unwrap();
        assert!(matches!(c.to_text(), Err(Error::Unwritable(_))));
    }
}
