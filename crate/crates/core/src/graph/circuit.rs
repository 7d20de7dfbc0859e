//! Circuits: simple closed cycles with distinct vertices and edges.
//!
//! A circuit of length `l >= 3` visits `l` distinct vertices through `l`
//! distinct non-loop edges; length 2 is a pair of parallel edges; length 1
//! is a single loop. Each circuit is stored as one canonical representative
//! of its rotation/reflection class, so enumeration yields each geometric
//! cycle exactly once.

use std::collections::BTreeSet;

use super::{EdgeId, Multigraph, VertexId};
use crate::{Error, Result};

/// A circuit `w = (w_1, ..., w_l)` traversed from `v_1` through `v_l` and
/// back to `v_1`; `w_i` joins `v_i` to `v_{i+1}` (indices mod `l`).
///
/// `signs[i]` is +1 when the stored orientation of `w_i` agrees with the
/// traversal (`tail == v_i`), -1 otherwise; loops get +1. Only odd-parity
/// computations consult the signs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Circuit {
    edges: Vec<EdgeId>,
    vertices: Vec<VertexId>,
    signs: Vec<i8>,
}

impl Circuit {
    /// Validate an edge/vertex sequence against `g` and build the circuit,
    /// normalized to the canonical representative of its traversal class.
    pub fn new(g: &Multigraph, edges: Vec<EdgeId>, vertices: Vec<VertexId>) -> Result<Circuit> {
        let l = edges.len();
        if l == 0 {
            return Err(Error::MalformedCircuit("empty edge sequence".into()));
        }
        if vertices.len() != l {
            return Err(Error::MalformedCircuit(format!(
                "{} edges but {} vertices",
                l,
                vertices.len()
            )));
        }
        if edges.iter().collect::<BTreeSet<_>>().len() != l {
            return Err(Error::MalformedCircuit("repeated edge".into()));
        }
        if vertices.iter().collect::<BTreeSet<_>>().len() != l {
            return Err(Error::MalformedCircuit("repeated vertex".into()));
        }
        for (i, &id) in edges.iter().enumerate() {
            let e = g.edge(id)?;
            let from = vertices[i];
            let to = vertices[(i + 1) % l];
            let ok = (e.tail == from && e.head == to) || (e.tail == to && e.head == from);
            if !ok {
                return Err(Error::MalformedCircuit(format!(
                    "{id} does not join {from} to {to}"
                )));
            }
        }
        let mut c = Circuit {
            edges,
            vertices,
            signs: Vec::new(),
        };
        c = c.canonical();
        c.signs = compute_signs(g, &c.edges, &c.vertices);
        Ok(c)
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a circuit has at least one edge by construction
    }

    pub fn is_loop(&self) -> bool {
        self.edges.len() == 1
    }

    /// Edge sequence in traversal order.
    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    /// Vertex sequence; `vertices()[i]` is where `edges()[i]` starts.
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    /// Traversal-vs-orientation signs, one per edge.
    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn contains_edge(&self, id: EdgeId) -> bool {
        self.edges.contains(&id)
    }

    /// Edge ids sorted ascending (the underlying edge set).
    pub fn edge_set(&self) -> Vec<EdgeId> {
        let mut s = self.edges.clone();
        s.sort_unstable();
        s
    }

    /// Lexicographically least (edge sequence, vertex sequence) pair over
    /// all rotations and the two traversal directions.
    fn canonical(self) -> Circuit {
        let l = self.edges.len();
        let mut best: Option<(Vec<EdgeId>, Vec<VertexId>)> = None;
        let mut consider = |edges: Vec<EdgeId>, vertices: Vec<VertexId>| {
            let cand = (edges, vertices);
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        };
        // Reversed traversal from the same basepoint: edges backwards,
        // vertices v_1, v_l, v_{l-1}, ..., v_2.
        let rev_edges: Vec<EdgeId> = self.edges.iter().rev().copied().collect();
        let rev_vertices: Vec<VertexId> = std::iter::once(self.vertices[0])
            .chain(self.vertices[1..].iter().rev().copied())
            .collect();
        for r in 0..l {
            let rot = |v: &[EdgeId]| -> Vec<EdgeId> {
                v.iter().cycle().skip(r).take(l).copied().collect()
            };
            let rot_v = |v: &[VertexId]| -> Vec<VertexId> {
                v.iter().cycle().skip(r).take(l).copied().collect()
            };
            consider(rot(&self.edges), rot_v(&self.vertices));
            consider(rot(&rev_edges), rot_v(&rev_vertices));
        }
        let (edges, vertices) = best.expect("nonempty circuit");
        Circuit {
            edges,
            vertices,
            signs: Vec::new(),
        }
    }
}

fn compute_signs(g: &Multigraph, edges: &[EdgeId], vertices: &[VertexId]) -> Vec<i8> {
    edges
        .iter()
        .enumerate()
        .map(|(i, &id)| {
            let e = g.edge(id).expect("validated edge");
            if e.is_loop() || e.tail == vertices[i] {
                1
            } else {
                -1
            }
        })
        .collect()
}

/// Every circuit of `g`, one canonical representative per geometric cycle,
/// sorted by edge sequence. Includes length-1 loops and length-2 parallel
/// pairs.
pub fn enumerate_circuits(g: &Multigraph) -> Vec<Circuit> {
    let mut keys: BTreeSet<(Vec<EdgeId>, Vec<VertexId>)> = BTreeSet::new();
    for e in g.loops() {
        keys.insert((vec![e.id], vec![e.tail]));
    }
    for &s in g.vertices() {
        let mut path_vertices = vec![s];
        let mut path_edges = Vec::new();
        search(g, s, s, &mut path_vertices, &mut path_edges, &mut keys);
    }
    keys.into_iter()
        .map(|(edges, vertices)| {
            Circuit::new(g, edges, vertices).expect("enumerated circuits are well formed")
        })
        .collect()
}

fn search(
    g: &Multigraph,
    start: VertexId,
    cur: VertexId,
    path_vertices: &mut Vec<VertexId>,
    path_edges: &mut Vec<EdgeId>,
    keys: &mut BTreeSet<(Vec<EdgeId>, Vec<VertexId>)>,
) {
    for e in g.incident_edges(cur) {
        if e.is_loop() || path_edges.contains(&e.id) {
            continue;
        }
        let next = e.other_endpoint(cur);
        if next == start && !path_edges.is_empty() {
            let mut edges = path_edges.clone();
            edges.push(e.id);
            let circuit = Circuit::new(g, edges, path_vertices.clone())
                .expect("closed search path is a circuit");
            keys.insert((circuit.edges.clone(), circuit.vertices.clone()));
        } else if next > start && !path_vertices.contains(&next) {
            path_vertices.push(next);
            path_edges.push(e.id);
            search(g, start, next, path_vertices, path_edges, keys);
            path_edges.pop();
            path_vertices.pop();
        }
    }
}
