//! Finite multigraphs with stable edge identities.
//!
//! Edges keep their ids across deletion and contraction, so the generator
//! `e_i` of a derived graph's ring is literally the generator `e_i` of the
//! original: ring maps along minors become id-preserving maps on monomials.
//! Vertices are merged downward on contraction (the surviving vertex is the
//! smaller id) and are never renumbered.

mod canon;
mod circuit;
mod text;

pub use canon::CanonicalForm;
pub use circuit::{enumerate_circuits, Circuit};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::{Error, Result};

/// Vertex identifier. Plain label; holds no structural meaning.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexId(pub u32);

/// Edge identifier, stable across deletion and contraction.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EdgeId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// An oriented edge: `tail -> head`. A loop has `tail == head`.
///
/// Orientation matters only to odd-parity signs; even-parity computations and
/// isomorphism ignore it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Edge {
    pub id: EdgeId,
    pub tail: VertexId,
    pub head: VertexId,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }

    /// Unordered endpoints, smaller id first.
    pub fn endpoints(&self) -> (VertexId, VertexId) {
        if self.tail <= self.head {
            (self.tail, self.head)
        } else {
            (self.head, self.tail)
        }
    }

    pub fn touches(&self, v: VertexId) -> bool {
        self.tail == v || self.head == v
    }

    /// The endpoint other than `v`. For a loop at `v` this is `v` itself.
    pub fn other_endpoint(&self, v: VertexId) -> VertexId {
        if self.tail == v {
            self.head
        } else {
            self.tail
        }
    }
}

/// A finite multigraph: a set of vertices and a set of oriented edges,
/// both keyed by stable ids. Parallel edges and loops are allowed.
///
/// Vertices are kept sorted by id and edges sorted by edge id, so equality
/// of two `Multigraph` values is equality of labelled graphs (including
/// orientations). Use [`CanonicalForm`] for equality up to isomorphism.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Multigraph {
    vertices: Vec<VertexId>,
    edges: Vec<Edge>,
}

impl Multigraph {
    /// Graph with vertices `0..n` and no edges.
    pub fn new(n: u32) -> Self {
        Multigraph {
            vertices: (0..n).map(VertexId).collect(),
            edges: Vec::new(),
        }
    }

    /// Graph with vertices `0..n` and edges `(tail, head)` numbered `0..`.
    ///
    /// Panics on out-of-range endpoints; intended for fixtures and tests.
    pub fn from_edges(n: u32, pairs: &[(u32, u32)]) -> Self {
        let mut g = Multigraph::new(n);
        for &(t, h) in pairs {
            g.add_edge(VertexId(t), VertexId(h))
                .expect("from_edges: endpoint out of range");
        }
        g
    }

    /// Add an edge with the smallest unused id; returns the new id.
    pub fn add_edge(&mut self, tail: VertexId, head: VertexId) -> Result<EdgeId> {
        let id = EdgeId(self.edges.last().map_or(0, |e| e.id.0 + 1));
        self.add_edge_with_id(id, tail, head)?;
        Ok(id)
    }

    /// Add an edge under a caller-chosen id.
    pub fn add_edge_with_id(&mut self, id: EdgeId, tail: VertexId, head: VertexId) -> Result<()> {
        if !self.contains_vertex(tail) {
            return Err(Error::UnknownVertex(tail));
        }
        if !self.contains_vertex(head) {
            return Err(Error::UnknownVertex(head));
        }
        let pos = match self.edges.binary_search_by_key(&id, |e| e.id) {
            Ok(_) => {
                return Err(Error::BadPermutation(format!(
                    "edge id {id} already present"
                )))
            }
            Err(pos) => pos,
        };
        self.edges.insert(pos, Edge { id, tail, head });
        Ok(())
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    /// Edges sorted by id.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Sorted edge ids; this ordering indexes monomials and matrices.
    pub fn edge_ids(&self) -> Vec<EdgeId> {
        self.edges.iter().map(|e| e.id).collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn edge(&self, id: EdgeId) -> Result<&Edge> {
        self.edges
            .binary_search_by_key(&id, |e| e.id)
            .map(|pos| &self.edges[pos])
            .map_err(|_| Error::UnknownEdge(id))
    }

    pub fn contains_edge(&self, id: EdgeId) -> bool {
        self.edges.binary_search_by_key(&id, |e| e.id).is_ok()
    }

    /// Edges incident to `v`, in id order.
    pub fn incident_edges(&self, v: VertexId) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(move |e| e.touches(v))
    }

    /// Degree of `v`; a loop contributes 2.
    pub fn degree(&self, v: VertexId) -> usize {
        self.edges
            .iter()
            .map(|e| (e.tail == v) as usize + (e.head == v) as usize)
            .sum()
    }

    pub fn has_loop(&self) -> bool {
        self.edges.iter().any(Edge::is_loop)
    }

    pub fn loops(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(|e| e.is_loop())
    }

    /// True when the graph has no loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        if self.has_loop() {
            return false;
        }
        let mut seen = BTreeSet::new();
        self.edges.iter().all(|e| seen.insert(e.endpoints()))
    }

    /// Non-loop edges grouped by unordered endpoints, each group in id
    /// order, groups ordered by endpoints. Loops are not included.
    pub fn parallel_classes(&self) -> Vec<Vec<EdgeId>> {
        let mut groups: BTreeMap<(VertexId, VertexId), Vec<EdgeId>> = BTreeMap::new();
        for e in &self.edges {
            if !e.is_loop() {
                groups.entry(e.endpoints()).or_default().push(e.id);
            }
        }
        groups.into_values().collect()
    }

    /// The graph with edge `a` removed. Vertices are untouched; every other
    /// edge keeps its id and orientation.
    pub fn delete_edge(&self, a: EdgeId) -> Result<Multigraph> {
        self.edge(a)?;
        Ok(Multigraph {
            vertices: self.vertices.clone(),
            edges: self.edges.iter().filter(|e| e.id != a).copied().collect(),
        })
    }

    /// The graph with non-loop edge `a` contracted: its endpoints merge into
    /// the smaller vertex id, the edge disappears, every other edge keeps its
    /// id. Edges parallel to `a` become loops. The returned relabeling is the
    /// identity on the surviving edges (kept for callers that track edge
    /// fates generically).
    pub fn contract_edge(&self, a: EdgeId) -> Result<(Multigraph, EdgeRelabeling)> {
        let edge = *self.edge(a)?;
        if edge.is_loop() {
            return Err(Error::ContractLoop(a));
        }
        let (keep, gone) = {
            let (lo, hi) = edge.endpoints();
            (lo, hi)
        };
        let redirect = |v: VertexId| if v == gone { keep } else { v };
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .filter(|e| e.id != a)
            .map(|e| Edge {
                id: e.id,
                tail: redirect(e.tail),
                head: redirect(e.head),
            })
            .collect();
        let vertices: Vec<VertexId> = self
            .vertices
            .iter()
            .copied()
            .filter(|&v| v != gone)
            .collect();
        let relabeling = EdgeRelabeling::identity(edges.iter().map(|e| e.id));
        Ok((Multigraph { vertices, edges }, relabeling))
    }

    /// Collapse every parallel class to its smallest-id member. Loops are
    /// kept: they are structural (they kill the ring), not redundant.
    ///
    /// Returns the simplified graph together with the map sending each edge
    /// to its class representative.
    pub fn simplify_parallel(&self) -> (Multigraph, EdgeRelabeling) {
        let mut map = BTreeMap::new();
        for class in self.parallel_classes() {
            let rep = class[0];
            for id in class {
                map.insert(id, rep);
            }
        }
        for e in self.loops() {
            map.insert(e.id, e.id);
        }
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .filter(|e| map[&e.id] == e.id)
            .copied()
            .collect();
        (
            Multigraph {
                vertices: self.vertices.clone(),
                edges,
            },
            EdgeRelabeling { map },
        )
    }

    /// Relabel vertices through a bijection given as a total map.
    pub fn permute_vertices(&self, perm: &BTreeMap<VertexId, VertexId>) -> Result<Multigraph> {
        let mut images = BTreeSet::new();
        for &v in &self.vertices {
            let w = *perm
                .get(&v)
                .ok_or_else(|| Error::BadPermutation(format!("no image for {v}")))?;
            if !images.insert(w) {
                return Err(Error::BadPermutation(format!("{w} hit twice")));
            }
        }
        let mut vertices: Vec<VertexId> = images.into_iter().collect();
        vertices.sort_unstable();
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                id: e.id,
                tail: perm[&e.tail],
                head: perm[&e.head],
            })
            .collect();
        Ok(Multigraph { vertices, edges })
    }

    /// Relabel edge ids through a bijection given as a total map.
    pub fn relabel_edges(&self, perm: &BTreeMap<EdgeId, EdgeId>) -> Result<Multigraph> {
        let mut images = BTreeSet::new();
        let mut edges = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            let id = *perm
                .get(&e.id)
                .ok_or_else(|| Error::BadPermutation(format!("no image for {}", e.id)))?;
            if !images.insert(id) {
                return Err(Error::BadPermutation(format!("{id} hit twice")));
            }
            edges.push(Edge { id, ..*e });
        }
        edges.sort_unstable_by_key(|e| e.id);
        Ok(Multigraph {
            vertices: self.vertices.clone(),
            edges,
        })
    }

    /// Flip the stored orientation of one edge.
    pub fn reverse_edge(&self, a: EdgeId) -> Result<Multigraph> {
        self.edge(a)?;
        let edges = self
            .edges
            .iter()
            .map(|e| {
                if e.id == a {
                    Edge {
                        id: e.id,
                        tail: e.head,
                        head: e.tail,
                    }
                } else {
                    *e
                }
            })
            .collect();
        Ok(Multigraph {
            vertices: self.vertices.clone(),
            edges,
        })
    }

    /// Isomorphism-invariant fingerprint; see [`CanonicalForm`].
    pub fn canonical_form(&self) -> CanonicalForm {
        canon::canonical_form(self)
    }

    /// All circuits (simple closed cycles, including loops and parallel
    /// pairs), one canonical representative each. See [`enumerate_circuits`].
    pub fn circuits(&self) -> Vec<Circuit> {
        circuit::enumerate_circuits(self)
    }
}

/// Map from old edge ids to surviving edge ids, produced by contraction and
/// parallel simplification. Total on the edges of the derived graph's
/// ancestor (minus a contracted edge); identity wherever an edge survives
/// untouched.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EdgeRelabeling {
    map: BTreeMap<EdgeId, EdgeId>,
}

impl EdgeRelabeling {
    pub fn identity(ids: impl IntoIterator<Item = EdgeId>) -> Self {
        EdgeRelabeling {
            map: ids.into_iter().map(|id| (id, id)).collect(),
        }
    }

    pub fn image_of(&self, id: EdgeId) -> Option<EdgeId> {
        self.map.get(&id).copied()
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().all(|(k, v)| k == v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (EdgeId, EdgeId)> + '_ {
        self.map.iter().map(|(&k, &v)| (k, v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Multigraph {
        // Edges: 0 = (0,1), 1 = (1,2), 2 = (0,2).
        Multigraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)])
    }

    #[test]
    fn delete_keeps_ids_and_vertices() {
        let g = triangle();
        let d = g.delete_edge(EdgeId(1)).unwrap();
        assert_eq!(d.vertex_count(), 3);
        assert_eq!(d.edge_ids(), vec![EdgeId(0), EdgeId(2)]);
        assert_eq!(d.edge(EdgeId(2)).unwrap().endpoints(), (VertexId(0), VertexId(2)));
        assert!(matches!(d.edge(EdgeId(1)), Err(Error::UnknownEdge(_))));
    }

    #[test]
    fn contract_merges_down_and_keeps_ids() {
        let g = triangle();
        let (c, relab) = g.contract_edge(EdgeId(1)).unwrap();
        // Vertices 1 and 2 merge into 1; edges 0 and 2 become parallel (0,1).
        assert_eq!(c.vertices(), &[VertexId(0), VertexId(1)]);
        assert_eq!(c.edge_ids(), vec![EdgeId(0), EdgeId(2)]);
        assert_eq!(c.edge(EdgeId(2)).unwrap().endpoints(), (VertexId(0), VertexId(1)));
        assert!(relab.is_identity());
        assert_eq!(c.parallel_classes(), vec![vec![EdgeId(0), EdgeId(2)]]);
    }

    #[test]
    fn contract_parallel_partner_makes_loop() {
        let g = Multigraph::from_edges(2, &[(0, 1), (0, 1)]);
        let (c, _) = g.contract_edge(EdgeId(0)).unwrap();
        assert_eq!(c.vertex_count(), 1);
        assert!(c.edge(EdgeId(1)).unwrap().is_loop());
        assert!(c.has_loop());
    }

    #[test]
    fn contract_rejects_loops_and_unknown_edges() {
        let mut g = Multigraph::new(2);
        g.add_edge(VertexId(0), VertexId(0)).unwrap();
        assert!(matches!(g.contract_edge(EdgeId(0)), Err(Error::ContractLoop(_))));
        assert!(matches!(g.contract_edge(EdgeId(7)), Err(Error::UnknownEdge(_))));
        assert!(matches!(g.delete_edge(EdgeId(7)), Err(Error::UnknownEdge(_))));
    }

    #[test]
    fn contraction_preserves_degree_sum_minus_two() {
        let g = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]);
        let before: usize = g.vertices().iter().map(|&v| g.degree(v)).sum();
        let (c, _) = g.contract_edge(EdgeId(4)).unwrap();
        let after: usize = c.vertices().iter().map(|&v| c.degree(v)).sum();
        assert_eq!(after, before - 2);
    }

    #[test]
    fn delete_then_contract_commutes_with_contract_then_delete() {
        // Disjoint edges, so both orders are defined; stable ids make the
        // results literally equal.
        let g = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let a = EdgeId(0);
        let b = EdgeId(2);
        let left = g.delete_edge(a).unwrap().contract_edge(b).unwrap().0;
        let right = g.contract_edge(b).unwrap().0.delete_edge(a).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn simplify_parallel_collapses_classes_to_least_id() {
        let g = Multigraph::from_edges(3, &[(0, 1), (0, 1), (1, 2), (1, 0)]);
        let (s, relab) = g.simplify_parallel();
        assert_eq!(s.edge_ids(), vec![EdgeId(0), EdgeId(2)]);
        assert_eq!(relab.image_of(EdgeId(1)), Some(EdgeId(0)));
        assert_eq!(relab.image_of(EdgeId(3)), Some(EdgeId(0)));
        assert_eq!(relab.image_of(EdgeId(2)), Some(EdgeId(2)));
    }

    #[test]
    fn simplify_parallel_keeps_loops() {
        let mut g = Multigraph::from_edges(2, &[(0, 1), (0, 1)]);
        g.add_edge(VertexId(1), VertexId(1)).unwrap();
        let (s, relab) = g.simplify_parallel();
        assert_eq!(s.edge_ids(), vec![EdgeId(0), EdgeId(2)]);
        assert!(s.edge(EdgeId(2)).unwrap().is_loop());
        assert_eq!(relab.image_of(EdgeId(2)), Some(EdgeId(2)));
    }

    #[test]
    fn degree_counts_loops_twice() {
        let mut g = Multigraph::new(2);
        g.add_edge(VertexId(0), VertexId(1)).unwrap();
        g.add_edge(VertexId(0), VertexId(0)).unwrap();
        assert_eq!(g.degree(VertexId(0)), 3);
        assert_eq!(g.degree(VertexId(1)), 1);
    }

    #[test]
    fn permute_vertices_requires_bijection() {
        let g = triangle();
        let collapse: BTreeMap<_, _> = [(VertexId(0), VertexId(0)), (VertexId(1), VertexId(0)), (VertexId(2), VertexId(2))]
            .into_iter()
            .collect();
        assert!(matches!(g.permute_vertices(&collapse), Err(Error::BadPermutation(_))));
    }
}
