//! Canonical forms for multigraph isomorphism.
//!
//! Color refinement partitions the vertices by iterated neighborhood
//! structure; a brute-force search over color-preserving permutations then
//! picks the lexicographically least adjacency encoding. Every isomorphism
//! preserves the (label-independent) colors, so two graphs get equal bytes
//! exactly when they are isomorphic. Exponential only within color classes,
//! which is fine at desk scale.
//!
//! Orientations are deliberately ignored: parity-independent structure only.

use std::collections::BTreeMap;

use super::{Multigraph, VertexId};

/// Isomorphism-invariant fingerprint of a multigraph. Equal bytes iff
/// isomorphic (ignoring edge ids, labels, and orientations).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Lowercase hex of the underlying bytes; the stable external name of
    /// the isomorphism class.
    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl std::fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_hex())
    }
}

pub(super) fn canonical_form(g: &Multigraph) -> CanonicalForm {
    let n = g.vertex_count();
    let index: BTreeMap<VertexId, usize> = g
        .vertices()
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i))
        .collect();
    let mut mult = vec![vec![0u32; n]; n];
    let mut loops = vec![0u32; n];
    for e in g.edges() {
        let i = index[&e.tail];
        let j = index[&e.head];
        if i == j {
            loops[i] += 1;
        } else {
            mult[i][j] += 1;
            mult[j][i] += 1;
        }
    }

    // Color refinement. Colors are assigned in sorted signature order, so
    // they depend only on structure, never on vertex labels.
    let mut color = vec![0usize; n];
    let mut color_count = 1usize.min(n);
    loop {
        let mut sig_of = Vec::with_capacity(n);
        for v in 0..n {
            let mut neighbors: Vec<(usize, u32)> = (0..n)
                .filter(|&u| mult[v][u] > 0)
                .map(|u| (color[u], mult[v][u]))
                .collect();
            neighbors.sort_unstable();
            sig_of.push((color[v], loops[v], neighbors));
        }
        let mut assignment = BTreeMap::new();
        for sig in &sig_of {
            let next = assignment.len();
            assignment.entry(sig.clone()).or_insert(next);
        }
        // Re-number in sorted signature order for label independence.
        let ordered: BTreeMap<_, usize> = assignment
            .keys()
            .enumerate()
            .map(|(i, k)| (k.clone(), i))
            .collect();
        let new_color: Vec<usize> = sig_of.iter().map(|s| ordered[s]).collect();
        let new_count = ordered.len();
        if new_count == color_count {
            break;
        }
        color = new_color;
        color_count = new_count;
    }

    // Vertices grouped by final color; canonical positions are contiguous
    // per class, classes in color order.
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); color_count.max(1)];
    for v in 0..n {
        classes[color[v]].push(v);
    }
    let mut offsets = Vec::with_capacity(classes.len());
    let mut acc = 0usize;
    for class in &classes {
        offsets.push(acc);
        acc += class.len();
    }

    let mut best: Option<Vec<u8>> = None;
    let mut position = vec![0usize; n];
    assign_class(
        g,
        &index,
        &classes,
        &offsets,
        0,
        &mut position,
        &mut best,
    );
    CanonicalForm(best.unwrap_or_else(|| encode(n, &[])))
}

/// Odometer over products of within-class permutations.
fn assign_class(
    g: &Multigraph,
    index: &BTreeMap<VertexId, usize>,
    classes: &[Vec<usize>],
    offsets: &[usize],
    c: usize,
    position: &mut Vec<usize>,
    best: &mut Option<Vec<u8>>,
) {
    if c == classes.len() {
        let n: usize = classes.iter().map(Vec::len).sum();
        let mut pairs: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|e| {
                let a = position[index[&e.tail]];
                let b = position[index[&e.head]];
                (a.min(b), a.max(b))
            })
            .collect();
        pairs.sort_unstable();
        let bytes = encode(n, &pairs);
        if best.as_ref().is_none_or(|b| bytes < *b) {
            *best = Some(bytes);
        }
        return;
    }
    permute_into(classes[c].clone(), offsets[c], position, &mut |position| {
        assign_class(g, index, classes, offsets, c + 1, position, best);
    });
}

/// Run `f` once for every way of placing `members` at positions
/// `offset..offset + members.len()` (Heap's algorithm).
fn permute_into(
    mut members: Vec<usize>,
    offset: usize,
    position: &mut Vec<usize>,
    f: &mut dyn FnMut(&mut Vec<usize>),
) {
    let k = members.len();
    let mut record = |members: &[usize], position: &mut Vec<usize>| {
        for (slot, &v) in members.iter().enumerate() {
            position[v] = offset + slot;
        }
        f(position);
    };
    if k == 0 {
        f(position);
        return;
    }
    let mut counters = vec![0usize; k];
    record(&members, position);
    let mut i = 0;
    while i < k {
        if counters[i] < i {
            if i % 2 == 0 {
                members.swap(0, i);
            } else {
                members.swap(counters[i], i);
            }
            record(&members, position);
            counters[i] += 1;
            i = 0;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
}

fn encode(n: usize, pairs: &[(usize, usize)]) -> Vec<u8> {
    let mut out = Vec::with_capacity(8 + 8 * pairs.len());
    out.extend_from_slice(&(n as u32).to_be_bytes());
    out.extend_from_slice(&(pairs.len() as u32).to_be_bytes());
    for &(a, b) in pairs {
        out.extend_from_slice(&(a as u32).to_be_bytes());
        out.extend_from_slice(&(b as u32).to_be_bytes());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{EdgeId, Multigraph};
    use std::collections::BTreeMap;

    #[test]
    fn relabeled_triangles_agree() {
        let g = Multigraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        let perm: BTreeMap<_, _> = [
            (VertexId(0), VertexId(2)),
            (VertexId(1), VertexId(0)),
            (VertexId(2), VertexId(1)),
        ]
        .into_iter()
        .collect();
        let h = g.permute_vertices(&perm).unwrap();
        assert_eq!(g.canonical_form(), h.canonical_form());
    }

    #[test]
    fn edge_ids_and_orientations_are_ignored() {
        let g = Multigraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        let relabel: BTreeMap<_, _> = [
            (EdgeId(0), EdgeId(5)),
            (EdgeId(1), EdgeId(3)),
            (EdgeId(2), EdgeId(9)),
        ]
        .into_iter()
        .collect();
        let h = g.relabel_edges(&relabel).unwrap();
        let r = g.reverse_edge(EdgeId(1)).unwrap();
        assert_eq!(g.canonical_form(), h.canonical_form());
        assert_eq!(g.canonical_form(), r.canonical_form());
    }

    #[test]
    fn triangle_and_path_differ() {
        let tri = Multigraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        let path = Multigraph::from_edges(3, &[(0, 1), (1, 2)]);
        assert_ne!(tri.canonical_form(), path.canonical_form());
    }

    #[test]
    fn multiplicity_distinguishes_parallel_from_single() {
        let single = Multigraph::from_edges(2, &[(0, 1)]);
        let double = Multigraph::from_edges(2, &[(0, 1), (0, 1)]);
        assert_ne!(single.canonical_form(), double.canonical_form());
    }

    #[test]
    fn loop_placement_is_seen() {
        // A loop on the center of a path vs on an end.
        let mut a = Multigraph::from_edges(3, &[(0, 1), (1, 2)]);
        a.add_edge(VertexId(1), VertexId(1)).unwrap();
        let mut b = Multigraph::from_edges(3, &[(0, 1), (1, 2)]);
        b.add_edge(VertexId(0), VertexId(0)).unwrap();
        assert_ne!(a.canonical_form(), b.canonical_form());
    }

    #[test]
    fn regular_graphs_with_different_structure_differ() {
        // Both 2-regular on 6 vertices: one hexagon vs two triangles.
        let hexagon =
            Multigraph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        let two_triangles =
            Multigraph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        assert_ne!(hexagon.canonical_form(), two_triangles.canonical_form());
    }

    #[test]
    fn empty_and_trivial_graphs() {
        assert_eq!(
            Multigraph::new(0).canonical_form(),
            Multigraph::new(0).canonical_form()
        );
        assert_ne!(
            Multigraph::new(0).canonical_form(),
            Multigraph::new(1).canonical_form()
        );
    }

    #[test]
    fn hex_is_stable() {
        let g = Multigraph::from_edges(2, &[(0, 1)]);
        // 2 vertices, 1 edge, pair (0, 1).
        assert_eq!(
            g.canonical_form().to_hex(),
            "00000002000000010000000000000001"
        );
    }
}
