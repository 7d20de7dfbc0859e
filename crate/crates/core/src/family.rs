//! Graph corpora for exhaustive verification, plus seeded random
//! generators used by the statistical checks and property tests.
//!
//! The exhaustive families enumerate labeled graphs and keep one
//! representative per isomorphism class (deduplicated through
//! [`Multigraph::canonical_form`]); iteration order is the canonical-form
//! byte order, so every run sees the same family in the same order.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::{weight_monomials, Element};
use crate::graph::{CanonicalForm, EdgeId, Multigraph, VertexId};

/// Every loop-free multigraph with at most `max_vertices` vertices
/// (isolated vertices allowed) and at most `max_edges` edges, one per
/// isomorphism class.
pub fn loopfree_multigraphs(max_vertices: u32, max_edges: usize) -> Vec<Multigraph> {
    let mut classes: BTreeMap<CanonicalForm, Multigraph> = BTreeMap::new();
    for n in 0..=max_vertices {
        let pairs: Vec<(u32, u32)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        let mut counts = vec![0usize; pairs.len()];
        multisets(&mut counts, 0, max_edges, &mut |counts| {
            let mut edges = Vec::new();
            for (idx, &c) in counts.iter().enumerate() {
                edges.extend(std::iter::repeat_n(pairs[idx], c));
            }
            let g = Multigraph::from_edges(n, &edges);
            classes.entry(g.canonical_form()).or_insert(g);
        });
    }
    classes.into_values().collect()
}

/// Every simple graph with at most `max_vertices` vertices, one per
/// isomorphism class.
pub fn simple_graphs(max_vertices: u32) -> Vec<Multigraph> {
    let mut classes: BTreeMap<CanonicalForm, Multigraph> = BTreeMap::new();
    for n in 0..=max_vertices {
        let pairs: Vec<(u32, u32)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<(u32, u32)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            let g = Multigraph::from_edges(n, &edges);
            classes.entry(g.canonical_form()).or_insert(g);
        }
    }
    classes.into_values().collect()
}

/// Visit every multiplicity vector with total at most `budget`, filling
/// `counts[from..]`.
fn multisets(
    counts: &mut Vec<usize>,
    from: usize,
    budget: usize,
    visit: &mut impl FnMut(&[usize]),
) {
    if from == counts.len() {
        visit(counts);
        return;
    }
    for c in 0..=budget {
        counts[from] = c;
        multisets(counts, from + 1, budget - c, visit);
    }
    counts[from] = 0;
}

/// A random multigraph with `1..=max_vertices` vertices, up to `max_edges`
/// edges, and random edge orientations.
pub fn random_multigraph(
    rng: &mut impl Rng,
    max_vertices: u32,
    max_edges: usize,
    allow_loops: bool,
) -> Multigraph {
    let n = rng.random_range(1..=max_vertices);
    let mut g = Multigraph::new(n);
    if n == 1 && !allow_loops {
        return g;
    }
    for _ in 0..rng.random_range(0..=max_edges) {
        let u = rng.random_range(0..n);
        let v = loop {
            let v = rng.random_range(0..n);
            if allow_loops || v != u {
                break v;
            }
        };
        g.add_edge(VertexId(u), VertexId(v)).expect("fresh id");
    }
    g
}

/// A random element of weight `k` over the given generators: up to four
/// distinct monomials with nonzero coefficients in `[-bound, bound]`.
/// Returns zero when the weight has no monomials.
pub fn random_element(
    rng: &mut impl Rng,
    edge_ids: &[EdgeId],
    k: usize,
    bound: i64,
) -> Element {
    let monomials = weight_monomials(edge_ids, k);
    if monomials.is_empty() {
        return Element::zero();
    }
    let picks = rng.random_range(1..=monomials.len().min(4));
    let chosen = rand::seq::index::sample(rng, monomials.len(), picks);
    let mut x = Element::zero();
    for i in chosen {
        let mut c = 0;
        while c == 0 {
            c = rng.random_range(-bound..=bound);
        }
        x.add_term(monomials[i].clone(), BigInt::from(c));
    }
    x
}

/// A uniform weight in `0..=max`.
pub fn random_weight(rng: &mut impl Rng, max: usize) -> usize {
    rng.random_range(0..=max)
}

/// The graph's edge ids in a random order.
pub fn random_edge_order(rng: &mut impl Rng, g: &Multigraph) -> Vec<EdgeId> {
    let mut ids = g.edge_ids();
    ids.shuffle(rng);
    ids
}

/// The same graph with each edge's orientation flipped with probability
/// one half.
pub fn random_orientations(rng: &mut impl Rng, g: &Multigraph) -> Multigraph {
    let mut out = g.clone();
    for a in g.edge_ids() {
        if rng.random_bool(0.5) {
            out = out.reverse_edge(a).expect("existing edge");
        }
    }
    out
}

/// A uniformly random relabeling of the graph's vertices.
pub fn random_vertex_permutation(
    rng: &mut impl Rng,
    g: &Multigraph,
) -> BTreeMap<VertexId, VertexId> {
    let mut images: Vec<VertexId> = g.vertices().to_vec();
    images.shuffle(rng);
    g.vertices()
        .iter()
        .copied()
        .zip(images)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn loopfree_family_counts_by_hand() {
        // ≤ 2 vertices, ≤ 7 edges: empty, a point, and 0..=7 parallel
        // copies of the single pair.
        assert_eq!(loopfree_multigraphs(2, 7).len(), 10);
        // ≤ 3 vertices, ≤ 3 edges: 1 (empty) + 1 (point) + 4 (two points,
        // 0..=3 parallel edges) + 7 on three vertices (empty; one edge;
        // double edge; path; triple edge; double edge plus one; triangle).
        assert_eq!(loopfree_multigraphs(3, 3).len(), 13);
    }

    #[test]
    fn loopfree_family_members_are_loopfree_and_bounded() {
        let family = loopfree_multigraphs(4, 4);
        for g in &family {
            assert!(!g.has_loop());
            assert!(g.vertex_count() <= 4);
            assert!(g.edge_count() <= 4);
        }
        // Representatives are pairwise non-isomorphic.
        let keys: std::collections::BTreeSet<_> =
            family.iter().map(Multigraph::canonical_form).collect();
        assert_eq!(keys.len(), family.len());
    }

    #[test]
    fn simple_graph_class_counts() {
        let family = simple_graphs(5);
        let mut by_n = vec![0usize; 6];
        for g in &family {
            by_n[g.vertex_count()] += 1;
        }
        assert_eq!(by_n, vec![1, 1, 2, 4, 11, 34]);
    }

    #[test]
    fn random_generators_are_seed_deterministic() {
        let mut a = ChaCha8Rng::seed_from_u64(42);
        let mut b = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..20 {
            let ga = random_multigraph(&mut a, 5, 7, false);
            let gb = random_multigraph(&mut b, 5, 7, false);
            assert_eq!(ga, gb);
            assert!(!ga.has_loop());
        }
    }

    #[test]
    fn random_elements_are_homogeneous() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let g = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]);
        for k in 0..=5 {
            let x = random_element(&mut rng, &g.edge_ids(), k, 4);
            if !x.is_zero() {
                assert_eq!(x.homogeneous_weight(), Some(k));
            }
        }
        // Weight beyond the edge count has no monomials.
        assert!(random_element(&mut rng, &g.edge_ids(), 9, 4).is_zero());
    }

    #[test]
    fn random_orientations_keep_the_underlying_graph() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let flipped = random_orientations(&mut rng, &g);
        assert_eq!(g.canonical_form(), flipped.canonical_form());
        assert_eq!(g.edge_ids(), flipped.edge_ids());
    }
}
