//! The graded-rank polynomial by deletion–contraction.
//!
//! `P_Γ(q) = Σ_k rank R(Γ)_k · q^k` satisfies
//!
//! * `P = 0` when the graph has a loop,
//! * `P = 1` when it has no edges,
//! * `P(Γ) = P(Γ')` when `Γ'` collapses parallel classes, and
//! * `P(Γ) = P(Γ∖α) + q · P(Γ/α)` for any non-loop edge `α`,
//!
//! which pins it down by induction on the edge count. None of this looks
//! at the ring presentation, so the recursion is an independent oracle for
//! the ranks computed from Smith normal forms — the two routes are only
//! ever compared, never mixed.
//!
//! The chromatic cross-check at the bottom ties the same coefficients to
//! proper-coloring counts of simple graphs through a third, purely
//! combinatorial computation.

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

use dashmap::DashMap;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::graph::{CanonicalForm, EdgeId, Multigraph, VertexId};
use crate::{Error, Result};

/// Polynomial in `q` with natural-number coefficients, constant term
/// first, no trailing zeros. Degree steps are `r - 1` in the motivating
/// grading; the polynomial itself only sees `q`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PoincarePolynomial {
    coeffs: Vec<u64>,
}

impl PoincarePolynomial {
    pub fn zero() -> PoincarePolynomial {
        PoincarePolynomial::default()
    }

    pub fn one() -> PoincarePolynomial {
        PoincarePolynomial { coeffs: vec![1] }
    }

    pub fn from_coeffs(mut coeffs: Vec<u64>) -> PoincarePolynomial {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PoincarePolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn add(&self, other: &PoincarePolynomial) -> PoincarePolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        PoincarePolynomial::from_coeffs((0..len).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    /// Multiply by `q^k`.
    pub fn shifted(&self, k: usize) -> PoincarePolynomial {
        if self.is_zero() {
            return PoincarePolynomial::zero();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        PoincarePolynomial { coeffs }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let coeffs: Vec<u64> = if self.is_zero() {
            vec![0]
        } else {
            self.coeffs.clone()
        };
        serde_json::json!({
            "coeffs": coeffs,
            "variable": "q",
            "degree_step": "r-1",
        })
    }
}

impl fmt::Display for PoincarePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (k, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "q")?,
                (1, c) => write!(f, "{c}q")?,
                (k, 1) => write!(f, "q^{k}")?,
                (k, c) => write!(f, "{c}q^{k}")?,
            }
        }
        Ok(())
    }
}

/// Concurrent memo table keyed by canonical form, shared freely across
/// threads. A hit must agree with any recomputation; an insert that
/// contradicts a stored value panics, since it would mean two isomorphic
/// graphs produced different polynomials.
#[derive(Default)]
pub struct PoincareCache {
    memo: DashMap<CanonicalForm, PoincarePolynomial>,
    hits: AtomicUsize,
    misses: AtomicUsize,
}

impl PoincareCache {
    pub fn new() -> PoincareCache {
        PoincareCache::default()
    }

    pub fn hits(&self) -> usize {
        self.hits.load(Ordering::Relaxed)
    }

    pub fn misses(&self) -> usize {
        self.misses.load(Ordering::Relaxed)
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }
}

/// Default pivot choice: an edge with the busiest endpoint (largest
/// maximum endpoint degree, then largest degree sum, then least id), which
/// steers the recursion toward graphs that collapse quickly.
pub fn busiest_edge(g: &Multigraph) -> EdgeId {
    let mut best: Option<(usize, usize, EdgeId)> = None;
    for e in g.edges() {
        let (dt, dh) = (g.degree(e.tail), g.degree(e.head));
        let key = (dt.max(dh), dt + dh);
        match best {
            Some((m, s, _)) if (m, s) >= key => {}
            _ => best = Some((key.0, key.1, e.id)),
        }
    }
    best.expect("picker called on a graph with edges").2
}

/// Simplest pivot choice: the least edge id.
pub fn first_edge(g: &Multigraph) -> EdgeId {
    g.edges()[0].id
}

/// The polynomial with a fresh cache and the default pivot rule.
pub fn poincare(g: &Multigraph) -> PoincarePolynomial {
    poincare_with(g, &PoincareCache::new(), &mut busiest_edge)
}

/// The polynomial with a caller-supplied cache and pivot rule. The result
/// does not depend on either (the cache only memoizes, the rule only
/// reorders the recursion); property tests lean on exactly that.
pub fn poincare_with(
    g: &Multigraph,
    cache: &PoincareCache,
    pick: &mut dyn FnMut(&Multigraph) -> EdgeId,
) -> PoincarePolynomial {
    let key = g.canonical_form();
    if let Some(hit) = cache.memo.get(&key) {
        cache.hits.fetch_add(1, Ordering::Relaxed);
        return hit.clone();
    }
    cache.misses.fetch_add(1, Ordering::Relaxed);
    let p = if g.has_loop() {
        PoincarePolynomial::zero()
    } else if g.edge_count() == 0 {
        PoincarePolynomial::one()
    } else if g.parallel_classes().iter().any(|c| c.len() > 1) {
        let (simplified, _) = g.simplify_parallel();
        poincare_with(&simplified, cache, pick)
    } else {
        let a = pick(g);
        let deleted = g.delete_edge(a).expect("picker returned an edge of g");
        let (contracted, _) = g.contract_edge(a).expect("picker avoids loops");
        poincare_with(&deleted, cache, pick)
            .add(&poincare_with(&contracted, cache, pick).shifted(1))
    };
    if let Some(existing) = cache.memo.insert(key.clone(), p.clone()) {
        assert_eq!(
            existing,
            p,
            "memo divergence for canonical form {}",
            key.to_hex()
        );
    }
    p
}

/// One step of the recursion, recorded.
#[derive(Clone, Debug)]
pub enum DelconNode {
    /// A loop kills the ring.
    Loop { graph: String },
    /// No edges left: the ring is the ground ring.
    Edgeless { graph: String },
    /// Parallel classes collapsed without changing the polynomial.
    Simplified { graph: String, child: Box<DelconNode> },
    /// An isomorphic graph was already evaluated.
    Memo { graph: String },
    /// Deletion–contraction split at `edge`.
    Split {
        graph: String,
        edge: EdgeId,
        deleted: Box<DelconNode>,
        contracted: Box<DelconNode>,
    },
}

impl DelconNode {
    fn to_json(&self) -> serde_json::Value {
        match self {
            DelconNode::Loop { graph } => serde_json::json!({"kind": "loop", "graph": graph}),
            DelconNode::Edgeless { graph } => {
                serde_json::json!({"kind": "edgeless", "graph": graph})
            }
            DelconNode::Simplified { graph, child } => serde_json::json!({
                "kind": "simplified", "graph": graph, "child": child.to_json(),
            }),
            DelconNode::Memo { graph } => serde_json::json!({"kind": "memo", "graph": graph}),
            DelconNode::Split {
                graph,
                edge,
                deleted,
                contracted,
            } => serde_json::json!({
                "kind": "split",
                "graph": graph,
                "edge": edge.0,
                "deleted": deleted.to_json(),
                "contracted": contracted.to_json(),
            }),
        }
    }
}

/// A full recursion trace with its result and cache statistics.
#[derive(Clone, Debug)]
pub struct DelconTree {
    pub polynomial: PoincarePolynomial,
    pub root: DelconNode,
    pub cache_hits: usize,
    pub cache_misses: usize,
}

impl DelconTree {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "polynomial": self.polynomial.to_json(),
            "cache_hits": self.cache_hits,
            "cache_misses": self.cache_misses,
            "root": self.root.to_json(),
        })
    }
}

/// Run the default recursion and record every step.
pub fn delcon_tree(g: &Multigraph) -> DelconTree {
    let cache = PoincareCache::new();
    let (polynomial, root) = trace(g, &cache, &mut busiest_edge);
    DelconTree {
        polynomial,
        root,
        cache_hits: cache.hits(),
        cache_misses: cache.misses(),
    }
}

fn trace(
    g: &Multigraph,
    cache: &PoincareCache,
    pick: &mut dyn FnMut(&Multigraph) -> EdgeId,
) -> (PoincarePolynomial, DelconNode) {
    let key = g.canonical_form();
    let graph = key.to_hex();
    if let Some(hit) = cache.memo.get(&key) {
        cache.hits.fetch_add(1, Ordering::Relaxed);
        return (hit.clone(), DelconNode::Memo { graph });
    }
    cache.misses.fetch_add(1, Ordering::Relaxed);
    let (p, node) = if g.has_loop() {
        (PoincarePolynomial::zero(), DelconNode::Loop { graph })
    } else if g.edge_count() == 0 {
        (PoincarePolynomial::one(), DelconNode::Edgeless { graph })
    } else if g.parallel_classes().iter().any(|c| c.len() > 1) {
        let (simplified, _) = g.simplify_parallel();
        let (p, child) = trace(&simplified, cache, pick);
        (
            p,
            DelconNode::Simplified {
                graph,
                child: Box::new(child),
            },
        )
    } else {
        let a = pick(g);
        let del = g.delete_edge(a).expect("picker returned an edge of g");
        let (con, _) = g.contract_edge(a).expect("picker avoids loops");
        let (pd, nd) = trace(&del, cache, pick);
        let (pc, nc) = trace(&con, cache, pick);
        (
            pd.add(&pc.shifted(1)),
            DelconNode::Split {
                graph,
                edge: a,
                deleted: Box::new(nd),
                contracted: Box::new(nc),
            },
        )
    };
    cache.memo.insert(key, p.clone());
    (p, node)
}

/// Number of proper colorings of the vertices with `colors` colors, by
/// backtracking. Parallel edges impose the same constraint as one edge; a
/// loop makes every coloring improper.
pub fn count_proper_colorings(g: &Multigraph, colors: u64) -> BigInt {
    if g.has_loop() {
        return BigInt::zero();
    }
    let verts = g.vertices();
    let pos: std::collections::BTreeMap<VertexId, usize> =
        verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    // For each vertex, the earlier vertices it must differ from.
    let mut earlier: Vec<Vec<usize>> = vec![Vec::new(); verts.len()];
    for e in g.edges() {
        let (a, b) = (pos[&e.tail], pos[&e.head]);
        let (lo, hi) = (a.min(b), a.max(b));
        if !earlier[hi].contains(&lo) {
            earlier[hi].push(lo);
        }
    }
    let mut assignment = vec![0u64; verts.len()];
    let mut count = BigInt::zero();
    backtrack(0, colors, &earlier, &mut assignment, &mut count);
    count
}

fn backtrack(
    v: usize,
    colors: u64,
    earlier: &[Vec<usize>],
    assignment: &mut [u64],
    count: &mut BigInt,
) {
    if v == earlier.len() {
        *count += 1u32;
        return;
    }
    for c in 0..colors {
        if earlier[v].iter().all(|&u| assignment[u] != c) {
            assignment[v] = c;
            backtrack(v + 1, colors, earlier, assignment, count);
        }
    }
}

/// Coefficients `c_0 ..= c_n` of the chromatic polynomial
/// `χ(q) = Σ_j c_j q^j`, recovered from coloring counts at `q = 0 ..= n`
/// by exact interpolation.
pub fn chromatic_polynomial(g: &Multigraph) -> Result<Vec<BigInt>> {
    let n = g.vertex_count();
    let values: Vec<BigInt> = (0..=n as u64)
        .map(|q| count_proper_colorings(g, q))
        .collect();
    // Lagrange interpolation on the nodes 0..=n, exact in rationals, then
    // a guaranteed-integral conversion.
    let mut acc = vec![BigRational::zero(); n + 2];
    for (i, y) in values.iter().enumerate() {
        if y.is_zero() {
            continue;
        }
        // Basis polynomial Π_{j≠i} (x - j) / (i - j).
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for j in 0..=n {
            if j == i {
                continue;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            let shift = BigRational::from(BigInt::from(j as i64));
            for (d, c) in basis.iter().enumerate() {
                next[d + 1] += c;
                next[d] -= c * &shift;
            }
            basis = next;
            denom *= BigRational::from(BigInt::from(i as i64 - j as i64));
        }
        let scale = BigRational::from(y.clone()) / denom;
        for (d, c) in basis.iter().enumerate() {
            acc[d] += c * &scale;
        }
    }
    let mut out = Vec::with_capacity(n + 1);
    for c in acc.iter().take(n + 1) {
        if !c.is_integer() {
            return Err(Error::Inconsistency(format!(
                "chromatic interpolation produced a non-integer coefficient {c}"
            )));
        }
        out.push(c.to_integer());
    }
    if !acc[n + 1].is_zero() {
        return Err(Error::Inconsistency(
            "chromatic interpolation overflowed its degree bound".into(),
        ));
    }
    Ok(out)
}

/// Outcome of the coloring cross-check on a simple graph: the ranks from
/// deletion–contraction against the signed chromatic coefficients
/// `rank_i = (-1)^i c_{n-i}`.
#[derive(Clone, Debug)]
pub struct ChromaticReport {
    pub matches: bool,
    /// `c_0 ..= c_n`.
    pub chromatic: Vec<BigInt>,
    /// `(-1)^i c_{n-i}` for `i = 0 ..= n`.
    pub expected: Vec<BigInt>,
    /// Polynomial coefficients padded to the same length.
    pub ranks: Vec<BigInt>,
}

impl ChromaticReport {
    pub fn to_json(&self) -> serde_json::Value {
        let ints = |v: &[BigInt]| -> Vec<serde_json::Value> {
            use std::str::FromStr;
            v.iter()
                .map(|x| {
                    serde_json::Value::Number(
                        serde_json::Number::from_str(&x.to_string()).expect("integer literal"),
                    )
                })
                .collect()
        };
        serde_json::json!({
            "matches": self.matches,
            "chromatic": ints(&self.chromatic),
            "expected": ints(&self.expected),
            "ranks": ints(&self.ranks),
        })
    }
}

/// Compare the recursion's coefficients with the chromatic polynomial of
/// a simple graph. Rejects non-simple graphs: the identity reads off
/// proper colorings, which never see parallel edges, so demanding
/// simplicity keeps the cross-check honest.
pub fn chromatic_crosscheck(g: &Multigraph) -> Result<ChromaticReport> {
    if !g.is_simple() {
        return Err(Error::NotSimple(
            "the coloring cross-check needs a simple graph".into(),
        ));
    }
    let n = g.vertex_count();
    let chromatic = chromatic_polynomial(g)?;
    let expected: Vec<BigInt> = (0..=n)
        .map(|i| {
            let c = chromatic[n - i].clone();
            if i % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect();
    let p = poincare(g);
    let ranks: Vec<BigInt> = (0..=n).map(|k| BigInt::from(p.coeff(k))).collect();
    // The polynomial must not outlive the comparison window.
    if p.coeffs().len() > n + 1 {
        return Err(Error::Inconsistency(
            "rank polynomial exceeds the vertex-count degree bound".into(),
        ));
    }
    Ok(ChromaticReport {
        matches: expected == ranks,
        chromatic,
        expected,
        ranks,
    })
}
