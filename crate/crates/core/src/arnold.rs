//! Arnold classes, the circuit ideal, and exact graded presentations of the
//! quotient ring.
//!
//! Each circuit `w = (w_1, ..., w_l)` contributes one relation, its Arnold
//! class `A(w)`: the signed sum of the `l` products that omit one edge of
//! the circuit. The ring is the free graded commutative algebra modulo the
//! ideal generated by all Arnold classes; weight by weight this is a
//! finitely presented abelian group, computed exactly by Smith normal form.
//!
//! A loop `w = (α)` has `A(w) = 1`, so one loop collapses the whole ring.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::{
    multiply, normalize_word, weight_monomials, Element, Monomial, Parity,
};
use crate::graph::{Circuit, EdgeId, Multigraph};
use crate::linalg::{IntMatrix, SmithNormalForm};
use crate::{Error, Result};

/// A circuit together with its Arnold relation.
#[derive(Clone, Debug)]
pub struct ArnoldClass {
    pub circuit: Circuit,
    pub element: Element,
}

/// The Arnold class of a circuit.
///
/// * Even parity: `A(w) = Σ_i (-1)^i w_1 ··· ŵ_i ··· w_l` (1-based `i`).
/// * Odd parity: `A(w) = Σ_i ε_i(w) w_1 ··· ŵ_i ··· w_l`, where `ε_i` is
///   +1 when the traversal of `w_i` agrees with its stored orientation.
/// * A loop (`l = 1`) gives the empty product: `A(w) = 1`.
///
/// Subwords are normalized to sorted monomials; the stored circuit
/// representative is canonical, so the class is deterministic (a different
/// representative of the same cycle would only flip the overall sign, which
/// generates the same ideal).
pub fn arnold_class(w: &Circuit, parity: Parity) -> ArnoldClass {
    ArnoldClass {
        circuit: w.clone(),
        element: walk_class(w.edges(), w.signs(), parity),
    }
}

/// The same alternating sum for any closed walk with distinct edges, given
/// the edge sequence and its traversal signs (+1 where the walk crosses an
/// edge along its stored orientation). Circuits are the intended input —
/// nothing here requires distinct *vertices*, which is what lets the test
/// suite confirm that walks revisiting a vertex contribute nothing beyond
/// the circuit relations.
pub fn walk_class(edges: &[EdgeId], traversal: &[i8], parity: Parity) -> Element {
    assert_eq!(edges.len(), traversal.len());
    let l = edges.len();
    if l == 1 {
        return Element::unit();
    }
    let mut element = Element::zero();
    for (i, &eps) in traversal.iter().enumerate() {
        let word: Vec<EdgeId> = edges
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &e)| e)
            .collect();
        let (m, s) = normalize_word(&word, parity);
        debug_assert_ne!(s, 0, "walk edges are distinct");
        let sign = match parity {
            // (-1)^i for 1-based i.
            Parity::Even => s * if i % 2 == 0 { -1 } else { 1 },
            Parity::Odd => eps,
        };
        element.add_term(m, sign.into());
    }
    element
}

/// Spanning set of the weight-`k` slice of the circuit ideal: every
/// `m · A(w)` with `w` a circuit of length `l <= k + 1` and `m` a weight
/// `k - l + 1` monomial over all edges. Zero products are dropped;
/// order is deterministic (circuits, then monomials, ascending).
pub fn ideal_spanning_set(g: &Multigraph, parity: Parity, k: usize) -> Vec<Element> {
    spanning_set_from_circuits(g, &g.circuits(), parity, k)
}

fn spanning_set_from_circuits(
    g: &Multigraph,
    circuits: &[Circuit],
    parity: Parity,
    k: usize,
) -> Vec<Element> {
    let edge_ids = g.edge_ids();
    let mut out = Vec::new();
    for w in circuits {
        let l = w.len();
        if l > k + 1 {
            continue;
        }
        let class = arnold_class(w, parity).element;
        for m in weight_monomials(&edge_ids, k + 1 - l) {
            let prod = multiply(&Element::from_term(m, BigInt::one()), &class, parity);
            if !prod.is_zero() {
                out.push(prod);
            }
        }
    }
    out
}

/// Exact presentation of one weight of the quotient ring: the free abelian
/// group on the weight-`k` monomials modulo the rows of `relations`.
#[derive(Clone, Debug)]
pub struct GradedPresentation {
    pub weight: usize,
    pub parity: Parity,
    /// Basis of the ambient free group, ascending.
    pub monomials: Vec<Monomial>,
    /// Ideal spanning vectors in `monomials` coordinates, one per row.
    pub relations: IntMatrix,
    pub smith: SmithNormalForm,
}

impl GradedPresentation {
    pub fn ambient_rank(&self) -> usize {
        self.monomials.len()
    }

    /// Free rank of the quotient.
    pub fn quotient_rank(&self) -> usize {
        self.ambient_rank() - self.smith.rank()
    }

    /// Orders of the finite cyclic summands (invariant factors > 1).
    pub fn torsion(&self) -> Vec<BigInt> {
        self.smith.torsion()
    }

    pub fn monomial_index(&self) -> BTreeMap<Monomial, usize> {
        self.monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect()
    }
}

/// Presentation of weight `k` of the ring of `g`.
pub fn graded_presentation(g: &Multigraph, parity: Parity, k: usize) -> GradedPresentation {
    presentation_from_circuits(g, &g.circuits(), parity, k)
}

pub(crate) fn presentation_from_circuits(
    g: &Multigraph,
    circuits: &[Circuit],
    parity: Parity,
    k: usize,
) -> GradedPresentation {
    let monomials = weight_monomials(&g.edge_ids(), k);
    let index: BTreeMap<Monomial, usize> = monomials
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect();
    let rows: Vec<Vec<BigInt>> = spanning_set_from_circuits(g, circuits, parity, k)
        .iter()
        .map(|el| {
            el.coord_vector(&index, monomials.len())
                .expect("spanning set lives in weight k")
        })
        .collect();
    let relations = IntMatrix::from_rows(rows, monomials.len());
    let smith = relations.smith_normal_form();
    GradedPresentation {
        weight: k,
        parity,
        monomials,
        relations,
        smith,
    }
}

/// One weight of a [`BettiTable`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BettiRow {
    pub weight: usize,
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

/// Free ranks and torsion of every weight `0 ..= edge_count`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BettiTable {
    pub graph_key: String,
    pub parity: Parity,
    pub rows: Vec<BettiRow>,
}

pub fn betti_table(g: &Multigraph, parity: Parity) -> BettiTable {
    let circuits = g.circuits();
    let rows = (0..=g.edge_count())
        .map(|k| {
            let p = presentation_from_circuits(g, &circuits, parity, k);
            BettiRow {
                weight: k,
                rank: p.quotient_rank(),
                torsion: p.torsion(),
            }
        })
        .collect();
    BettiTable {
        graph_key: g.canonical_form().to_hex(),
        parity,
        rows,
    }
}

impl BettiTable {
    /// Ranks for weights `0 ..= edge_count`.
    pub fn ranks(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.rank).collect()
    }

    /// Ranks with trailing zero weights removed (the natural polynomial
    /// coefficient vector; empty when the ring is zero).
    pub fn trimmed_ranks(&self) -> Vec<usize> {
        let mut v = self.ranks();
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    pub fn is_torsion_free(&self) -> bool {
        self.rows.iter().all(|r| r.torsion.is_empty())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let torsion: Vec<Vec<serde_json::Value>> = self
            .rows
            .iter()
            .map(|r| {
                r.torsion
                    .iter()
                    .map(|d| {
                        serde_json::Value::Number(
                            serde_json::Number::from_str(&d.to_string())
                                .expect("integer literal"),
                        )
                    })
                    .collect()
            })
            .collect();
        serde_json::json!({
            "graph": self.graph_key,
            "parity": self.parity.name(),
            "ranks": self.ranks(),
            "torsion": torsion,
        })
    }
}

/// No-broken-circuit monomial basis, validated against the presentations.
#[derive(Clone, Debug)]
pub struct NbcBasis {
    pub order: Vec<EdgeId>,
    /// `by_weight[k]` is the basis of weight `k`, ascending.
    pub by_weight: Vec<Vec<Monomial>>,
}

impl NbcBasis {
    pub fn total_size(&self) -> usize {
        self.by_weight.iter().map(Vec::len).sum()
    }
}

fn check_order(g: &Multigraph, order: &[EdgeId]) -> Result<()> {
    let mut sorted: Vec<EdgeId> = order.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != order.len() || sorted != g.edge_ids() {
        return Err(Error::BadEdgeOrder(format!(
            "order must list each of the graph's {} edges exactly once",
            g.edge_count()
        )));
    }
    Ok(())
}

/// Broken circuits of `g` under `order`: each circuit's edge set minus its
/// `order`-least edge. (A loop's broken circuit is empty, so it excludes
/// everything — consistent with the ring being zero.)
fn broken_circuits(g: &Multigraph, order: &[EdgeId]) -> Vec<Vec<EdgeId>> {
    let position: BTreeMap<EdgeId, usize> = order
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i))
        .collect();
    let mut out: Vec<Vec<EdgeId>> = g
        .circuits()
        .iter()
        .map(|w| {
            let set = w.edge_set();
            let least = *set
                .iter()
                .min_by_key(|e| position[e])
                .expect("circuit is nonempty");
            set.into_iter().filter(|&e| e != least).collect()
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// The weight-`k` monomials containing no broken circuit. Candidate only:
/// [`nbc_basis`] performs the validation that makes this a basis.
pub fn nbc_candidate_basis(
    g: &Multigraph,
    order: &[EdgeId],
    k: usize,
) -> Result<Vec<Monomial>> {
    check_order(g, order)?;
    let broken = broken_circuits(g, order);
    Ok(weight_monomials(&g.edge_ids(), k)
        .into_iter()
        .filter(|m| !broken.iter().any(|b| m.contains_all(b)))
        .collect())
}

/// Candidate basis for every weight, validated: in each weight and each
/// parity, the candidate count must equal the computed free rank and the
/// candidates' images must be linearly independent in the quotient.
/// Failure reports an error rather than returning an unverified basis.
pub fn nbc_basis(g: &Multigraph, order: &[EdgeId]) -> Result<NbcBasis> {
    check_order(g, order)?;
    let circuits = g.circuits();
    let mut by_weight = Vec::with_capacity(g.edge_count() + 1);
    for k in 0..=g.edge_count() {
        let candidates = nbc_candidate_basis(g, order, k)?;
        for parity in [Parity::Even, Parity::Odd] {
            let pres = presentation_from_circuits(g, &circuits, parity, k);
            validate_candidates(&pres, &candidates)
                .map_err(|msg| Error::BasisValidation { weight: k, msg })?;
        }
        by_weight.push(candidates);
    }
    Ok(NbcBasis {
        order: order.to_vec(),
        by_weight,
    })
}

/// The two-part validation of a candidate monomial basis against an exact
/// presentation: right count, and independent images.
fn validate_candidates(
    pres: &GradedPresentation,
    candidates: &[Monomial],
) -> std::result::Result<(), String> {
    if candidates.len() != pres.quotient_rank() {
        return Err(format!(
            "{} candidates but the free rank ({} parity) is {}",
            candidates.len(),
            pres.parity.name(),
            pres.quotient_rank()
        ));
    }
    // Independence modulo the relations: stacking the candidate unit
    // vectors on top of the relation rows must add full count to the rank.
    let index = pres.monomial_index();
    let dim = pres.ambient_rank();
    let mut rows: Vec<Vec<BigInt>> = candidates
        .iter()
        .map(|m| {
            Element::from_term(m.clone(), BigInt::one())
                .coord_vector(&index, dim)
                .map_err(|_| format!("candidate {m} is not a weight-{} monomial", pres.weight))
        })
        .collect::<std::result::Result<_, _>>()?;
    for i in 0..pres.relations.nrows() {
        rows.push(pres.relations.row(i).to_vec());
    }
    let stacked = IntMatrix::from_rows(rows, dim);
    if stacked.rank() != pres.smith.rank() + candidates.len() {
        return Err(format!(
            "candidate images are dependent modulo the relations ({} parity)",
            pres.parity.name()
        ));
    }
    Ok(())
}

/// Coordinates of a homogeneous element in the weight's NBC basis, solving
/// exactly over the integers modulo the relation lattice.
///
/// The zero element yields the empty vector. Inhomogeneous input is
/// rejected; reduce each weight component separately.
pub fn normal_form(
    x: &Element,
    g: &Multigraph,
    parity: Parity,
    order: &[EdgeId],
) -> Result<Vec<BigInt>> {
    check_order(g, order)?;
    for e in x.support() {
        if !g.contains_edge(e) {
            return Err(Error::ForeignEdge(e));
        }
    }
    if x.is_zero() {
        return Ok(Vec::new());
    }
    let Some(k) = x.homogeneous_weight() else {
        return Err(Error::Inhomogeneous);
    };
    let basis = nbc_basis(g, order)?;
    let candidates = &basis.by_weight[k];
    let pres = graded_presentation(g, parity, k);
    let index = pres.monomial_index();
    let dim = pres.ambient_rank();
    // Columns: the candidate monomials, then the relations; solve
    // [B | R] y = x and read off the basis coefficients.
    let mut cols: Vec<Vec<BigInt>> = Vec::with_capacity(candidates.len() + pres.relations.nrows());
    for m in candidates {
        cols.push(Element::from_term(m.clone(), BigInt::one()).coord_vector(&index, dim)?);
    }
    for i in 0..pres.relations.nrows() {
        cols.push(pres.relations.row(i).to_vec());
    }
    let system = IntMatrix::from_columns(&cols, dim);
    let target = x.coord_vector(&index, dim)?;
    let solution = crate::linalg::solve(&system, &target).ok_or_else(|| {
        Error::Inconsistency(format!(
            "weight-{k} element does not reduce to the validated basis over the integers"
        ))
    })?;
    Ok(solution[..candidates.len()].to_vec())
}
