//! Ring maps along deletion and contraction of an edge, and the
//! machine-checked exactness properties tying the three rings together.
//!
//! Fix a non-loop edge `α` of `Γ`, write `D = Γ∖α` (deletion) and
//! `C = Γ/α`(contraction). Both derived graphs keep the surviving edge ids,
//! so all three polynomial rings share generator names and the maps act
//! monomial by monomial:
//!
//! * `i : Λ(D) → Λ(Γ)` — inclusion, literally the identity on monomials;
//! * `ψ : Λ(Γ) → Λ(C) ⊗ Z[e_α]/(e_α²)` — split off `α`: a monomial goes to
//!   `m ⊗ 1` if `α ∉ m`, else to `± (m∖α) ⊗ e_α` (the sign moves `e_α` to
//!   the right past the later generators; trivial for odd parity);
//! * `g : Λ(Γ) → Λ(C)` — the `⊗ e_α` coefficient of `ψ`, dropping weight
//!   by one.
//!
//! All statements about the quotient rings are verified *exactly* as
//! lattice identities inside the weight-`k` coordinate space: a subgroup of
//! `R(Γ)_k` is represented by the sublattice of `Λ(Γ)_k` generated by its
//! preimage, and two subgroups agree iff the canonical Hermite forms of
//! those lattices agree. Failures carry a concrete witness vector.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{
    multiply, tensor_multiply, weight_monomials, Element, Monomial, Parity, TensorElement,
};
use crate::arnold::{presentation_from_circuits, GradedPresentation};
use crate::graph::{EdgeId, Multigraph};
use crate::linalg::{
    self, is_full_lattice, lattice_contains, lattice_eq_witness, lattice_hnf, IntMatrix,
    SmithNormalForm,
};
use crate::{Error, Result};

/// Inclusion `R(Γ∖α) → R(Γ)` on elements: the identity on generators
/// (stable ids), after checking the element really lives over `Γ∖α`.
pub fn include_element(x: &Element, g: &Multigraph, a: EdgeId) -> Result<Element> {
    g.edge(a)?;
    for e in x.support() {
        if e == a || !g.contains_edge(e) {
            return Err(Error::ForeignEdge(e));
        }
    }
    Ok(x.clone())
}

/// Split `ψ : Λ(Γ) → Λ(Γ/α) ⊗ Z[e_α]/(e_α²)` on elements.
pub fn split_element(
    x: &Element,
    g: &Multigraph,
    a: EdgeId,
    parity: Parity,
) -> Result<TensorElement> {
    let edge = *g.edge(a)?;
    if edge.is_loop() {
        return Err(Error::ContractLoop(a));
    }
    for e in x.support() {
        if !g.contains_edge(e) {
            return Err(Error::ForeignEdge(e));
        }
    }
    let mut scalar = Element::zero();
    let mut edge_part = Element::zero();
    for (m, c) in x.terms() {
        match m.without(a) {
            None => scalar.add_term(m.clone(), c.clone()),
            Some(rest) => {
                // Pull e_α out to the right, past every later generator.
                let c = if parity.anticommuting() && m.edges_above(a) % 2 == 1 {
                    -c
                } else {
                    c.clone()
                };
                edge_part.add_term(rest, c);
            }
        }
    }
    Ok(TensorElement::new(scalar, edge_part))
}

/// The `⊗ e_α` coefficient `g : Λ(Γ)_k → Λ(Γ/α)_{k-1}` on elements.
pub fn edge_coefficient_element(
    x: &Element,
    g: &Multigraph,
    a: EdgeId,
    parity: Parity,
) -> Result<Element> {
    Ok(split_element(x, g, a, parity)?.edge)
}

/// One weight of a ring map in monomial coordinates. Columns are indexed
/// by `source_monomials`, rows by `target_monomials`; the matrix acts on
/// column vectors. When the target is the tensor ring, `target_monomials`
/// lists the `⊗ 1` block first and `edge_block_offset` marks where the
/// `⊗ e_α` block begins.
#[derive(Clone, Debug)]
pub struct RingMapMatrix {
    pub weight: usize,
    pub parity: Parity,
    pub source_monomials: Vec<Monomial>,
    pub target_monomials: Vec<Monomial>,
    pub edge_block_offset: Option<usize>,
    pub matrix: IntMatrix,
}

/// The inclusion `Λ(Γ∖α)_k → Λ(Γ)_k` in coordinates.
pub fn inclusion_matrix(
    g: &Multigraph,
    a: EdgeId,
    parity: Parity,
    k: usize,
) -> Result<RingMapMatrix> {
    let s = Setting::new(g, a, parity)?;
    Ok(RingMapMatrix {
        weight: k,
        parity,
        source_monomials: s.sub_monomials(k),
        target_monomials: s.full_monomials(k),
        edge_block_offset: None,
        matrix: s.inclusion(k),
    })
}

/// The split `ψ : Λ(Γ)_k → Λ(Γ/α)_k ⊕ Λ(Γ/α)_{k-1}` in coordinates
/// (scalar block stacked over the `⊗ e_α` block).
pub fn split_matrix(
    g: &Multigraph,
    a: EdgeId,
    parity: Parity,
    k: usize,
) -> Result<RingMapMatrix> {
    let s = Setting::new(g, a, parity)?;
    let (scalar, edge) = s.split(k);
    let scalar_monomials = s.sub_monomials(k);
    let offset = scalar_monomials.len();
    let mut target = scalar_monomials;
    target.extend(s.sub_monomials_below(k));
    let matrix = IntMatrix::from_fn(target.len(), s.full_monomials(k).len(), |i, j| {
        if i < offset {
            scalar.at(i, j).clone()
        } else {
            edge.at(i - offset, j).clone()
        }
    });
    Ok(RingMapMatrix {
        weight: k,
        parity,
        source_monomials: s.full_monomials(k),
        target_monomials: target,
        edge_block_offset: Some(offset),
        matrix,
    })
}

/// The coefficient map `g : Λ(Γ)_k → Λ(Γ/α)_{k-1}` in coordinates.
pub fn edge_coefficient_matrix(
    g: &Multigraph,
    a: EdgeId,
    parity: Parity,
    k: usize,
) -> Result<RingMapMatrix> {
    let s = Setting::new(g, a, parity)?;
    let (_, edge) = s.split(k);
    Ok(RingMapMatrix {
        weight: k,
        parity,
        source_monomials: s.full_monomials(k),
        target_monomials: s.sub_monomials_below(k),
        edge_block_offset: Some(0),
        matrix: edge,
    })
}

/// Which exactness statement a report speaks about.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CheckKind {
    /// `im(i) = ker(g)` in `R(Γ)_k`.
    Middle,
    /// Full short exact sequence: maps descend, `i` injective, middle
    /// exactness, `g` surjective, ranks additive.
    Ses,
    /// `R(Γ∖α)` is the fiber product of `ψ` and `y ↦ y ⊗ 1`.
    Pullback,
    /// `g` maps the ideal of `Γ` onto the ideal of `Γ/α`.
    GSurjective,
    /// `ψ` is multiplicative on random elements.
    Commute,
}

impl CheckKind {
    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Middle => "middle",
            CheckKind::Ses => "ses",
            CheckKind::Pullback => "pullback",
            CheckKind::GSurjective => "gsurj",
            CheckKind::Commute => "commute",
        }
    }

    pub fn parse(s: &str) -> Option<CheckKind> {
        match s {
            "middle" => Some(CheckKind::Middle),
            "ses" => Some(CheckKind::Ses),
            "pullback" => Some(CheckKind::Pullback),
            "gsurj" => Some(CheckKind::GSurjective),
            "commute" => Some(CheckKind::Commute),
            _ => None,
        }
    }

    pub fn all() -> [CheckKind; 5] {
        [
            CheckKind::Ses,
            CheckKind::Middle,
            CheckKind::Pullback,
            CheckKind::GSurjective,
            CheckKind::Commute,
        ]
    }
}

/// Outcome of one check at one weight, with a witness vector on failure
/// (a lattice generator on the wrong side of the claimed identity, in
/// target coordinates).
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub check: CheckKind,
    pub graph_key: String,
    pub edge: EdgeId,
    pub weight: usize,
    pub pass: bool,
    pub witness: Option<Vec<BigInt>>,
}

impl CheckReport {
    pub fn to_json(&self) -> serde_json::Value {
        let mut obj = serde_json::json!({
            "check": self.check.name(),
            "graph": self.graph_key,
            "edge": self.edge.0,
            "weight": self.weight,
            "pass": self.pass,
        });
        if let Some(w) = &self.witness {
            let nums: Vec<serde_json::Value> = w
                .iter()
                .map(|x| {
                    serde_json::Value::Number(
                        serde_json::Number::from_str(&x.to_string()).expect("integer literal"),
                    )
                })
                .collect();
            obj["witness"] = serde_json::Value::Array(nums);
        }
        obj
    }

    pub fn render_text(&self) -> String {
        let status = if self.pass { "PASS" } else { "FAIL" };
        let mut line = format!(
            "{status} {:<8} edge {} weight {}",
            self.check.name(),
            self.edge,
            self.weight
        );
        if let Some(w) = &self.witness {
            let coords: Vec<String> = w.iter().map(BigInt::to_string).collect();
            line.push_str(&format!("  witness [{}]", coords.join(", ")));
        }
        line
    }
}

/// Everything the checks at one `(Γ, α, parity)` share: the derived graphs
/// and their circuits. Presentations are rebuilt per weight (cheap at this
/// scale, and keeps every check a fresh computation).
struct Setting {
    graph: Multigraph,
    edge: EdgeId,
    parity: Parity,
    deleted: Multigraph,
    contracted: Multigraph,
    circuits_g: Vec<crate::graph::Circuit>,
    circuits_d: Vec<crate::graph::Circuit>,
    circuits_c: Vec<crate::graph::Circuit>,
    graph_key: String,
}

impl Setting {
    fn new(g: &Multigraph, a: EdgeId, parity: Parity) -> Result<Setting> {
        let deleted = g.delete_edge(a)?;
        let (contracted, _) = g.contract_edge(a)?;
        Ok(Setting {
            circuits_g: g.circuits(),
            circuits_d: deleted.circuits(),
            circuits_c: contracted.circuits(),
            graph_key: g.canonical_form().to_hex(),
            graph: g.clone(),
            edge: a,
            parity,
            deleted,
            contracted,
        })
    }

    fn full_monomials(&self, k: usize) -> Vec<Monomial> {
        weight_monomials(&self.graph.edge_ids(), k)
    }

    /// Weight-`k` monomials over the surviving edges — the shared
    /// coordinate space of `Λ(Γ∖α)_k` and `Λ(Γ/α)_k`.
    fn sub_monomials(&self, k: usize) -> Vec<Monomial> {
        weight_monomials(&self.deleted.edge_ids(), k)
    }

    fn sub_monomials_below(&self, k: usize) -> Vec<Monomial> {
        match k.checked_sub(1) {
            Some(k1) => self.sub_monomials(k1),
            None => Vec::new(),
        }
    }

    fn pres_g(&self, k: usize) -> GradedPresentation {
        presentation_from_circuits(&self.graph, &self.circuits_g, self.parity, k)
    }

    fn pres_d(&self, k: usize) -> GradedPresentation {
        presentation_from_circuits(&self.deleted, &self.circuits_d, self.parity, k)
    }

    fn pres_c(&self, k: usize) -> GradedPresentation {
        presentation_from_circuits(&self.contracted, &self.circuits_c, self.parity, k)
    }

    /// Presentation of `R(Γ/α)` one weight down; weight `-1` is the zero
    /// group.
    fn pres_c_below(&self, k: usize) -> GradedPresentation {
        match k.checked_sub(1) {
            Some(k1) => self.pres_c(k1),
            None => GradedPresentation {
                weight: 0,
                parity: self.parity,
                monomials: Vec::new(),
                relations: IntMatrix::zeros(0, 0),
                smith: SmithNormalForm {
                    invariant_factors: Vec::new(),
                },
            },
        }
    }

    /// `i` in coordinates: `Λ(D)_k → Λ(Γ)_k`.
    fn inclusion(&self, k: usize) -> IntMatrix {
        let source = self.sub_monomials(k);
        let target = self.full_monomials(k);
        let index: std::collections::BTreeMap<&Monomial, usize> =
            target.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut m = IntMatrix::zeros(target.len(), source.len());
        for (j, mono) in source.iter().enumerate() {
            m.set(index[mono], j, BigInt::one());
        }
        m
    }

    /// `ψ` in coordinates, as (scalar block, edge block).
    fn split(&self, k: usize) -> (IntMatrix, IntMatrix) {
        let source = self.full_monomials(k);
        let scalar_target = self.sub_monomials(k);
        let edge_target = self.sub_monomials_below(k);
        let sindex: std::collections::BTreeMap<&Monomial, usize> = scalar_target
            .iter()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let eindex: std::collections::BTreeMap<&Monomial, usize> = edge_target
            .iter()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let mut scalar = IntMatrix::zeros(scalar_target.len(), source.len());
        let mut edge = IntMatrix::zeros(edge_target.len(), source.len());
        for (j, mono) in source.iter().enumerate() {
            match mono.without(self.edge) {
                None => scalar.set(sindex[mono], j, BigInt::one()),
                Some(rest) => {
                    let sign = if self.parity.anticommuting()
                        && mono.edges_above(self.edge) % 2 == 1
                    {
                        BigInt::from(-1)
                    } else {
                        BigInt::one()
                    };
                    edge.set(eindex[&rest], j, sign);
                }
            }
        }
        (scalar, edge)
    }

    fn report(
        &self,
        check: CheckKind,
        weight: usize,
        failure: Option<Vec<BigInt>>,
    ) -> CheckReport {
        CheckReport {
            check,
            graph_key: self.graph_key.clone(),
            edge: self.edge,
            weight,
            pass: failure.is_none(),
            witness: failure,
        }
    }

    /// `im(i) = ker(g)` inside `R(Γ)_k`, both sides as sublattices of
    /// `Λ(Γ)_k` containing the relation lattice.
    fn middle(&self, k: usize) -> CheckReport {
        let pg = self.pres_g(k);
        let pc = self.pres_c_below(k);
        let (_, gmat) = self.split(k);
        let mut image = self.inclusion(k).columns();
        image.extend(rows_of(&pg.relations));
        let kernel = linalg::preimage_lattice(&gmat, &rows_of(&pc.relations));
        let outcome = lattice_eq_witness(&image, &kernel, pg.ambient_rank());
        self.report(CheckKind::Middle, k, outcome.err())
    }

    /// The full short-exact-sequence verification at weight `k`:
    /// `0 → R(Γ∖α)_k → R(Γ)_k → R(Γ/α)_{k-1} → 0`.
    fn ses(&self, k: usize) -> CheckReport {
        let pg = self.pres_g(k);
        let pd = self.pres_d(k);
        let pc = self.pres_c_below(k);
        let incl = self.inclusion(k);
        let (_, gmat) = self.split(k);
        let n_g = pg.ambient_rank();
        let n_c = pc.ambient_rank();
        let fail = |w: Vec<BigInt>| self.report(CheckKind::Ses, k, Some(w));

        // The maps descend to the quotients: i(I_D) ⊆ I_Γ, g(I_Γ) ⊆ I_C.
        let l_g = lattice_hnf(&rows_of(&pg.relations), n_g);
        for row in rows_of(&pd.relations) {
            let v = incl.apply(&row);
            if !lattice_contains(&l_g, &v) {
                return fail(v);
            }
        }
        let l_c = lattice_hnf(&rows_of(&pc.relations), n_c);
        for row in rows_of(&pg.relations) {
            let v = gmat.apply(&row);
            if !lattice_contains(&l_c, &v) {
                return fail(v);
            }
        }

        // Injectivity of i: its kernel in R(Γ∖α)_k is exactly the
        // relation lattice.
        let ker_i = linalg::preimage_lattice(&incl, &rows_of(&pg.relations));
        if let Err(w) = lattice_eq_witness(&ker_i, &rows_of(&pd.relations), pd.ambient_rank()) {
            return fail(w);
        }

        // Middle exactness: im(i) = ker(g).
        let mut image = incl.columns();
        image.extend(rows_of(&pg.relations));
        let kernel = linalg::preimage_lattice(&gmat, &rows_of(&pc.relations));
        if let Err(w) = lattice_eq_witness(&image, &kernel, n_g) {
            return fail(w);
        }

        // Surjectivity of g onto R(Γ/α)_{k-1}.
        let mut onto = gmat.columns();
        onto.extend(rows_of(&pc.relations));
        let h = lattice_hnf(&onto, n_c);
        if !is_full_lattice(&h, n_c) {
            for j in 0..n_c {
                let mut e_j = vec![BigInt::zero(); n_c];
                e_j[j] = BigInt::one();
                if !lattice_contains(&h, &e_j) {
                    return fail(e_j);
                }
            }
        }

        // Free ranks add up across the sequence.
        let (r_g, r_d, r_c) = (
            pg.quotient_rank(),
            pd.quotient_rank(),
            pc.quotient_rank(),
        );
        if r_g != r_d + r_c {
            return fail(vec![r_g.into(), r_d.into(), r_c.into()]);
        }
        self.report(CheckKind::Ses, k, None)
    }

    /// Theorem-level pullback square at weight `k`: the map
    /// `θ(d) = (i(d), d)` identifies `R(Γ∖α)_k` with the fiber product of
    /// `ψ : R(Γ)_k → D̄_k` and `y ↦ y ⊗ 1 : R(Γ/α)_k → D̄_k`, where `D̄`
    /// is the tensor ring. Verified as an equality of sublattices of
    /// `Λ(Γ)_k ⊕ Λ(Γ/α)_k`, plus injectivity of `θ`.
    fn pullback(&self, k: usize) -> CheckReport {
        let pg = self.pres_g(k);
        let pd = self.pres_d(k);
        let pck = self.pres_c(k);
        let pcb = self.pres_c_below(k);
        let (psi_s, psi_e) = self.split(k);
        let incl = self.inclusion(k);
        let n_g = pg.ambient_rank();
        let n_d = pd.ambient_rank(); // == pck.ambient_rank(): same monomials
        let n_ck = pck.ambient_rank();
        let n_cb = pcb.ambient_rank();
        let fail = |w: Vec<BigInt>| self.report(CheckKind::Pullback, k, Some(w));

        // Φ(x, y) = (ψ_s(x) - y, ψ_e(x)); the fiber-product condition is
        // Φ(x, y) ∈ L_C,k ⊕ L_C,k-1.
        let phi = IntMatrix::from_fn(n_ck + n_cb, n_g + n_ck, |i, j| {
            if i < n_ck {
                if j < n_g {
                    psi_s.at(i, j).clone()
                } else if j - n_g == i {
                    BigInt::from(-1)
                } else {
                    BigInt::zero()
                }
            } else if j < n_g {
                psi_e.at(i - n_ck, j).clone()
            } else {
                BigInt::zero()
            }
        });
        let mut target: Vec<Vec<BigInt>> = Vec::new();
        for row in rows_of(&pck.relations) {
            target.push(pad(&row, 0, n_ck + n_cb));
        }
        for row in rows_of(&pcb.relations) {
            target.push(pad(&row, n_ck, n_ck + n_cb));
        }
        let fiber = linalg::preimage_lattice(&phi, &target);

        // θ's image: pairs (i(d), d) plus the relation lattices of both
        // factors.
        let mut theta: Vec<Vec<BigInt>> = (0..n_d)
            .map(|j| {
                let mut v = incl.column(j);
                let mut unit = vec![BigInt::zero(); n_ck];
                unit[j] = BigInt::one();
                v.extend(unit);
                v
            })
            .collect();
        for row in rows_of(&pg.relations) {
            theta.push(pad(&row, 0, n_g + n_ck));
        }
        for row in rows_of(&pck.relations) {
            theta.push(pad(&row, n_g, n_g + n_ck));
        }
        if let Err(w) = lattice_eq_witness(&theta, &fiber, n_g + n_ck) {
            return fail(w);
        }

        // θ injective: {d : (i(d), d) ∈ L_Γ ⊕ L_C,k} is exactly L_D.
        let j_mat = IntMatrix::from_fn(n_g + n_ck, n_d, |i, j| {
            if i < n_g {
                incl.at(i, j).clone()
            } else if i - n_g == j {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        });
        let mut both: Vec<Vec<BigInt>> = Vec::new();
        for row in rows_of(&pg.relations) {
            both.push(pad(&row, 0, n_g + n_ck));
        }
        for row in rows_of(&pck.relations) {
            both.push(pad(&row, n_g, n_g + n_ck));
        }
        let ker_theta = linalg::preimage_lattice(&j_mat, &both);
        if let Err(w) = lattice_eq_witness(&ker_theta, &rows_of(&pd.relations), n_d) {
            return fail(w);
        }
        self.report(CheckKind::Pullback, k, None)
    }

    /// Ideal-level surjectivity of `g`: the image of the weight-`k` slice
    /// of the ideal of `Γ` spans the whole weight-`(k-1)` slice of the
    /// ideal of `Γ/α`.
    fn g_surjective(&self, k: usize) -> CheckReport {
        let pg = self.pres_g(k);
        let pc = self.pres_c_below(k);
        let (_, gmat) = self.split(k);
        let image: Vec<Vec<BigInt>> = rows_of(&pg.relations)
            .into_iter()
            .map(|row| gmat.apply(&row))
            .collect();
        let outcome = lattice_eq_witness(
            &image,
            &rows_of(&pc.relations),
            pc.ambient_rank(),
        );
        self.report(CheckKind::GSurjective, k, outcome.err())
    }

    /// `ψ(x · y) = ψ(x) · ψ(y)` on random elements (x of weight `k`, y of
    /// a random complementary weight), exercising every sign rule at once.
    fn commute(&self, k: usize, rng: &mut ChaCha8Rng, samples: usize) -> CheckReport {
        let m = self.graph.edge_count();
        let edge_ids = self.graph.edge_ids();
        for _ in 0..samples {
            let k2 = crate::family::random_weight(rng, m - k);
            let x = crate::family::random_element(rng, &edge_ids, k, 4);
            let y = crate::family::random_element(rng, &edge_ids, k2, 4);
            let product = multiply(&x, &y, self.parity);
            let lhs = split_element(&product, &self.graph, self.edge, self.parity)
                .expect("product lives over the graph");
            let rhs = tensor_multiply(
                &split_element(&x, &self.graph, self.edge, self.parity)
                    .expect("x lives over the graph"),
                &split_element(&y, &self.graph, self.edge, self.parity)
                    .expect("y lives over the graph"),
                self.parity,
            );
            if lhs != rhs {
                let diff = lhs.sub(&rhs);
                let witness: Vec<BigInt> = diff
                    .scalar
                    .terms()
                    .chain(diff.edge.terms())
                    .map(|(_, c)| c.clone())
                    .collect();
                return self.report(CheckKind::Commute, k, Some(witness));
            }
        }
        self.report(CheckKind::Commute, k, None)
    }
}

fn rows_of(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    (0..m.nrows()).map(|i| m.row(i).to_vec()).collect()
}

/// Embed `v` into a zero vector of length `dim` starting at `offset`.
fn pad(v: &[BigInt], offset: usize, dim: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); dim];
    out[offset..offset + v.len()].clone_from_slice(v);
    out
}

/// Single-weight entry points.
pub fn check_middle(g: &Multigraph, a: EdgeId, parity: Parity, k: usize) -> Result<CheckReport> {
    Ok(Setting::new(g, a, parity)?.middle(k))
}

pub fn check_ses(g: &Multigraph, a: EdgeId, parity: Parity, k: usize) -> Result<CheckReport> {
    Ok(Setting::new(g, a, parity)?.ses(k))
}

pub fn check_pullback(g: &Multigraph, a: EdgeId, parity: Parity, k: usize) -> Result<CheckReport> {
    Ok(Setting::new(g, a, parity)?.pullback(k))
}

pub fn check_g_surjective(
    g: &Multigraph,
    a: EdgeId,
    parity: Parity,
    k: usize,
) -> Result<CheckReport> {
    Ok(Setting::new(g, a, parity)?.g_surjective(k))
}

pub fn check_commute(
    g: &Multigraph,
    a: EdgeId,
    parity: Parity,
    k: usize,
    seed: u64,
    samples: usize,
) -> Result<CheckReport> {
    let s = Setting::new(g, a, parity)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(s.commute(k, &mut rng, samples))
}

/// Run one kind of check at every weight `0 ..= |E|` for a fixed edge.
pub fn run_check(
    g: &Multigraph,
    a: EdgeId,
    parity: Parity,
    kind: CheckKind,
    seed: u64,
) -> Result<Vec<CheckReport>> {
    let s = Setting::new(g, a, parity)?;
    let m = g.edge_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..=m)
        .map(|k| match kind {
            CheckKind::Middle => s.middle(k),
            CheckKind::Ses => s.ses(k),
            CheckKind::Pullback => s.pullback(k),
            CheckKind::GSurjective => s.g_surjective(k),
            CheckKind::Commute => s.commute(k, &mut rng, 20),
        })
        .collect())
}
