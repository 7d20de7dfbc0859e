//! The free graded commutative algebra on edge generators, over the
//! integers.
//!
//! One generator `e_i` per edge, of degree `r - 1`; only the parity of `r`
//! survives in the sign rules, so elements carry no `r`, just a [`Parity`]
//! at multiplication time:
//!
//! * **even `r`** — generators have odd degree: `e_i e_j = -e_j e_i` and
//!   `e_i^2 = 0`; reordering a product costs the sign of the permutation;
//! * **odd `r`** — generators have even degree: they commute, and `e_i^2 =
//!   0` is imposed as a relation.
//!
//! Either way a monomial is a finite set of edges, kept sorted ascending,
//! and the sign bookkeeping lives in [`normalize_word`] and [`multiply`].
//! Weight = number of generators in a monomial (degree in units of
//! `r - 1`).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::graph::EdgeId;
use crate::{Error, Result};

/// Parity of the ambient dimension `r`; the only part of `r` the ring sees.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    /// Parity of a concrete dimension `r >= 2`.
    pub fn of_r(r: u64) -> Parity {
        if r.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Do generators anticommute?
    pub fn anticommuting(self) -> bool {
        matches!(self, Parity::Even)
    }

    pub fn name(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }

    pub fn parse(s: &str) -> Option<Parity> {
        match s {
            "even" => Some(Parity::Even),
            "odd" => Some(Parity::Odd),
            _ => None,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A square-free monomial: a finite set of edge generators, stored
/// strictly ascending. The empty monomial is the ring unit.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial {
    edges: Vec<EdgeId>,
}

impl Monomial {
    pub fn unit() -> Monomial {
        Monomial::default()
    }

    pub fn single(e: EdgeId) -> Monomial {
        Monomial { edges: vec![e] }
    }

    /// Build from an edge set; `None` if the list has a repeat.
    pub fn new(mut edges: Vec<EdgeId>) -> Option<Monomial> {
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some(Monomial { edges })
    }

    pub fn is_unit(&self) -> bool {
        self.edges.is_empty()
    }

    /// Number of generators; the degree in units of `r - 1`.
    pub fn weight(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn contains_all(&self, sorted: &[EdgeId]) -> bool {
        sorted.iter().all(|&e| self.contains(e))
    }

    /// The monomial with `e` removed; `None` when `e` is absent.
    pub fn without(&self, e: EdgeId) -> Option<Monomial> {
        let pos = self.edges.binary_search(&e).ok()?;
        let mut edges = self.edges.clone();
        edges.remove(pos);
        Some(Monomial { edges })
    }

    /// How many of this monomial's edges exceed `e` (the sign exponent for
    /// pulling `e` out to the right under anticommutation).
    pub fn edges_above(&self, e: EdgeId) -> usize {
        let pos = match self.edges.binary_search(&e) {
            Ok(p) => p + 1,
            Err(p) => p,
        };
        self.edges.len() - pos
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.edges.is_empty() {
            return f.write_str("1");
        }
        for e in &self.edges {
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// Sort a word of generators into a monomial.
///
/// Returns the sorted monomial and a sign in `{-1, 0, +1}`: 0 when a
/// generator repeats (the product is zero in both parities), otherwise the
/// permutation sign for even parity and `+1` for odd parity (commuting
/// generators reorder freely).
pub fn normalize_word(word: &[EdgeId], parity: Parity) -> (Monomial, i8) {
    let mut edges = word.to_vec();
    let mut transpositions = 0usize;
    // Insertion sort, counting swaps: exact permutation sign, and the input
    // is tiny.
    for i in 1..edges.len() {
        let mut j = i;
        while j > 0 && edges[j - 1] > edges[j] {
            edges.swap(j - 1, j);
            transpositions += 1;
            j -= 1;
        }
    }
    if edges.windows(2).any(|w| w[0] == w[1]) {
        return (Monomial::unit(), 0);
    }
    let sign = if parity.anticommuting() && transpositions % 2 == 1 {
        -1
    } else {
        1
    };
    (Monomial { edges }, sign)
}

/// An integer combination of monomials. The zero element has no terms;
/// zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct Element {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Element {
    pub fn zero() -> Element {
        Element::default()
    }

    pub fn unit() -> Element {
        Element::from_term(Monomial::unit(), BigInt::one())
    }

    pub fn generator(e: EdgeId) -> Element {
        Element::from_term(Monomial::single(e), BigInt::one())
    }

    pub fn from_term(m: Monomial, c: BigInt) -> Element {
        let mut el = Element::zero();
        el.add_term(m, c);
        el
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Add `c * m`, dropping the term if the total cancels.
    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(entry) => {
                *entry += c;
                if entry.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Element {
        Element {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Element {
        if k.is_zero() {
            return Element::zero();
        }
        Element {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    /// Every edge mentioned by some term.
    pub fn support(&self) -> BTreeSet<EdgeId> {
        self.terms
            .keys()
            .flat_map(|m| m.edges().iter().copied())
            .collect()
    }

    /// The common weight of all terms, if the element is homogeneous and
    /// nonzero.
    pub fn homogeneous_weight(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Monomial::weight);
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }

    /// The weight-`k` part.
    pub fn weight_component(&self, k: usize) -> Element {
        Element {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weight() == k)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Coordinates with respect to an indexed monomial list. Errors if a
    /// term falls outside the list (caller picked the wrong space).
    pub fn coord_vector(
        &self,
        index: &BTreeMap<Monomial, usize>,
        dim: usize,
    ) -> Result<Vec<BigInt>> {
        let mut v = vec![BigInt::zero(); dim];
        for (m, c) in &self.terms {
            let &i = index.get(m).ok_or_else(|| {
                Error::Inconsistency(format!("monomial {m} outside the coordinate space"))
            })?;
            v[i] = c.clone();
        }
        Ok(v)
    }

    /// Parse the element format written by `Display`: whitespace-separated
    /// `±c·e{i}e{j}...` terms with ascending indices (or `1` for the unit
    /// monomial), or the single token `0`.
    pub fn parse(s: &str) -> Result<Element> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(Error::ElementParse("empty input".into()));
        }
        if trimmed == "0" {
            return Ok(Element::zero());
        }
        let mut out = Element::zero();
        for tok in trimmed.split_whitespace() {
            let err = |msg: &str| Error::ElementParse(format!("term {tok:?}: {msg}"));
            let (sign, rest) = match tok.chars().next() {
                Some('+') => (1, &tok[1..]),
                Some('-') => (-1, &tok[1..]),
                _ => return Err(err("missing leading sign")),
            };
            let (mag, mono) = rest
                .split_once('·')
                .ok_or_else(|| err("missing `·` between coefficient and monomial"))?;
            let coeff: BigInt = mag
                .parse()
                .map_err(|_| err("bad coefficient magnitude"))?;
            if coeff.is_negative() {
                return Err(err("sign belongs before the magnitude"));
            }
            let m = parse_monomial(mono).map_err(|msg| err(&msg))?;
            out.add_term(m, coeff * sign);
        }
        Ok(out)
    }
}

fn parse_monomial(s: &str) -> std::result::Result<Monomial, String> {
    if s == "1" {
        return Ok(Monomial::unit());
    }
    let mut edges = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        if c != 'e' {
            return Err(format!("expected `e`, found {c:?}"));
        }
        let mut digits = String::new();
        while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
            digits.push(*d);
            chars.next();
        }
        let id: u32 = digits.parse().map_err(|_| "missing edge index".to_string())?;
        edges.push(EdgeId(id));
    }
    if edges.is_empty() {
        return Err("empty monomial".into());
    }
    if edges.windows(2).any(|w| w[0] >= w[1]) {
        return Err("edge indices must be strictly ascending".into());
    }
    Ok(Monomial { edges })
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            let sign = if c.is_negative() { '-' } else { '+' };
            write!(f, "{sign}{}·{m}", c.magnitude())?;
        }
        Ok(())
    }
}

/// Merge two sorted monomials; `None` if they share an edge (product is
/// zero). The sign is the anticommutation sign for even parity, `+1` for
/// odd.
fn merge_monomials(a: &Monomial, b: &Monomial, parity: Parity) -> Option<(Monomial, i8)> {
    let (xs, ys) = (a.edges(), b.edges());
    let mut merged = Vec::with_capacity(xs.len() + ys.len());
    let mut crossings = 0usize;
    let (mut i, mut j) = (0, 0);
    while i < xs.len() && j < ys.len() {
        match xs[i].cmp(&ys[j]) {
            std::cmp::Ordering::Equal => return None,
            std::cmp::Ordering::Less => {
                merged.push(xs[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                // ys[j] jumps over everything left in xs.
                crossings += xs.len() - i;
                merged.push(ys[j]);
                j += 1;
            }
        }
    }
    merged.extend_from_slice(&xs[i..]);
    merged.extend_from_slice(&ys[j..]);
    let sign = if parity.anticommuting() && crossings % 2 == 1 {
        -1
    } else {
        1
    };
    Some((Monomial { edges: merged }, sign))
}

/// Product in the free graded commutative algebra.
pub fn multiply(a: &Element, b: &Element, parity: Parity) -> Element {
    let mut out = Element::zero();
    for (ma, ca) in a.terms() {
        for (mb, cb) in b.terms() {
            if let Some((m, sign)) = merge_monomials(ma, mb, parity) {
                out.add_term(m, ca * cb * BigInt::from(sign));
            }
        }
    }
    out
}

/// An element of `R(Γ/α) ⊗ Z[e_α]/(e_α²)` split by powers of `e_α`:
/// `scalar ⊗ 1 + edge ⊗ e_α`. Which edge is `α` is fixed by context; the
/// components never mention it.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TensorElement {
    pub scalar: Element,
    pub edge: Element,
}

impl TensorElement {
    pub fn new(scalar: Element, edge: Element) -> TensorElement {
        TensorElement { scalar, edge }
    }

    pub fn zero() -> TensorElement {
        TensorElement::default()
    }

    /// `x ⊗ 1`.
    pub fn from_scalar(x: Element) -> TensorElement {
        TensorElement::new(x, Element::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero() && self.edge.is_zero()
    }

    pub fn add(&self, other: &TensorElement) -> TensorElement {
        TensorElement::new(self.scalar.add(&other.scalar), self.edge.add(&other.edge))
    }

    pub fn sub(&self, other: &TensorElement) -> TensorElement {
        TensorElement::new(self.scalar.sub(&other.scalar), self.edge.sub(&other.edge))
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) ⊗ 1 + ({}) ⊗ e", self.scalar, self.edge)
    }
}

/// Scale each term by `(-1)^weight`: the cost of commuting the odd-degree
/// generator `e_α` across an even-parity element.
fn edge_twist(x: &Element, parity: Parity) -> Element {
    if !parity.anticommuting() {
        return x.clone();
    }
    Element {
        terms: x
            .terms()
            .map(|(m, c)| {
                let c = if m.weight() % 2 == 1 { -c } else { c.clone() };
                (m.clone(), c)
            })
            .collect(),
    }
}

/// Product in `R(Γ/α) ⊗ Z[e_α]/(e_α²)`:
///
/// `(x⊗1 + y⊗e)(x'⊗1 + y'⊗e) = xx'⊗1 + (xy' + y·κ(x'))⊗e`
///
/// where `κ` is the sign of moving `e` across `x'` (identity for odd
/// parity) and the `y y'` term dies with `e² = 0`.
pub fn tensor_multiply(a: &TensorElement, b: &TensorElement, parity: Parity) -> TensorElement {
    let scalar = multiply(&a.scalar, &b.scalar, parity);
    let edge = multiply(&a.scalar, &b.edge, parity)
        .add(&multiply(&a.edge, &edge_twist(&b.scalar, parity), parity));
    TensorElement::new(scalar, edge)
}

/// All weight-`k` monomials over the given (sorted, distinct) edge ids, in
/// ascending monomial order.
pub fn weight_monomials(edge_ids: &[EdgeId], k: usize) -> Vec<Monomial> {
    use itertools::Itertools;
    debug_assert!(edge_ids.windows(2).all(|w| w[0] < w[1]));
    edge_ids
        .iter()
        .copied()
        .combinations(k)
        .map(|edges| Monomial { edges })
        .collect()
}
