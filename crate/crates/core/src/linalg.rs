//! Exact integer linear algebra: rank, Smith normal form, Hermite normal
//! form, kernels, and lattice arithmetic over arbitrary-precision integers.
//!
//! Everything here is fraction-free and exact. Rank uses Bareiss
//! elimination; structure computations use Euclidean row reduction to a
//! canonical row Hermite form (pivots positive, entries above a pivot
//! reduced into `[0, pivot)`, zero rows dropped), so two generating sets
//! span the same sublattice of `Z^n` iff their Hermite forms are equal
//! entry for entry.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense integer matrix, row major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    rows: Vec<Vec<BigInt>>,
    cols: usize,
}

impl IntMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        IntMatrix {
            rows: vec![vec![BigInt::zero(); ncols]; nrows],
            cols: ncols,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.rows[i][i] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>, ncols: usize) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == ncols));
        IntMatrix { rows, cols: ncols }
    }

    pub fn from_fn(nrows: usize, ncols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let rows = (0..nrows)
            .map(|i| (0..ncols).map(|j| f(i, j)).collect())
            .collect();
        IntMatrix { rows, cols: ncols }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<BigInt>], nrows: usize) -> Self {
        debug_assert!(cols.iter().all(|c| c.len() == nrows));
        IntMatrix::from_fn(nrows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.rows[i][j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.rows[i]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<BigInt>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::from_fn(self.cols, self.nrows(), |i, j| self.rows[j][i].clone())
    }

    /// `self * rhs`.
    pub fn matmul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.nrows());
        IntMatrix::from_fn(self.nrows(), rhs.cols, |i, j| {
            (0..self.cols).map(|k| &self.rows[i][k] * &rhs.rows[k][j]).sum()
        })
    }

    /// `self * x` for a column vector `x`.
    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, x.len());
        self.rows
            .iter()
            .map(|r| r.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Side-by-side concatenation `[self | rhs]`.
    pub fn hstack(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.nrows(), rhs.nrows());
        let rows = self
            .rows
            .iter()
            .zip(&rhs.rows)
            .map(|(a, b)| a.iter().chain(b).cloned().collect())
            .collect();
        IntMatrix {
            rows,
            cols: self.cols + rhs.cols,
        }
    }

    /// Rank over the rationals, by fraction-free Bareiss elimination with
    /// full pivoting. Independent of the Hermite/Smith routines, so the two
    /// can cross-check each other.
    pub fn rank(&self) -> usize {
        let mut a = self.rows.clone();
        let nrows = a.len();
        let ncols = self.cols;
        let mut prev = BigInt::one();
        let mut r = 0;
        while r < nrows.min(ncols) {
            // Smallest nonzero entry of the trailing submatrix as pivot.
            let mut pivot: Option<(usize, usize)> = None;
            for i in r..nrows {
                for j in r..ncols {
                    if !a[i][j].is_zero()
                        && pivot
                            .is_none_or(|(pi, pj)| a[i][j].abs() < a[pi][pj].abs())
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break };
            a.swap(r, pi);
            if pj != r {
                for row in &mut a {
                    row.swap(r, pj);
                }
            }
            for i in r + 1..nrows {
                for j in r + 1..ncols {
                    let num = &a[r][r] * &a[i][j] - &a[i][r] * &a[r][j];
                    a[i][j] = num / &prev; // exact by Bareiss
                }
                a[i][r] = BigInt::zero();
            }
            prev = a[r][r].clone();
            r += 1;
        }
        r
    }

    /// Smith normal form over the integers.
    pub fn smith_normal_form(&self) -> SmithNormalForm {
        let mut a = self.rows.clone();
        let nrows = a.len();
        let ncols = self.cols;
        let mut t = 0;
        while t < nrows.min(ncols) {
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..nrows {
                for j in t..ncols {
                    if !a[i][j].is_zero()
                        && pivot
                            .is_none_or(|(pi, pj)| a[i][j].abs() < a[pi][pj].abs())
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break };
            a.swap(t, pi);
            if pj != t {
                for row in &mut a {
                    row.swap(t, pj);
                }
            }
            loop {
                let mut touched = false;
                for i in t + 1..nrows {
                    if a[i][t].is_zero() {
                        continue;
                    }
                    let q = &a[i][t] / &a[t][t];
                    if !q.is_zero() {
                        let pivot_row = a[t].clone();
                        for (x, p) in a[i].iter_mut().zip(&pivot_row) {
                            *x -= &q * p;
                        }
                    }
                    if !a[i][t].is_zero() {
                        // Remainder is strictly smaller: promote it.
                        a.swap(i, t);
                        touched = true;
                    }
                }
                if touched {
                    continue;
                }
                for j in t + 1..ncols {
                    if a[t][j].is_zero() {
                        continue;
                    }
                    let q = &a[t][j] / &a[t][t];
                    if !q.is_zero() {
                        for row in a.iter_mut() {
                            let sub = &q * &row[t];
                            row[j] -= sub;
                        }
                    }
                    if !a[t][j].is_zero() {
                        for row in &mut a {
                            row.swap(t, j);
                        }
                        touched = true;
                    }
                }
                if touched {
                    continue;
                }
                // Row and column are clear; make the pivot divide the rest.
                let mut divides = true;
                'scan: for i in t + 1..nrows {
                    for j in t + 1..ncols {
                        if (&a[i][j] % &a[t][t]).is_zero() {
                            continue;
                        }
                        let extra = a[i].clone();
                        for (x, y) in a[t].iter_mut().zip(&extra) {
                            *x += y;
                        }
                        divides = false;
                        break 'scan;
                    }
                }
                if divides {
                    break;
                }
            }
            if a[t][t].is_negative() {
                for x in &mut a[t] {
                    *x = -&*x;
                }
            }
            t += 1;
        }
        let invariant_factors: Vec<BigInt> = (0..t).map(|i| a[i][i].clone()).collect();
        debug_assert!(invariant_factors
            .windows(2)
            .all(|w| (&w[1] % &w[0]).is_zero()));
        SmithNormalForm { invariant_factors }
    }

    /// Canonical row Hermite form with zero rows dropped.
    pub fn row_hnf(&self) -> IntMatrix {
        let mut rows = self.rows.clone();
        let pivots = hermite(&mut rows, self.cols);
        rows.truncate(pivots.len());
        IntMatrix {
            rows,
            cols: self.cols,
        }
    }
}

/// Invariant factors `d_1 | d_2 | ... | d_k` of an integer matrix; `k` is
/// the rank and the factors `> 1` describe the torsion of the cokernel.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SmithNormalForm {
    pub invariant_factors: Vec<BigInt>,
}

impl SmithNormalForm {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Factors greater than one, i.e. the orders of the finite cyclic
    /// summands of the cokernel.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors
            .iter()
            .filter(|d| **d > BigInt::one())
            .cloned()
            .collect()
    }
}

/// In-place canonical row reduction. Only the first `width` columns steer
/// pivoting; row operations act on entire rows, so callers may carry
/// bookkeeping columns beyond `width`. Returns pivot (row, column)
/// positions in increasing column order; after the call, rows without
/// pivots are zero throughout the first `width` columns and sit at the
/// bottom.
fn hermite(rows: &mut [Vec<BigInt>], width: usize) -> Vec<(usize, usize)> {
    let nrows = rows.len();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r = 0;
    for c in 0..width {
        if r == nrows {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in r..nrows {
                if !rows[i][c].is_zero()
                    && best.is_none_or(|b| rows[i][c].abs() < rows[b][c].abs())
                {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            rows.swap(r, b);
            let mut leftover = false;
            for i in r + 1..nrows {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = &rows[i][c] / &rows[r][c];
                if !q.is_zero() {
                    let pivot_row = rows[r].clone();
                    for (x, p) in rows[i].iter_mut().zip(&pivot_row) {
                        *x -= &q * p;
                    }
                }
                leftover |= !rows[i][c].is_zero();
            }
            if !leftover {
                break;
            }
        }
        if !rows[r][c].is_zero() {
            if rows[r][c].is_negative() {
                for x in &mut rows[r] {
                    *x = -&*x;
                }
            }
            for i in 0..r {
                let q = rows[i][c].div_floor(&rows[r][c]);
                if !q.is_zero() {
                    let pivot_row = rows[r].clone();
                    for (x, p) in rows[i].iter_mut().zip(&pivot_row) {
                        *x -= &q * p;
                    }
                }
            }
            pivots.push((r, c));
            r += 1;
        }
    }
    pivots
}

/// Canonical Hermite form of the lattice spanned by `gens` inside `Z^dim`.
pub fn lattice_hnf(gens: &[Vec<BigInt>], dim: usize) -> IntMatrix {
    debug_assert!(gens.iter().all(|g| g.len() == dim));
    IntMatrix::from_rows(gens.to_vec(), dim).row_hnf()
}

fn pivots_of(hnf: &IntMatrix) -> Vec<(usize, usize)> {
    (0..hnf.nrows())
        .map(|i| {
            let c = (0..hnf.ncols())
                .find(|&j| !hnf.at(i, j).is_zero())
                .expect("hnf has no zero rows");
            (i, c)
        })
        .collect()
}

/// Membership of `v` in the lattice given by a canonical Hermite form.
pub fn lattice_contains(hnf: &IntMatrix, v: &[BigInt]) -> bool {
    assert_eq!(hnf.ncols(), v.len());
    let mut v = v.to_vec();
    for (r, c) in pivots_of(hnf) {
        if v[c].is_zero() {
            continue;
        }
        let (q, rem) = v[c].div_rem(hnf.at(r, c));
        if !rem.is_zero() {
            return false;
        }
        for (x, p) in v.iter_mut().zip(hnf.row(r)) {
            *x -= &q * p;
        }
    }
    v.iter().all(Zero::is_zero)
}

/// Do two generating sets span the same sublattice of `Z^dim`? On failure
/// returns a witness vector lying in one lattice but not the other.
pub fn lattice_eq_witness(
    a: &[Vec<BigInt>],
    b: &[Vec<BigInt>],
    dim: usize,
) -> Result<(), Vec<BigInt>> {
    let ha = lattice_hnf(a, dim);
    let hb = lattice_hnf(b, dim);
    if ha == hb {
        return Ok(());
    }
    for g in a {
        if !lattice_contains(&hb, g) {
            return Err(g.clone());
        }
    }
    for g in b {
        if !lattice_contains(&ha, g) {
            return Err(g.clone());
        }
    }
    unreachable!("distinct Hermite forms must disagree on some generator");
}

/// Is the lattice all of `Z^dim`?
pub fn is_full_lattice(hnf: &IntMatrix, dim: usize) -> bool {
    *hnf == IntMatrix::identity(dim)
}

/// Basis of the right kernel `{x : M x = 0}` as a saturated sublattice of
/// `Z^ncols`. Deterministic (canonical reduction of the transposed
/// tableau).
pub fn kernel_basis(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let t = m.nrows();
    let s = m.ncols();
    // Tableau rows: [column_i(M) | e_i]; a row whose left block reduces to
    // zero records a kernel combination on the right.
    let mut rows: Vec<Vec<BigInt>> = (0..s)
        .map(|i| {
            let mut row = m.column(i);
            row.extend((0..s).map(|k| {
                if k == i {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            }));
            row
        })
        .collect();
    let pivots = hermite(&mut rows, t);
    rows[pivots.len()..]
        .iter()
        .map(|row| row[t..].to_vec())
        .collect()
}

/// One integer solution of `M x = b`, if any.
pub fn solve(m: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(m.nrows(), b.len());
    let t = m.nrows();
    let s = m.ncols();
    let mut rows: Vec<Vec<BigInt>> = (0..s)
        .map(|i| {
            let mut row = m.column(i);
            row.extend((0..s).map(|k| {
                if k == i {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            }));
            row
        })
        .collect();
    let pivots = hermite(&mut rows, t);
    let mut residue = b.to_vec();
    let mut x = vec![BigInt::zero(); s];
    for (r, c) in pivots {
        if residue[c].is_zero() {
            continue;
        }
        let (q, rem) = residue[c].div_rem(rows[r].get(c).expect("pivot"));
        if !rem.is_zero() {
            return None;
        }
        for (y, p) in residue.iter_mut().zip(&rows[r][..t]) {
            *y -= &q * p;
        }
        for (y, p) in x.iter_mut().zip(&rows[r][t..]) {
            *y += &q * p;
        }
    }
    if residue.iter().all(Zero::is_zero) {
        Some(x)
    } else {
        None
    }
}

/// Generators of the preimage lattice `{x : M x ∈ L(target_gens)}`.
pub fn preimage_lattice(m: &IntMatrix, target_gens: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let t = m.nrows();
    let s = m.ncols();
    debug_assert!(target_gens.iter().all(|g| g.len() == t));
    let negated: Vec<Vec<BigInt>> = target_gens
        .iter()
        .map(|g| g.iter().map(|x| -x).collect())
        .collect();
    let block = m.hstack(&IntMatrix::from_columns(&negated, t));
    kernel_basis(&block)
        .into_iter()
        .map(|v| v[..s].to_vec())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn mat(rows: &[&[i64]]) -> IntMatrix {
        let ncols = rows.first().map_or(0, |r| r.len());
        IntMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| bi(x)).collect())
                .collect(),
            ncols,
        )
    }

    #[test]
    fn rank_basics() {
        assert_eq!(mat(&[&[2, 4], &[1, 2]]).rank(), 1);
        assert_eq!(IntMatrix::identity(4).rank(), 4);
        assert_eq!(IntMatrix::zeros(3, 5).rank(), 0);
        // Triangle boundary map: rank 2.
        let boundary = mat(&[&[-1, -1, 0], &[1, 0, -1], &[0, 1, 1]]);
        assert_eq!(boundary.rank(), 2);
    }

    #[test]
    fn smith_normal_form_known_values() {
        assert_eq!(
            mat(&[&[2, 0], &[0, 6]]).smith_normal_form().invariant_factors,
            vec![bi(2), bi(6)]
        );
        assert_eq!(
            mat(&[&[0, 2], &[3, 0]]).smith_normal_form().invariant_factors,
            vec![bi(1), bi(6)]
        );
        assert_eq!(
            mat(&[&[2, 4], &[4, 8]]).smith_normal_form().invariant_factors,
            vec![bi(2)]
        );
        assert_eq!(
            IntMatrix::identity(3).smith_normal_form().invariant_factors,
            vec![bi(1), bi(1), bi(1)]
        );
        assert!(IntMatrix::zeros(2, 2)
            .smith_normal_form()
            .invariant_factors
            .is_empty());
        // Negative entries normalize to positive factors.
        assert_eq!(
            mat(&[&[-2]]).smith_normal_form().invariant_factors,
            vec![bi(2)]
        );
        let snf = mat(&[&[-1, -1, 0], &[1, 0, -1], &[0, 1, 1]]).smith_normal_form();
        assert_eq!(snf.invariant_factors, vec![bi(1), bi(1)]);
        assert!(snf.torsion().is_empty());
    }

    #[test]
    fn hermite_form_is_canonical_across_generating_sets() {
        // Same lattice, two generating sets.
        let a = lattice_hnf(&[vec![bi(2), bi(1)], vec![bi(0), bi(3)]], 2);
        let b = lattice_hnf(
            &[
                vec![bi(2), bi(4)],
                vec![bi(0), bi(3)],
                vec![bi(4), bi(2)],
            ],
            2,
        );
        assert_eq!(a, b);
        // Pivots positive, above-pivot entries reduced.
        let h = lattice_hnf(&[vec![bi(-5), bi(7)], vec![bi(0), bi(3)]], 2);
        assert_eq!(h, mat(&[&[5, 2], &[0, 3]]));
    }

    #[test]
    fn membership_and_fullness() {
        let h = lattice_hnf(&[vec![bi(2), bi(0)], vec![bi(0), bi(3)]], 2);
        assert!(lattice_contains(&h, &[bi(4), bi(-3)]));
        assert!(!lattice_contains(&h, &[bi(1), bi(0)]));
        assert!(!lattice_contains(&h, &[bi(2), bi(1)]));
        assert!(!is_full_lattice(&h, 2));
        let full = lattice_hnf(&[vec![bi(1), bi(2)], vec![bi(1), bi(1)]], 2);
        assert!(is_full_lattice(&full, 2));
    }

    #[test]
    fn lattice_eq_produces_witnesses() {
        let a = vec![vec![bi(2), bi(0)], vec![bi(0), bi(2)]];
        let b = vec![vec![bi(2), bi(0)], vec![bi(0), bi(4)]];
        assert!(lattice_eq_witness(&a, &a, 2).is_ok());
        let w = lattice_eq_witness(&a, &b, 2).unwrap_err();
        assert_eq!(w, vec![bi(0), bi(2)]);
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let m = mat(&[&[1, 1, 1]]);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.apply(v).iter().all(Zero::is_zero));
        }
        // The kernel is the full sum-zero lattice, not a finite-index part.
        let expected = lattice_hnf(
            &[vec![bi(1), bi(-1), bi(0)], vec![bi(0), bi(1), bi(-1)]],
            3,
        );
        assert_eq!(lattice_hnf(&k, 3), expected);
        // Injective map: trivial kernel.
        assert!(kernel_basis(&mat(&[&[1, 0], &[0, 2], &[3, 3]])).is_empty());
        // Zero matrix: everything.
        assert_eq!(kernel_basis(&IntMatrix::zeros(0, 3)).len(), 3);
    }

    #[test]
    fn solve_finds_integer_solutions_exactly_when_they_exist() {
        let m = mat(&[&[2]]);
        assert_eq!(solve(&m, &[bi(4)]), Some(vec![bi(2)]));
        assert_eq!(solve(&m, &[bi(3)]), None);
        let m = mat(&[&[2, 3], &[0, 5]]);
        let b = vec![bi(7), bi(5)];
        let x = solve(&m, &b).unwrap();
        assert_eq!(m.apply(&x), b);
        // Underdetermined: any valid solution is fine.
        let m = mat(&[&[1, 1]]);
        let x = solve(&m, &[bi(5)]).unwrap();
        assert_eq!(m.apply(&x), vec![bi(5)]);
        // Inconsistent over Z though solvable over Q.
        let m = mat(&[&[2, 0], &[0, 2]]);
        assert_eq!(solve(&m, &[bi(1), bi(2)]), None);
    }

    #[test]
    fn preimage_lattice_examples() {
        // {x : 2x ∈ 4Z} = 2Z.
        let m = mat(&[&[2]]);
        let pre = preimage_lattice(&m, &[vec![bi(4)]]);
        assert_eq!(lattice_hnf(&pre, 1), mat(&[&[2]]));
        // Preimage of everything is everything.
        let pre = preimage_lattice(&m, &[vec![bi(1)]]);
        assert!(is_full_lattice(&lattice_hnf(&pre, 1), 1));
        // Preimage of 0 is the kernel.
        let m = mat(&[&[1, 1]]);
        let pre = preimage_lattice(&m, &[]);
        assert_eq!(lattice_hnf(&pre, 2), lattice_hnf(&kernel_basis(&m), 2));
    }

    #[test]
    fn rank_routes_agree_on_fixtures() {
        let samples = [
            mat(&[&[2, 4], &[1, 2]]),
            mat(&[&[-1, -1, 0], &[1, 0, -1], &[0, 1, 1]]),
            mat(&[&[6, 10, 15], &[10, 6, 15], &[15, 10, 6]]),
            IntMatrix::zeros(2, 4),
        ];
        for m in &samples {
            let bareiss = m.rank();
            let hnf_pivots = m.row_hnf().nrows();
            let snf_rank = m.smith_normal_form().rank();
            assert_eq!(bareiss, hnf_pivots);
            assert_eq!(bareiss, snf_rank);
        }
    }
}
