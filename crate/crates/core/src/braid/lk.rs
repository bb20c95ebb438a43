//! The Lawrence–Krammer representation, kept symbolic in `q` and `t`.
//!
//! The representation is faithful, so comparing matrices decides braid
//! equality independently of the Garside machinery. Basis vectors are
//! `x_{i,j}` for `1 <= i < j <= m`; generator matrices act on columns and
//! a word maps to the product of its letters' matrices in written order.

use std::fmt;

use super::BraidWord;
use crate::error::{Error, Result};
use crate::poly::{Coefficient, LaurentPoly2};

/// Dense square matrix over `Z[q^±1, t^±1]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LkMatrix<C> {
    dim: usize,
    entries: Vec<LaurentPoly2<C>>,
}

/// Sparse column description of a generator matrix: for every input basis
/// vector, the `(row, coefficient)` pairs of its image.
type SparseColumns<C> = Vec<Vec<(usize, LaurentPoly2<C>)>>;

impl<C: Coefficient> LkMatrix<C> {
    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![LaurentPoly2::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = LaurentPoly2::one();
        }
        LkMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &LaurentPoly2<C> {
        &self.entries[row * self.dim + col]
    }

    pub fn is_identity(&self) -> bool {
        (0..self.dim).all(|r| {
            (0..self.dim).all(|c| {
                let e = self.get(r, c);
                if r == c {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
        })
    }

    pub fn mul(&self, other: &LkMatrix<C>) -> LkMatrix<C> {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = LaurentPoly2::zero();
                for k in 0..n {
                    let (a, b) = (self.get(r, k), other.get(k, c));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                entries.push(acc);
            }
        }
        LkMatrix { dim: n, entries }
    }

    fn mul_sparse(&self, columns: &SparseColumns<C>) -> LkMatrix<C> {
        let n = self.dim;
        let mut entries = vec![LaurentPoly2::zero(); n * n];
        for (c, col) in columns.iter().enumerate() {
            for r in 0..n {
                let mut acc = LaurentPoly2::zero();
                for (k, coeff) in col {
                    let a = self.get(r, *k);
                    if !a.is_zero() {
                        acc = &acc + &(a * coeff);
                    }
                }
                entries[r * n + c] = acc;
            }
        }
        LkMatrix { dim: n, entries }
    }

    /// Largest absolute coefficient over all entries.
    pub fn max_abs_coeff(&self) -> C {
        self.entries.iter().map(|e| e.max_abs_coeff()).fold(C::zero(), |a, b| if b > a { b } else { a })
    }
}

impl<C: Coefficient> fmt::Display for LkMatrix<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Index of the basis vector `x_{i,j}` (1-based, `i < j`).
fn basis_index(m: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= m);
    // Rows for first index 1..i-1 hold (m-1) + (m-2) + ... entries.
    (i - 1) * (2 * m - i) / 2 + (j - i - 1)
}

fn basis_pairs(m: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(m * (m - 1) / 2);
    for i in 1..=m {
        for j in i + 1..=m {
            pairs.push((i, j));
        }
    }
    pairs
}

fn mono<C: Coefficient>(c: i64, q: i32, t: i32) -> LaurentPoly2<C> {
    LaurentPoly2::monomial(coeff::<C>(c), q, t)
}

fn coeff<C: Coefficient>(c: i64) -> C {
    let mut out = C::zero();
    let unit = if c < 0 { -C::one() } else { C::one() };
    for _ in 0..c.unsigned_abs() {
        out = out + unit.clone();
    }
    out
}

/// `q^shift · t^t_deg · (q - 1)^power · scale`.
fn q_minus_one_pow<C: Coefficient>(scale: i64, shift: i32, t_deg: i32, power: u32) -> LaurentPoly2<C> {
    let mut p = mono::<C>(scale, shift, t_deg);
    let base = LaurentPoly2::from_terms([((1, 0), C::one()), ((0, 0), -C::one())]);
    for _ in 0..power {
        p = &p * &base;
    }
    p
}

/// Sparse columns of the matrix of `σ_k` (or its inverse).
fn generator_columns<C: Coefficient>(m: usize, k: usize, inverse: bool) -> SparseColumns<C> {
    let x = basis_index(m, k, k + 1);
    let kk = k as i32;
    basis_pairs(m)
        .into_iter()
        .map(|(i, j)| {
            let me = basis_index(m, i, j);
            let ii = i as i32;
            if (i, j) == (k, k + 1) {
                return if inverse { vec![(x, mono(1, -2, -1))] } else { vec![(x, mono(1, 2, 1))] };
            }
            if j == k && i < k {
                let up = basis_index(m, i, k + 1);
                return if inverse {
                    vec![(up, LaurentPoly2::one()), (x, q_minus_one_pow(-1, kk - ii - 1, 0, 1))]
                } else {
                    vec![(me, LaurentPoly2::from_terms([((0, 0), C::one()), ((1, 0), -C::one())])), (up, mono(1, 1, 0))]
                };
            }
            if j == k + 1 && i < k {
                let down = basis_index(m, i, k);
                return if inverse {
                    vec![
                        (down, mono(1, -1, 0)),
                        (me, LaurentPoly2::from_terms([((0, 0), C::one()), ((-1, 0), -C::one())])),
                        (x, q_minus_one_pow(-1, kk - ii - 2, 0, 2)),
                    ]
                } else {
                    vec![(down, LaurentPoly2::one()), (x, q_minus_one_pow(1, kk - ii + 1, 1, 1))]
                };
            }
            if i == k && j > k + 1 {
                let next = basis_index(m, k + 1, j);
                return if inverse {
                    vec![
                        (next, LaurentPoly2::one()),
                        (me, LaurentPoly2::from_terms([((0, 0), C::one()), ((-1, 0), -C::one())])),
                        (x, q_minus_one_pow(-1, -2, 0, 2)),
                    ]
                } else {
                    vec![(x, q_minus_one_pow(1, 1, 1, 1)), (next, mono(1, 1, 0))]
                };
            }
            if i == k + 1 && j > k + 1 {
                let prev = basis_index(m, k, j);
                return if inverse {
                    vec![(prev, mono(1, -1, 0)), (x, q_minus_one_pow(-1, -2, 0, 1))]
                } else {
                    vec![
                        (prev, LaurentPoly2::one()),
                        (me, LaurentPoly2::from_terms([((0, 0), C::one()), ((1, 0), -C::one())])),
                    ]
                };
            }
            if i < k && j > k + 1 {
                return if inverse {
                    vec![(me, LaurentPoly2::one()), (x, q_minus_one_pow(-1, kk - ii - 2, 0, 2))]
                } else {
                    vec![(me, LaurentPoly2::one()), (x, q_minus_one_pow(1, kk - ii, 1, 2))]
                };
            }
            vec![(me, LaurentPoly2::one())]
        })
        .collect()
}

/// Matrix of a single generator letter.
pub fn generator_matrix<C: Coefficient>(strands: usize, letter: i32) -> LkMatrix<C> {
    let dim = strands * (strands - 1) / 2;
    LkMatrix::identity(dim).mul_sparse(&generator_columns(strands, letter.unsigned_abs() as usize, letter < 0))
}

/// Lawrence–Krammer matrix of a braid word.
pub fn lk_matrix<C: Coefficient>(word: &BraidWord) -> LkMatrix<C> {
    let m = word.strands();
    let dim = m * (m - 1) / 2;
    let mut cache: Vec<Option<SparseColumns<C>>> = vec![None; 2 * m];
    let mut acc = LkMatrix::identity(dim);
    for &l in word.letters() {
        let slot = (l.unsigned_abs() as usize) * 2 + usize::from(l < 0);
        let cols = cache[slot].get_or_insert_with(|| generator_columns(m, l.unsigned_abs() as usize, l < 0));
        acc = acc.mul_sparse(cols);
    }
    acc
}

/// Equality oracle: compares Lawrence–Krammer matrices.
pub fn lk_equal<C: Coefficient>(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    if a.strands() != b.strands() {
        return Err(Error::StrandMismatch(a.strands(), b.strands()));
    }
    // a = b  ⟺  a·b⁻¹ = 1; one product is cheaper than two comparisons.
    let diff = a.compose(&b.invert())?;
    Ok(lk_matrix::<C>(&diff).is_identity())
}
