//! Exact linear algebra over the rationals or a prime field.
//!
//! Matrices arising from Koszul differentials and monomial-to-basis maps
//! have entries in `{0, ±1}`, so rank computations stay well-conditioned.
//! Over the rationals, small matrices go through fraction-free (Bareiss)
//! elimination on big integers; larger ones use sparse elimination with
//! rational entries.  Over `GF(p)` everything reduces mod `p` up front.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

/// Dimension threshold below which dense elimination is used.
const DENSE_LIMIT: usize = 64;

/// Errors from exact linear algebra.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    /// A vector fed to a span did not match the ambient dimension.
    #[error("vector length {got} does not match ambient dimension {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    /// A triplet referenced a row or column outside the matrix shape.
    #[error("entry ({row}, {col}) is outside a {rows}x{cols} matrix")]
    EntryOutOfBounds {
        row: u32,
        col: u32,
        rows: usize,
        cols: usize,
    },
    /// The requested prime-field characteristic is not prime.
    #[error("{0} is not a prime, so it does not define a prime field")]
    NotPrime(u32),
}

/// Coefficient field for rank and homology computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldConfig {
    /// The rational numbers (exact, characteristic zero).
    Rationals,
    /// The prime field `GF(p)` for a prime `p < 2^31`.
    PrimeField(u32),
}

impl FieldConfig {
    /// Validated `GF(p)` constructor.
    pub fn prime_field(p: u32) -> Result<Self, LinalgError> {
        if is_prime(p) {
            Ok(FieldConfig::PrimeField(p))
        } else {
            Err(LinalgError::NotPrime(p))
        }
    }
}

impl std::fmt::Display for FieldConfig {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldConfig::Rationals => write!(f, "rationals"),
            FieldConfig::PrimeField(p) => write!(f, "gf:{p}"),
        }
    }
}

impl Serialize for FieldConfig {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A sparse integer matrix in triplet form.
///
/// Entries are kept deduplicated (one per `(row, col)`) with explicit zeros
/// dropped; duplicate triplets passed to [`SparseMatrix::from_triplets`]
/// are summed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<(u32, u32, i64)>,
}

impl SparseMatrix {
    /// An all-zero matrix of the given shape.
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            entries: Vec::new(),
        }
    }

    /// Builds a matrix from `(row, col, value)` triplets, summing duplicates.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        triplets: &[(u32, u32, i64)],
    ) -> Result<Self, LinalgError> {
        let mut entries: Vec<(u32, u32, i64)> = Vec::with_capacity(triplets.len());
        for &(r, c, v) in triplets {
            if r as usize >= rows || c as usize >= cols {
                return Err(LinalgError::EntryOutOfBounds {
                    row: r,
                    col: c,
                    rows,
                    cols,
                });
            }
            entries.push((r, c, v));
        }
        entries.sort_unstable_by_key(|&(r, c, _)| (r, c));
        let mut merged: Vec<(u32, u32, i64)> = Vec::with_capacity(entries.len());
        for (r, c, v) in entries {
            match merged.last_mut() {
                Some(&mut (lr, lc, ref mut lv)) if lr == r && lc == c => *lv += v,
                _ => merged.push((r, c, v)),
            }
        }
        merged.retain(|&(_, _, v)| v != 0);
        Ok(SparseMatrix {
            rows,
            cols,
            entries: merged,
        })
    }

    /// Adds `value` to the entry at `(row, col)`.
    pub fn add_entry(&mut self, row: usize, col: usize, value: i64) {
        assert!(row < self.rows && col < self.cols, "entry out of bounds");
        if value == 0 {
            return;
        }
        match self
            .entries
            .binary_search_by_key(&(row as u32, col as u32), |&(r, c, _)| (r, c))
        {
            Ok(k) => {
                self.entries[k].2 += value;
                if self.entries[k].2 == 0 {
                    self.entries.remove(k);
                }
            }
            Err(k) => self.entries.insert(k, (row as u32, col as u32, value)),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Number of stored (nonzero) entries.
    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[(u32, u32, i64)] {
        &self.entries
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut entries: Vec<(u32, u32, i64)> =
            self.entries.iter().map(|&(r, c, v)| (c, r, v)).collect();
        entries.sort_unstable_by_key(|&(r, c, _)| (r, c));
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    /// Exact rank over the given field.
    pub fn rank(&self, field: FieldConfig) -> usize {
        if self.rows == 0 || self.cols == 0 || self.entries.is_empty() {
            return 0;
        }
        match field {
            FieldConfig::Rationals => {
                if self.rows.max(self.cols) < DENSE_LIMIT {
                    self.rank_dense_bareiss()
                } else {
                    self.rank_sparse_rational()
                }
            }
            FieldConfig::PrimeField(p) => {
                if self.rows.max(self.cols) < DENSE_LIMIT {
                    self.rank_dense_modp(p as u64)
                } else {
                    self.rank_sparse_modp(p as u64)
                }
            }
        }
    }

    /// Fraction-free elimination on big integers; every intermediate value
    /// is a minor of the original matrix, so no rational numbers appear.
    fn rank_dense_bareiss(&self) -> usize {
        let mut a: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for &(r, c, v) in &self.entries {
            a[r as usize][c as usize] = BigInt::from(v);
        }
        let mut prev = BigInt::one();
        let mut rank = 0usize;
        let mut r0 = 0usize;
        for c in 0..self.cols {
            let Some(pivot_row) = (r0..self.rows).find(|&r| !a[r][c].is_zero()) else {
                continue;
            };
            a.swap(r0, pivot_row);
            for r in r0 + 1..self.rows {
                for cc in c + 1..self.cols {
                    let num = &a[r0][c] * &a[r][cc] - &a[r][c] * &a[r0][cc];
                    debug_assert!((&num % &prev).is_zero(), "Bareiss division must be exact");
                    a[r][cc] = num / &prev;
                }
                a[r][c] = BigInt::zero();
            }
            prev = a[r0][c].clone();
            rank += 1;
            r0 += 1;
            if r0 == self.rows {
                break;
            }
        }
        rank
    }

    fn rank_dense_modp(&self, p: u64) -> usize {
        let mut a: Vec<Vec<u64>> = vec![vec![0; self.cols]; self.rows];
        for &(r, c, v) in &self.entries {
            a[r as usize][c as usize] = modp(v, p);
        }
        let mut rank = 0usize;
        let mut r0 = 0usize;
        for c in 0..self.cols {
            let Some(pivot_row) = (r0..self.rows).find(|&r| a[r][c] != 0) else {
                continue;
            };
            a.swap(r0, pivot_row);
            let inv = mod_inverse(a[r0][c], p);
            for r in r0 + 1..self.rows {
                if a[r][c] == 0 {
                    continue;
                }
                let factor = a[r][c] * inv % p;
                for cc in c..self.cols {
                    a[r][cc] = (a[r][cc] + (p - factor) * a[r0][cc]) % p;
                }
            }
            rank += 1;
            r0 += 1;
            if r0 == self.rows {
                break;
            }
        }
        rank
    }

    fn sparse_rows_rational(&self) -> Vec<Vec<(u32, BigRational)>> {
        let mut rows: Vec<Vec<(u32, BigRational)>> = vec![Vec::new(); self.rows];
        for &(r, c, v) in &self.entries {
            rows[r as usize].push((c, BigRational::from(BigInt::from(v))));
        }
        rows
    }

    fn rank_sparse_rational(&self) -> usize {
        sparse_rank(self.sparse_rows_rational(), &RationalOps)
    }

    fn rank_sparse_modp(&self, p: u64) -> usize {
        let mut rows: Vec<Vec<(u32, u64)>> = vec![Vec::new(); self.rows];
        for &(r, c, v) in &self.entries {
            let v = modp(v, p);
            if v != 0 {
                rows[r as usize].push((c, v));
            }
        }
        sparse_rank(rows, &PrimeOps { p })
    }
}

fn modp(v: i64, p: u64) -> u64 {
    v.rem_euclid(p as i64) as u64
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p for prime p.
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Minimal field-operation vocabulary shared by the sparse elimination and
/// the incremental span.
trait FieldOps {
    type Elem: Clone + PartialEq;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// `a - factor * b`
    fn fma_sub(&self, a: &Self::Elem, factor: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `a / b` for `b != 0`
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn zero(&self) -> Self::Elem;
}

struct RationalOps;

impl FieldOps for RationalOps {
    type Elem = BigRational;
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn fma_sub(&self, a: &BigRational, factor: &BigRational, b: &BigRational) -> BigRational {
        a - factor * b
    }
    fn div(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a / b
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
}

struct PrimeOps {
    p: u64,
}

impl FieldOps for PrimeOps {
    type Elem = u64;
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn fma_sub(&self, a: &u64, factor: &u64, b: &u64) -> u64 {
        (a + (self.p - factor * b % self.p)) % self.p
    }
    fn div(&self, a: &u64, b: &u64) -> u64 {
        a * mod_inverse(*b, self.p) % self.p
    }
    fn zero(&self) -> u64 {
        0
    }
}

/// Sparse Gaussian elimination: repeatedly pivot on the shortest remaining
/// row to limit fill-in.  Rows are sorted column lists.
fn sparse_rank<F: FieldOps>(mut rows: Vec<Vec<(u32, F::Elem)>>, ops: &F) -> usize {
    let mut rank = 0usize;
    let mut active: Vec<usize> = (0..rows.len()).filter(|&r| !rows[r].is_empty()).collect();
    while !active.is_empty() {
        // Shortest active row becomes the pivot row.
        let (pos, &prow) = active
            .iter()
            .enumerate()
            .min_by_key(|&(_, &r)| rows[r].len())
            .unwrap();
        active.swap_remove(pos);
        rank += 1;
        let pivot_row = std::mem::take(&mut rows[prow]);
        let (pcol, pval) = (pivot_row[0].0, pivot_row[0].1.clone());
        let mut next_active = Vec::with_capacity(active.len());
        for &r in &active {
            let has = rows[r].iter().any(|&(c, _)| c == pcol);
            if has {
                let rval = rows[r]
                    .iter()
                    .find(|&&(c, _)| c == pcol)
                    .unwrap()
                    .1
                    .clone();
                let factor = ops.div(&rval, &pval);
                rows[r] = row_sub(ops, &rows[r], &factor, &pivot_row);
            }
            if !rows[r].is_empty() {
                next_active.push(r);
            }
        }
        active = next_active;
    }
    rank
}

/// `a - factor * b` on sorted sparse rows.
fn row_sub<F: FieldOps>(
    ops: &F,
    a: &[(u32, F::Elem)],
    factor: &F::Elem,
    b: &[(u32, F::Elem)],
) -> Vec<(u32, F::Elem)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            let v = ops.fma_sub(&ops.zero(), factor, &b[j].1);
            if !ops.is_zero(&v) {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = ops.fma_sub(&a[i].1, factor, &b[j].1);
            if !ops.is_zero(&v) {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incremental span of dense vectors over a fixed field.
///
/// Vectors are reduced against the rows seen so far; [`IncrementalSpan::add_vector`]
/// reports whether the vector enlarged the span.  Insertion order is under
/// caller control, which matters for callers that scan monomials in a fixed
/// term order.
#[derive(Debug, Clone)]
pub struct IncrementalSpan {
    dim: usize,
    rows: SpanRows,
}

#[derive(Debug, Clone)]
enum SpanRows {
    /// Rows with pivot column first entry normalized to 1.
    Rational(Vec<(usize, Vec<BigRational>)>),
    Prime { p: u64, rows: Vec<(usize, Vec<u64>)> },
}

impl IncrementalSpan {
    pub fn new(field: FieldConfig, dim: usize) -> Self {
        let rows = match field {
            FieldConfig::Rationals => SpanRows::Rational(Vec::new()),
            FieldConfig::PrimeField(p) => SpanRows::Prime {
                p: p as u64,
                rows: Vec::new(),
            },
        };
        IncrementalSpan { dim, rows }
    }

    /// Ambient dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Current rank of the span.
    pub fn rank(&self) -> usize {
        match &self.rows {
            SpanRows::Rational(rows) => rows.len(),
            SpanRows::Prime { rows, .. } => rows.len(),
        }
    }

    /// Reduces `v` against the span; returns `Ok(true)` when `v` was
    /// independent (and is now part of the span), `Ok(false)` when it was
    /// already in the span.
    pub fn add_vector(&mut self, v: &[i64]) -> Result<bool, LinalgError> {
        if v.len() != self.dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.dim,
                got: v.len(),
            });
        }
        match &mut self.rows {
            SpanRows::Rational(rows) => {
                let vec: Vec<BigRational> = v
                    .iter()
                    .map(|&x| BigRational::from(BigInt::from(x)))
                    .collect();
                Ok(span_add(rows, vec, &RationalOps))
            }
            SpanRows::Prime { p, rows } => {
                let p = *p;
                let vec: Vec<u64> = v.iter().map(|&x| modp(x, p)).collect();
                Ok(span_add(rows, vec, &PrimeOps { p }))
            }
        }
    }
}

fn span_add<F: FieldOps>(
    rows: &mut Vec<(usize, Vec<F::Elem>)>,
    mut v: Vec<F::Elem>,
    ops: &F,
) -> bool {
    for (pivot, row) in rows.iter() {
        if !ops.is_zero(&v[*pivot]) {
            let factor = v[*pivot].clone();
            for (x, r) in v.iter_mut().zip(row.iter()) {
                *x = ops.fma_sub(x, &factor, r);
            }
        }
    }
    let Some(pivot) = v.iter().position(|x| !ops.is_zero(x)) else {
        return false;
    };
    let lead = v[pivot].clone();
    for x in v.iter_mut() {
        *x = ops.div(x, &lead);
    }
    rows.push((pivot, v));
    rows.sort_by_key(|&(p, _)| p);
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mat(rows: usize, cols: usize, entries: &[(u32, u32, i64)]) -> SparseMatrix {
        SparseMatrix::from_triplets(rows, cols, entries).unwrap()
    }

    #[test]
    fn field_display_and_validation() {
        assert_eq!(FieldConfig::Rationals.to_string(), "rationals");
        assert_eq!(FieldConfig::prime_field(32003).unwrap().to_string(), "gf:32003");
        assert_eq!(
            FieldConfig::prime_field(32004),
            Err(LinalgError::NotPrime(32004))
        );
        assert_eq!(FieldConfig::prime_field(1), Err(LinalgError::NotPrime(1)));
    }

    #[test]
    fn characteristic_dependent_rank() {
        let m = mat(2, 2, &[(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, -1)]);
        assert_eq!(m.rank(FieldConfig::Rationals), 2);
        assert_eq!(m.rank(FieldConfig::PrimeField(2)), 1);
        assert_eq!(m.rank(FieldConfig::PrimeField(32003)), 2);
    }

    #[test]
    fn triplets_merge_and_bounds_check() {
        let m = mat(2, 2, &[(0, 0, 1), (0, 0, -1), (1, 1, 3)]);
        assert_eq!(m.nnz(), 1);
        assert_eq!(
            SparseMatrix::from_triplets(2, 2, &[(2, 0, 1)]),
            Err(LinalgError::EntryOutOfBounds {
                row: 2,
                col: 0,
                rows: 2,
                cols: 2
            })
        );
    }

    #[test]
    fn zero_and_identity_ranks() {
        assert_eq!(SparseMatrix::new(5, 7).rank(FieldConfig::Rationals), 0);
        let id: Vec<(u32, u32, i64)> = (0..6).map(|k| (k, k, 1)).collect();
        assert_eq!(mat(6, 6, &id).rank(FieldConfig::Rationals), 6);
        assert_eq!(mat(6, 6, &id).rank(FieldConfig::PrimeField(5)), 6);
    }

    #[test]
    fn sparse_and_dense_paths_agree() {
        // 70x70 forces the sparse path; embed a known-rank block.
        let mut entries = Vec::new();
        for k in 0..40u32 {
            entries.push((k, k, 1));
            entries.push((k, (k + 1) % 40, 1));
        }
        // Rank of the 40x40 circulant (I + shift): full rank 40 iff the
        // number of columns is odd over Q; for size 40 the all-alternating
        // vector is in the kernel, so rank 39.
        let big = mat(70, 70, &entries);
        let small = mat(41, 41, &entries);
        assert_eq!(big.rank(FieldConfig::Rationals), 39);
        assert_eq!(small.rank(FieldConfig::Rationals), 39);
        assert_eq!(big.rank(FieldConfig::PrimeField(32003)), 39);
        assert_eq!(small.rank(FieldConfig::PrimeField(32003)), 39);
    }

    #[test]
    fn incremental_span_basics() {
        let mut span = IncrementalSpan::new(FieldConfig::Rationals, 3);
        assert!(span.add_vector(&[1, 2, 3]).unwrap());
        assert!(!span.add_vector(&[2, 4, 6]).unwrap());
        assert!(span.add_vector(&[0, 1, 1]).unwrap());
        assert!(!span.add_vector(&[1, 3, 4]).unwrap());
        assert!(span.add_vector(&[0, 0, 1]).unwrap());
        assert_eq!(span.rank(), 3);
        assert!(!span.add_vector(&[7, -5, 11]).unwrap());
        assert_eq!(
            span.add_vector(&[1, 2]),
            Err(LinalgError::DimensionMismatch {
                expected: 3,
                got: 2
            })
        );
    }

    #[test]
    fn incremental_span_gf2() {
        let mut span = IncrementalSpan::new(FieldConfig::PrimeField(2), 2);
        assert!(span.add_vector(&[1, 1]).unwrap());
        assert!(!span.add_vector(&[1, -1]).unwrap(), "1 = -1 mod 2");
        assert_eq!(span.rank(), 1);
    }

    proptest! {
        #[test]
        fn rank_equals_transpose_rank(
            entries in proptest::collection::vec(
                (0u32..8, 0u32..8, -2i64..=2), 0..=24),
        ) {
            let m = mat(8, 8, &entries);
            let t = m.transpose();
            for field in [FieldConfig::Rationals, FieldConfig::PrimeField(3), FieldConfig::PrimeField(32003)] {
                prop_assert_eq!(m.rank(field), t.rank(field));
            }
        }

        #[test]
        fn rational_rank_dominates_prime_rank(
            entries in proptest::collection::vec(
                (0u32..7, 0u32..9, -3i64..=3), 0..=30),
        ) {
            let m = mat(7, 9, &entries);
            let rq = m.rank(FieldConfig::Rationals);
            for p in [2u32, 3, 5, 32003] {
                prop_assert!(m.rank(FieldConfig::PrimeField(p)) <= rq);
            }
        }

        #[test]
        fn span_accepts_exactly_rank_vectors(
            entries in proptest::collection::vec(
                (0u32..6, 0u32..6, -2i64..=2), 0..=20),
            perm in Just((0..6usize).collect::<Vec<_>>()).prop_shuffle(),
        ) {
            let m = mat(6, 6, &entries);
            // Dense rows of m in a permuted order.
            let mut dense = vec![[0i64; 6]; 6];
            for &(r, c, v) in m.entries() {
                dense[r as usize][c as usize] = v;
            }
            for field in [FieldConfig::Rationals, FieldConfig::PrimeField(5)] {
                let mut span = IncrementalSpan::new(field, 6);
                let mut accepted = 0;
                for &r in &perm {
                    if span.add_vector(&dense[r]).unwrap() {
                        accepted += 1;
                    }
                }
                prop_assert_eq!(accepted, m.rank(field));
                prop_assert_eq!(span.rank(), m.rank(field));
            }
        }
    }
}
