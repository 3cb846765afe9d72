//! Multi-indices, index matrices, sign enumeration and the sign-block
//! bookkeeping shared by all polarization formulas.
//!
//! Indices are 0-based throughout the Rust API: row `i`, column `j` and sign
//! position `k` all start at zero.

use std::fmt;
use std::ops::Range;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Default ceiling on the number of sign vectors a single sum may enumerate.
pub const DEFAULT_MAX_SIGNS: u64 = 1 << 24;

/// Largest arity for which permutation based checks are attempted.
pub const MAX_PERMUTATION_ARITY: usize = 8;

static MAX_SIGNS: AtomicU64 = AtomicU64::new(DEFAULT_MAX_SIGNS);

/// Current ceiling on `2^k` for sign enumerations.
pub fn max_signs() -> u64 {
    MAX_SIGNS.load(Ordering::Relaxed)
}

/// Sets the process-wide ceiling on `2^k`. Values are clamped to `[2, 2^40]`.
pub fn set_max_signs(limit: u64) {
    MAX_SIGNS.store(limit.clamp(2, 1 << 40), Ordering::Relaxed);
}

/// Fails unless `2^k` sign vectors fit under the current guard.
pub fn check_sign_budget(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::Bounds("sign vectors need length at least 1".into()));
    }
    if k >= 63 || (1u64 << k) > max_signs() {
        return Err(Error::Bounds(format!(
            "2^{k} sign vectors exceed the limit of {}",
            max_signs()
        )));
    }
    Ok(())
}

/// A tuple of nonnegative integers `(a_1, ..., a_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(pub Vec<usize>);

impl MultiIndex {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the entries.
    pub fn norm(&self) -> usize {
        self.0.iter().sum()
    }

    /// Product of the factorials of the entries.
    pub fn factorial(&self) -> Scalar {
        self.0
            .iter()
            .fold(Scalar::from_integer(1.into()), |acc, &a| acc * crate::scalar::factorial(a))
    }

    /// Multiplicity profile of an index tuple over `0..dim`.
    pub fn profile(indices: &[usize], dim: usize) -> MultiIndex {
        let mut counts = vec![0; dim];
        for &j in indices {
            counts[j] += 1;
        }
        MultiIndex(counts)
    }

    /// The sorted index tuple whose profile is `self`.
    pub fn to_sorted_indices(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(j, &a)| std::iter::repeat_n(j, a))
            .collect()
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All `a` in `N_0^parts` with `|a| = total`, in ascending lexicographic order.
pub fn compositions(total: usize, parts: usize) -> Vec<MultiIndex> {
    fn fill(rest: usize, slot: usize, current: &mut Vec<usize>, out: &mut Vec<MultiIndex>) {
        let parts = current.len();
        if slot + 1 == parts {
            current[slot] = rest;
            out.push(MultiIndex(current.clone()));
            return;
        }
        // ascending lex: smallest leading entry first
        for a in 0..=rest {
            current[slot] = a;
            fill(rest - a, slot + 1, current, out);
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(MultiIndex(Vec::new()));
        }
        return out;
    }
    let mut current = vec![0; parts];
    fill(total, 0, &mut current, &mut out);
    out
}

/// Nondecreasing index tuples of length `len` over `0..dim`, lexicographic.
pub fn sorted_tuples(dim: usize, len: usize) -> Vec<Vec<usize>> {
    fn fill(start: usize, dim: usize, current: &mut Vec<usize>, len: usize, out: &mut Vec<Vec<usize>>) {
        if current.len() == len {
            out.push(current.clone());
            return;
        }
        for j in start..dim {
            current.push(j);
            fill(j, dim, current, len, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    fill(0, dim, &mut Vec::with_capacity(len), len, &mut out);
    out
}

/// All index tuples in `{0..dim}^len`, lexicographic.
pub fn all_tuples(dim: usize, len: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = dim.checked_pow(len as u32).unwrap_or(usize::MAX);
    (0..if dim == 0 && len > 0 { 0 } else { total }).map(move |mut code| {
        let mut tuple = vec![0; len];
        for slot in (0..len).rev() {
            tuple[slot] = code % dim;
            code /= dim;
        }
        tuple
    })
}

/// Distinct permutations of `items`, starting from its sorted arrangement.
pub fn distinct_permutations<T: Ord + Clone>(items: &[T]) -> Vec<Vec<T>> {
    let mut current = items.to_vec();
    current.sort();
    let mut out = vec![current.clone()];
    // next lexicographic permutation
    while let Some(i) = (1..current.len()).rev().find(|&i| current[i - 1] < current[i]) {
        let pivot = i - 1;
        let j = (i..current.len()).rev().find(|&j| current[j] > current[pivot]).unwrap();
        current.swap(pivot, j);
        current[i..].reverse();
        out.push(current.clone());
    }
    out
}

/// An `rows x cols` matrix of nonnegative integers, stored row-major.
///
/// Ordering is lexicographic on the flattened entries among matrices of the
/// same shape, which is the canonical key order of multipolynomial terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndexMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<usize>,
}

impl MultiIndexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        MultiIndexMatrix {
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn from_rows(rows: &[MultiIndex]) -> Result<Self> {
        let cols = rows.first().map_or(0, MultiIndex::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("matrix rows have different lengths".into()));
        }
        Ok(MultiIndexMatrix {
            rows: rows.len(),
            cols,
            entries: rows.iter().flat_map(|r| r.0.iter().copied()).collect(),
        })
    }

    /// Convenience constructor from nested slices; panics on ragged input.
    pub fn from_nested(rows: &[&[usize]]) -> Self {
        let rows: Vec<MultiIndex> = rows.iter().map(|r| MultiIndex(r.to_vec())).collect();
        Self::from_rows(&rows).expect("ragged matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: usize) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[usize] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_index(&self, i: usize) -> MultiIndex {
        MultiIndex(self.row(i).to_vec())
    }

    /// `|a_i|`, the sum of row `i`.
    pub fn row_sum(&self, i: usize) -> usize {
        self.row(i).iter().sum()
    }

    /// `|a_{.j}|`, the sum of column `j`.
    pub fn col_sum(&self, j: usize) -> usize {
        (0..self.rows).map(|i| self.get(i, j)).sum()
    }

    /// `a_1! ... a_m!` over all rows.
    pub fn factorial(&self) -> Scalar {
        (0..self.rows).fold(Scalar::from_integer(1.into()), |acc, i| {
            acc * self.row_index(i).factorial()
        })
    }

    /// The matrix with its rows reordered: row `i` of the result is row
    /// `order[i]` of `self`.
    pub fn permute_rows(&self, order: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for &i in order {
            entries.extend_from_slice(self.row(i));
        }
        MultiIndexMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }
}

impl fmt::Display for MultiIndexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(" | ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            f.write_str(&row.join(" "))?;
        }
        Ok(())
    }
}

/// A vector of `+1`/`-1` entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignVector(Vec<i8>);

impl SignVector {
    pub fn all_plus(len: usize) -> Self {
        SignVector(vec![1; len])
    }

    /// Panics unless every entry is `1` or `-1`.
    pub fn from_signs(signs: &[i8]) -> Self {
        assert!(signs.iter().all(|&s| s == 1 || s == -1), "signs must be +1 or -1");
        SignVector(signs.to_vec())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn signs(&self) -> &[i8] {
        &self.0
    }

    pub fn get(&self, k: usize) -> i8 {
        self.0[k]
    }

    pub fn flip(&mut self, k: usize) {
        self.0[k] = -self.0[k];
    }

    pub fn product(&self) -> i8 {
        self.0.iter().product()
    }

    /// Sum of the signs in `range`.
    pub fn partial_sum(&self, range: Range<usize>) -> i64 {
        self.0[range].iter().map(|&s| i64::from(s)).sum()
    }
}

/// Reflected Gray-code walk over `{+1,-1}^k`, starting at all `+1`.
///
/// Consecutive vectors differ in exactly one entry; the position that
/// changes before step `t` (1-based) is the number of trailing zeros of `t`.
#[derive(Clone, Debug)]
pub struct SignVectors {
    current: SignVector,
    step: u64,
    total: u64,
}

impl Iterator for SignVectors {
    type Item = SignVector;

    fn next(&mut self) -> Option<SignVector> {
        if self.step == self.total {
            return None;
        }
        if self.step > 0 {
            self.current.flip(self.step.trailing_zeros() as usize);
        }
        self.step += 1;
        Some(self.current.clone())
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.step) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for SignVectors {}

/// Enumerates all `2^k` sign vectors in Gray-code order.
pub fn enumerate_sign_vectors(k: usize) -> Result<SignVectors> {
    check_sign_budget(k)?;
    Ok(SignVectors {
        current: SignVector::all_plus(k),
        step: 0,
        total: 1u64 << k,
    })
}

/// `sum over d in {+-1}^n of d_1...d_n (d_1 + ... + d_n)^p`, by enumeration.
///
/// Vanishes for `p < n` and equals `n! 2^n` at `p = n`.
pub fn signed_power_sum(n: usize, p: usize) -> Result<Scalar> {
    let mut total = BigInt::zero();
    for signs in enumerate_sign_vectors(n)? {
        let base = BigInt::from(signs.partial_sum(0..n));
        let term = num_traits::pow(base, p);
        if signs.product() > 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(Scalar::from_integer(total))
}

/// Every `rows.len() x cols` matrix whose row `i` sums to `row_sums[i]`, in
/// ascending lexicographic order of the flattened entries.
pub fn enumerate_matrices_with_row_sums(row_sums: &[usize], cols: usize) -> Vec<MultiIndexMatrix> {
    let per_row: Vec<Vec<MultiIndex>> = row_sums.iter().map(|&n| compositions(n, cols)).collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; row_sums.len()];
    if per_row.iter().any(Vec::is_empty) {
        return out;
    }
    loop {
        let rows: Vec<MultiIndex> = choice
            .iter()
            .zip(&per_row)
            .map(|(&c, options)| options[c].clone())
            .collect();
        out.push(MultiIndexMatrix::from_rows(&rows).expect("uniform row length"));
        // odometer, last row fastest
        let mut slot = choice.len();
        loop {
            if slot == 0 {
                return out;
            }
            slot -= 1;
            choice[slot] += 1;
            if choice[slot] < per_row[slot].len() {
                break;
            }
            choice[slot] = 0;
        }
    }
}

/// Every `m x d` matrix with all row sums equal to `n`, lexicographic.
///
/// There are `C(n+d-1, d-1)^m` of them.
pub fn enumerate_row_sum_matrices(m: usize, d: usize, n: usize) -> Result<Vec<MultiIndexMatrix>> {
    if m == 0 || d == 0 || n == 0 {
        return Err(Error::Bounds("m, d and n must be positive".into()));
    }
    Ok(enumerate_matrices_with_row_sums(&vec![n; m], d))
}

/// The matrix sets of the multipolynomial remainder.
///
/// `full` holds the `m x (m+1)` matrices with a zero column 0, every row sum
/// equal to `n` and every column sum over columns `1..=m` equal to `n`.
/// `diagonal` is the subset whose rows are a permutation of the rows of
/// `n * I` (shifted by the zero column); it has `m!` elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RemainderMatrices {
    pub full: Vec<MultiIndexMatrix>,
    pub diagonal: Vec<MultiIndexMatrix>,
}

impl RemainderMatrices {
    /// Elements of `full` that are not in `diagonal`.
    pub fn off_diagonal(&self) -> impl Iterator<Item = &MultiIndexMatrix> {
        self.full.iter().filter(move |a| !self.diagonal.contains(a))
    }
}

pub fn matrix_sets_m_and_d(m: usize, n: usize) -> Result<RemainderMatrices> {
    if m == 0 || n == 0 {
        return Err(Error::Bounds("m and n must be positive".into()));
    }
    fn fill(
        cell: usize,
        m: usize,
        row_left: &mut [usize],
        col_left: &mut [usize],
        current: &mut MultiIndexMatrix,
        out: &mut Vec<MultiIndexMatrix>,
    ) {
        if cell == m * m {
            out.push(current.clone());
            return;
        }
        let (i, j) = (cell / m, cell % m);
        let last_in_row = j + 1 == m;
        let last_in_col = i + 1 == m;
        let hi = row_left[i].min(col_left[j]);
        for a in 0..=hi {
            if last_in_row && a != row_left[i] {
                continue;
            }
            if last_in_col && a != col_left[j] {
                continue;
            }
            row_left[i] -= a;
            col_left[j] -= a;
            current.set(i, j + 1, a);
            fill(cell + 1, m, row_left, col_left, current, out);
            row_left[i] += a;
            col_left[j] += a;
        }
        current.set(i, j + 1, 0);
    }
    let mut full = Vec::new();
    fill(
        0,
        m,
        &mut vec![n; m],
        &mut vec![n; m],
        &mut MultiIndexMatrix::zeros(m, m + 1),
        &mut full,
    );
    let diagonal = full
        .iter()
        .filter(|a| (1..=m).all(|j| (0..m).any(|i| a.get(i, j) == n)))
        .cloned()
        .collect();
    Ok(RemainderMatrices { full, diagonal })
}

/// Positions of the signs summed into block `(i, j)`, for rows whose sign
/// blocks start at `row_offset`.
///
/// Block `(i, j)` covers `a_{ij}` consecutive signs starting after the blocks
/// of columns `0..j` of the same row.
pub fn block_range(alpha: &MultiIndexMatrix, i: usize, j: usize, row_offset: usize) -> Range<usize> {
    let start = row_offset + alpha.row(i)[..j].iter().sum::<usize>();
    start..start + alpha.get(i, j)
}

/// The partial sign sum `e_{ij}` for an equal-degree matrix whose rows all
/// sum to `n`: row `i` owns sign positions `i*n .. (i+1)*n`.
///
/// Returns zero when `a_{ij} = 0`.
pub fn epsilon_block(
    alpha: &MultiIndexMatrix,
    eps: &SignVector,
    i: usize,
    j: usize,
    n: usize,
) -> Result<Scalar> {
    if i >= alpha.rows() || j >= alpha.cols() {
        return Err(Error::Bounds(format!(
            "block ({i}, {j}) outside a {}x{} matrix",
            alpha.rows(),
            alpha.cols()
        )));
    }
    if alpha.row_sum(i) != n {
        return Err(Error::Arity {
            expected: n,
            found: alpha.row_sum(i),
        });
    }
    if eps.len() < alpha.rows() * n {
        return Err(Error::Bounds(format!(
            "need {} signs, got {}",
            alpha.rows() * n,
            eps.len()
        )));
    }
    let range = block_range(alpha, i, j, i * n);
    Ok(Scalar::from_integer(eps.partial_sum(range).into()))
}

/// Start of each row's sign block for a degree signature.
pub fn row_offsets(degrees: &[usize]) -> Vec<usize> {
    degrees
        .iter()
        .scan(0, |acc, &n| {
            let start = *acc;
            *acc += n;
            Some(start)
        })
        .collect()
}

/// `C(n, k)` as `u128`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, t| acc * (n - t) as u128 / (t + 1) as u128)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use std::collections::HashSet;

    #[test]
    fn sign_vectors_small_cases() {
        let one: Vec<_> = enumerate_sign_vectors(1).unwrap().collect();
        assert_eq!(one, vec![SignVector::from_signs(&[1]), SignVector::from_signs(&[-1])]);

        let three: Vec<_> = enumerate_sign_vectors(3).unwrap().collect();
        assert_eq!(three.len(), 8);
        assert_eq!(three.iter().collect::<HashSet<_>>().len(), 8);

        let two: Vec<_> = enumerate_sign_vectors(2).unwrap().collect();
        for pair in two.windows(2) {
            let diff = (0..2).filter(|&k| pair[0].get(k) != pair[1].get(k)).count();
            assert_eq!(diff, 1);
        }
    }

    #[test]
    fn sign_vectors_guard() {
        assert!(matches!(enumerate_sign_vectors(0), Err(Error::Bounds(_))));
        assert!(matches!(enumerate_sign_vectors(25), Err(Error::Bounds(_))));
        assert!(enumerate_sign_vectors(24).is_ok());
    }

    #[test]
    fn signed_power_sum_examples() {
        assert_eq!(signed_power_sum(2, 1).unwrap(), int(0));
        assert_eq!(signed_power_sum(2, 2).unwrap(), int(8));
        assert_eq!(signed_power_sum(3, 0).unwrap(), int(0));
    }

    #[test]
    fn row_sum_matrix_examples() {
        let single = enumerate_row_sum_matrices(1, 1, 3).unwrap();
        assert_eq!(single, vec![MultiIndexMatrix::from_nested(&[&[3]])]);

        let four = enumerate_row_sum_matrices(2, 2, 1).unwrap();
        assert_eq!(
            four,
            vec![
                MultiIndexMatrix::from_nested(&[&[0, 1], &[0, 1]]),
                MultiIndexMatrix::from_nested(&[&[0, 1], &[1, 0]]),
                MultiIndexMatrix::from_nested(&[&[1, 0], &[0, 1]]),
                MultiIndexMatrix::from_nested(&[&[1, 0], &[1, 0]]),
            ]
        );
        assert_eq!(enumerate_row_sum_matrices(2, 2, 2).unwrap().len(), 9);
        assert!(enumerate_row_sum_matrices(0, 2, 2).is_err());
    }

    #[test]
    fn remainder_matrix_examples() {
        let sets = matrix_sets_m_and_d(1, 5).unwrap();
        assert_eq!(sets.full, vec![MultiIndexMatrix::from_nested(&[&[0, 5]])]);
        assert_eq!(sets.diagonal, sets.full);

        let sets = matrix_sets_m_and_d(2, 1).unwrap();
        assert_eq!(sets.full.len(), 2);
        assert_eq!(sets.full, sets.diagonal);

        let sets = matrix_sets_m_and_d(2, 2).unwrap();
        assert_eq!(sets.full.len(), 3);
        let rest: Vec<_> = sets.off_diagonal().cloned().collect();
        assert_eq!(rest, vec![MultiIndexMatrix::from_nested(&[&[0, 1, 1], &[0, 1, 1]])]);
    }

    #[test]
    fn epsilon_block_examples() {
        let alpha = MultiIndexMatrix::from_nested(&[&[1, 1], &[1, 1]]);
        let eps = SignVector::from_signs(&[1, -1, -1, 1]);
        let expect = [[1, -1], [-1, 1]];
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(epsilon_block(&alpha, &eps, i, j, 2).unwrap(), int(expect[i][j]));
            }
        }

        let alpha = MultiIndexMatrix::from_nested(&[&[2, 0]]);
        let plus = SignVector::all_plus(2);
        assert_eq!(epsilon_block(&alpha, &plus, 0, 0, 2).unwrap(), int(2));
        assert_eq!(epsilon_block(&alpha, &plus, 0, 1, 2).unwrap(), int(0));

        assert!(matches!(epsilon_block(&alpha, &plus, 1, 0, 2), Err(Error::Bounds(_))));
        assert!(matches!(epsilon_block(&alpha, &plus, 0, 0, 3), Err(Error::Arity { .. })));
    }

    #[test]
    fn compositions_are_lexicographic() {
        let c = compositions(2, 2);
        assert_eq!(
            c,
            vec![MultiIndex(vec![0, 2]), MultiIndex(vec![1, 1]), MultiIndex(vec![2, 0])]
        );
        assert_eq!(compositions(0, 0), vec![MultiIndex(vec![])]);
    }

    #[test]
    fn distinct_permutations_of_multiset() {
        let p = distinct_permutations(&[1, 0, 1]);
        assert_eq!(p, vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
    }

    #[test]
    fn offsets_follow_degrees() {
        assert_eq!(row_offsets(&[2, 1, 3]), vec![0, 2, 3]);
    }
}
