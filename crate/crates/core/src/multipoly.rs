//! `(n_1, ..., n_m)`-homogeneous polynomials `E^m -> F`.
//!
//! A [`Multipolynomial`] is stored in monomial form
//!
//! ```text
//! P(x_1, ..., x_m) = sum_a c_a  prod_i prod_j x_{i,j}^{a_ij}
//! ```
//!
//! where each key `a` is an `m x d` [`MultiIndexMatrix`] whose row `i` sums
//! to `n_i`. Operations that only make sense for equal degrees
//! `(n, ..., n)` (remainder, multipolarization, the entire polarization sum,
//! the `Psi` embedding) reject mixed signatures.
//!
//! Sign blocks follow the row offsets of the signature: slot `i` owns the
//! signs `n_1 + ... + n_{i-1} .. n_1 + ... + n_i`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::combinatorics::{
    all_tuples, block_range, compositions, distinct_permutations, enumerate_row_sum_matrices,
    enumerate_sign_vectors, matrix_sets_m_and_d, row_offsets, sorted_tuples, MultiIndex,
    MultiIndexMatrix, SignVector, MAX_PERMUTATION_ARITY,
};
use crate::error::{Error, Result};
use crate::kernel::signed_sum;
use crate::multilinear::{check_point, check_points, power_table, HomogeneousPolynomial, MultilinearMap};
use crate::scalar::{factorial, int, pow2, Scalar, Vector};

/// Ceiling on dense grids and coefficient tables (`d^M`, `(n+1)^{md}`).
pub const MAX_TABLE_ENTRIES: usize = 1 << 20;

/// Per-slot degrees `(n_1, ..., n_m)`, all positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DegreeSignature(Vec<usize>);

impl DegreeSignature {
    pub fn new(degrees: Vec<usize>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::Contract("a signature needs at least one slot".into()));
        }
        if degrees.contains(&0) {
            return Err(Error::Contract("slot degrees must be positive".into()));
        }
        Ok(DegreeSignature(degrees))
    }

    /// `(n, ..., n)` with `m` slots.
    pub fn equal(m: usize, n: usize) -> Result<Self> {
        Self::new(vec![n; m])
    }

    pub fn degrees(&self) -> &[usize] {
        &self.0
    }

    /// Number of slots `m`.
    pub fn slots(&self) -> usize {
        self.0.len()
    }

    /// `M = n_1 + ... + n_m`.
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn max_degree(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn is_equal(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }

    /// `n` for an equal signature.
    pub fn common_degree(&self) -> Option<usize> {
        self.is_equal().then(|| self.0[0])
    }

    /// Slot owning each of the `M` positions `0..M`.
    pub fn slot_of_position(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &n)| std::iter::repeat_n(i, n))
            .collect()
    }
}

impl fmt::Display for DegreeSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Outcome of the `Psi` image test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiWitness {
    pub member: bool,
    /// Symmetric `mn`-linear map with `psi(witness) = P`, when a member.
    pub witness: Option<MultilinearMap>,
    /// A point where the entire polarization formula fails, otherwise.
    pub defect: Option<PolarizationDefect>,
}

/// Both sides of the entire polarization formula at a point where they differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarizationDefect {
    pub x0: Vector,
    pub points: Vec<Vector>,
    /// `P(x_1, ..., x_m)`.
    pub lhs: Vector,
    /// The sign sum divided by `(mn)! 2^{mn}`.
    pub rhs: Vector,
}

/// Coefficients `c_{i_1..i_M}` of the basis expansion
/// `P(x_1..x_m) = sum c_{i_1..i_M} prod_t xi_{i_t}(x_{slot(t)})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisCoefficients {
    pub signature: DegreeSignature,
    pub dim: usize,
    pub codim: usize,
    pub coeffs: BTreeMap<Vec<usize>, Vector>,
}

impl BasisCoefficients {
    /// Evaluates the expansion at `m` points.
    pub fn eval(&self, points: &[Vector]) -> Result<Vector> {
        check_points(points, self.signature.slots(), self.dim)?;
        let slots = self.signature.slot_of_position();
        let mut out = Vector::zeros(self.codim);
        for (key, value) in &self.coeffs {
            let mut factor = Scalar::one();
            for (&slot, &i) in slots.iter().zip(key) {
                factor *= &points[slot][i];
                if factor.is_zero() {
                    break;
                }
            }
            out.add_scaled(&factor, value);
        }
        Ok(out)
    }
}

/// An `(n_1, ..., n_m)`-homogeneous polynomial `(Q^d)^m -> Q^{d_F}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multipolynomial {
    signature: DegreeSignature,
    dim: usize,
    codim: usize,
    terms: BTreeMap<MultiIndexMatrix, Vector>,
}

impl Multipolynomial {
    pub fn zero(signature: DegreeSignature, dim: usize, codim: usize) -> Self {
        Multipolynomial {
            signature,
            dim,
            codim,
            terms: BTreeMap::new(),
        }
    }

    pub fn signature(&self) -> &DegreeSignature {
        &self.signature
    }

    pub fn slots(&self) -> usize {
        self.signature.slots()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    pub fn terms(&self) -> &BTreeMap<MultiIndexMatrix, Vector> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, alpha: &MultiIndexMatrix) -> Vector {
        self.terms
            .get(alpha)
            .cloned()
            .unwrap_or_else(|| Vector::zeros(self.codim))
    }

    fn check_key(&self, alpha: &MultiIndexMatrix) -> Result<()> {
        if alpha.rows() != self.slots() || alpha.cols() != self.dim {
            return Err(Error::Shape(format!(
                "exponent matrix is {}x{}, expected {}x{}",
                alpha.rows(),
                alpha.cols(),
                self.slots(),
                self.dim
            )));
        }
        for (i, &n) in self.signature.degrees().iter().enumerate() {
            if alpha.row_sum(i) != n {
                return Err(Error::Arity {
                    expected: n,
                    found: alpha.row_sum(i),
                });
            }
        }
        Ok(())
    }

    /// Replaces the coefficient of the monomial with exponents `alpha`.
    pub fn set(&mut self, alpha: MultiIndexMatrix, value: Vector) -> Result<()> {
        self.check_key(&alpha)?;
        if value.dim() != self.codim {
            return Err(Error::Shape(format!(
                "value has dimension {}, expected {}",
                value.dim(),
                self.codim
            )));
        }
        if value.is_zero() {
            self.terms.remove(&alpha);
        } else {
            self.terms.insert(alpha, value);
        }
        Ok(())
    }

    pub fn add_to(&mut self, alpha: MultiIndexMatrix, value: &Vector) -> Result<()> {
        let current = self.coeff(&alpha);
        self.set(alpha, current.sum(value))
    }

    /// `self + factor * other`, termwise.
    pub fn add_scaled(&self, factor: &Scalar, other: &Multipolynomial) -> Result<Self> {
        if self.signature != other.signature || self.dim != other.dim || self.codim != other.codim {
            return Err(Error::Shape("multipolynomials live on different spaces".into()));
        }
        let mut out = self.clone();
        for (alpha, value) in &other.terms {
            out.add_to(alpha.clone(), &value.scaled(factor))?;
        }
        Ok(out)
    }

    /// An `m`-linear map viewed as a `(1, ..., 1)`-homogeneous polynomial.
    pub fn from_multilinear(map: &MultilinearMap) -> Result<Self> {
        let signature = DegreeSignature::equal(map.arity(), 1)?;
        let mut out = Multipolynomial::zero(signature, map.dim(), map.codim());
        for (key, value) in map.coeffs() {
            let rows: Vec<MultiIndex> = key
                .iter()
                .map(|&j| MultiIndex::profile(&[j], map.dim()))
                .collect();
            out.set(MultiIndexMatrix::from_rows(&rows)?, value.clone())?;
        }
        Ok(out)
    }

    /// The `(1, ..., 1)` case as an `m`-linear map.
    pub fn to_multilinear(&self) -> Result<MultilinearMap> {
        if self.signature.common_degree() != Some(1) {
            return Err(Error::Contract(format!(
                "expected signature (1, ..., 1), found ({})",
                self.signature
            )));
        }
        let mut out = MultilinearMap::zero(self.slots(), self.dim, self.codim);
        for (alpha, value) in &self.terms {
            let key = (0..self.slots())
                .map(|i| alpha.row(i).iter().position(|&a| a == 1).expect("row sums to one"))
                .collect();
            out.set(key, value.clone())?;
        }
        Ok(out)
    }

    /// A homogeneous polynomial viewed as a one-slot multipolynomial.
    pub fn from_homogeneous(poly: &HomogeneousPolynomial) -> Result<Self> {
        let signature = DegreeSignature::new(vec![poly.degree()])?;
        let mut out = Multipolynomial::zero(signature, poly.dim(), poly.codim());
        for (alpha, value) in poly.coeffs() {
            out.set(MultiIndexMatrix::from_rows(std::slice::from_ref(alpha))?, value.clone())?;
        }
        Ok(out)
    }

    /// The one-slot case as a homogeneous polynomial.
    pub fn to_homogeneous(&self) -> Result<HomogeneousPolynomial> {
        if self.slots() != 1 {
            return Err(Error::Contract(format!(
                "expected a single slot, found {}",
                self.slots()
            )));
        }
        let mut out = HomogeneousPolynomial::zero(self.signature.total(), self.dim, self.codim);
        for (alpha, value) in &self.terms {
            out.set(alpha.row_index(0), value.clone())?;
        }
        Ok(out)
    }

    fn power_tables(&self, points: &[Vector]) -> Vec<Vec<Vec<Scalar>>> {
        points
            .iter()
            .zip(self.signature.degrees())
            .map(|(p, &n)| power_table(p, n))
            .collect()
    }

    fn eval_unchecked(&self, points: &[Vector]) -> Vector {
        let powers = self.power_tables(points);
        let mut out = Vector::zeros(self.codim);
        for (alpha, value) in &self.terms {
            let mut factor = Scalar::one();
            'rows: for (i, table) in powers.iter().enumerate() {
                for (j, &a) in alpha.row(i).iter().enumerate() {
                    if a > 0 {
                        factor *= &table[j][a];
                        if factor.is_zero() {
                            break 'rows;
                        }
                    }
                }
            }
            out.add_scaled(&factor, value);
        }
        out
    }

    /// `sum_a c_a prod_{i,j} x_{i,j}^{a_ij}`.
    pub fn eval(&self, points: &[Vector]) -> Result<Vector> {
        check_points(points, self.slots(), self.dim)?;
        Ok(self.eval_unchecked(points))
    }

    /// The `n_j`-homogeneous polynomial obtained by fixing every slot except
    /// `slot`; `fixed` lists the other `m - 1` points in slot order.
    pub fn slot_polynomial(&self, slot: usize, fixed: &[Vector]) -> Result<HomogeneousPolynomial> {
        if slot >= self.slots() {
            return Err(Error::Bounds(format!("slot {slot} of {}", self.slots())));
        }
        check_points(fixed, self.slots() - 1, self.dim)?;
        let others: Vec<usize> = (0..self.slots()).filter(|&i| i != slot).collect();
        let tables: Vec<_> = fixed
            .iter()
            .zip(&others)
            .map(|(p, &i)| power_table(p, self.signature.degrees()[i]))
            .collect();
        let mut out = HomogeneousPolynomial::zero(self.signature.degrees()[slot], self.dim, self.codim);
        for (alpha, value) in &self.terms {
            let mut factor = Scalar::one();
            for (table, &i) in tables.iter().zip(&others) {
                for (j, &a) in alpha.row(i).iter().enumerate() {
                    factor *= &table[j][a];
                }
            }
            if !factor.is_zero() {
                out.add_to_unchecked(alpha.row_index(slot), &value.scaled(&factor));
            }
        }
        Ok(out)
    }

    fn require_equal(&self, what: &str) -> Result<usize> {
        self.signature.common_degree().ok_or_else(|| {
            Error::Contract(format!(
                "{what} needs an equal signature, got ({})",
                self.signature
            ))
        })
    }

    /// `P(x, ..., x)` for an equal signature.
    pub fn diag_eval(&self, x: &Vector) -> Result<Vector> {
        self.require_equal("diagonal evaluation")?;
        check_point(x, self.dim)?;
        Ok(self.diag_eval_unchecked(x))
    }

    /// On the diagonal a term reduces to `prod_j x_j^{|a_.j|}`; only the
    /// column-sum powers that occur are computed.
    fn diag_eval_unchecked(&self, x: &Vector) -> Vector {
        let mut powers: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); self.dim];
        for alpha in self.terms.keys() {
            for (j, column) in powers.iter_mut().enumerate() {
                let e = alpha.col_sum(j);
                if e > 0 {
                    column.entry(e).or_insert_with(|| num_traits::pow(x[j].clone(), e));
                }
            }
        }
        let mut out = Vector::zeros(self.codim);
        for (alpha, value) in &self.terms {
            let mut factor = Scalar::one();
            for (j, column) in powers.iter().enumerate() {
                let e = alpha.col_sum(j);
                if e > 0 {
                    factor *= &column[&e];
                    if factor.is_zero() {
                        break;
                    }
                }
            }
            out.add_scaled(&factor, value);
        }
        out
    }

    /// Slot arguments `y_i = sum_j e_{ij} v_j` for one matrix and sign vector.
    fn block_arguments(
        &self,
        alpha: &MultiIndexMatrix,
        eps: &SignVector,
        columns: &[Option<&Vector>],
        n: usize,
    ) -> Vec<Vector> {
        (0..alpha.rows())
            .map(|i| {
                let mut y = Vector::zeros(self.dim);
                for (j, column) in columns.iter().enumerate() {
                    let Some(v) = column else { continue };
                    let s = eps.partial_sum(block_range(alpha, i, j, i * n));
                    if s != 0 {
                        y.add_scaled(&int(s), v);
                    }
                }
                y
            })
            .collect()
    }

    /// `sum_e e_1...e_{mn} P(y_1, ..., y_m)` for a fixed matrix.
    fn matrix_sign_sum(&self, alpha: &MultiIndexMatrix, columns: &[Option<&Vector>], n: usize) -> Result<Vector> {
        let mut total = Vector::zeros(self.codim);
        for eps in enumerate_sign_vectors(self.slots() * n)? {
            let args = self.block_arguments(alpha, &eps, columns, n);
            let value = self.eval_unchecked(&args);
            if eps.product() > 0 {
                total.add_assign(&value);
            } else {
                total.sub_assign(&value);
            }
        }
        Ok(total)
    }

    /// Both sides of the mixed Leibniz/polarization expansion of
    /// `P(l_1 x_1 + ... + l_d x_d)^m`.
    ///
    /// The right side is the double sum over all `m x d` exponent matrices
    /// with row sums `n` and all sign vectors of length `mn`, weighted by
    /// `l_1^{|a_.1|} ... l_d^{|a_.d|} / (2^{mn} a_1! ... a_m!)`.
    ///
    /// Both the weight and the sign blocks split over rows, so per monomial
    /// the sum is a product of `m` row sums over compositions of `n` and
    /// `2^n` signs. [`expand_combination_literal`](Self::expand_combination_literal)
    /// evaluates the same sum matrix by matrix.
    pub fn expand_combination(&self, points: &[Vector], lambdas: &[Scalar]) -> Result<(Vector, Vector)> {
        let (n, left) = self.combination_left(points, lambdas)?;
        let m = self.slots();

        // row factor for each row exponent b that occurs:
        // sum_a l^a / a! * sum_e e_1..e_n prod_k y_k^{b_k}, y = sum_j (sum of block j of e) x_j
        let mut rows: BTreeMap<&[usize], Scalar> = BTreeMap::new();
        for alpha in self.terms.keys() {
            for i in 0..m {
                rows.entry(alpha.row(i)).or_insert_with(Scalar::zero);
            }
        }
        for a in compositions(n, points.len()) {
            let mut weight = Scalar::one() / a.factorial();
            for (l, &e) in lambdas.iter().zip(a.0.iter()) {
                weight *= num_traits::pow(l.clone(), e);
            }
            if weight.is_zero() {
                continue;
            }
            let mut starts = Vec::with_capacity(a.len());
            let mut offset = 0;
            for &e in a.0.iter() {
                starts.push(offset..offset + e);
                offset += e;
            }
            for eps in enumerate_sign_vectors(n)? {
                let mut y = Vector::zeros(self.dim);
                for (range, x) in starts.iter().zip(points) {
                    let s = eps.partial_sum(range.clone());
                    if s != 0 {
                        y.add_scaled(&int(s), x);
                    }
                }
                let table = power_table(&y, n);
                let signed = if eps.product() > 0 { weight.clone() } else { -weight.clone() };
                for (b, total) in rows.iter_mut() {
                    let mut monomial = signed.clone();
                    for (k, &e) in b.iter().enumerate() {
                        if e > 0 {
                            monomial *= &table[k][e];
                        }
                    }
                    *total += monomial;
                }
            }
        }

        let scale = Scalar::one() / pow2(m * n);
        let mut right = Vector::zeros(self.codim);
        for (alpha, value) in &self.terms {
            let mut factor = scale.clone();
            for i in 0..m {
                factor *= &rows[alpha.row(i)];
                if factor.is_zero() {
                    break;
                }
            }
            right.add_scaled(&factor, value);
        }
        Ok((left, right))
    }

    /// [`expand_combination`](Self::expand_combination) with the right side
    /// summed matrix by matrix over all `2^{mn}` sign vectors. Exponential in
    /// `m`; meant as a reference for small cases.
    pub fn expand_combination_literal(&self, points: &[Vector], lambdas: &[Scalar]) -> Result<(Vector, Vector)> {
        let (n, left) = self.combination_left(points, lambdas)?;
        let m = self.slots();
        crate::combinatorics::check_sign_budget(m * n)?;
        let columns: Vec<Option<&Vector>> = points.iter().map(Some).collect();
        let scale = Scalar::one() / pow2(m * n);
        let mut right = Vector::zeros(self.codim);
        for alpha in enumerate_row_sum_matrices(m, points.len(), n)? {
            let mut weight = &scale / alpha.factorial();
            for (j, l) in lambdas.iter().enumerate() {
                weight *= num_traits::pow(l.clone(), alpha.col_sum(j));
            }
            if weight.is_zero() {
                continue;
            }
            right.add_scaled(&weight, &self.matrix_sign_sum(&alpha, &columns, n)?);
        }
        Ok((left, right))
    }

    fn combination_left(&self, points: &[Vector], lambdas: &[Scalar]) -> Result<(usize, Vector)> {
        let n = self.require_equal("the combination expansion")?;
        if points.is_empty() || points.len() != lambdas.len() {
            return Err(Error::Arity {
                expected: points.len().max(1),
                found: lambdas.len(),
            });
        }
        check_points(points, points.len(), self.dim)?;
        crate::combinatorics::check_sign_budget(n)?;
        let mut combined = Vector::zeros(self.dim);
        for (p, l) in points.iter().zip(lambdas) {
            combined.add_scaled(l, p);
        }
        Ok((n, self.diag_eval(&combined)?))
    }

    /// The remainder `R_n(x_1, ..., x_m)`: the sign sums over every matrix of
    /// the remainder set that is not a row permutation of `n * I`.
    pub fn remainder(&self, points: &[Vector]) -> Result<Vector> {
        let n = self.require_equal("the remainder")?;
        let m = self.slots();
        check_points(points, m, self.dim)?;
        crate::combinatorics::check_sign_budget(m * n)?;
        // column 0 is the base point slot; it is always zero here
        let columns: Vec<Option<&Vector>> = std::iter::once(None).chain(points.iter().map(Some)).collect();
        let sets = matrix_sets_m_and_d(m, n)?;
        let mut total = Vector::zeros(self.codim);
        for alpha in sets.off_diagonal() {
            let weight = Scalar::one() / alpha.factorial();
            total.add_scaled(&weight, &self.matrix_sign_sum(alpha, &columns, n)?);
        }
        Ok(total)
    }

    /// `sum_e e_1...e_{mn} P(x0 + (e_1 + ... + e_n) x_1 + ... )^m`, unweighted.
    pub fn diagonal_sign_sum(&self, x0: &Vector, points: &[Vector]) -> Result<Vector> {
        let n = self.require_equal("the diagonal sign sum")?;
        check_point(x0, self.dim)?;
        check_points(points, self.slots(), self.dim)?;
        let directions: Vec<Vector> = points
            .iter()
            .flat_map(|p| std::iter::repeat_n(p.clone(), n))
            .collect();
        let diagonal = |y: &Vector| self.diag_eval_unchecked(y);
        signed_sum(x0, &directions, diagonal)
    }

    /// Multipolynomial polarization with remainder:
    /// `S / (m! (n! 2^n)^m) - R_n / (m! 2^{mn})` where `S` is
    /// [`diagonal_sign_sum`](Self::diagonal_sign_sum). Equals `P(x_1..x_m)`
    /// whenever `P` is symmetric.
    pub fn multipolarize(&self, x0: &Vector, points: &[Vector]) -> Result<Vector> {
        let n = self.require_equal("multipolarization")?;
        let m = self.slots();
        let sum = self.diagonal_sign_sum(x0, points)?;
        let rem = self.remainder(points)?;
        let m_fact = factorial(m);
        let first_weight =
            Scalar::one() / (&m_fact * num_traits::pow(factorial(n) * pow2(n), m));
        let rem_weight = Scalar::one() / (&m_fact * pow2(m * n));
        let mut out = sum.scaled(&first_weight);
        out.add_scaled(&-rem_weight, &rem);
        Ok(out)
    }

    /// Right side of the entire polarization formula,
    /// `S / ((mn)! 2^{mn})`.
    pub fn entire_polarization_rhs(&self, x0: &Vector, points: &[Vector]) -> Result<Vector> {
        let n = self.require_equal("the entire polarization formula")?;
        let mn = self.slots() * n;
        let sum = self.diagonal_sign_sum(x0, points)?;
        Ok(sum.scaled(&(Scalar::one() / (factorial(mn) * pow2(mn)))))
    }

    /// `P(x_{order[0]}, ..., x_{order[m-1]})` as a new multipolynomial.
    /// Only defined when the permuted signature equals the original.
    pub fn permute_slots(&self, order: &[usize]) -> Result<Self> {
        let degrees = self.signature.degrees();
        let mut sorted = order.to_vec();
        sorted.sort_unstable();
        if sorted != (0..self.slots()).collect::<Vec<_>>() {
            return Err(Error::Contract(format!("{order:?} is not a permutation")));
        }
        if order.iter().enumerate().any(|(i, &k)| degrees[i] != degrees[k]) {
            return Err(Error::Contract("permutation changes the signature".into()));
        }
        // x_{order[i]} in slot i: the exponent row of slot i moves to row order[i]
        let mut inverse = vec![0; order.len()];
        for (i, &k) in order.iter().enumerate() {
            inverse[k] = i;
        }
        let mut out = Multipolynomial::zero(self.signature.clone(), self.dim, self.codim);
        for (alpha, value) in &self.terms {
            out.terms.insert(alpha.permute_rows(&inverse), value.clone());
        }
        Ok(out)
    }

    /// Average of `P` over all slot permutations (equal signatures only).
    pub fn symmetrized(&self) -> Result<Self> {
        self.require_equal("symmetrization")?;
        let mut orbits: BTreeMap<Vec<MultiIndex>, Vector> = BTreeMap::new();
        for (alpha, value) in &self.terms {
            let mut rows: Vec<MultiIndex> = (0..alpha.rows()).map(|i| alpha.row_index(i)).collect();
            rows.sort();
            orbits
                .entry(rows)
                .or_insert_with(|| Vector::zeros(self.codim))
                .add_assign(value);
        }
        let mut out = Multipolynomial::zero(self.signature.clone(), self.dim, self.codim);
        for (rows, total) in orbits {
            let orbit = distinct_permutations(&rows);
            let share = total.scaled(&Scalar::new(1.into(), orbit.len().into()));
            if share.is_zero() {
                continue;
            }
            for arrangement in orbit {
                out.terms.insert(MultiIndexMatrix::from_rows(&arrangement)?, share.clone());
            }
        }
        Ok(out)
    }

    /// Exact symmetry decision.
    ///
    /// Equal signatures compare coefficients under row permutations of the
    /// exponent matrices. Mixed signatures are decided by testing
    /// `P(.., x_i, x_{i+1}, ..) = P(.., x_{i+1}, x_i, ..)` on the grid
    /// `{0, ..., n_max}^{m d}`, which determines polynomials of per-variable
    /// degree at most `n_max`; only the zero map passes.
    pub fn is_symmetric(&self) -> Result<bool> {
        if self.slots() > MAX_PERMUTATION_ARITY {
            return Err(Error::Bounds(format!(
                "symmetry check limited to {MAX_PERMUTATION_ARITY} slots, got {}",
                self.slots()
            )));
        }
        if self.signature.is_equal() {
            for (alpha, value) in &self.terms {
                let rows: Vec<MultiIndex> = (0..alpha.rows()).map(|i| alpha.row_index(i)).collect();
                for arrangement in distinct_permutations(&rows) {
                    if self.terms.get(&MultiIndexMatrix::from_rows(&arrangement)?) != Some(value) {
                        return Ok(false);
                    }
                }
            }
            return Ok(true);
        }
        let grid = Grid::new(self.slots() * self.dim, self.signature.max_degree())?;
        for code in 0..grid.len() {
            let mut points = grid.points(code, self.slots(), self.dim);
            let base = self.eval_unchecked(&points);
            for i in 0..self.slots() - 1 {
                points.swap(i, i + 1);
                let swapped = self.eval_unchecked(&points);
                points.swap(i, i + 1);
                if swapped != base {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub(crate) fn require_symmetric(&self) -> Result<()> {
        if self.is_symmetric()? {
            Ok(())
        } else {
            Err(Error::Contract("multipolynomial is not symmetric".into()))
        }
    }

    /// Coefficients of the basis expansion, computed slot by slot with the
    /// polarization sign sum:
    ///
    /// ```text
    /// c_{i_1..i_M} = 1/(n_1! ... n_m! 2^M) sum_e e_1...e_M
    ///                P(sum_{k in block 1} e_k e_{i_k}, ..., sum_{k in block m} e_k e_{i_k})
    /// ```
    ///
    /// Each block's indices are symmetric, so only block-sorted tuples are
    /// computed and the rest are copied.
    pub fn basis_coefficients(&self) -> Result<BasisCoefficients> {
        let total = self.signature.total();
        crate::combinatorics::check_sign_budget(total)?;
        check_table(self.dim, total)?;
        let degrees = self.signature.degrees();
        let offsets = row_offsets(degrees);
        let big_dim = self.slots() * self.dim;
        let weight = Scalar::one()
            / (degrees.iter().fold(Scalar::one(), |acc, &n| acc * factorial(n)) * pow2(total));

        let per_block: Vec<Vec<Vec<usize>>> = degrees.iter().map(|&n| sorted_tuples(self.dim, n)).collect();
        let evaluate = |u: &Vector| {
            let points: Vec<Vector> = (0..self.slots())
                .map(|i| Vector(u[i * self.dim..(i + 1) * self.dim].to_vec()))
                .collect();
            self.eval_unchecked(&points)
        };

        let mut coeffs = BTreeMap::new();
        for choice in cartesian(&per_block.iter().map(Vec::len).collect::<Vec<_>>()) {
            let blocks: Vec<&Vec<usize>> = choice.iter().zip(&per_block).map(|(&c, b)| &b[c]).collect();
            let directions: Vec<Vector> = blocks
                .iter()
                .enumerate()
                .flat_map(|(slot, indices)| {
                    indices
                        .iter()
                        .map(move |&i| Vector::basis(big_dim, slot * self.dim + i))
                })
                .collect();
            let value = signed_sum(&Vector::zeros(big_dim), &directions, evaluate)?.scaled(&weight);
            if value.is_zero() {
                continue;
            }
            let orbits: Vec<Vec<Vec<usize>>> = blocks.iter().map(|b| distinct_permutations(b)).collect();
            for pick in cartesian(&orbits.iter().map(Vec::len).collect::<Vec<_>>()) {
                let mut key = vec![0; total];
                for (slot, (&p, orbit)) in pick.iter().zip(&orbits).enumerate() {
                    key[offsets[slot]..offsets[slot] + degrees[slot]].copy_from_slice(&orbit[p]);
                }
                coeffs.insert(key, value.clone());
            }
        }
        Ok(BasisCoefficients {
            signature: self.signature.clone(),
            dim: self.dim,
            codim: self.codim,
            coeffs,
        })
    }

    /// The `M`-linear map on `(Q^d)^m = Q^{md}` that agrees with `P` on its
    /// diagonal: argument `t` reads coordinate `i_t` of the slot owning
    /// position `t` of the concatenated point.
    pub fn diagonal_embed(&self) -> Result<MultilinearMap> {
        let basis = self.basis_coefficients()?;
        let slots = self.signature.slot_of_position();
        let mut out = MultilinearMap::zero(self.signature.total(), self.slots() * self.dim, self.codim);
        for (key, value) in basis.coeffs {
            let embedded: Vec<usize> = key
                .iter()
                .zip(&slots)
                .map(|(&i, &slot)| slot * self.dim + i)
                .collect();
            out.set(embedded, value)?;
        }
        Ok(out)
    }

    /// Builds the multipolynomial of the given signature that agrees with `f`
    /// on the grid `{0, ..., n_max}^{m d}`, by exact tensor-product
    /// interpolation. Fails if the interpolant has a monomial whose row sums
    /// do not match the signature.
    pub fn interpolate<F>(signature: DegreeSignature, dim: usize, codim: usize, f: F) -> Result<Self>
    where
        F: Fn(&[Vector]) -> Result<Vector>,
    {
        let m = signature.slots();
        let vars = m * dim;
        let grid = Grid::new(vars, signature.max_degree())?;
        let mut values = Vec::with_capacity(grid.len());
        for code in 0..grid.len() {
            let value = f(&grid.points(code, m, dim))?;
            if value.dim() != codim {
                return Err(Error::Shape(format!(
                    "interpolated function returned dimension {}, expected {codim}",
                    value.dim()
                )));
            }
            values.push(value);
        }
        let inverse = inverse_vandermonde(grid.base);
        for axis in 0..vars {
            grid.transform_axis(&mut values, axis, &inverse, codim);
        }
        let mut out = Multipolynomial::zero(signature, dim, codim);
        for (code, value) in values.into_iter().enumerate() {
            if value.is_zero() {
                continue;
            }
            let digits = grid.digits(code);
            let mut alpha = MultiIndexMatrix::zeros(m, dim);
            for i in 0..m {
                for j in 0..dim {
                    alpha.set(i, j, digits[i * dim + j]);
                }
            }
            out.check_key(&alpha).map_err(|_| {
                Error::Contract(format!(
                    "interpolated function has monomial {alpha} outside signature ({})",
                    out.signature
                ))
            })?;
            out.terms.insert(alpha, value);
        }
        Ok(out)
    }

    /// Candidate preimage under `Psi`: the symmetric `mn`-linear map
    /// `A(x_1..x_mn) = P_sym((x_1, ..., x_1), ..., (x_mn, ..., x_mn))` where
    /// `P_sym` is the symmetric polarization of [`diagonal_embed`](Self::diagonal_embed).
    pub fn psi_candidate(&self) -> Result<MultilinearMap> {
        self.require_equal("the Psi preimage")?;
        let embedded = self.diagonal_embed()?;
        // u = (x, ..., x) places x in every slot block; coordinate k of u reads
        // coordinate k mod d of x. Projecting commutes with symmetrization.
        let mut projected = MultilinearMap::zero(embedded.arity(), self.dim, self.codim);
        for (key, value) in embedded.coeffs() {
            let folded: Vec<usize> = key.iter().map(|&k| k % self.dim).collect();
            projected.add_to(folded, value)?;
        }
        Ok(projected.symmetrize())
    }

    /// Decides whether `P` lies in the image of `Psi`.
    ///
    /// Members come with the preimage as witness. Otherwise the entire
    /// polarization formula is checked at `x0 = 0` on canonical basis tuples
    /// and then on the interpolation grid until a point where both sides
    /// differ is found.
    pub fn in_image_psi(&self) -> Result<PsiWitness> {
        let n = self.require_equal("the Psi image test")?;
        self.require_symmetric()?;
        let candidate = self.psi_candidate()?;
        if &psi(&candidate, self.slots())? == self {
            return Ok(PsiWitness {
                member: true,
                witness: Some(candidate),
                defect: None,
            });
        }
        let x0 = Vector::zeros(self.dim);
        let m = self.slots();
        let basis_tuples = all_tuples(self.dim, m)
            .map(|t| t.into_iter().map(|j| Vector::basis(self.dim, j)).collect::<Vec<_>>());
        let grid = Grid::new(m * self.dim, n)?;
        let grid_tuples = (0..grid.len()).map(|code| grid.points(code, m, self.dim));
        for points in basis_tuples.chain(grid_tuples) {
            let lhs = self.eval_unchecked(&points);
            let rhs = self.entire_polarization_rhs(&x0, &points)?;
            if lhs != rhs {
                return Ok(PsiWitness {
                    member: false,
                    witness: None,
                    defect: Some(PolarizationDefect { x0, points, lhs, rhs }),
                });
            }
        }
        // psi(candidate) - P is a nonzero multipolynomial of per-variable
        // degree <= n, so it cannot vanish on the whole grid
        Err(Error::Contract(
            "no defect found on the interpolation grid for a non-member".into(),
        ))
    }
}

/// `Psi(A)(x_1, ..., x_m) = A x_1^n ... x_m^n` for a symmetric `mn`-linear map.
pub fn psi(map: &MultilinearMap, slots: usize) -> Result<Multipolynomial> {
    if slots == 0 || !map.arity().is_multiple_of(slots) {
        return Err(Error::Arity {
            expected: slots * (map.arity() / slots.max(1)).max(1),
            found: map.arity(),
        });
    }
    map.require_symmetric()?;
    let n = map.arity() / slots;
    let profile = MultiIndex(vec![n; slots]);
    Multipolynomial::interpolate(DegreeSignature::equal(slots, n)?, map.dim(), map.codim(), |points| {
        map.power_eval(points, &profile)
    })
}

fn check_table(base: usize, exponent: usize) -> Result<()> {
    match base.checked_pow(exponent as u32) {
        Some(size) if size <= MAX_TABLE_ENTRIES => Ok(()),
        _ => Err(Error::Bounds(format!(
            "{base}^{exponent} entries exceed the table limit of {MAX_TABLE_ENTRIES}"
        ))),
    }
}

/// All choices `(c_1, ..., c_k)` with `c_i < sizes[i]`, last fastest.
fn cartesian(sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &size in sizes {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..size).map(move |c| {
                    let mut next = prefix.clone();
                    next.push(c);
                    next
                })
            })
            .collect();
    }
    out
}

/// The grid `{0, ..., degree}^vars`, points indexed by a mixed-radix code
/// with variable 0 most significant.
struct Grid {
    vars: usize,
    base: usize,
    len: usize,
}

impl Grid {
    fn new(vars: usize, degree: usize) -> Result<Self> {
        let base = degree + 1;
        check_table(base, vars)?;
        Ok(Grid {
            vars,
            base,
            len: base.pow(vars as u32),
        })
    }

    fn len(&self) -> usize {
        self.len
    }

    fn digits(&self, mut code: usize) -> Vec<usize> {
        let mut digits = vec![0; self.vars];
        for v in (0..self.vars).rev() {
            digits[v] = code % self.base;
            code /= self.base;
        }
        digits
    }

    fn points(&self, code: usize, slots: usize, dim: usize) -> Vec<Vector> {
        let digits = self.digits(code);
        (0..slots)
            .map(|i| Vector(digits[i * dim..(i + 1) * dim].iter().map(|&a| int(a as i64)).collect()))
            .collect()
    }

    /// Applies `matrix` along one axis of the value tensor.
    fn transform_axis(&self, values: &mut [Vector], axis: usize, matrix: &[Vec<Scalar>], codim: usize) {
        let stride = self.base.pow((self.vars - 1 - axis) as u32);
        for start in 0..self.len {
            if !(start / stride).is_multiple_of(self.base) {
                continue;
            }
            let fiber: Vec<Vector> = (0..self.base).map(|a| values[start + a * stride].clone()).collect();
            for (e, row) in matrix.iter().enumerate() {
                let mut acc = Vector::zeros(codim);
                for (w, v) in row.iter().zip(&fiber) {
                    acc.add_scaled(w, v);
                }
                values[start + e * stride] = acc;
            }
        }
    }
}

/// Inverse of `V[a][e] = a^e` for nodes `a = 0..size`.
fn inverse_vandermonde(size: usize) -> Vec<Vec<Scalar>> {
    let mut left: Vec<Vec<Scalar>> = (0..size)
        .map(|a| (0..size).map(|e| num_traits::pow(int(a as i64), e)).collect())
        .collect();
    let mut right: Vec<Vec<Scalar>> = (0..size)
        .map(|r| (0..size).map(|c| if r == c { Scalar::one() } else { Scalar::zero() }).collect())
        .collect();
    for col in 0..size {
        let pivot = (col..size).find(|&r| !left[r][col].is_zero()).expect("Vandermonde is invertible");
        left.swap(col, pivot);
        right.swap(col, pivot);
        let inv = Scalar::one() / &left[col][col];
        for c in 0..size {
            left[col][c] *= &inv;
            right[col][c] *= &inv;
        }
        for r in 0..size {
            if r == col || left[r][col].is_zero() {
                continue;
            }
            let factor = left[r][col].clone();
            for c in 0..size {
                let (l, rr) = (&left[col][c] * &factor, &right[col][c] * &factor);
                left[r][c] -= l;
                right[r][c] -= rr;
            }
        }
    }
    right
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    /// `P((x_1, x_2), (y_1, y_2)) = x_1 x_2 y_1 y_2`
    fn example() -> Multipolynomial {
        let mut p = Multipolynomial::zero(DegreeSignature::equal(2, 2).unwrap(), 2, 1);
        p.set(MultiIndexMatrix::from_nested(&[&[1, 1], &[1, 1]]), Vector::from_ints(&[1]))
            .unwrap();
        p
    }

    fn e(j: usize) -> Vector {
        Vector::basis(2, j)
    }

    #[test]
    fn signature_rules() {
        assert!(DegreeSignature::new(vec![]).is_err());
        assert!(DegreeSignature::new(vec![2, 0]).is_err());
        let s = DegreeSignature::new(vec![2, 1, 3]).unwrap();
        assert_eq!(s.total(), 6);
        assert!(!s.is_equal());
        assert_eq!(s.slot_of_position(), vec![0, 0, 1, 2, 2, 2]);
        assert_eq!(DegreeSignature::equal(3, 2).unwrap().common_degree(), Some(2));
    }

    #[test]
    fn set_validates_row_sums() {
        let mut p = Multipolynomial::zero(DegreeSignature::new(vec![2, 1]).unwrap(), 2, 1);
        let bad = MultiIndexMatrix::from_nested(&[&[1, 0], &[1, 0]]);
        assert!(matches!(p.set(bad, Vector::from_ints(&[1])), Err(Error::Arity { .. })));
        let wrong_shape = MultiIndexMatrix::from_nested(&[&[2, 0, 0], &[1, 0, 0]]);
        assert!(matches!(p.set(wrong_shape, Vector::from_ints(&[1])), Err(Error::Shape(_))));
    }

    #[test]
    fn eval_examples() {
        let p = example();
        let ones = Vector::from_ints(&[1, 1]);
        assert_eq!(p.eval(&[ones.clone(), ones.clone()]).unwrap(), Vector::from_ints(&[1]));
        assert!(p.eval(&[e(0), e(1)]).unwrap().is_zero());
        assert!(p.eval(&[Vector::zeros(2), ones]).unwrap().is_zero());
        assert!(matches!(p.eval(&[e(0)]), Err(Error::Arity { .. })));
    }

    #[test]
    fn slot_polynomial_examples() {
        let p = example();
        let q = p.slot_polynomial(1, &[Vector::from_ints(&[1, 1])]).unwrap();
        assert_eq!(q.degree(), 2);
        assert_eq!(q.coeffs().len(), 1);
        assert_eq!(q.coeff(&MultiIndex(vec![1, 1])), Vector::from_ints(&[1]));
        assert!(p.slot_polynomial(0, &[Vector::zeros(2)]).unwrap().is_zero());

        let mut single = HomogeneousPolynomial::zero(3, 2, 1);
        single.set(MultiIndex(vec![2, 1]), Vector(vec![ratio(3, 4)])).unwrap();
        let as_multi = Multipolynomial::from_homogeneous(&single).unwrap();
        assert_eq!(as_multi.slot_polynomial(0, &[]).unwrap(), single);
    }

    #[test]
    fn diag_eval_examples() {
        let p = example();
        assert_eq!(p.diag_eval(&Vector::from_ints(&[1, 1])).unwrap(), Vector::from_ints(&[1]));
        let t = ratio(-3, 2);
        let x = Vector(vec![t.clone(), int(1)]);
        assert_eq!(p.diag_eval(&x).unwrap(), Vector(vec![&t * &t]));
        assert!(p.diag_eval(&Vector::zeros(2)).unwrap().is_zero());
        let mixed = Multipolynomial::zero(DegreeSignature::new(vec![1, 2]).unwrap(), 2, 1);
        assert!(matches!(mixed.diag_eval(&e(0)), Err(Error::Contract(_))));
    }

    #[test]
    fn counterexample_values() {
        let p = example();
        let pts = [e(0), e(1)];
        let zero = Vector::zeros(2);
        assert_eq!(p.remainder(&pts).unwrap(), Vector::from_ints(&[16]));
        assert_eq!(p.diagonal_sign_sum(&zero, &pts).unwrap(), Vector::from_ints(&[64]));
        assert!(p.multipolarize(&zero, &pts).unwrap().is_zero());
        assert_eq!(p.entire_polarization_rhs(&zero, &pts).unwrap(), Vector(vec![ratio(1, 6)]));
        assert!(p.is_symmetric().unwrap());
        let w = p.in_image_psi().unwrap();
        assert!(!w.member);
        let defect = w.defect.unwrap();
        assert_eq!(defect.points, vec![e(0), e(1)]);
        assert_eq!(defect.rhs, Vector(vec![ratio(1, 6)]));
        assert!(defect.lhs.is_zero());
    }

    #[test]
    fn remainder_vanishes_for_linear_slots_and_single_slot() {
        let mut a = Multipolynomial::zero(DegreeSignature::equal(3, 1).unwrap(), 2, 1);
        a.set(MultiIndexMatrix::from_nested(&[&[1, 0], &[0, 1], &[1, 0]]), Vector::from_ints(&[5]))
            .unwrap();
        let pts = [Vector::from_ints(&[2, 3]), Vector::from_ints(&[-1, 4]), Vector::from_ints(&[7, 1])];
        assert!(a.remainder(&pts).unwrap().is_zero());

        let mut cubic = Multipolynomial::zero(DegreeSignature::equal(1, 3).unwrap(), 2, 1);
        cubic
            .set(MultiIndexMatrix::from_nested(&[&[2, 1]]), Vector::from_ints(&[1]))
            .unwrap();
        assert!(cubic.remainder(&[Vector::from_ints(&[2, 5])]).unwrap().is_zero());
    }

    #[test]
    fn expansion_single_point() {
        let p = example();
        let x = Vector(vec![ratio(1, 2), int(3)]);
        let (l, r) = p.expand_combination(std::slice::from_ref(&x), &[int(1)]).unwrap();
        assert_eq!(l, r);
        assert_eq!(l, p.diag_eval(&x).unwrap());
    }

    #[test]
    fn is_symmetric_examples() {
        assert!(example().is_symmetric().unwrap());
        let mut p = Multipolynomial::zero(DegreeSignature::new(vec![2, 1]).unwrap(), 1, 1);
        p.set(MultiIndexMatrix::from_nested(&[&[2], &[1]]), Vector::from_ints(&[1])).unwrap();
        assert!(!p.is_symmetric().unwrap());
        let z = Multipolynomial::zero(DegreeSignature::new(vec![1, 2]).unwrap(), 2, 1);
        assert!(z.is_symmetric().unwrap());
        let mut q = Multipolynomial::zero(DegreeSignature::equal(2, 1).unwrap(), 2, 1);
        q.set(MultiIndexMatrix::from_nested(&[&[1, 0], &[0, 1]]), Vector::from_ints(&[1])).unwrap();
        assert!(!q.is_symmetric().unwrap());
        assert!(q.symmetrized().unwrap().is_symmetric().unwrap());
    }

    #[test]
    fn basis_coefficient_of_mixed_cubic() {
        // x^2 y on Q^1
        let mut p = Multipolynomial::zero(DegreeSignature::new(vec![2, 1]).unwrap(), 1, 1);
        p.set(MultiIndexMatrix::from_nested(&[&[2], &[1]]), Vector::from_ints(&[1])).unwrap();
        let c = p.basis_coefficients().unwrap();
        assert_eq!(c.coeffs.len(), 1);
        assert_eq!(c.coeffs[&vec![0, 0, 0]], Vector::from_ints(&[1]));

        let zero = Multipolynomial::zero(DegreeSignature::new(vec![2, 2]).unwrap(), 2, 1);
        assert!(zero.basis_coefficients().unwrap().coeffs.is_empty());
    }

    #[test]
    fn diagonal_embed_of_example_is_product_of_coordinates() {
        let a = example().diagonal_embed().unwrap();
        assert_eq!(a.arity(), 4);
        assert_eq!(a.dim(), 4);
        let hat = a.hat();
        assert_eq!(hat.coeffs().len(), 1);
        assert_eq!(hat.coeff(&MultiIndex(vec![1, 1, 1, 1])), Vector::from_ints(&[1]));
    }

    #[test]
    fn psi_examples() {
        let mut dot = MultilinearMap::zero(2, 2, 1);
        dot.set(vec![0, 0], Vector::from_ints(&[1])).unwrap();
        dot.set(vec![1, 1], Vector::from_ints(&[1])).unwrap();
        let p = psi(&dot, 2).unwrap();
        assert_eq!(p, Multipolynomial::from_multilinear(&dot).unwrap());
        assert_eq!(psi(&dot, 1).unwrap(), Multipolynomial::from_homogeneous(&dot.hat()).unwrap());

        let mut wxyz = MultilinearMap::zero(4, 1, 1);
        wxyz.set(vec![0; 4], Vector::from_ints(&[1])).unwrap();
        let q = psi(&wxyz, 2).unwrap();
        assert_eq!(q.terms().len(), 1);
        assert_eq!(q.coeff(&MultiIndexMatrix::from_nested(&[&[2], &[2]])), Vector::from_ints(&[1]));

        let mut skew = MultilinearMap::zero(2, 2, 1);
        skew.set(vec![0, 1], Vector::from_ints(&[1])).unwrap();
        assert!(matches!(psi(&skew, 2), Err(Error::Contract(_))));
        assert!(matches!(psi(&wxyz, 3), Err(Error::Arity { .. })));
    }

    #[test]
    fn interpolation_rejects_wrong_degree() {
        let sig = DegreeSignature::equal(1, 2).unwrap();
        let cubic = |pts: &[Vector]| Ok(Vector(vec![&pts[0][0] * &pts[0][0] * &pts[0][0]]));
        assert!(Multipolynomial::interpolate(sig.clone(), 1, 1, cubic).is_err());
        let square = |pts: &[Vector]| Ok(Vector(vec![&pts[0][0] * &pts[0][1]]));
        let p = Multipolynomial::interpolate(sig, 2, 1, square).unwrap();
        assert_eq!(p.coeff(&MultiIndexMatrix::from_nested(&[&[1, 1]])), Vector::from_ints(&[1]));
    }

    #[test]
    fn inverse_vandermonde_is_inverse() {
        let inv = inverse_vandermonde(4);
        for a in 0..4 {
            for b in 0..4 {
                let mut s = Scalar::zero();
                for (e, row) in inv.iter().enumerate() {
                    s += num_traits::pow(int(a as i64), e) * &row[b];
                }
                assert_eq!(s, if a == b { int(1) } else { int(0) });
            }
        }
    }

    #[test]
    fn permute_slots_swaps_arguments() {
        let mut p = Multipolynomial::zero(DegreeSignature::equal(2, 1).unwrap(), 2, 1);
        p.set(MultiIndexMatrix::from_nested(&[&[1, 0], &[0, 1]]), Vector::from_ints(&[1])).unwrap();
        let q = p.permute_slots(&[1, 0]).unwrap();
        let (x, y) = (Vector::from_ints(&[2, 3]), Vector::from_ints(&[5, 7]));
        assert_eq!(q.eval(&[x.clone(), y.clone()]).unwrap(), p.eval(&[y, x]).unwrap());
    }
}
