//! Multilinear maps `E^m -> F` and homogeneous polynomials `E -> F` over
//! `E = Q^d`, `F = Q^{d_F}`, with the hat/polarize isomorphism between
//! symmetric maps and polynomials.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::combinatorics::{
    compositions, distinct_permutations, sorted_tuples, MultiIndex, MAX_PERMUTATION_ARITY,
};
use crate::error::{Error, Result};
use crate::kernel::signed_sum;
use crate::scalar::{factorial, pow2, Scalar, Vector};

pub(crate) fn check_points(points: &[Vector], count: usize, dim: usize) -> Result<()> {
    if points.len() != count {
        return Err(Error::Arity {
            expected: count,
            found: points.len(),
        });
    }
    if let Some(p) = points.iter().find(|p| p.dim() != dim) {
        return Err(Error::Shape(format!(
            "point has dimension {}, expected {dim}",
            p.dim()
        )));
    }
    Ok(())
}

pub(crate) fn check_point(point: &Vector, dim: usize) -> Result<()> {
    if point.dim() != dim {
        return Err(Error::Shape(format!(
            "point has dimension {}, expected {dim}",
            point.dim()
        )));
    }
    Ok(())
}

/// An `m`-linear map `(Q^d)^m -> Q^{d_F}` stored as a sparse coefficient
/// tensor: `coeffs[(j_1..j_m)] = A(e_{j_1}, ..., e_{j_m})`, absent keys are
/// zero and no stored value is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultilinearMap {
    arity: usize,
    dim: usize,
    codim: usize,
    coeffs: BTreeMap<Vec<usize>, Vector>,
}

impl MultilinearMap {
    pub fn zero(arity: usize, dim: usize, codim: usize) -> Self {
        MultilinearMap {
            arity,
            dim,
            codim,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    pub fn coeffs(&self) -> &BTreeMap<Vec<usize>, Vector> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient at a 0-based index tuple; zero when absent.
    pub fn coeff(&self, key: &[usize]) -> Vector {
        self.coeffs
            .get(key)
            .cloned()
            .unwrap_or_else(|| Vector::zeros(self.codim))
    }

    fn check_key(&self, key: &[usize]) -> Result<()> {
        if key.len() != self.arity {
            return Err(Error::Arity {
                expected: self.arity,
                found: key.len(),
            });
        }
        if key.iter().any(|&j| j >= self.dim) {
            return Err(Error::Shape(format!("index tuple {key:?} outside 0..{}", self.dim)));
        }
        Ok(())
    }

    /// Replaces the coefficient at `key`.
    pub fn set(&mut self, key: Vec<usize>, value: Vector) -> Result<()> {
        self.check_key(&key)?;
        if value.dim() != self.codim {
            return Err(Error::Shape(format!(
                "value has dimension {}, expected {}",
                value.dim(),
                self.codim
            )));
        }
        if value.is_zero() {
            self.coeffs.remove(&key);
        } else {
            self.coeffs.insert(key, value);
        }
        Ok(())
    }

    /// Adds `value` to the coefficient at `key`.
    pub fn add_to(&mut self, key: Vec<usize>, value: &Vector) -> Result<()> {
        let current = self.coeff(&key);
        self.set(key, current.sum(value))
    }

    /// `self + factor * other`, coefficientwise.
    pub fn add_scaled(&self, factor: &Scalar, other: &MultilinearMap) -> Result<MultilinearMap> {
        if (self.arity, self.dim, self.codim) != (other.arity, other.dim, other.codim) {
            return Err(Error::Shape("maps live on different spaces".into()));
        }
        let mut out = self.clone();
        for (key, value) in &other.coeffs {
            out.add_to(key.clone(), &value.scaled(factor))?;
        }
        Ok(out)
    }

    /// `A(x_1, ..., x_m) = sum c_{j_1..j_m} x_{1,j_1} ... x_{m,j_m}`.
    pub fn eval(&self, points: &[Vector]) -> Result<Vector> {
        check_points(points, self.arity, self.dim)?;
        let mut out = Vector::zeros(self.codim);
        for (key, value) in &self.coeffs {
            let mut factor = Scalar::one();
            for (point, &j) in points.iter().zip(key) {
                factor *= &point[j];
                if factor.is_zero() {
                    break;
                }
            }
            out.add_scaled(&factor, value);
        }
        Ok(out)
    }

    /// `A x_1^{a_1} ... x_n^{a_n}`: `x_k` repeated `a_k` times, in order.
    pub fn power_eval(&self, points: &[Vector], alpha: &MultiIndex) -> Result<Vector> {
        if alpha.norm() != self.arity {
            return Err(Error::Arity {
                expected: self.arity,
                found: alpha.norm(),
            });
        }
        if points.len() != alpha.len() {
            return Err(Error::Arity {
                expected: alpha.len(),
                found: points.len(),
            });
        }
        let repeated: Vec<Vector> = points
            .iter()
            .zip(&alpha.0)
            .flat_map(|(p, &a)| std::iter::repeat_n(p.clone(), a))
            .collect();
        self.eval(&repeated)
    }

    /// The symmetric part `(1/m!) sum_sigma A(x_sigma(1), ..., x_sigma(m))`.
    pub fn symmetrize(&self) -> MultilinearMap {
        // average each permutation orbit of index tuples
        let mut orbits: BTreeMap<Vec<usize>, Vector> = BTreeMap::new();
        for (key, value) in &self.coeffs {
            let mut sorted = key.clone();
            sorted.sort_unstable();
            orbits
                .entry(sorted)
                .or_insert_with(|| Vector::zeros(self.codim))
                .add_assign(value);
        }
        let mut out = MultilinearMap::zero(self.arity, self.dim, self.codim);
        for (sorted, total) in orbits {
            let orbit = distinct_permutations(&sorted);
            let share = total.scaled(&Scalar::new(1.into(), orbit.len().into()));
            if share.is_zero() {
                continue;
            }
            for key in orbit {
                out.coeffs.insert(key, share.clone());
            }
        }
        out
    }

    /// Exact check that the coefficients are invariant under every
    /// permutation of the index tuple. Refuses arities above
    /// [`MAX_PERMUTATION_ARITY`].
    pub fn is_symmetric(&self) -> Result<bool> {
        if self.arity > MAX_PERMUTATION_ARITY {
            return Err(Error::Bounds(format!(
                "symmetry check limited to arity {MAX_PERMUTATION_ARITY}, got {}",
                self.arity
            )));
        }
        for (key, value) in &self.coeffs {
            for other in distinct_permutations(key) {
                if self.coeffs.get(&other) != Some(value) {
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
            Err(Error::Contract("multilinear map is not symmetric".into()))
        }
    }

    /// The homogeneous polynomial `x -> A(x, ..., x)`.
    pub fn hat(&self) -> HomogeneousPolynomial {
        let mut out = HomogeneousPolynomial::zero(self.arity, self.dim, self.codim);
        for (key, value) in &self.coeffs {
            let alpha = MultiIndex::profile(key, self.dim);
            out.add_to_unchecked(alpha, value);
        }
        out
    }

    /// Right side of the classical polarization formula,
    /// `(1/(m! 2^m)) sum e_1..e_m A(x0 + e_1 x_1 + ... + e_m x_m)^m`,
    /// evaluated through the diagonal of `self`.
    pub fn polarization_formula_value(&self, x0: &Vector, points: &[Vector]) -> Result<Vector> {
        check_point(x0, self.dim)?;
        check_points(points, self.arity, self.dim)?;
        let diagonal = self.hat();
        diagonal.polarization_formula_value(x0, points)
    }

    /// Both sides of the Leibniz formula at `x_1, ..., x_n`:
    /// `A(x_1 + ... + x_n)^m` and `sum_{|a| = m} (m!/a!) A x_1^{a_1}...x_n^{a_n}`.
    ///
    /// The two are computed independently and returned for comparison.
    pub fn verify_leibniz(&self, points: &[Vector]) -> Result<(Vector, Vector)> {
        self.require_symmetric()?;
        if points.is_empty() {
            return Err(Error::Arity {
                expected: 1,
                found: 0,
            });
        }
        check_points(points, points.len(), self.dim)?;
        let mut total = Vector::zeros(self.dim);
        for p in points {
            total.add_assign(p);
        }
        let left = self.power_eval(&[total], &MultiIndex(vec![self.arity]))?;

        let m_fact = factorial(self.arity);
        let mut right = Vector::zeros(self.codim);
        for alpha in compositions(self.arity, points.len()) {
            let weight = &m_fact / alpha.factorial();
            right.add_scaled(&weight, &self.power_eval(points, &alpha)?);
        }
        Ok((left, right))
    }
}

/// An `m`-homogeneous polynomial `Q^d -> Q^{d_F}`,
/// `P(x) = sum_{|a| = m} c_a x_1^{a_1} ... x_d^{a_d}`, sparse in `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousPolynomial {
    degree: usize,
    dim: usize,
    codim: usize,
    coeffs: BTreeMap<MultiIndex, Vector>,
}

impl HomogeneousPolynomial {
    pub fn zero(degree: usize, dim: usize, codim: usize) -> Self {
        HomogeneousPolynomial {
            degree,
            dim,
            codim,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    pub fn coeffs(&self) -> &BTreeMap<MultiIndex, Vector> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, alpha: &MultiIndex) -> Vector {
        self.coeffs
            .get(alpha)
            .cloned()
            .unwrap_or_else(|| Vector::zeros(self.codim))
    }

    /// Replaces the coefficient of `x^alpha`.
    pub fn set(&mut self, alpha: MultiIndex, value: Vector) -> Result<()> {
        if alpha.len() != self.dim {
            return Err(Error::Shape(format!(
                "multi-index {alpha} has {} entries, expected {}",
                alpha.len(),
                self.dim
            )));
        }
        if alpha.norm() != self.degree {
            return Err(Error::Arity {
                expected: self.degree,
                found: alpha.norm(),
            });
        }
        if value.dim() != self.codim {
            return Err(Error::Shape(format!(
                "value has dimension {}, expected {}",
                value.dim(),
                self.codim
            )));
        }
        if value.is_zero() {
            self.coeffs.remove(&alpha);
        } else {
            self.coeffs.insert(alpha, value);
        }
        Ok(())
    }

    pub(crate) fn add_to_unchecked(&mut self, alpha: MultiIndex, value: &Vector) {
        let entry = self
            .coeffs
            .entry(alpha.clone())
            .or_insert_with(|| Vector::zeros(value.dim()));
        entry.add_assign(value);
        if entry.is_zero() {
            self.coeffs.remove(&alpha);
        }
    }

    pub fn eval(&self, x: &Vector) -> Result<Vector> {
        check_point(x, self.dim)?;
        let powers = power_table(x, self.degree);
        let mut out = Vector::zeros(self.codim);
        for (alpha, value) in &self.coeffs {
            let mut factor = Scalar::one();
            for (j, &a) in alpha.0.iter().enumerate() {
                factor *= &powers[j][a];
            }
            out.add_scaled(&factor, value);
        }
        Ok(out)
    }

    /// `(1/(m! 2^m)) sum e_1..e_m P(x0 + e_1 x_1 + ... + e_m x_m)`.
    pub fn polarization_formula_value(&self, x0: &Vector, points: &[Vector]) -> Result<Vector> {
        check_point(x0, self.dim)?;
        check_points(points, self.degree, self.dim)?;
        let sum = signed_sum(x0, points, |y| self.eval(y).expect("dimension checked"))?;
        let weight = Scalar::one() / (factorial(self.degree) * pow2(self.degree));
        Ok(sum.scaled(&weight))
    }

    /// The unique symmetric `m`-linear map whose diagonal is `self`, computed
    /// by the polarization formula at every sorted basis tuple with base
    /// point `x0` (zero when `None`).
    pub fn polarize(&self, x0: Option<&Vector>) -> Result<MultilinearMap> {
        let origin = Vector::zeros(self.dim);
        let x0 = x0.unwrap_or(&origin);
        check_point(x0, self.dim)?;
        let mut out = MultilinearMap::zero(self.degree, self.dim, self.codim);
        for sorted in sorted_tuples(self.dim, self.degree) {
            let basis: Vec<Vector> = sorted.iter().map(|&j| Vector::basis(self.dim, j)).collect();
            let value = self.polarization_formula_value(x0, &basis)?;
            if value.is_zero() {
                continue;
            }
            for key in distinct_permutations(&sorted) {
                out.coeffs.insert(key, value.clone());
            }
        }
        Ok(out)
    }

    /// `self + factor * other`, coefficientwise.
    pub fn add_scaled(&self, factor: &Scalar, other: &HomogeneousPolynomial) -> Result<Self> {
        if (self.degree, self.dim, self.codim) != (other.degree, other.dim, other.codim) {
            return Err(Error::Shape("polynomials live on different spaces".into()));
        }
        let mut out = self.clone();
        for (alpha, value) in &other.coeffs {
            out.add_to_unchecked(alpha.clone(), &value.scaled(factor));
        }
        Ok(out)
    }
}

/// `table[j][e] = x_j^e` for `e <= max_power`.
pub(crate) fn power_table(x: &Vector, max_power: usize) -> Vec<Vec<Scalar>> {
    x.iter()
        .map(|xj| {
            let mut row = Vec::with_capacity(max_power + 1);
            row.push(Scalar::one());
            for e in 1..=max_power {
                let next = &row[e - 1] * xj;
                row.push(next);
            }
            row
        })
        .collect()
}
