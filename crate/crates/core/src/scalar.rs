//! Exact scalars and coordinate vectors.
//!
//! Every value in the crate is a [`Scalar`], an arbitrary precision rational
//! kept in lowest terms with a positive denominator. Points of `E = Q^d` and
//! values in the codomain `F = Q^{d_F}` are both [`Vector`]s.

use std::fmt;
use std::ops::{Deref, DerefMut};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

/// Builds the scalar `n`.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// Builds the scalar `p/q`. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p"` or `"p/q"`; the result is reduced to lowest terms.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let bad = |message: String| Error::Parse {
        line: 0,
        column: 0,
        message,
    };
    let (num, den) = match text.split_once('/') {
        Some((p, q)) => (p, q),
        None => (text, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad(format!("invalid rational `{text}`")))?;
    let den = BigInt::from_str(den).map_err(|_| bad(format!("invalid rational `{text}`")))?;
    if den.is_zero() {
        return Err(bad(format!("zero denominator in `{text}`")));
    }
    Ok(Scalar::new(num, den))
}

/// `n!` as an exact scalar.
pub fn factorial(n: usize) -> Scalar {
    Scalar::from_integer((1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k)))
}

/// `2^k` as an exact scalar.
pub fn pow2(k: usize) -> Scalar {
    Scalar::from_integer(BigInt::one() << k)
}

/// A finite sequence of scalars: a point of `Q^d` or a codomain value.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Vector(pub Vec<Scalar>);

impl Vector {
    pub fn zeros(dim: usize) -> Self {
        Vector(vec![Scalar::zero(); dim])
    }

    /// The canonical basis vector `e_index` (0-based).
    pub fn basis(dim: usize, index: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[index] = Scalar::one();
        v
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Vector(values.iter().map(|&v| int(v)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn add_assign(&mut self, other: &Vector) {
        debug_assert_eq!(self.dim(), other.dim());
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += b;
        }
    }

    pub fn sub_assign(&mut self, other: &Vector) {
        debug_assert_eq!(self.dim(), other.dim());
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a -= b;
        }
    }

    /// `self += factor * other`
    pub fn add_scaled(&mut self, factor: &Scalar, other: &Vector) {
        debug_assert_eq!(self.dim(), other.dim());
        if factor.is_zero() {
            return;
        }
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += factor * b;
        }
    }

    pub fn scaled(&self, factor: &Scalar) -> Vector {
        Vector(self.0.iter().map(|a| a * factor).collect())
    }

    pub fn scale(&mut self, factor: &Scalar) {
        for a in &mut self.0 {
            *a *= factor;
        }
    }

    pub fn sum(&self, other: &Vector) -> Vector {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn difference(&self, other: &Vector) -> Vector {
        let mut out = self.clone();
        out.sub_assign(other);
        out
    }

    /// Parses whitespace separated rationals.
    pub fn parse(text: &str) -> Result<Vector> {
        text.split_whitespace()
            .map(parse_scalar)
            .collect::<Result<Vec<_>>>()
            .map(Vector)
    }
}

impl Deref for Vector {
    type Target = [Scalar];

    fn deref(&self) -> &[Scalar] {
        &self.0
    }
}

impl DerefMut for Vector {
    fn deref_mut(&mut self) -> &mut [Scalar] {
        &mut self.0
    }
}

impl From<Vec<Scalar>> for Vector {
    fn from(values: Vec<Scalar>) -> Self {
        Vector(values)
    }
}

/// Space separated, each entry as `p` or `p/q`.
impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, a) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}
