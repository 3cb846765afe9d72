//! Seeded generators for random maps, points and scalars.
//!
//! The stream is SplitMix64 (Steele, Lea and Flood), seeded directly with the
//! 64-bit seed. Draws are reduced with plain modulo and unit floats use the
//! top 53 bits, so the sequence is easy to reproduce in other languages:
//!
//! * scalar: numerator `below(19) - 9`, then denominator `below(9) + 1`;
//! * populate a key: `unit() < sparsity`, then `codim` scalars;
//! * multilinear keys are visited in lexicographic index order, multipolynomial
//!   keys as products of sorted index tuples per slot (also lexicographic).

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::combinatorics::{all_tuples, sorted_tuples, MultiIndex, MultiIndexMatrix};
use crate::error::{Error, Result};
use crate::multilinear::{HomogeneousPolynomial, MultilinearMap};
use crate::multipoly::{DegreeSignature, Multipolynomial, MAX_TABLE_ENTRIES};
use crate::scalar::{ratio, Scalar, Vector};

/// Parameters of a random stream.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorConfig {
    pub seed: u64,
    /// Probability that a coefficient key is populated.
    pub sparsity: f64,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig {
            seed: 0,
            sparsity: 0.75,
        }
    }
}

/// A deterministic stream of random objects.
pub struct Generator {
    rng: SplitMix64,
    sparsity: f64,
}

impl Generator {
    pub fn new(config: &GeneratorConfig) -> Self {
        Generator {
            rng: SplitMix64::seed_from_u64(config.seed),
            sparsity: config.sparsity,
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform-ish integer in `0..bound`.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    /// Uniform float in `[0, 1)`.
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    /// `p/q` with `p` in `[-9, 9]` and `q` in `[1, 9]`.
    pub fn scalar(&mut self) -> Scalar {
        let p = self.below(19) as i64 - 9;
        let q = self.below(9) as i64 + 1;
        ratio(p, q)
    }

    pub fn nonzero_scalar(&mut self) -> Scalar {
        loop {
            let s = self.scalar();
            if s != Scalar::from_integer(0.into()) {
                return s;
            }
        }
    }

    pub fn vector(&mut self, dim: usize) -> Vector {
        Vector((0..dim).map(|_| self.scalar()).collect())
    }

    pub fn vectors(&mut self, count: usize, dim: usize) -> Vec<Vector> {
        (0..count).map(|_| self.vector(dim)).collect()
    }

    fn maybe_value(&mut self, codim: usize) -> Option<Vector> {
        (self.unit() < self.sparsity).then(|| self.vector(codim))
    }

    /// A random `m`-linear map; symmetric maps are the symmetrization of a
    /// random map.
    pub fn multilinear(&mut self, m: usize, dim: usize, codim: usize, symmetric: bool) -> Result<MultilinearMap> {
        table_guard(dim, m)?;
        let mut out = MultilinearMap::zero(m, dim, codim);
        for key in all_tuples(dim, m) {
            if let Some(value) = self.maybe_value(codim) {
                out.set(key, value)?;
            }
        }
        Ok(if symmetric { out.symmetrize() } else { out })
    }

    /// A random homogeneous polynomial of degree `degree`.
    pub fn homogeneous(&mut self, degree: usize, dim: usize, codim: usize) -> Result<HomogeneousPolynomial> {
        let mut out = HomogeneousPolynomial::zero(degree, dim, codim);
        for sorted in sorted_tuples(dim, degree) {
            if let Some(value) = self.maybe_value(codim) {
                out.set(MultiIndex::profile(&sorted, dim), value)?;
            }
        }
        Ok(out)
    }

    /// A random multipolynomial. The symmetric variant averages terms over
    /// row permutations and needs an equal signature.
    pub fn multipolynomial(
        &mut self,
        signature: &DegreeSignature,
        dim: usize,
        codim: usize,
        symmetric: bool,
    ) -> Result<Multipolynomial> {
        if symmetric && !signature.is_equal() {
            return Err(Error::Contract(format!(
                "symmetric multipolynomials with mixed signature ({signature}) are zero"
            )));
        }
        let per_row: Vec<Vec<Vec<usize>>> = signature
            .degrees()
            .iter()
            .map(|&n| sorted_tuples(dim, n))
            .collect();
        let total: usize = per_row.iter().map(Vec::len).product();
        if total > MAX_TABLE_ENTRIES {
            return Err(Error::Bounds(format!("{total} monomials exceed the table limit")));
        }
        let mut out = Multipolynomial::zero(signature.clone(), dim, codim);
        let mut choice = vec![0usize; per_row.len()];
        for _ in 0..total {
            if let Some(value) = self.maybe_value(codim) {
                let rows: Vec<MultiIndex> = choice
                    .iter()
                    .zip(&per_row)
                    .map(|(&c, options)| MultiIndex::profile(&options[c], dim))
                    .collect();
                out.set(MultiIndexMatrix::from_rows(&rows)?, value)?;
            }
            for slot in (0..choice.len()).rev() {
                choice[slot] += 1;
                if choice[slot] < per_row[slot].len() {
                    break;
                }
                choice[slot] = 0;
            }
        }
        if symmetric {
            out.symmetrized()
        } else {
            Ok(out)
        }
    }
}

fn table_guard(dim: usize, arity: usize) -> Result<()> {
    match dim.checked_pow(arity as u32) {
        Some(n) if n <= MAX_TABLE_ENTRIES => Ok(()),
        _ => Err(Error::Bounds(format!("{dim}^{arity} coefficients exceed the table limit"))),
    }
}

/// One-shot random multilinear map from a fresh stream.
pub fn random_multilinear(
    config: &GeneratorConfig,
    m: usize,
    dim: usize,
    codim: usize,
    symmetric: bool,
) -> Result<MultilinearMap> {
    Generator::new(config).multilinear(m, dim, codim, symmetric)
}

/// One-shot random multipolynomial from a fresh stream.
pub fn random_multipolynomial(
    config: &GeneratorConfig,
    signature: &DegreeSignature,
    dim: usize,
    codim: usize,
    symmetric: bool,
) -> Result<Multipolynomial> {
    Generator::new(config).multipolynomial(signature, dim, codim, symmetric)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(seed: u64, sparsity: f64) -> GeneratorConfig {
        GeneratorConfig { seed, sparsity }
    }

    #[test]
    fn splitmix_reference_values() {
        // published SplitMix64 outputs for seed 0
        let mut g = Generator::new(&cfg(0, 1.0));
        assert_eq!(g.next_u64(), 0xe220a8397b1dcdaf);
        assert_eq!(g.next_u64(), 0x6e789e6aa1b965f4);
    }

    #[test]
    fn scalars_stay_in_pool() {
        let mut g = Generator::new(&cfg(3, 1.0));
        for _ in 0..500 {
            let s = g.scalar();
            assert!(s.numer().magnitude() <= &9u32.into());
            assert!(s.denom() <= &9.into());
        }
    }

    #[test]
    fn symmetric_maps_are_symmetric() {
        let a = random_multilinear(&cfg(1, 0.8), 3, 2, 2, true).unwrap();
        assert!(a.is_symmetric().unwrap());
        assert!(!a.is_zero());
        let p = random_multipolynomial(&cfg(1, 0.8), &DegreeSignature::equal(2, 2).unwrap(), 2, 1, true).unwrap();
        assert!(p.is_symmetric().unwrap());
    }

    #[test]
    fn same_seed_same_object() {
        let a = random_multilinear(&cfg(9, 0.5), 3, 3, 1, false).unwrap();
        let b = random_multilinear(&cfg(9, 0.5), 3, 3, 1, false).unwrap();
        assert_eq!(a, b);
        assert!(random_multilinear(&cfg(9, 0.0), 3, 3, 1, false).unwrap().is_zero());
    }

    #[test]
    fn linear_signature_matches_multilinear_stream() {
        let c = cfg(42, 0.6);
        let a = random_multilinear(&c, 3, 2, 2, false).unwrap();
        let p = random_multipolynomial(&c, &DegreeSignature::equal(3, 1).unwrap(), 2, 2, false).unwrap();
        assert_eq!(p, Multipolynomial::from_multilinear(&a).unwrap());
    }

    #[test]
    fn mixed_symmetric_is_rejected() {
        let sig = DegreeSignature::new(vec![1, 2]).unwrap();
        assert!(matches!(
            random_multipolynomial(&cfg(0, 1.0), &sig, 2, 1, true),
            Err(Error::Contract(_))
        ));
    }
}
