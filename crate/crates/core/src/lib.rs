//! Exact multilinear algebra over the rationals.
//!
//! The crate works with three kinds of maps on `E = Q^d` with values in
//! `F = Q^{d_F}`:
//!
//! * [`MultilinearMap`]: `m`-linear maps `E^m -> F`,
//! * [`HomogeneousPolynomial`]: `m`-homogeneous polynomials `E -> F`,
//! * [`Multipolynomial`]: maps `E^m -> F` that are `n_j`-homogeneous in
//!   slot `j` when the other slots are fixed.
//!
//! Every identity that links them (polarization in its classical form, the
//! multipolynomial form with remainder and the entire form, Leibniz-type
//! expansions, basis expansions and the diagonal embedding, the `Psi`
//! embedding and its image test) is computed with exact rationals, so both
//! sides of an identity can be compared with `==`.
//!
//! ```
//! use polarization::{DegreeSignature, MultiIndexMatrix, Multipolynomial, Vector};
//!
//! // P((x1, x2), (y1, y2)) = x1 x2 y1 y2
//! let mut p = Multipolynomial::zero(DegreeSignature::equal(2, 2).unwrap(), 2, 1);
//! p.set(MultiIndexMatrix::from_nested(&[&[1, 1], &[1, 1]]), Vector::from_ints(&[1])).unwrap();
//! let pts = [Vector::basis(2, 0), Vector::basis(2, 1)];
//! let x0 = Vector::zeros(2);
//! assert_eq!(p.multipolarize(&x0, &pts).unwrap(), p.eval(&pts).unwrap());
//! assert!(!p.in_image_psi().unwrap().member);
//! ```

pub mod bench;
pub mod combinatorics;
pub mod error;
pub mod format;
pub mod kernel;
pub mod multilinear;
pub mod multipoly;
pub mod random;
pub mod scalar;
pub mod verify;

pub use combinatorics::{
    enumerate_row_sum_matrices, enumerate_sign_vectors, epsilon_block, matrix_sets_m_and_d,
    signed_power_sum, MultiIndex, MultiIndexMatrix, RemainderMatrices, SignVector,
};
pub use error::{Error, Result};
pub use multilinear::{HomogeneousPolynomial, MultilinearMap};
pub use multipoly::{
    psi, BasisCoefficients, DegreeSignature, Multipolynomial, PolarizationDefect, PsiWitness,
};
pub use scalar::{Scalar, Vector};
