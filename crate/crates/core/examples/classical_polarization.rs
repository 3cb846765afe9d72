// Polarize a homogeneous polynomial, restrict back to the diagonal, and
// check the polarization formula at an arbitrary base point.

use polarization::combinatorics::MultiIndex;
use polarization::scalar::ratio;
use polarization::{HomogeneousPolynomial, Vector};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // P(x) = x1^2 x2 - 3 x2^3 on Q^2
    let mut p = HomogeneousPolynomial::zero(3, 2, 1);
    p.set(MultiIndex(vec![2, 1]), Vector::from_ints(&[1]))?;
    p.set(MultiIndex(vec![0, 3]), Vector::from_ints(&[-3]))?;

    let a = p.polarize(None)?;
    println!("symmetric 3-linear map with {} nonzero coefficients", a.coeffs().len());
    assert!(a.is_symmetric()?);
    assert_eq!(a.hat(), p);

    let x0 = Vector(vec![ratio(1, 2), ratio(-7, 3)]);
    let points = [
        Vector::from_ints(&[1, 2]),
        Vector(vec![ratio(3, 4), ratio(0, 1)]),
        Vector::from_ints(&[-2, 5]),
    ];
    let direct = a.eval(&points)?;
    let formula = p.polarization_formula_value(&x0, &points)?;
    println!("A(x1, x2, x3) = {direct}, formula = {formula}");
    assert_eq!(direct, formula);

    // the Leibniz expansion of A(x1 + x2)^3
    let (lhs, rhs) = a.verify_leibniz(&points[..2])?;
    println!("Leibniz: {lhs} = {rhs}");
    assert_eq!(lhs, rhs);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
