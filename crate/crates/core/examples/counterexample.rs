// The multipolynomial `x1 x2 y1 y2` satisfies the polarization formula with
// remainder but not the entire formula, so it is not in the image of Psi.

use polarization::verify::{counterexample, counterexample_polynomial};
use polarization::Vector;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p = counterexample_polynomial();
    let x0 = Vector::zeros(2);
    let points = [Vector::basis(2, 0), Vector::basis(2, 1)];

    println!("P(e1, e2)             = {}", p.eval(&points)?);
    println!("remainder             = {}", p.remainder(&points)?);
    println!("with remainder        = {}", p.multipolarize(&x0, &points)?);
    println!("entire formula        = {}", p.entire_polarization_rhs(&x0, &points)?);

    let image = p.in_image_psi()?;
    println!("in image of Psi       = {}", image.member);

    let report = counterexample()?;
    assert!(report.passed());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
