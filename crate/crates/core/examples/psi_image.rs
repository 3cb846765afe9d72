// Build Psi(A) from a symmetric 4-linear map, recover A, and reject a
// multipolynomial outside the image with a concrete defect.

use polarization::random::{Generator, GeneratorConfig};
use polarization::verify::counterexample_polynomial;
use polarization::{psi, Vector};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut gen = Generator::new(&GeneratorConfig { seed: 5, sparsity: 0.5 });
    let a = gen.multilinear(4, 2, 1, true)?;
    let p = psi(&a, 2)?;

    let result = p.in_image_psi()?;
    assert!(result.member);
    assert_eq!(result.witness.as_ref(), Some(&a));
    println!("Psi(A) is a member; the witness equals A");

    let points = gen.vectors(2, 2);
    assert_eq!(p.eval(&points)?, p.entire_polarization_rhs(&Vector::zeros(2), &points)?);

    let q = counterexample_polynomial();
    let result = q.in_image_psi()?;
    let defect = result.defect.expect("non-members carry a defect");
    println!(
        "x1 x2 y1 y2 is not a member: at {} and {} the formula gives {} instead of {}",
        defect.points[0], defect.points[1], defect.rhs, defect.lhs
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
