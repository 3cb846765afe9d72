// Recover a symmetric (2, 2)-homogeneous multipolynomial from its diagonal,
// with the remainder term over the matrix sets M and D.

use polarization::combinatorics::matrix_sets_m_and_d;
use polarization::random::{Generator, GeneratorConfig};
use polarization::{DegreeSignature, Vector};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let sets = matrix_sets_m_and_d(2, 2)?;
    println!("|M| = {}, |D| = {}", sets.full.len(), sets.diagonal.len());
    for alpha in sets.off_diagonal() {
        println!("  remainder matrix {alpha}");
    }

    let mut gen = Generator::new(&GeneratorConfig { seed: 7, sparsity: 0.75 });
    let p = gen.multipolynomial(&DegreeSignature::equal(2, 2)?, 2, 1, true)?;
    let points = gen.vectors(2, 2);
    let x0 = gen.vector(2);

    let direct = p.eval(&points)?;
    let recovered = p.multipolarize(&x0, &points)?;
    println!("P(x, y) = {direct}");
    println!("remainder = {}", p.remainder(&points)?);
    println!("recovered = {recovered}");
    assert_eq!(direct, recovered);

    // the sign sum itself does not depend on the base point
    assert_eq!(
        p.diagonal_sign_sum(&x0, &points)?,
        p.diagonal_sign_sum(&Vector::zeros(2), &points)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
