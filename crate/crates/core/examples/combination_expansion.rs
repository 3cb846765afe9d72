// Expand P(l1 x1 + l2 x2 + l3 x3, ...) over exponent matrices and signs.

use polarization::combinatorics::enumerate_row_sum_matrices;
use polarization::random::{Generator, GeneratorConfig};
use polarization::DegreeSignature;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (m, n, d) = (2, 2, 3);
    println!(
        "{} exponent matrices with {m} rows summing to {n} over {d} columns",
        enumerate_row_sum_matrices(m, d, n)?.len()
    );

    let mut gen = Generator::new(&GeneratorConfig { seed: 1, sparsity: 0.6 });
    // symmetry is not needed for this identity
    let p = gen.multipolynomial(&DegreeSignature::equal(m, n)?, d, 2, false)?;
    let points = gen.vectors(d, d);
    let lambdas = gen.vector(d);
    let (lhs, rhs) = p.expand_combination(&points, &lambdas)?;
    println!("lhs = {lhs}");
    println!("rhs = {rhs}");
    assert_eq!(lhs, rhs);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
