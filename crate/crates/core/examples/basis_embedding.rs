// Basis coefficients of a mixed-signature multipolynomial and its
// embedding as a multilinear map on the concatenated space.

use polarization::random::{Generator, GeneratorConfig};
use polarization::{DegreeSignature, Vector};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let sig = DegreeSignature::new(vec![2, 1])?;
    let mut gen = Generator::new(&GeneratorConfig { seed: 3, sparsity: 0.8 });
    let p = gen.multipolynomial(&sig, 2, 1, false)?;
    println!("P has {} terms with signature ({sig})", p.terms().len());

    let basis = p.basis_coefficients()?;
    for (key, value) in &basis.coeffs {
        println!("  c{key:?} = {value}");
    }

    let points = gen.vectors(2, 2);
    let direct = p.eval(&points)?;
    assert_eq!(basis.eval(&points)?, direct);

    let embedded = p.diagonal_embed()?;
    let u = Vector(points.iter().flat_map(|x| x.iter().cloned()).collect());
    let on_diagonal = embedded.eval(&vec![u; embedded.arity()])?;
    println!("P(x, y) = {direct}, embedded map on the diagonal = {on_diagonal}");
    assert_eq!(direct, on_diagonal);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
