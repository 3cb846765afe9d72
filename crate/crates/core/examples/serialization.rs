// Write and parse the plain-text coefficient format.

use polarization::format::{write_multipolynomial, Document};
use polarization::random::{Generator, GeneratorConfig};
use polarization::{DegreeSignature, Error};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut gen = Generator::new(&GeneratorConfig { seed: 2, sparsity: 0.4 });
    let p = gen.multipolynomial(&DegreeSignature::new(vec![1, 2])?, 2, 2, false)?;
    let text = write_multipolynomial(&p);
    print!("{text}");

    let parsed = Document::parse(&text)?;
    assert_eq!(parsed, Document::Multipolynomial(p));
    assert_eq!(parsed.to_text(), text);

    let broken = text.replacen("terms:", "terms:\n0 1 | 2 0 => 1/0 2", 1);
    match Document::parse(&broken) {
        Err(Error::Parse { line, column, message }) => println!("line {line}, column {column}: {message}"),
        other => panic!("expected a parse error, got {other:?}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
