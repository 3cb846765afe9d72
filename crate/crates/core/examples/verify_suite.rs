// Run a seeded verification suite from code.

use polarization::verify::{run, Identity, VerifyParams};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let params = VerifyParams {
        m: 2,
        n: 2,
        trials: 10,
        seed: 7,
        ..VerifyParams::default()
    };
    let report = run(Identity::Multipolarization, &params)?;
    print!("{}", report.render_text());
    assert_eq!(report.exit_code(), 0);

    let faulty = run(Identity::CombinationExpansion, &VerifyParams { inject_fault: true, ..params })?;
    println!("with an injected fault: {} failures", faulty.failures.len());
    assert_eq!(faulty.exit_code(), 1);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
