// Sign enumeration: Gray order, the signed power sums, and the three
// sign-sum kernels on a small benchmark input.

use polarization::bench::run_bench;
use polarization::{enumerate_sign_vectors, signed_power_sum};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for eps in enumerate_sign_vectors(3)? {
        println!("{:?} product {}", eps.signs(), eps.product());
    }
    for p in 0..=4 {
        println!("sum e1..e4 (e1 + ... + e4)^{p} = {}", signed_power_sum(4, p)?);
    }

    let report = run_bench(10, 1)?;
    print!("{}", report.to_csv());
    assert!(report.kernels_agree());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
