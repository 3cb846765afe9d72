//! Throughput of the sign-sum kernels on the multipolarization sum.
//!
//! The benchmark input is a fixed symmetric `(n, ..., n)`-homogeneous
//! polynomial on `Q^2` with `m = 2` slots when `mn` is even and `m = 1`
//! otherwise, evaluated on the diagonal with small integer points. Every
//! kernel must return the same exact value.

use std::fmt::Write as _;
use std::time::Instant;

use crate::combinatorics::MultiIndexMatrix;
use crate::error::{Error, Result};
use crate::kernel::{signed_sum, signed_sum_naive, signed_sum_partitioned};
use crate::multipoly::{DegreeSignature, Multipolynomial};
use crate::scalar::Vector;

/// Largest supported `mn`.
pub const MAX_BENCH_MN: usize = 24;

/// One timed kernel.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub kernel: &'static str,
    pub threads: usize,
    pub mn: usize,
    /// Sign vectors per repetition.
    pub terms: u64,
    pub reps: usize,
    pub seconds: f64,
    pub value: Vector,
}

impl BenchRow {
    pub fn terms_per_sec(&self) -> f64 {
        if self.seconds > 0.0 {
            (self.terms * self.reps as u64) as f64 / self.seconds
        } else {
            f64::INFINITY
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
}

impl BenchReport {
    /// True when all kernels produced the same exact value.
    pub fn kernels_agree(&self) -> bool {
        self.rows.windows(2).all(|w| w[0].value == w[1].value)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("kernel,threads,mn,terms,reps,seconds,terms_per_sec,value\n");
        for r in &self.rows {
            writeln!(
                out,
                "{},{},{},{},{},{:.6},{:.0},{}",
                r.kernel,
                r.threads,
                r.mn,
                r.terms,
                r.reps,
                r.seconds,
                r.terms_per_sec(),
                r.value
            )
            .unwrap();
        }
        out
    }
}

/// The benchmark polynomial and its points: `m` slots of degree `mn / m`,
/// with terms `x_{i,1}^n` and `x_{i,1}^{n-1} x_{i,2}` summed over slots.
pub fn bench_instance(mn: usize) -> Result<(Multipolynomial, Vec<Vector>)> {
    if mn == 0 || mn > MAX_BENCH_MN {
        return Err(Error::Bounds(format!("mn must lie in 1..={MAX_BENCH_MN}, got {mn}")));
    }
    let m = if mn.is_multiple_of(2) { 2 } else { 1 };
    let n = mn / m;
    let mut p = Multipolynomial::zero(DegreeSignature::equal(m, n)?, 2, 1);
    let mut power = MultiIndexMatrix::zeros(m, 2);
    for i in 0..m {
        power.set(i, 0, n);
    }
    p.set(power, Vector::from_ints(&[1]))?;
    let mut mixed = MultiIndexMatrix::zeros(m, 2);
    for i in 0..m {
        mixed.set(i, 0, n - 1);
        mixed.set(i, 1, 1);
    }
    p.set(mixed, Vector::from_ints(&[-2]))?;
    let points = [Vector::from_ints(&[1, 2]), Vector::from_ints(&[-1, 1])];
    Ok((p, points[..m].to_vec()))
}

/// Times the Gray, naive and partitioned kernels on [`bench_instance`].
pub fn run_bench(mn: usize, reps: usize) -> Result<BenchReport> {
    let (p, points) = bench_instance(mn)?;
    let reps = reps.max(1);
    let n = mn / p.slots();
    let directions: Vec<Vector> = points
        .iter()
        .flat_map(|x| std::iter::repeat_n(x.clone(), n))
        .collect();
    let x0 = Vector::zeros(2);
    let diagonal = |y: &Vector| p.diag_eval(y).expect("dimensions match");
    let terms = 1u64 << mn;
    let threads = rayon::current_num_threads();
    let split = threads.next_power_of_two().trailing_zeros() as usize + 2;

    let mut rows = Vec::new();
    let mut time = |kernel: &'static str, threads: usize, run: &dyn Fn() -> Result<Vector>| -> Result<()> {
        let start = Instant::now();
        let mut value = run()?;
        for _ in 1..reps {
            value = run()?;
        }
        rows.push(BenchRow {
            kernel,
            threads,
            mn,
            terms,
            reps,
            seconds: start.elapsed().as_secs_f64(),
            value,
        });
        Ok(())
    };
    time("gray", 1, &|| signed_sum(&x0, &directions, diagonal))?;
    time("naive", 1, &|| signed_sum_naive(&x0, &directions, diagonal))?;
    time("partitioned", threads, &|| {
        signed_sum_partitioned(&x0, &directions, split, diagonal)
    })?;
    Ok(BenchReport { rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernels_agree_and_count() {
        let report = run_bench(4, 1).unwrap();
        assert!(report.kernels_agree());
        assert_eq!(report.rows.len(), 3);
        assert!(report.rows.iter().all(|r| r.terms == 16));
        assert!(report.to_csv().starts_with("kernel,threads,mn,"));
        assert_eq!(report.to_csv().lines().count(), 4);
    }

    #[test]
    fn value_matches_diagonal_sign_sum() {
        for mn in [3, 6] {
            let (p, points) = bench_instance(mn).unwrap();
            let report = run_bench(mn, 1).unwrap();
            let expected = p.diagonal_sign_sum(&Vector::zeros(2), &points).unwrap();
            assert_eq!(report.rows[0].value, expected);
        }
    }

    #[test]
    fn bounds() {
        assert!(run_bench(0, 1).is_err());
        assert!(run_bench(25, 1).is_err());
    }
}
