//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::fs;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use polarization::bench::run_bench;
use polarization::format::{parse_points, write_multilinear, write_multipolynomial, write_points, Document};
use polarization::random::{Generator, GeneratorConfig};
use polarization::scalar::{factorial, int, pow2, ratio};
use polarization::verify::{counterexample_polynomial, run, Identity, VerifyParams};
use polarization::{psi, signed_power_sum, DegreeSignature, Error, Vector};

type Outcome = Result<String, String>;

fn ensure(cond: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(message())
    }
}

fn lib(e: Error) -> String {
    e.to_string()
}

fn gen(seed: u64) -> Generator {
    Generator::new(&GeneratorConfig { seed, sparsity: 0.75 })
}

fn counterexample_values() -> Outcome {
    let p = counterexample_polynomial();
    let x0 = Vector::zeros(2);
    let pts = [Vector::basis(2, 0), Vector::basis(2, 1)];
    let checks = [
        ("eval", p.eval(&pts).map_err(lib)?, Vector::from_ints(&[0])),
        (
            "entire",
            p.entire_polarization_rhs(&x0, &pts).map_err(lib)?,
            Vector(vec![ratio(1, 6)]),
        ),
        ("remainder", p.remainder(&pts).map_err(lib)?, Vector::from_ints(&[16])),
        ("multipolarize", p.multipolarize(&x0, &pts).map_err(lib)?, Vector::from_ints(&[0])),
    ];
    for (name, got, want) in &checks {
        ensure(got == want, || format!("{name}: got {got}, expected {want}"))?;
    }
    let image = p.in_image_psi().map_err(lib)?;
    ensure(!image.member, || "in_image_psi returned true".into())?;
    Ok("eval 0, entire 1/6, remainder 16, multipolarize 0, not in image".into())
}

fn multipolarization_suite() -> Outcome {
    let mut trials = 0;
    for (case, (m, n, d)) in [(2, 2, 2), (2, 2, 3), (3, 2, 2), (2, 3, 2)].into_iter().enumerate() {
        let mut g = gen(100 + case as u64);
        let sig = DegreeSignature::equal(m, n).map_err(lib)?;
        for t in 0..25 {
            let p = g.multipolynomial(&sig, d, 1, true).map_err(lib)?;
            let pts = g.vectors(m, d);
            let x0 = g.vector(d);
            let want = p.eval(&pts).map_err(lib)?;
            for base in [Vector::zeros(d), x0] {
                let got = p.multipolarize(&base, &pts).map_err(lib)?;
                ensure(got == want, || {
                    format!("(m,n,d)=({m},{n},{d}) trial {t} x0={base}: {got} != {want}")
                })?;
            }
            trials += 1;
        }
    }
    Ok(format!("{trials} trials, two base points each"))
}

fn linear_collapse() -> Outcome {
    let mut trials = 0;
    for m in 1..=4 {
        for d in 1..=3 {
            let mut g = gen(200 + 10 * m as u64 + d as u64);
            let sig = DegreeSignature::equal(m, 1).map_err(lib)?;
            for t in 0..25 {
                let p = g.multipolynomial(&sig, d, 1, true).map_err(lib)?;
                let pts = g.vectors(m, d);
                let x0 = g.vector(d);
                let rem = p.remainder(&pts).map_err(lib)?;
                ensure(rem.is_zero(), || format!("m={m} d={d} trial {t}: remainder {rem}"))?;
                let classical = p
                    .to_multilinear()
                    .and_then(|a| a.polarization_formula_value(&x0, &pts))
                    .map_err(lib)?;
                let got = p.multipolarize(&x0, &pts).map_err(lib)?;
                ensure(got == classical, || format!("m={m} d={d} trial {t}: {got} != {classical}"))?;
                trials += 1;
            }
        }
    }
    Ok(format!("{trials} trials over m<=4, d<=3"))
}

fn classical_round_trips() -> Outcome {
    let mut maps = 0;
    let mut polys = 0;
    for m in 1..=4 {
        for d in 1..=3 {
            let mut g = gen(300 + 10 * m as u64 + d as u64);
            for t in 0..25 {
                let a = g.multilinear(m, d, 1, true).map_err(lib)?;
                let back = a.hat().polarize(None).map_err(lib)?;
                ensure(back == a, || format!("polarize(hat A) != A at m={m} d={d} trial {t}"))?;
                maps += 1;
                let p = g.homogeneous(m, d, 1).map_err(lib)?;
                let again = p.polarize(None).map_err(lib)?.hat();
                ensure(again == p, || format!("hat(polarize P) != P at m={m} d={d} trial {t}"))?;
                polys += 1;
            }
        }
    }
    Ok(format!("{maps} maps and {polys} polynomials over m<=4, d<=3"))
}

fn leibniz_and_expansion() -> Outcome {
    let mut leibniz = 0;
    for m in 1..=3 {
        for k in 1..=3 {
            for d in 1..=3 {
                let mut g = gen(400 + 100 * m as u64 + 10 * k as u64 + d as u64);
                for t in 0..25 {
                    let a = g.multilinear(m, d, 1, true).map_err(lib)?;
                    let pts = g.vectors(k, d);
                    let (lhs, rhs) = a.verify_leibniz(&pts).map_err(lib)?;
                    ensure(lhs == rhs, || format!("Leibniz m={m} k={k} d={d} trial {t}: {lhs} != {rhs}"))?;
                    leibniz += 1;
                }
            }
        }
    }
    let mut expansion = 0;
    let mut cases = 0;
    for m in 1..=3 {
        for n in 1..=3 {
            for d in 1..=3 {
                let mut g = gen(500 + 100 * m as u64 + 10 * n as u64 + d as u64);
                let sig = DegreeSignature::equal(m, n).map_err(lib)?;
                for t in 0..25 {
                    let p = g.multipolynomial(&sig, d, 1, false).map_err(lib)?;
                    let pts = g.vectors(d, d);
                    let lambdas = g.vector(d);
                    let (lhs, rhs) = p.expand_combination(&pts, &lambdas).map_err(lib)?;
                    ensure(lhs == rhs, || {
                        format!("expansion (m,n,d)=({m},{n},{d}) trial {t}: {lhs} != {rhs}")
                    })?;
                    expansion += 1;
                }
                cases += 1;
            }
        }
    }
    Ok(format!(
        "{leibniz} Leibniz trials, {expansion} expansion trials over {cases} (m,n,d) cases"
    ))
}

fn basis_and_embedding() -> Outcome {
    let signatures: [&[usize]; 5] = [&[1], &[2], &[1, 1], &[2, 1], &[2, 2]];
    let mut tuples = 0;
    for (s, degrees) in signatures.iter().enumerate() {
        let sig = DegreeSignature::new(degrees.to_vec()).map_err(lib)?;
        for d in 1..=2 {
            let mut g = gen(600 + 10 * s as u64 + d as u64);
            let p = g.multipolynomial(&sig, d, 2, false).map_err(lib)?;
            let basis = p.basis_coefficients().map_err(lib)?;
            let embedded = p.diagonal_embed().map_err(lib)?;
            for t in 0..20 {
                let pts = g.vectors(sig.slots(), d);
                let want = p.eval(&pts).map_err(lib)?;
                let got = basis.eval(&pts).map_err(lib)?;
                ensure(got == want, || format!("basis ({sig}) d={d} tuple {t}: {got} != {want}"))?;
                let u = Vector(pts.iter().flat_map(|x| x.iter().cloned()).collect());
                let diag = embedded.eval(&vec![u; embedded.arity()]).map_err(lib)?;
                ensure(diag == want, || format!("embedding ({sig}) d={d} tuple {t}: {diag} != {want}"))?;
                tuples += 1;
            }
        }
    }
    Ok(format!("{tuples} point tuples over 5 signatures, d<=2"))
}

fn psi_round_trip() -> Outcome {
    let mut g = gen(700);
    let basis_tuples: Vec<[Vector; 2]> = (0..2)
        .flat_map(|i| (0..2).map(move |j| [Vector::basis(2, i), Vector::basis(2, j)]))
        .collect();
    let mut evaluations = 0;
    for t in 0..25 {
        let a = g.multilinear(4, 2, 1, true).map_err(lib)?;
        let p = psi(&a, 2).map_err(lib)?;
        let image = p.in_image_psi().map_err(lib)?;
        ensure(image.member, || format!("trial {t}: Psi(A) reported as non-member"))?;
        ensure(image.witness.as_ref() == Some(&a), || format!("trial {t}: witness differs from A"))?;
        let candidate = p.psi_candidate().map_err(lib)?;
        ensure(candidate == a, || format!("trial {t}: candidate differs from A"))?;

        let mut tuples: Vec<Vec<Vector>> = basis_tuples.iter().map(|b| b.to_vec()).collect();
        tuples.extend((0..10).map(|_| g.vectors(2, 2)));
        let x0 = g.vector(2);
        for pts in &tuples {
            let want = p.eval(pts).map_err(lib)?;
            let got = p.entire_polarization_rhs(&x0, pts).map_err(lib)?;
            ensure(got == want, || format!("trial {t}: entire formula {got} != {want}"))?;
            evaluations += 1;
        }
    }
    Ok(format!("25 round trips, {evaluations} entire-formula checks"))
}

fn power_sum_table() -> Outcome {
    let mut entries = 0;
    for n in 1..=6 {
        for p in 0..=n {
            let want = if p < n { int(0) } else { factorial(n) * pow2(n) };
            let got = signed_power_sum(n, p).map_err(lib)?;
            ensure(got == want, || format!("n={n} p={p}: {got} != {want}"))?;
            entries += 1;
        }
    }
    Ok(format!("{entries} table entries"))
}

fn nullspace() -> Outcome {
    let mut nonzero = 0;
    for (s, degrees) in [vec![1, 2], vec![2, 3]].into_iter().enumerate() {
        let sig = DegreeSignature::new(degrees).map_err(lib)?;
        let mut g = gen(900 + s as u64);
        for t in 0..25 {
            let p = g.multipolynomial(&sig, 2, 1, false).map_err(lib)?;
            let symmetric = p.is_symmetric().map_err(lib)?;
            ensure(symmetric == p.is_zero(), || {
                format!("({sig}) trial {t}: symmetric={symmetric}, zero={}", p.is_zero())
            })?;
            nonzero += usize::from(!p.is_zero());
        }
        let attempt = g.multipolynomial(&sig, 2, 1, true);
        ensure(matches!(attempt, Err(Error::Contract(_))), || {
            format!("({sig}): symmetric construction was not rejected")
        })?;
    }
    ensure(nonzero > 0, || "no nonzero multipolynomial generated".into())?;
    Ok(format!("{nonzero} nonzero mixed-signature samples all non-symmetric"))
}

fn engineering() -> Outcome {
    // serialization on every fixture file and on random objects
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let mut fixtures = 0;
    let mut entries: Vec<_> = fs::read_dir(&dir).map_err(|e| e.to_string())?.collect();
    entries.sort_by_key(|e| e.as_ref().map(|e| e.path()).ok());
    for entry in entries {
        let path = entry.map_err(|e| e.to_string())?.path();
        if path.ends_with("malformed.mpol") {
            continue;
        }
        let text = fs::read_to_string(&path).map_err(|e| e.to_string())?;
        let (canonical, again) = match path.extension().and_then(|e| e.to_str()) {
            Some("mpol") => {
                let canonical = Document::parse(&text).map_err(lib)?.to_text();
                let again = Document::parse(&canonical).map_err(lib)?.to_text();
                (canonical, again)
            }
            Some("points") => {
                let canonical = write_points(&parse_points(&text).map_err(lib)?);
                let again = write_points(&parse_points(&canonical).map_err(lib)?);
                (canonical, again)
            }
            _ => continue,
        };
        ensure(again == canonical, || format!("{} does not round trip", path.display()))?;
        fixtures += 1;
    }
    let mut g = gen(1000);
    for _ in 0..25 {
        let a = g.multilinear(3, 2, 2, false).map_err(lib)?;
        let text = write_multilinear(&a);
        ensure(Document::parse(&text).map_err(lib)?.to_text() == text, || "multilinear round trip".into())?;
        let p = g
            .multipolynomial(&DegreeSignature::new(vec![2, 1]).map_err(lib)?, 3, 2, false)
            .map_err(lib)?;
        let text = write_multipolynomial(&p);
        ensure(Document::parse(&text).map_err(lib)?.to_text() == text, || "multipolynomial round trip".into())?;
    }

    // kernel equivalence on the bench inputs
    for mn in 1..=14 {
        let report = run_bench(mn, 1).map_err(lib)?;
        ensure(report.kernels_agree(), || format!("kernels disagree at mn={mn}"))?;
    }

    // seed determinism, library and CLI
    for id in Identity::ALL {
        let params = VerifyParams {
            trials: 3,
            seed: 17,
            ..VerifyParams::default()
        };
        let a = run(id, &params).map_err(lib)?;
        let b = run(id, &params).map_err(lib)?;
        ensure(a.render_text() == b.render_text() && a.render_json() == b.render_json(), || {
            format!("{id}: reports differ between identical runs")
        })?;
    }
    let cli = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_mpol"))
            .args(args)
            .output()
            .map(|o| (o.status.code(), o.stdout))
    };
    let args = ["--seed", "7", "--trials", "5", "verify", "multipolarization"];
    let first = cli(&args).map_err(|e| e.to_string())?;
    let second = cli(&args).map_err(|e| e.to_string())?;
    ensure(first == second && first.0 == Some(0), || "CLI reports are not byte-identical".into())?;

    Ok(format!(
        "{fixtures} fixtures + 50 random objects round trip, kernels agree for mn<=14, reports reproducible"
    ))
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "counterexample values", limit: Some(Duration::from_secs(1)), run: counterexample_values },
        Criterion { id: 2, name: "multipolarization with remainder", limit: Some(Duration::from_secs(60)), run: multipolarization_suite },
        Criterion { id: 3, name: "n = 1 collapse to the classical formula", limit: None, run: linear_collapse },
        Criterion { id: 4, name: "classical round trips", limit: Some(Duration::from_secs(10)), run: classical_round_trips },
        Criterion { id: 5, name: "Leibniz and combination expansion", limit: Some(Duration::from_secs(30)), run: leibniz_and_expansion },
        Criterion { id: 6, name: "basis coefficients and diagonal embedding", limit: Some(Duration::from_secs(30)), run: basis_and_embedding },
        Criterion { id: 7, name: "Psi round trip and entire formula", limit: None, run: psi_round_trip },
        Criterion { id: 8, name: "signed power sums", limit: None, run: power_sum_table },
        Criterion { id: 9, name: "mixed signatures are never symmetric", limit: None, run: nullspace },
        Criterion { id: 10, name: "serialization, kernels, determinism", limit: None, run: engineering },
    ];

    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match (outcome, c.limit) {
            (Ok(_), Some(limit)) if elapsed > limit => {
                Err(format!("took {:.2}s, limit {}s", elapsed.as_secs_f64(), limit.as_secs()))
            }
            (other, _) => other,
        };
        let (tag, detail) = match &outcome {
            Ok(detail) => ("PASS", detail.clone()),
            Err(detail) => {
                failed += 1;
                ("FAIL", detail.clone())
            }
        };
        println!("{tag} [{:>2}] {} ({:.2}s): {detail}", c.id, c.name, elapsed.as_secs_f64());
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
