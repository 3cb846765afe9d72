//! Seeded verification suites for the identities implemented by the crate,
//! plus the worked counterexample report.
//!
//! A suite draws its inputs from one [`Generator`] stream, evaluates both
//! sides of an identity exactly, and records every disagreement together
//! with the serialized inputs. The report carries a SHA-256 digest of all
//! trial inputs, so two runs with the same seed can be compared byte for
//! byte.

use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::combinatorics::{signed_power_sum, MultiIndexMatrix};
use crate::error::{Error, Result};
use crate::format::{write_multilinear, write_multipolynomial, write_points};
use crate::multilinear::MultilinearMap;
use crate::multipoly::{psi, DegreeSignature, Multipolynomial};
use crate::random::{Generator, GeneratorConfig};
use crate::scalar::{factorial, int, pow2, ratio, Scalar, Vector};

/// Identities that `verify` can check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    Leibniz,
    PolarizationRoundtrip,
    CombinationExpansion,
    BasisExpansion,
    DiagonalEmbedding,
    RemainderLinear,
    Multipolarization,
    BasePointInvariance,
    EntirePolarization,
    PsiRoundtrip,
    SignedPowerSum,
    Nullspace,
}

impl Identity {
    pub const ALL: [Identity; 12] = [
        Identity::Leibniz,
        Identity::PolarizationRoundtrip,
        Identity::CombinationExpansion,
        Identity::BasisExpansion,
        Identity::DiagonalEmbedding,
        Identity::RemainderLinear,
        Identity::Multipolarization,
        Identity::BasePointInvariance,
        Identity::EntirePolarization,
        Identity::PsiRoundtrip,
        Identity::SignedPowerSum,
        Identity::Nullspace,
    ];

    /// Command-line name.
    pub fn name(self) -> &'static str {
        match self {
            Identity::Leibniz => "leibniz",
            Identity::PolarizationRoundtrip => "polarization-roundtrip",
            Identity::CombinationExpansion => "eq-c",
            Identity::BasisExpansion => "thm-2-1",
            Identity::DiagonalEmbedding => "cor-2-2",
            Identity::RemainderLinear => "remainder-n1",
            Identity::Multipolarization => "multipolarization",
            Identity::BasePointInvariance => "x0-invariance",
            Identity::EntirePolarization => "entire-polarization",
            Identity::PsiRoundtrip => "psi-roundtrip",
            Identity::SignedPowerSum => "signed-power-sum",
            Identity::Nullspace => "nullspace",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::Contract(format!("unknown identity `{s}`")))
    }
}

/// Parameters shared by all suites. Not every suite reads every field.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyParams {
    pub m: usize,
    pub n: usize,
    /// Explicit signature for the basis, embedding and nullspace suites.
    pub degrees: Option<Vec<usize>>,
    pub dim: usize,
    pub codim: usize,
    pub trials: usize,
    pub seed: u64,
    pub sparsity: f64,
    /// Perturb one coefficient on the right-hand side (failure-path check).
    pub inject_fault: bool,
}

impl Default for VerifyParams {
    fn default() -> Self {
        VerifyParams {
            m: 2,
            n: 2,
            degrees: None,
            dim: 2,
            codim: 1,
            trials: 25,
            seed: 0,
            sparsity: 0.75,
            inject_fault: false,
        }
    }
}

impl VerifyParams {
    fn signature(&self) -> Result<DegreeSignature> {
        match &self.degrees {
            Some(d) => DegreeSignature::new(d.clone()),
            None => DegreeSignature::equal(self.m, self.n),
        }
    }

    fn generator(&self) -> Generator {
        Generator::new(&GeneratorConfig {
            seed: self.seed,
            sparsity: self.sparsity,
        })
    }

    fn describe(&self) -> String {
        let degrees = self
            .degrees
            .as_ref()
            .map(|d| format!(" degrees={}", d.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
            .unwrap_or_default();
        format!(
            "m={} n={}{degrees} dim={} codim={} trials={} seed={} sparsity={}",
            self.m, self.n, self.dim, self.codim, self.trials, self.seed, self.sparsity
        )
    }
}

/// A single disagreement between the two sides of an identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub trial: usize,
    pub check: String,
    pub inputs: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of a suite.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub params: VerifyParams,
    pub trials_run: usize,
    pub checks: usize,
    pub inputs_digest: String,
    pub failures: Vec<Failure>,
    /// Wall-clock time; kept out of the rendered report so that reruns
    /// compare equal.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// `0` when every check passed, `1` otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "identity: {}", self.identity).unwrap();
        writeln!(out, "params: {}", self.params.describe()).unwrap();
        writeln!(out, "trials-run: {}", self.trials_run).unwrap();
        writeln!(out, "checks: {}", self.checks).unwrap();
        writeln!(out, "inputs-digest: {}", self.inputs_digest).unwrap();
        writeln!(out, "failures: {}", self.failures.len()).unwrap();
        for f in &self.failures {
            writeln!(out, "failure: trial={} check={}", f.trial, f.check).unwrap();
            writeln!(out, "  lhs: {}", f.lhs).unwrap();
            writeln!(out, "  rhs: {}", f.rhs).unwrap();
            out.push_str("  inputs:\n");
            for line in f.inputs.lines() {
                writeln!(out, "    {line}").unwrap();
            }
        }
        writeln!(out, "status: {}", if self.passed() { "pass" } else { "fail" }).unwrap();
        out
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serializable") + "\n"
    }
}

struct Recorder {
    digest: Sha256,
    checks: usize,
    failures: Vec<Failure>,
}

impl Recorder {
    fn new() -> Self {
        Recorder {
            digest: Sha256::new(),
            checks: 0,
            failures: Vec::new(),
        }
    }

    fn inputs(&mut self, trial: usize, text: &str) {
        self.digest.update(format!("trial {trial}\n"));
        self.digest.update(text.as_bytes());
    }

    fn compare<T: PartialEq + fmt::Display>(&mut self, trial: usize, check: &str, inputs: &str, lhs: &T, rhs: &T) {
        self.checks += 1;
        if lhs != rhs {
            self.failures.push(Failure {
                trial,
                check: check.to_string(),
                inputs: inputs.to_string(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }
}

fn with_points(objects: &[String], named: &[(&str, &[Vector])]) -> String {
    let mut out: String = objects.concat();
    for (name, pts) in named {
        writeln!(out, "{name}:").unwrap();
        out.push_str(&write_points(pts));
    }
    out
}

/// Adds one to the coefficient of `x_{i,1}^{n_i}` in every slot (a term that
/// row permutations fix, so symmetry is kept).
fn corrupt_poly(p: &Multipolynomial) -> Result<Multipolynomial> {
    let mut alpha = MultiIndexMatrix::zeros(p.slots(), p.dim());
    for (i, &n) in p.signature().degrees().iter().enumerate() {
        alpha.set(i, 0, n);
    }
    let mut bump = Vector::zeros(p.codim());
    bump[0] = int(1);
    let mut out = p.clone();
    out.add_to(alpha, &bump)?;
    Ok(out)
}

fn corrupt_map(a: &MultilinearMap) -> Result<MultilinearMap> {
    let mut bump = Vector::zeros(a.codim());
    bump[0] = int(1);
    let mut out = a.clone();
    out.add_to(vec![0; a.arity()], &bump)?;
    Ok(out)
}

fn maybe<T>(fault: bool, value: &T, corrupt: impl Fn(&T) -> Result<T>) -> Result<T>
where
    T: Clone,
{
    if fault {
        corrupt(value)
    } else {
        Ok(value.clone())
    }
}

/// Displays a polynomial object by its serialized form.
struct Serialized(String);

impl PartialEq for Serialized {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl fmt::Display for Serialized {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // single line for the report
        f.write_str(&self.0.trim_end().replace('\n', "; "))
    }
}

/// Runs one suite.
pub fn run(identity: Identity, params: &VerifyParams) -> Result<VerificationReport> {
    if params.trials == 0 {
        return Err(Error::Contract("trials must be positive".into()));
    }
    if params.m == 0 || params.n == 0 || params.dim == 0 || params.codim == 0 {
        return Err(Error::Contract("m, n, dim and codim must be positive".into()));
    }
    if !(0.0..=1.0).contains(&params.sparsity) {
        return Err(Error::Contract("sparsity must lie in [0, 1]".into()));
    }
    let supports_fault = matches!(
        identity,
        Identity::Leibniz
            | Identity::CombinationExpansion
            | Identity::BasisExpansion
            | Identity::DiagonalEmbedding
            | Identity::Multipolarization
            | Identity::EntirePolarization
    );
    if params.inject_fault && !supports_fault {
        return Err(Error::Contract(format!("fault injection is not available for `{identity}`")));
    }

    let start = Instant::now();
    let mut rec = Recorder::new();
    let mut gen = params.generator();
    let (m, n, dim, codim, fault) = (params.m, params.n, params.dim, params.codim, params.inject_fault);
    let mut trials_run = 0;

    match identity {
        Identity::SignedPowerSum => {
            // deterministic table, no random inputs
            let top = params.n.max(6);
            for size in 1..=top {
                for p in 0..=size {
                    let expected = if p < size { int(0) } else { factorial(size) * pow2(size) };
                    let inputs = format!("n={size} p={p}\n");
                    rec.inputs(trials_run, &inputs);
                    let got = signed_power_sum(size, p)?;
                    rec.compare(trials_run, "table", &inputs, &got, &expected);
                    trials_run += 1;
                }
            }
        }
        _ => {
            for trial in 0..params.trials {
                run_trial(identity, trial, params, &mut gen, &mut rec, (m, n, dim, codim, fault))?;
                trials_run += 1;
            }
        }
    }

    Ok(VerificationReport {
        identity: identity.name().to_string(),
        params: params.clone(),
        trials_run,
        checks: rec.checks,
        inputs_digest: hex::encode(rec.digest.finalize()),
        failures: rec.failures,
        elapsed: start.elapsed(),
    })
}

fn run_trial(
    identity: Identity,
    trial: usize,
    params: &VerifyParams,
    gen: &mut Generator,
    rec: &mut Recorder,
    (m, n, dim, codim, fault): (usize, usize, usize, usize, bool),
) -> Result<()> {
    match identity {
        Identity::Leibniz => {
            let a = gen.multilinear(m, dim, codim, true)?;
            let points = gen.vectors(n, dim);
            let inputs = with_points(&[write_multilinear(&a)], &[("points", &points)]);
            rec.inputs(trial, &inputs);
            let (lhs, _) = a.verify_leibniz(&points)?;
            let (_, rhs) = maybe(fault, &a, corrupt_map)?.verify_leibniz(&points)?;
            rec.compare(trial, "leibniz", &inputs, &lhs, &rhs);
        }
        Identity::PolarizationRoundtrip => {
            let a = gen.multilinear(m, dim, codim, true)?;
            let p = gen.homogeneous(m, dim, codim)?;
            let p_multi = Multipolynomial::from_homogeneous(&p)?;
            let inputs = with_points(&[write_multilinear(&a), write_multipolynomial(&p_multi)], &[]);
            rec.inputs(trial, &inputs);
            let back = a.hat().polarize(None)?;
            rec.compare(
                trial,
                "polarize-after-hat",
                &inputs,
                &Serialized(write_multilinear(&a)),
                &Serialized(write_multilinear(&back)),
            );
            let again = Multipolynomial::from_homogeneous(&p.polarize(None)?.hat())?;
            rec.compare(
                trial,
                "hat-after-polarize",
                &inputs,
                &Serialized(write_multipolynomial(&p_multi)),
                &Serialized(write_multipolynomial(&again)),
            );
        }
        Identity::CombinationExpansion => {
            let p = gen.multipolynomial(&DegreeSignature::equal(m, n)?, dim, codim, false)?;
            let points = gen.vectors(dim, dim);
            let lambdas = gen.vector(dim);
            let inputs = with_points(
                &[write_multipolynomial(&p)],
                &[("points", &points), ("lambdas", std::slice::from_ref(&lambdas))],
            );
            rec.inputs(trial, &inputs);
            let (lhs, _) = p.expand_combination(&points, &lambdas)?;
            let (_, rhs) = maybe(fault, &p, corrupt_poly)?.expand_combination(&points, &lambdas)?;
            rec.compare(trial, "expansion", &inputs, &lhs, &rhs);
        }
        Identity::BasisExpansion => {
            let sig = params.signature()?;
            let p = gen.multipolynomial(&sig, dim, codim, false)?;
            let points = gen.vectors(sig.slots(), dim);
            let inputs = with_points(&[write_multipolynomial(&p)], &[("points", &points)]);
            rec.inputs(trial, &inputs);
            let lhs = p.eval(&points)?;
            let rhs = maybe(fault, &p, corrupt_poly)?.basis_coefficients()?.eval(&points)?;
            rec.compare(trial, "reconstruction", &inputs, &lhs, &rhs);
        }
        Identity::DiagonalEmbedding => {
            let sig = params.signature()?;
            let p = gen.multipolynomial(&sig, dim, codim, false)?;
            let points = gen.vectors(sig.slots(), dim);
            let inputs = with_points(&[write_multipolynomial(&p)], &[("points", &points)]);
            rec.inputs(trial, &inputs);
            let lhs = p.eval(&points)?;
            let embedded = maybe(fault, &p, corrupt_poly)?.diagonal_embed()?;
            let u = Vector(points.iter().flat_map(|x| x.iter().cloned()).collect());
            let rhs = embedded.eval(&vec![u; embedded.arity()])?;
            rec.compare(trial, "diagonal", &inputs, &lhs, &rhs);
        }
        Identity::RemainderLinear => {
            let p = gen.multipolynomial(&DegreeSignature::equal(m, 1)?, dim, codim, true)?;
            let points = gen.vectors(m, dim);
            let x0 = gen.vector(dim);
            let inputs = with_points(
                &[write_multipolynomial(&p)],
                &[("points", &points), ("x0", std::slice::from_ref(&x0))],
            );
            rec.inputs(trial, &inputs);
            let rem = p.remainder(&points)?;
            rec.compare(trial, "remainder-zero", &inputs, &rem, &Vector::zeros(codim));
            let classical = p.to_multilinear()?.polarization_formula_value(&x0, &points)?;
            let multi = p.multipolarize(&x0, &points)?;
            rec.compare(trial, "classical-formula", &inputs, &multi, &classical);
        }
        Identity::Multipolarization => {
            let p = gen.multipolynomial(&DegreeSignature::equal(m, n)?, dim, codim, true)?;
            let points = gen.vectors(m, dim);
            let x0 = gen.vector(dim);
            let inputs = with_points(
                &[write_multipolynomial(&p)],
                &[("points", &points), ("x0", std::slice::from_ref(&x0))],
            );
            rec.inputs(trial, &inputs);
            let lhs = p.eval(&points)?;
            let q = maybe(fault, &p, corrupt_poly)?;
            let at_zero = q.multipolarize(&Vector::zeros(dim), &points)?;
            rec.compare(trial, "x0=0", &inputs, &lhs, &at_zero);
            let at_x0 = q.multipolarize(&x0, &points)?;
            rec.compare(trial, "x0=random", &inputs, &lhs, &at_x0);
        }
        Identity::BasePointInvariance => {
            let p = gen.multipolynomial(&DegreeSignature::equal(m, n)?, dim, codim, true)?;
            let h = gen.homogeneous(m, dim, codim)?;
            let points = gen.vectors(m, dim);
            let x0 = gen.vector(dim);
            let inputs = with_points(
                &[write_multipolynomial(&p), write_multipolynomial(&Multipolynomial::from_homogeneous(&h)?)],
                &[("points", &points), ("x0", std::slice::from_ref(&x0))],
            );
            rec.inputs(trial, &inputs);
            let zero = Vector::zeros(dim);
            rec.compare(
                trial,
                "sign-sum",
                &inputs,
                &p.diagonal_sign_sum(&zero, &points)?,
                &p.diagonal_sign_sum(&x0, &points)?,
            );
            rec.compare(
                trial,
                "polarize",
                &inputs,
                &Serialized(write_multilinear(&h.polarize(None)?)),
                &Serialized(write_multilinear(&h.polarize(Some(&x0))?)),
            );
        }
        Identity::EntirePolarization => {
            let a = gen.multilinear(m * n, dim, codim, true)?;
            let p = psi(&a, m)?;
            let points = gen.vectors(m, dim);
            let x0 = gen.vector(dim);
            let inputs = with_points(
                &[write_multilinear(&a)],
                &[("points", &points), ("x0", std::slice::from_ref(&x0))],
            );
            rec.inputs(trial, &inputs);
            let lhs = p.eval(&points)?;
            let rhs = maybe(fault, &p, corrupt_poly)?.entire_polarization_rhs(&x0, &points)?;
            rec.compare(trial, "entire", &inputs, &lhs, &rhs);
        }
        Identity::PsiRoundtrip => {
            let a = gen.multilinear(m * n, dim, codim, true)?;
            let b = gen.multilinear(m * n, dim, codim, true)?;
            let lambda = gen.scalar();
            let inputs = with_points(&[write_multilinear(&a), write_multilinear(&b)], &[]);
            rec.inputs(trial, &format!("{inputs}lambda: {lambda}\n"));
            let p = psi(&a, m)?;
            let witness = p.in_image_psi()?;
            rec.compare(trial, "member", &inputs, &witness.member.to_string(), &"true".to_string());
            let recovered = witness.witness.map(|w| write_multilinear(&w)).unwrap_or_default();
            rec.compare(
                trial,
                "witness",
                &inputs,
                &Serialized(write_multilinear(&a)),
                &Serialized(recovered),
            );
            let combined = psi(&a.add_scaled(&lambda, &b)?, m)?;
            let separate = p.add_scaled(&lambda, &psi(&b, m)?)?;
            rec.compare(
                trial,
                "linearity",
                &inputs,
                &Serialized(write_multipolynomial(&combined)),
                &Serialized(write_multipolynomial(&separate)),
            );
        }
        Identity::Nullspace => {
            let sig = match &params.degrees {
                Some(d) => DegreeSignature::new(d.clone())?,
                None => DegreeSignature::new(vec![1, 2])?,
            };
            if sig.is_equal() {
                return Err(Error::Contract("the nullspace suite needs a mixed signature".into()));
            }
            let p = gen.multipolynomial(&sig, dim, codim, false)?;
            let inputs = write_multipolynomial(&p);
            rec.inputs(trial, &inputs);
            let symmetric = p.is_symmetric()?;
            rec.compare(trial, "symmetric-implies-zero", &inputs, &symmetric, &p.is_zero());
            if trial == 0 {
                let attempt = gen.multipolynomial(&sig, dim, codim, true);
                let rejected = matches!(attempt, Err(Error::Contract(_)));
                rec.compare(trial, "symmetric-construction-rejected", &inputs, &rejected, &true);
            }
        }
        Identity::SignedPowerSum => unreachable!("handled without trials"),
    }
    Ok(())
}

/// One line of the counterexample report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CounterexampleLine {
    pub quantity: String,
    pub computed: String,
    pub expected: String,
    pub ok: bool,
}

/// The non-surjectivity example for `Psi`: `P(x, y) = x_1 x_2 y_1 y_2` on
/// `Q^2`, evaluated at `x0 = 0`, `x = e_1`, `y = e_2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CounterexampleReport {
    pub polynomial: String,
    pub lines: Vec<CounterexampleLine>,
}

impl CounterexampleReport {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.ok)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::from("polynomial:\n");
        for line in self.polynomial.lines() {
            writeln!(out, "  {line}").unwrap();
        }
        for l in &self.lines {
            writeln!(
                out,
                "{}: {} (expected {}) {}",
                l.quantity,
                l.computed,
                l.expected,
                if l.ok { "ok" } else { "MISMATCH" }
            )
            .unwrap();
        }
        writeln!(out, "status: {}", if self.passed() { "pass" } else { "fail" }).unwrap();
        out
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serializable") + "\n"
    }
}

/// `x_1 x_2 y_1 y_2` as a `(2, 2)`-homogeneous polynomial on `Q^2`.
pub fn counterexample_polynomial() -> Multipolynomial {
    let mut p = Multipolynomial::zero(DegreeSignature::equal(2, 2).expect("valid"), 2, 1);
    p.set(MultiIndexMatrix::from_nested(&[&[1, 1], &[1, 1]]), Vector::from_ints(&[1]))
        .expect("valid term");
    p
}

pub fn counterexample() -> Result<CounterexampleReport> {
    let p = counterexample_polynomial();
    let x0 = Vector::zeros(2);
    let points = [Vector::basis(2, 0), Vector::basis(2, 1)];
    let scalar = |v: Vector| v[0].clone();
    let mut lines = Vec::new();
    let mut push = |quantity: &str, computed: String, expected: String| {
        lines.push(CounterexampleLine {
            quantity: quantity.to_string(),
            ok: computed == expected,
            computed,
            expected,
        });
    };
    let check = |value: Scalar, expected: Scalar| (value.to_string(), expected.to_string());

    let (c, e) = check(scalar(p.eval(&points)?), int(0));
    push("eval(e1, e2)", c, e);
    let (c, e) = check(scalar(p.entire_polarization_rhs(&x0, &points)?), ratio(1, 6));
    push("entire-polarization(0; e1, e2)", c, e);
    let (c, e) = check(scalar(p.remainder(&points)?), int(16));
    push("remainder(e1, e2)", c, e);
    let (c, e) = check(scalar(p.multipolarize(&x0, &points)?), int(0));
    push("multipolarize(0; e1, e2)", c, e);
    let member = p.in_image_psi()?.member;
    push("in-image-psi", member.to_string(), "false".to_string());

    Ok(CounterexampleReport {
        polynomial: write_multipolynomial(&p),
        lines,
    })
}
