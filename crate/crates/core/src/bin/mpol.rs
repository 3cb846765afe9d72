use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use polarization::bench::run_bench;
use polarization::combinatorics::set_max_signs;
use polarization::format::{parse_points, write_multilinear, write_points, Document};
use polarization::verify::{self, Identity, VerifyParams};
use polarization::{Error, Vector};
use serde_json::json;

#[derive(Parser)]
#[command(name = "mpol", version, about = "Exact polarization toolkit for multilinear maps and multipolynomials")]
struct Cli {
    /// Seed for random fixtures.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Trials per verification suite.
    #[arg(long, global = true, default_value_t = 25)]
    trials: usize,
    /// Largest sign-vector enumeration allowed.
    #[arg(long, global = true, default_value_t = 1 << 24)]
    max_signs: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run a seeded identity suite.
    Verify(VerifyArgs),
    /// Evaluate a map or multipolynomial at the points in a file.
    Eval { input: PathBuf, points: PathBuf },
    /// Polarize a homogeneous polynomial (a one-slot multipolynomial file).
    Polarize {
        input: PathBuf,
        /// Base point, whitespace-separated rationals.
        #[arg(long, allow_hyphen_values = true)]
        x0: Option<String>,
    },
    /// Decide whether a multipolynomial lies in the image of Psi.
    CheckImage { input: PathBuf },
    /// Print the worked non-surjectivity example.
    Counterexample,
    /// Time the sign-sum kernels and print CSV.
    Bench {
        #[arg(long, default_value_t = 16)]
        mn: usize,
        #[arg(long, default_value_t = 1)]
        reps: usize,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// One of: leibniz, polarization-roundtrip, eq-c, thm-2-1, cor-2-2,
    /// remainder-n1, multipolarization, x0-invariance, entire-polarization,
    /// psi-roundtrip, signed-power-sum, nullspace.
    identity: Identity,
    #[arg(long, default_value_t = 2)]
    m: usize,
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// Explicit signature, comma separated (e.g. 1,2).
    #[arg(long, value_delimiter = ',')]
    degrees: Option<Vec<usize>>,
    #[arg(long, default_value_t = 2)]
    dim: usize,
    #[arg(long, default_value_t = 1)]
    codim: usize,
    #[arg(long, default_value_t = 0.75)]
    sparsity: f64,
    /// Perturb one coefficient on the right-hand side.
    #[arg(long)]
    inject_fault: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    set_max_signs(cli.max_signs);
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn located(path: &Path) -> impl Fn(Error) -> String + '_ {
    move |e| match e {
        Error::Parse { line, column, message } => format!("{}:{line}:{column}: {message}", path.display()),
        other => other.to_string(),
    }
}

fn emit(format: Format, text: String, value: serde_json::Value) {
    match format {
        Format::Text => print!("{text}"),
        Format::Json => println!("{}", serde_json::to_string_pretty(&value).unwrap()),
    }
}

fn run(cli: &Cli) -> Result<u8, String> {
    match &cli.command {
        Command::Verify(args) => {
            let params = VerifyParams {
                m: args.m,
                n: args.n,
                degrees: args.degrees.clone(),
                dim: args.dim,
                codim: args.codim,
                trials: cli.trials,
                seed: cli.seed,
                sparsity: args.sparsity,
                inject_fault: args.inject_fault,
            };
            let report = verify::run(args.identity, &params).map_err(|e| e.to_string())?;
            match cli.format {
                Format::Text => print!("{}", report.render_text()),
                Format::Json => print!("{}", report.render_json()),
            }
            eprintln!("elapsed: {:.3}s", report.elapsed.as_secs_f64());
            Ok(report.exit_code() as u8)
        }
        Command::Eval { input, points } => {
            let doc = Document::parse(&read(input)?).map_err(located(input))?;
            let pts = parse_points(&read(points)?).map_err(located(points))?;
            let value = match &doc {
                Document::Multilinear(a) => a.eval(&pts),
                Document::Multipolynomial(p) => p.eval(&pts),
            }
            .map_err(|e| e.to_string())?;
            emit(cli.format, format!("{value}\n"), json!({ "value": value.to_string() }));
            Ok(0)
        }
        Command::Polarize { input, x0 } => {
            let doc = Document::parse(&read(input)?).map_err(located(input))?;
            let Document::Multipolynomial(p) = doc else {
                return Err("polarize expects a multipolynomial file with m: 1".into());
            };
            let base = x0
                .as_deref()
                .map(Vector::parse)
                .transpose()
                .map_err(|e| format!("--x0: {e}"))?;
            let map = p
                .to_homogeneous()
                .and_then(|h| h.polarize(base.as_ref()))
                .map_err(|e| e.to_string())?;
            let text = write_multilinear(&map);
            emit(cli.format, text.clone(), json!({ "map": text }));
            Ok(0)
        }
        Command::CheckImage { input } => {
            let doc = Document::parse(&read(input)?).map_err(located(input))?;
            let Document::Multipolynomial(p) = doc else {
                return Err("check-image expects a multipolynomial file".into());
            };
            let result = p.in_image_psi().map_err(|e| e.to_string())?;
            let (text, value) = if let Some(w) = &result.witness {
                let map = write_multilinear(w);
                (format!("member: true\nwitness:\n{map}"), json!({ "member": true, "witness": map }))
            } else if let Some(d) = &result.defect {
                let text = format!(
                    "member: false\ndefect:\nx0: {}\npoints:\n{}lhs: {}\nrhs: {}\n",
                    d.x0,
                    write_points(&d.points),
                    d.lhs,
                    d.rhs
                );
                let value = json!({
                    "member": false,
                    "defect": {
                        "x0": d.x0.to_string(),
                        "points": d.points.iter().map(ToString::to_string).collect::<Vec<_>>(),
                        "lhs": d.lhs.to_string(),
                        "rhs": d.rhs.to_string(),
                    }
                });
                (text, value)
            } else {
                ("member: false\n".to_string(), json!({ "member": false }))
            };
            emit(cli.format, text, value);
            Ok(if result.member { 0 } else { 1 })
        }
        Command::Counterexample => {
            let report = verify::counterexample().map_err(|e| e.to_string())?;
            match cli.format {
                Format::Text => print!("{}", report.render_text()),
                Format::Json => print!("{}", report.render_json()),
            }
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Bench { mn, reps } => {
            let report = run_bench(*mn, *reps).map_err(|e| e.to_string())?;
            print!("{}", report.to_csv());
            if report.kernels_agree() {
                Ok(0)
            } else {
                eprintln!("kernels disagree");
                Ok(1)
            }
        }
    }
}
