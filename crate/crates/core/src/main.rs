//! Thin command-line front end over the library. Everything is
//! deterministic: the same invocation always produces byte-identical
//! output. Usage errors exit with 2, failed verification with 1.

use clap::{Parser, Subcommand};
use painleve_hermite::genhermite::gh;
use painleve_hermite::model::{ModelParams, Sequence};
use painleve_hermite::numverify::{run_suite, SuiteKind};
use painleve_hermite::output::{self, SampleTarget};
use painleve_hermite::painleve::PivFamily;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "painleve-hermite",
    version,
    about = "Exact and numerical engine for gapped quantum models built from \
             generalized Hermite polynomials and rational fourth-Painlevé solutions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one generalized Hermite polynomial, or a reference grid.
    Gh {
        #[arg(long)]
        p: Option<u32>,
        #[arg(long)]
        q: Option<u32>,
        /// Emit JSON instead of plain text.
        #[arg(long, conflicts_with = "latex")]
        json: bool,
        /// Emit LaTeX instead of plain text.
        #[arg(long)]
        latex: bool,
        /// Emit the whole grid 1..=pmax x 1..=qmax as JSON.
        #[arg(long, requires = "pmax", requires = "qmax")]
        table: bool,
        #[arg(long)]
        pmax: Option<u32>,
        #[arg(long)]
        qmax: Option<u32>,
    },
    /// Print a rational Painlevé solution in both closed forms.
    Piv {
        /// Solution family: 1, 2 or 3.
        #[arg(long)]
        family: u8,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
        /// Also certify the solution against the equation.
        #[arg(long)]
        check: bool,
    },
    /// Emit one model: parameters, exact potential with float samples,
    /// spectrum, ladder constants and relative norms.
    Model {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
        #[arg(long, default_value_t = -8.0)]
        xmin: f64,
        #[arg(long, default_value_t = 8.0)]
        xmax: f64,
        #[arg(long, default_value_t = 1601)]
        samples: usize,
    },
    /// Generate the orthogonal polynomial family of one sequence.
    Ppoly {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
        /// Sequence index: 1 (finite) or 2 (infinite).
        #[arg(long)]
        j: u8,
        #[arg(long, default_value_t = 8)]
        nmax: u32,
        /// Attach per-row differential-equation and oracle verdicts.
        #[arg(long)]
        verify: bool,
    },
    /// Emit the deformed-ladder data and closure reports.
    Algebra {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
        /// Truncation dimension for the infinite-sequence check.
        #[arg(long, default_value_t = 10)]
        dim: u32,
    },
    /// Run the verification suite; exits nonzero if any check fails.
    Verify {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
        /// Which checks to run: exact, numeric or all.
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Emit CSV samples of the potential, weight or one eigenstate.
    Sample {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
        /// One of: potential, weight, state:j,n.
        #[arg(long)]
        what: String,
        #[arg(long, default_value_t = -8.0)]
        xmin: f64,
        #[arg(long, default_value_t = 8.0)]
        xmax: f64,
        #[arg(long, default_value_t = 1601)]
        samples: usize,
    },
    /// Reproduce the reference tables end to end.
    Demo {
        #[command(subcommand)]
        what: DemoTarget,
    },
}

#[derive(Subcommand)]
enum DemoTarget {
    /// Write the three reference tables as golden-format JSON files.
    Tables {
        /// Output directory.
        #[arg(long, default_value = "demo-out")]
        out: PathBuf,
    },
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Gh {
            p,
            q,
            json,
            latex,
            table,
            pmax,
            qmax,
        } => {
            if table {
                let rows = output::gh_table_rows(pmax.unwrap(), qmax.unwrap());
                print!("{}", output::rows_to_golden_json(&rows));
                return ExitCode::SUCCESS;
            }
            let (Some(p), Some(q)) = (p, q) else {
                return usage_error("gh needs --p and --q (or --table with --pmax/--qmax)");
            };
            let poly = gh(p, q);
            if json {
                let doc = output::GhJson {
                    p,
                    q,
                    coefficients: (*poly).clone(),
                };
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            } else if latex {
                println!("{}", poly.to_latex());
            } else {
                println!("{}", *poly);
            }
        }
        Command::Piv {
            family,
            p,
            q,
            check,
        } => {
            let Some(family) = PivFamily::from_index(family) else {
                return usage_error("family must be 1, 2 or 3");
            };
            let doc = output::piv_json(family, p, q, check);
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        Command::Model {
            p,
            q,
            xmin,
            xmax,
            samples,
        } => {
            let m = ModelParams::new(p, q);
            let doc = output::model_json(&m, xmin, xmax, samples);
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        Command::Ppoly {
            p,
            q,
            j,
            nmax,
            verify,
        } => {
            let Some(seq) = Sequence::from_index(j) else {
                return usage_error("sequence index --j must be 1 or 2");
            };
            if q == 0 {
                return usage_error("the polynomial families need q >= 1");
            }
            let m = ModelParams::new(p, q);
            match output::ppoly_rows_json(&m, seq, nmax, verify) {
                Ok(rows) => println!("{}", serde_json::to_string_pretty(&rows).unwrap()),
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::FAILURE;
                }
            }
        }
        Command::Algebra { p, q, dim } => {
            let m = ModelParams::new(p, q);
            match output::algebra_json(&m, dim) {
                Ok(doc) => println!("{}", serde_json::to_string_pretty(&doc).unwrap()),
                Err(e) => return usage_error(&e.to_string()),
            }
        }
        Command::Verify { p, q, suite } => {
            let kind = match suite.as_str() {
                "exact" => SuiteKind::Exact,
                "numeric" => SuiteKind::Numeric,
                "all" => SuiteKind::All,
                other => return usage_error(&format!("unknown suite {other:?}")),
            };
            let report = run_suite(&ModelParams::new(p, q), kind);
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
            if !report.all_pass() {
                return ExitCode::FAILURE;
            }
        }
        Command::Sample {
            p,
            q,
            what,
            xmin,
            xmax,
            samples,
        } => {
            let target = match SampleTarget::parse(&what) {
                Ok(t) => t,
                Err(e) => return usage_error(&e),
            };
            if q == 0 {
                if let SampleTarget::State(..) = target {
                    return usage_error("state sampling needs q >= 1");
                }
            }
            let m = ModelParams::new(p, q);
            print!("{}", output::sample_csv(&m, &target, xmin, xmax, samples));
        }
        Command::Demo { what } => match what {
            DemoTarget::Tables { out } => {
                if let Err(e) = std::fs::create_dir_all(&out) {
                    eprintln!("error: cannot create {}: {e}", out.display());
                    return ExitCode::FAILURE;
                }
                let jobs: [(&str, String); 3] = [
                    (
                        "gh_table.json",
                        output::rows_to_golden_json(&output::gh_table_rows(3, 4)),
                    ),
                    (
                        "ppoly_finite_table.json",
                        output::rows_to_golden_json(&output::finite_family_rows()),
                    ),
                    (
                        "ppoly_infinite_table.json",
                        output::rows_to_golden_json(&output::infinite_family_rows()),
                    ),
                ];
                for (name, text) in jobs {
                    let path = out.join(name);
                    if let Err(e) = std::fs::write(&path, text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::FAILURE;
                    }
                    println!("wrote {}", path.display());
                }
            }
        },
    }
    ExitCode::SUCCESS
}
