use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use octolab::algebra::{format_octonion, parse_octonion, Octonion};
use octolab::calibrations::{coassociative_complement, quaternion_hull};
use octolab::dims::{shilov_check, symmetric_space_check};
use octolab::liegen::{derivation_algebra, left_mult_closure, stabilizer_subalgebra, LieBasis};
use octolab::roots::{coset_split_report, d4_roots, dynkin_identify};
use octolab::verify::{run_verification, Format};
use octolab::xproduct::{torsion_tensor, UnitPoint};

const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "octolab", version, about = "Exact octonion algebra checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Text,
    Json,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Self {
        match f {
            OutFormat::Text => Format::Text,
            OutFormat::Json => Format::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Closure {
    /// Bracket closure of left multiplications by e1..e7.
    LeftMult,
    /// Derivations of the octonions.
    Derivations,
    /// Stabilizer of 1 inside the left-multiplication closure.
    Stabilizer,
}

#[derive(Subcommand)]
enum Command {
    /// Run registered checks whose id matches a glob (`all` for every check).
    Verify {
        selection: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Torsion tensor at a unit octonion.
    Torsion {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
    },
    /// Dimension and basis fingerprint of a matrix Lie algebra.
    Liegen {
        #[arg(long, value_enum, default_value = "left-mult")]
        closure: Closure,
    },
    /// Quaternionic hull of two imaginary units and its orthogonal complement.
    Calib {
        /// Two comma-separated octonion literals.
        #[arg(long)]
        hull: String,
    },
    /// D4 classification and the positive-root block report.
    Roots {
        #[arg(long)]
        identify: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
    },
    /// Group, coset and boundary dimensions.
    Dims {
        #[arg(long)]
        table: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
    },
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<octolab::Error> for Failure {
    fn from(e: octolab::Error) -> Self {
        match e {
            octolab::Error::Parse { .. }
            | octolab::Error::Normalization(_)
            | octolab::Error::Domain(_)
            | octolab::Error::Degenerate(_) => Failure::Usage(e.to_string()),
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("plain data")
}

fn run(cmd: Command) -> Result<ExitCode, Failure> {
    match cmd {
        Command::Verify { selection, format, out } => {
            let report = run_verification(&selection, format.into()).map_err(|e| Failure::Usage(e.to_string()))?;
            let body = report.render();
            match out {
                Some(path) => {
                    std::fs::write(&path, body).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?
                }
                None => print!("{body}"),
            }
            let s = report.summary;
            eprintln!(
                "{} pass, {} fail, {} discrepancy, {} indeterminate",
                s.pass, s.fail, s.discrepancy, s.indeterminate
            );
            Ok(ExitCode::from(report.exit_code() as u8))
        }
        Command::Torsion { x, format } => {
            let point = UnitPoint::new(parse_octonion(&x)?)?;
            let t = torsion_tensor(&point)?;
            match format {
                OutFormat::Text => print!("{}", t.render()),
                OutFormat::Json => {
                    let entries: Vec<_> =
                        t.nonzero_entries().into_iter().map(|((i, j, k), v)| json!([i, j, k, v])).collect();
                    println!("{}", pretty(&json!({ "x": format_octonion(point.value()), "entries": entries })));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Liegen { closure } => {
            let basis: LieBasis = match closure {
                Closure::LeftMult => left_mult_closure()?,
                Closure::Derivations => derivation_algebra()?,
                Closure::Stabilizer => stabilizer_subalgebra(&left_mult_closure()?, &Octonion::ONE)?,
            };
            println!("dim {}", basis.dim());
            println!("fingerprint {}", basis.fingerprint());
            Ok(ExitCode::SUCCESS)
        }
        Command::Calib { hull } => {
            let parts: Vec<&str> = hull.split(',').collect();
            let [a, b] = parts.as_slice() else {
                return Err(Failure::Usage(format!("--hull expects two literals, got `{hull}`")));
            };
            let h = quaternion_hull(&parse_octonion(a.trim())?, &parse_octonion(b.trim())?)?;
            let c = coassociative_complement(&h)?;
            let join = |v: &[Octonion]| v.iter().map(format_octonion).collect::<Vec<_>>().join(", ");
            println!("hull: {}", join(&h.basis));
            println!("complement: {}", join(&c));
            Ok(ExitCode::SUCCESS)
        }
        Command::Roots { identify, format } => {
            let c = dynkin_identify(&d4_roots())?;
            let report = coset_split_report()?;
            match format {
                OutFormat::Json => println!("{}", pretty(&json!({ "classification": c, "coset_split": report }))),
                OutFormat::Text => {
                    if identify {
                        println!("type {} rank {} roots {}", c.dynkin_type, c.rank, c.root_count);
                        let simple: Vec<String> = c.simple_roots.iter().map(ToString::to_string).collect();
                        println!("simple roots: {}", simple.join(", "));
                    }
                    println!("blocks {:?}", report.block_sizes);
                    for b in &report.blocks {
                        let status = serde_json::to_value(b.status).expect("plain data");
                        println!("{} {} {}", status.as_str().unwrap_or_default(), b.group, b.note);
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Dims { table, format } => {
            let rows = symmetric_space_check();
            let shilov = shilov_check();
            match format {
                OutFormat::Json => println!("{}", pretty(&json!({ "symmetric_spaces": rows, "shilov": shilov }))),
                OutFormat::Text => {
                    if table {
                        for r in &rows {
                            let denom: Vec<String> = r.denominator.iter().map(ToString::to_string).collect();
                            let status = serde_json::to_value(r.status).expect("plain data");
                            println!(
                                "{}/({}) dim {} vs {} dim {}: {}",
                                r.numerator,
                                if denom.is_empty() { "1".to_owned() } else { denom.join("x") },
                                r.coset_dim,
                                r.listed_space,
                                r.listed_dim,
                                status.as_str().unwrap_or_default()
                            );
                        }
                    }
                    for s in &shilov {
                        println!(
                            "{}: {} vs {} ({}) {}",
                            s.name,
                            s.compared_dim,
                            s.boundary_dim,
                            s.boundary,
                            if s.matches { "match" } else { "mismatch" }
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
