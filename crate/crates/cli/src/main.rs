mod failure;
mod problem_file;
mod render;
mod signature;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use clifflag::clifford::r03::{psi_minus, psi_plus};
use clifflag::clifford::{cone_class, in_quadratic_cone};
use clifflag::lagrange::{
    brute_force_interpolate, group_by_class, interpolate, residuals, verify_interpolant,
    OracleOutcome,
};
use clifflag::{Multivector, Polynomial};

use failure::{Failure, ORACLE_DISAGREES};
use problem_file::ProblemFile;
use render::{decimal_multivector, decimal_polynomial};
use signature::{dimension_cap, parse_pair, signature};

const EXIT_CODES: &str = "Exit codes:
  0  success
  1  other failure (unreadable file, point outside the cone, duplicate point, ...)
  2  parse error (file, literal, signature or CLIFFLAG_MAX_DIM)
  3  collinearity condition violated in a quaternionic class
  4  two R(0,3) points share a conjugacy class
  5  --oracle disagrees with the interpolant

CLIFFLAG_MAX_DIM lowers the p+q cap (at most 6).";

#[derive(Parser)]
#[command(
    name = "clifflag",
    version,
    about = "Exact Lagrange interpolation over the quaternions and R(0,3)",
    after_help = EXIT_CODES
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Interpolate the pairs in a TOML problem file.
    Interpolate(InterpolateArgs),
    /// Evaluate a polynomial at a point.
    Eval(EvalArgs),
    /// Report cone membership and classes of points, and pairwise invertibility.
    Diagnose(DiagnoseArgs),
}

#[derive(Args)]
struct InterpolateArgs {
    file: PathBuf,
    /// Print the residual P(x) - w at every data point.
    #[arg(long)]
    verify: bool,
    /// Cross-check against the brute-force linear solver.
    #[arg(long)]
    oracle: bool,
    /// Also print an approximation with N decimal digits.
    #[arg(long, value_name = "N")]
    decimal: Option<usize>,
    /// Degree bound for --oracle; defaults to the theorem's degree.
    #[arg(long, value_name = "D")]
    max_degree: Option<usize>,
}

#[derive(Args)]
struct EvalArgs {
    /// Signature as p,q.
    #[arg(long, value_parser = parse_pair, value_name = "P,Q")]
    sig: (u8, u8),
    poly: String,
    #[arg(allow_hyphen_values = true)]
    point: String,
    #[arg(long, value_name = "N")]
    decimal: Option<usize>,
}

#[derive(Args)]
struct DiagnoseArgs {
    #[arg(long, value_parser = parse_pair, value_name = "P,Q")]
    sig: (u8, u8),
    #[arg(required = true, allow_hyphen_values = true)]
    points: Vec<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Interpolate(args) => run_interpolate(&args),
        Command::Eval(args) => run_eval(&args),
        Command::Diagnose(args) => run_diagnose(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {f}");
            f.exit_code()
        }
    }
}

fn run_interpolate(args: &InterpolateArgs) -> Result<(), Failure> {
    let cap = dimension_cap()?;
    let problem = ProblemFile::read(&args.file)?.to_problem(cap)?;
    let p = interpolate(&problem)?;
    println!("{p}");
    if let Some(n) = args.decimal {
        println!("approx ({n} digits): {}", decimal_polynomial(&p, n));
    }
    if args.verify {
        for (i, r) in residuals(&p, &problem)?.iter().enumerate() {
            println!("residual {}: {r}", i + 1);
        }
    }
    if args.oracle {
        let d = group_by_class(&problem)?.degree.unwrap_or(0);
        let max = args.max_degree.unwrap_or(d);
        let scope = if max > d {
            format!("degree <= {max}, above the theorem's bound {d}")
        } else {
            format!("degree <= {max}")
        };
        let (verdict, detail) = match brute_force_interpolate(&problem, max) {
            OracleOutcome::UniqueSolution(q) => (q == p, "unique solution".to_string()),
            OracleOutcome::NoSolution => (false, "no solution".to_string()),
            OracleOutcome::AffineFamily { dimension, .. } => (
                verify_interpolant(&p, &problem) && p.degree().is_none_or(|k| k <= max),
                format!("affine family of dimension {dimension}"),
            ),
        };
        let word = if verdict { "AGREE" } else { "DISAGREE" };
        println!("oracle ({scope}): {detail}, {word}");
        if !verdict {
            return Err(Failure::new(
                ORACLE_DISAGREES,
                "oracle disagrees with the interpolant",
            ));
        }
    }
    Ok(())
}

fn run_eval(args: &EvalArgs) -> Result<(), Failure> {
    let sig = signature(args.sig.0, args.sig.1, dimension_cap()?)?;
    let p = Polynomial::parse(sig, &args.poly)?;
    let x = Multivector::parse(sig, &args.point)?;
    let value = p.eval(&x)?;
    println!("{value}");
    if let Some(n) = args.decimal {
        println!("approx ({n} digits): {}", decimal_multivector(&value, n));
    }
    Ok(())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn run_diagnose(args: &DiagnoseArgs) -> Result<(), Failure> {
    let sig = signature(args.sig.0, args.sig.1, dimension_cap()?)?;
    let points = args
        .points
        .iter()
        .map(|s| Multivector::parse(sig, s))
        .collect::<Result<Vec<_>, _>>()?;
    let classes: Vec<_> = points.iter().map(cone_class).collect();
    for (i, x) in points.iter().enumerate() {
        println!("point {}: {x}", i + 1);
        println!("  in cone: {}", yes_no(in_quadratic_cone(x)));
        if sig.is_r03() {
            println!("  psi+: {}  psi-: {}", psi_plus(x)?, psi_minus(x)?);
        }
        match &classes[i] {
            Some(c) => println!("  class: {c}"),
            None => println!("  class: none"),
        }
    }
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let invertible = (&points[i] - &points[j]).is_invertible();
            let same = match (&classes[i], &classes[j]) {
                (Some(a), Some(b)) => yes_no(a == b),
                _ => "n/a",
            };
            println!(
                "pair {}-{}: difference invertible: {}, same class: {same}",
                i + 1,
                j + 1,
                yes_no(invertible)
            );
        }
    }
    Ok(())
}
