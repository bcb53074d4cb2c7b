use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use uhsl2::format::{pretty, to_json};
use uhsl2::species::{species_coefficient_check, FunctorSpec};
use uhsl2::verify::verify_sweep;
use uhsl2::{expr, identities, structural_coefficient, Error, NormalMonomial};

/// Exact products in the homogeneous enveloping algebra of sl2, in the
/// divided-power PBW basis.
#[derive(Parser)]
#[command(name = "uhsl2", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Pretty,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression such as "z * m(2,0,0,0)".
    Star {
        #[arg(long)]
        expr: String,
        /// Truncate above this total degree (required with exp(..)).
        #[arg(long)]
        cap: Option<u32>,
        #[arg(long, value_enum, default_value = "pretty")]
        format: Format,
    },
    /// Print the coefficient of OUT in LEFT * RIGHT.
    Coeff {
        #[arg(long, value_parser = parse_monomial)]
        left: NormalMonomial,
        #[arg(long, value_parser = parse_monomial)]
        right: NormalMonomial,
        #[arg(long, value_parser = parse_monomial)]
        out: NormalMonomial,
    },
    /// Compare the closed formula with the rewriting oracle on all monomial
    /// pairs with exponents <= MAX_EXP.
    Verify {
        #[arg(long)]
        max_exp: u32,
    },
    /// Compare signed structure counts of LEFT * RIGHT with the algebra.
    Species {
        #[arg(long)]
        left: FunctorSpec,
        #[arg(long)]
        right: FunctorSpec,
        #[arg(long)]
        max_total: usize,
    },
    /// Check the built-in catalogue of identities.
    Identities,
}

fn parse_monomial(s: &str) -> Result<NormalMonomial, String> {
    let parts: Vec<u32> = s
        .split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|e| format!("`{p}`: {e}")))
        .collect::<Result<_, _>>()?;
    let e: [u32; 4] = parts.try_into().map_err(|_| "expected a,b,c,d".to_string())?;
    Ok(e.into())
}

fn usage_error(e: Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Star { expr, cap, format } => {
            let value = match expr::parse(&expr).and_then(|e| e.eval(cap)) {
                Ok(v) => v,
                Err(e) => return usage_error(e),
            };
            match format {
                Format::Json => println!("{}", to_json(&value)),
                Format::Pretty => println!("{}", pretty(&value)),
            }
            ExitCode::SUCCESS
        }
        Command::Coeff { left, right, out } => match structural_coefficient(left, right, out) {
            Ok(c) => {
                println!("{c}");
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(1)
            }
        },
        Command::Verify { max_exp } => {
            let report = verify_sweep(max_exp);
            for m in &report.mismatches {
                println!("MISMATCH {} * {}: closed {} vs oracle {}", m.left, m.right, pretty(&m.closed), pretty(&m.oracle));
            }
            for (l, r) in &report.non_integral {
                println!("NON-INTEGRAL {l} * {r}");
            }
            println!(
                "checked {} pairs ({} coefficients): {} mismatches, {} integrality violations",
                report.pairs,
                report.coefficients,
                report.mismatches.len(),
                report.non_integral.len()
            );
            if report.is_clean() { ExitCode::SUCCESS } else { ExitCode::from(1) }
        }
        Command::Species { left, right, max_total } => {
            let report = species_coefficient_check(&left, &right, max_total);
            for m in &report.mismatches {
                println!("MISMATCH at sizes {:?}: species {} vs algebra {}", m.sizes, m.species, m.algebraic);
            }
            println!("{left} * {right}: checked {} size tuples, {} mismatches", report.checked, report.mismatches.len());
            if report.is_clean() { ExitCode::SUCCESS } else { ExitCode::from(1) }
        }
        Command::Identities => {
            let results = identities::run_catalog();
            for r in &results {
                println!("{} {}", if r.passed { "PASS" } else { "FAIL" }, r.name);
            }
            if results.iter().all(|r| r.passed) { ExitCode::SUCCESS } else { ExitCode::from(1) }
        }
    }
}
