//! `repcalc`: decompositions, W-tables, dimension polynomials, character
//! series and the verification harness.

mod commands;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use repcalc::Error;
use serde_json::Value;

#[derive(Parser, Debug)]
#[command(name = "repcalc", version, about = "Exact GL(n)/Sp(2g) representation computations")]
struct Cli {
    /// Emit JSON (schema "1") instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decompose a representation into irreducibles.
    Decompose {
        #[command(subcommand)]
        what: Decompose,
    },
    /// `W(μ,ν)` for every pair of a degree, and their sum.
    WTable {
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum, default_value_t = Variant::Ia)]
        variant: Variant,
    },
    /// `dim (∧^i U)^tl` as a polynomial in n.
    DimPoly {
        #[arg(long)]
        degree: usize,
        /// Also evaluate at this rank.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Character series of a graded Sp family (X, X', X'', Y, …, Z'').
    TorelliChar {
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
        /// Character of the traceless graded-symmetric algebra instead.
        #[arg(long)]
        algebra: bool,
    },
    /// Run a named verification suite.
    Verify {
        id: String,
        /// Rank override.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
        /// Ambient-dimension cap for brute-force kernels.
        #[arg(long, default_value_t = repcalc::tensor::DEFAULT_BUDGET)]
        budget: u128,
    },
    /// List verification ids.
    List,
}

#[derive(Subcommand, Debug)]
enum Decompose {
    /// Tensor product of two irreducibles, e.g. `tensor "1|1" "1|0"`.
    Tensor { a: String, b: String },
    /// `∧^i U`.
    WedgeU {
        #[arg(long)]
        degree: usize,
    },
    /// `∧^i U^O`.
    WedgeUo {
        #[arg(long)]
        degree: usize,
    },
    /// Symmetric or exterior power of a representation such as `"1,1|1"`.
    Power {
        rep: String,
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        alternating: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Variant {
    Ia,
    Io,
}

/// Result of a command: JSON payload, text rendering and exit status.
pub struct Report {
    pub json: Value,
    pub text: String,
    pub code: u8,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } | Error::InvalidArgument(_) => 2,
        Error::NegativeMultiplicity { .. } | Error::NotDecomposable(_) => 3,
        _ => 1,
    }
}

fn run(cli: Cli) -> repcalc::Result<Report> {
    match cli.command {
        Command::Decompose { what } => match what {
            Decompose::Tensor { a, b } => commands::tensor(&a, &b),
            Decompose::WedgeU { degree } => commands::wedge_u(degree),
            Decompose::WedgeUo { degree } => commands::wedge_uo(degree),
            Decompose::Power { rep, degree, alternating } => commands::power(&rep, degree, alternating),
        },
        Command::WTable { degree, variant } => commands::w_table(degree, matches!(variant, Variant::Io)),
        Command::DimPoly { degree, n } => Ok(commands::dim_poly(degree, n)),
        Command::TorelliChar { family, max_degree, algebra } => commands::torelli_char(&family, max_degree, algebra),
        Command::Verify { id, n, max_degree, budget } => {
            verify::run(&id, &verify::Options { n, max_degree, budget })
        }
        Command::List => Ok(verify::list()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli) {
        Ok(r) => {
            if json {
                let mut v = r.json;
                v["schema"] = Value::from("1");
                println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
            } else {
                print!("{}", r.text);
            }
            ExitCode::from(r.code)
        }
        Err(e) => {
            if json {
                println!("{}", serde_json::json!({"schema": "1", "error": e.to_string()}));
            }
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
