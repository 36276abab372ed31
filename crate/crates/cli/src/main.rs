use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use skewbrace::group::morphism::DEFAULT_ORDER_BOUND;
use skewbrace::report::Report;
use skewbrace::verdict::DEFAULT_SEED;

mod commands;

/// Build and check skew braces and their Yang–Baxter maps.
#[derive(Debug, Parser)]
#[command(name = "skewbrace", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args, Clone)]
struct Common {
    /// Seed for every sampled check.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Tuples per sampled check.
    #[arg(long, global = true, default_value_t = 1000)]
    samples: usize,
    /// Largest group order for exhaustive searches.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER_BOUND)]
    limit: usize,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the regular subgroups of Hol G.
    EnumRegular {
        #[arg(long)]
        group: PathBuf,
        /// Also run the slower subset-growth enumeration and compare.
        #[arg(long)]
        cross_check: bool,
    },
    /// Build braces a∘b = a·λ_a(b) from every homomorphism λ: G → Aut G.
    Construct {
        #[arg(long)]
        group: PathBuf,
        /// Only the λ with this position in the enumeration.
        #[arg(long)]
        index: Option<usize>,
    },
    /// Check a finite brace read from JSON.
    Verify {
        brace: PathBuf,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "axiom")]
        mode: Vec<VerifyMode>,
    },
    /// A brace on ℤ² from one of the two matrix families, or from a matrix.
    Z2 {
        #[arg(long, allow_hyphen_values = true, default_value_t = 1)]
        p: i64,
        #[arg(long, value_enum, default_value = "case1")]
        family: Family,
        /// Row-major JSON matrix, overriding --p and --family.
        #[arg(long)]
        matrix: Option<String>,
        #[arg(long)]
        verify: bool,
    },
    /// The brace on ℤⁿ with λ_a the l(a)-th power of the cyclic shift.
    ZnCyclic {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        verify_presentation: bool,
    },
    /// Braces on free groups.
    Free {
        #[arg(long, value_enum)]
        construction: FreeConstruction,
        #[arg(long)]
        verify: bool,
    },
    /// Braces from an exact factorization G = AB.
    Factor {
        #[arg(long, value_enum)]
        family: FactorFamily,
        #[arg(long)]
        verify: bool,
    },
    /// The adjoint brace on truncated non-commutative power series.
    Series {
        #[arg(long, default_value_t = 2)]
        vars: usize,
        #[arg(long, default_value_t = 4)]
        degree: usize,
        #[arg(long, value_enum, default_value = "two-sided")]
        check: SeriesCheck,
        /// Word length for the free-subgroup check.
        #[arg(long, default_value_t = 4)]
        len: usize,
    },
    /// Check the Yang–Baxter map of a finite brace read from JSON.
    Ybe {
        brace: PathBuf,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "braid,nondegen")]
        check: Vec<YbeCheck>,
    },
    /// Run the numbered verification battery.
    PaperSuite {
        #[arg(long, value_enum, default_value = "desk")]
        level: Level,
        /// Comma-separated criterion numbers; all when absent.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyMode {
    Axiom,
    LambdaHom,
    LambdaCyclic,
    Symmetric,
    MetaTrivial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Case1,
    Case2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FreeConstruction {
    Swap,
    Inversion,
    Ia,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FactorFamily {
    F2,
    Wreath,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeriesCheck {
    TwoSided,
    FreeWitness,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum YbeCheck {
    Braid,
    Nondegen,
    Involutive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Level {
    Desk,
}

fn render(report: &Report, json: bool) -> String {
    if json {
        return report.to_json() + "\n";
    }
    let mut out = format!("{} (seed {})\n", report.command, report.seed);
    out.push_str(&report.to_text());
    if let Some(data) = &report.data {
        out.push_str(&serde_json::to_string(data).expect("data serializes"));
        out.push('\n');
    }
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match commands::run(&cli.command, &cli.common) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let text = render(&report, cli.common.json);
    match &cli.common.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
