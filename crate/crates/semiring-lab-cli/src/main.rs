//! CLI for the semiring laboratory: classify semiring files, run the
//! theorem verification suite, export ideal lattices, enumerate small
//! semirings, and extract property witnesses.
//!
//! Exit codes: 0 success, 1 verification or property failure, 2 schema
//! error in an input file, 3 axiom violations in an input file.

use clap::{Parser, Subcommand, ValueEnum};
use semiring_lab::enumerate::{enumerate_semirings_capped, DEFAULT_ENUMERATION_CAP};
use semiring_lab::report::{
    self, ConditionId, VerifyConfig, WITNESS_PROPERTIES,
};
use semiring_lab::semiring::{FiniteSemiring, LoadError};
use semiring_lab::symbolic::Bound;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

/// Environment variable overriding the enumeration order guard.
const ORDER_CAP_ENV: &str = "SEMIRING_LAB_ORDER_CAP";

#[derive(Parser)]
#[command(name = "semiring-lab")]
#[command(about = "Decision procedures and theorem cross-checks for finite semirings")]
#[command(version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Filter {
    Semidomain,
    Local,
    Uniserial,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a semiring file: full property profile with witnesses
    Check {
        /// Path to a semiring JSON file
        path: PathBuf,

        /// Output format
        #[arg(long, value_enum, default_value = "text")]
        format: Format,

        /// Write output here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Run the theorem cross-check suite over the enumerated corpus, the
    /// catalog, and the symbolic instances; nonzero exit on any failure
    Verify {
        /// Enumerate all semirings up to this order
        #[arg(long, default_value_t = 4)]
        order: usize,

        /// Element/fraction bound for the symbolic instances
        #[arg(long, default_value_t = 64)]
        bound: u64,

        /// Skip the checked-in catalog
        #[arg(long)]
        no_catalog: bool,

        /// Skip the symbolic instances
        #[arg(long)]
        no_symbolic: bool,

        /// Negate one condition before asserting (suite self-test: the
        /// run must fail naming the theorems that depend on it)
        #[arg(long)]
        mutate: Option<String>,

        /// Output format
        #[arg(long, value_enum, default_value = "text")]
        format: Format,

        /// Write output here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Export the ideal lattice of a semiring file as a Hasse diagram
    Lattice {
        /// Path to a semiring JSON file
        path: PathBuf,

        /// Output format (dot or text)
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,

        /// Restrict to the prime sub-poset
        #[arg(long)]
        primes: bool,

        /// Write output here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Enumerate all semirings of one order up to isomorphism, one JSON
    /// document per line; a summary line goes to stderr
    Enumerate {
        /// Order to enumerate
        #[arg(long)]
        order: usize,

        /// Keep only structures with this property
        #[arg(long, value_enum)]
        filter: Option<Filter>,

        /// Write output here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Print the witness for one property of a semiring file
    Witness {
        /// Path to a semiring JSON file
        path: PathBuf,

        /// Property name (for example lop-cond5, valuation, pvs-cond3)
        property: String,
    },
}

fn load_semiring(path: &Path) -> Result<FiniteSemiring, ExitCode> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return Err(ExitCode::from(2));
        }
    };
    FiniteSemiring::from_json(&text).map_err(|e| match e {
        LoadError::Json { .. } | LoadError::Table(_) => {
            eprintln!("schema error in {}: {e}", path.display());
            ExitCode::from(2)
        }
        LoadError::Axioms(report) => {
            eprintln!("{} is not a semiring:\n{report}", path.display());
            ExitCode::from(3)
        }
    })
}

fn emit(text: &str, out: Option<&Path>) -> ExitCode {
    match out {
        None => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            ExitCode::SUCCESS
        }
        Some(path) => match std::fs::write(path, text) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: cannot write {}: {e}", path.display());
                ExitCode::FAILURE
            }
        },
    }
}

fn order_cap() -> usize {
    match std::env::var(ORDER_CAP_ENV) {
        Ok(v) => v.parse().unwrap_or_else(|_| {
            eprintln!("warning: ignoring non-numeric {ORDER_CAP_ENV}={v}");
            DEFAULT_ENUMERATION_CAP
        }),
        Err(_) => DEFAULT_ENUMERATION_CAP,
    }
}

fn guard_ideal_cap(s: &FiniteSemiring) -> Result<(), ExitCode> {
    if let Err(e) = s.all_ideals() {
        eprintln!("error: {e}");
        return Err(ExitCode::FAILURE);
    }
    Ok(())
}

fn cmd_check(path: &Path, format: Format, out: Option<&Path>) -> ExitCode {
    let s = match load_semiring(path) {
        Ok(s) => s,
        Err(code) => return code,
    };
    if let Err(code) = guard_ideal_cap(&s) {
        return code;
    }
    let profile = report::profile(&s);
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&profile).expect("profile serializes"),
        Format::Text => report::render_profile_text(&profile),
        Format::Dot => {
            eprintln!("error: check has no dot format; use `lattice`");
            return ExitCode::FAILURE;
        }
    };
    emit(&text, out)
}

fn cmd_verify(
    order: usize,
    bound: u64,
    no_catalog: bool,
    no_symbolic: bool,
    mutate: Option<&str>,
    format: Format,
    out: Option<&Path>,
) -> ExitCode {
    let mutate = match mutate {
        None => None,
        Some(name) => match ConditionId::from_str(name) {
            Ok(id) => Some(id),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::FAILURE;
            }
        },
    };
    let cfg = VerifyConfig {
        max_order: order,
        enumeration_cap: order_cap(),
        include_catalog: !no_catalog,
        include_symbolic: !no_symbolic,
        bound: Bound::uniform(bound.max(1)),
        mutate,
    };
    let report = match report::run_verify(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}; set {ORDER_CAP_ENV} to raise the guard");
            return ExitCode::FAILURE;
        }
    };
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&report).expect("report serializes"),
        _ => report.render_text(),
    };
    let code = emit(&text, out);
    if code != ExitCode::SUCCESS {
        return code;
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn cmd_lattice(path: &Path, format: Format, primes: bool, out: Option<&Path>) -> ExitCode {
    let s = match load_semiring(path) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let rendered = match format {
        Format::Text => report::ideal_lattice_text(&s),
        Format::Dot => report::ideal_lattice_dot(&s, primes),
        Format::Json => {
            eprintln!("error: lattice output is dot or text");
            return ExitCode::FAILURE;
        }
    };
    match rendered {
        Ok(text) => emit(&text, out),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn cmd_enumerate(order: usize, filter: Option<Filter>, out: Option<&Path>) -> ExitCode {
    let cap = order_cap();
    let members = match enumerate_semirings_capped(order, cap) {
        Ok(m) => m,
        Err(e) => {
            eprintln!("error: {e}; set {ORDER_CAP_ENV} to raise the guard");
            return ExitCode::FAILURE;
        }
    };
    let total = members.len();
    let kept: Vec<_> = members
        .into_iter()
        .filter(|s| match filter {
            None => true,
            Some(Filter::Semidomain) => s.is_semidomain().is_holds(),
            Some(Filter::Local) => s.is_local(),
            Some(Filter::Uniserial) => semiring_lab::classify::is_uniserial(s).is_holds(),
        })
        .collect();
    let mut lines = String::new();
    for s in &kept {
        lines.push_str(&serde_json::to_string(&s.to_raw()).expect("tables serialize"));
        lines.push('\n');
    }
    let code = emit(&lines, out);
    eprintln!(
        "order {order}: {} of {total} classes{}",
        kept.len(),
        match filter {
            None => String::new(),
            Some(Filter::Semidomain) => " (semidomain)".to_string(),
            Some(Filter::Local) => " (local)".to_string(),
            Some(Filter::Uniserial) => " (uniserial)".to_string(),
        }
    );
    code
}

fn cmd_witness(path: &Path, property: &str) -> ExitCode {
    let s = match load_semiring(path) {
        Ok(s) => s,
        Err(code) => return code,
    };
    if let Err(code) = guard_ideal_cap(&s) {
        return code;
    }
    match report::property_witness(&s, property) {
        Ok(text) => {
            println!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}; known properties: {}", WITNESS_PROPERTIES.join(", "));
            ExitCode::FAILURE
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Check { path, format, out } => cmd_check(&path, format, out.as_deref()),
        Command::Verify {
            order,
            bound,
            no_catalog,
            no_symbolic,
            mutate,
            format,
            out,
        } => cmd_verify(
            order,
            bound,
            no_catalog,
            no_symbolic,
            mutate.as_deref(),
            format,
            out.as_deref(),
        ),
        Command::Lattice {
            path,
            format,
            primes,
            out,
        } => cmd_lattice(&path, format, primes, out.as_deref()),
        Command::Enumerate { order, filter, out } => {
            cmd_enumerate(order, filter, out.as_deref())
        }
        Command::Witness { path, property } => cmd_witness(&path, &property),
    }
}
