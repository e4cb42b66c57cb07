use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use conesig::cone::FactorKind;
use conesig::search::KindSet;
use conesig::{find_simulacra, parse_cone, SearchPolicy};
use conesig_cli::{claims, tables};

#[derive(Parser)]
#[command(
    name = "conesig",
    version,
    about = "Signatures, simulacra, and published-table checks for symmetric cones"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical form and signature of a cone expression.
    Signature {
        /// Cone expression, e.g. "H3(C) + 2*L5 + R4".
        expr: String,
    },
    /// Decide whether two cones are isomorphic, simulacra, or distinct.
    Relate {
        a: String,
        b: String,
    },
    /// Search for simulacra of a cone, one witness per line.
    Simulacra {
        expr: String,
        /// Restrict witnesses to direct sums of Lorentz cones and orthants.
        #[arg(long)]
        lorentz_only: bool,
        /// Keep matrix factors only for the listed division algebras,
        /// e.g. --allow R,C.
        #[arg(long, value_delimiter = ',', value_name = "KINDS", conflicts_with = "lorentz_only")]
        allow: Option<Vec<String>>,
        /// Cap the size of any Lorentz factor in a witness.
        #[arg(long, value_name = "N")]
        max_lorentz_part: Option<u32>,
        /// Stop after this many witnesses.
        #[arg(long, value_name = "K")]
        max_results: Option<usize>,
    },
    /// Re-derive a published claim and report pass or fail.
    Verify {
        /// Claim id; pass an unknown id to see the list.
        claim: String,
        /// Also write the full report as JSON to this path.
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Regenerate a published table, self-checked against expected values.
    Table {
        /// Which table: 1, 2, 3, or B.
        which: tables::TableId,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

#[derive(ValueEnum, Clone, Copy)]
enum Format {
    Csv,
    Json,
}

const USAGE_ERROR: u8 = 2;
const CHECK_FAILED: u8 = 1;

/// Writes bulk output to stdout. A closed pipe (e.g. `conesig table B |
/// head`) ends the program quietly instead of panicking.
fn emit(body: &str) -> ExitCode {
    use std::io::Write as _;
    let mut out = std::io::stdout().lock();
    match out.write_all(body.as_bytes()).and_then(|()| out.flush()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(CHECK_FAILED)
        }
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Signature { expr } => cmd_signature(&expr),
        Command::Relate { a, b } => cmd_relate(&a, &b),
        Command::Simulacra {
            expr,
            lorentz_only,
            allow,
            max_lorentz_part,
            max_results,
        } => cmd_simulacra(&expr, lorentz_only, allow.as_deref(), max_lorentz_part, max_results),
        Command::Verify { claim, json } => cmd_verify(&claim, json.as_deref()),
        Command::Table { which, format } => cmd_table(which, format),
    }
}

fn parse_or_usage(expr: &str) -> Result<conesig::Cone, ExitCode> {
    parse_cone(expr).map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(USAGE_ERROR)
    })
}

fn cmd_signature(expr: &str) -> ExitCode {
    let cone = match parse_or_usage(expr) {
        Ok(cone) => cone,
        Err(code) => return code,
    };
    println!("canonical: {cone}");
    println!("signature: {}", cone.signature());
    ExitCode::SUCCESS
}

fn cmd_relate(a: &str, b: &str) -> ExitCode {
    let (a, b) = match (parse_or_usage(a), parse_or_usage(b)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(code), _) | (_, Err(code)) => return code,
    };
    println!("{a}  {}", a.signature());
    println!("{b}  {}", b.signature());
    println!("{}", a.relation(&b));
    ExitCode::SUCCESS
}

fn kind_set(allow: &[String]) -> Result<KindSet, ExitCode> {
    let mut set = KindSet::EMPTY;
    for token in allow {
        let kind = match token.trim() {
            "R" | "r" => FactorKind::RealPsd,
            "C" | "c" => FactorKind::ComplexPsd,
            "H" | "h" => FactorKind::QuaternionPsd,
            "O" | "o" => FactorKind::OctonionPsd,
            other => {
                eprintln!("error: unknown algebra '{other}' (expected R, C, H, or O)");
                return Err(ExitCode::from(USAGE_ERROR));
            }
        };
        set = set.with(kind);
    }
    Ok(set)
}

fn cmd_simulacra(
    expr: &str,
    lorentz_only: bool,
    allow: Option<&[String]>,
    max_lorentz_part: Option<u32>,
    max_results: Option<usize>,
) -> ExitCode {
    let cone = match parse_or_usage(expr) {
        Ok(cone) => cone,
        Err(code) => return code,
    };
    let mut policy = if lorentz_only {
        SearchPolicy::lorentz_only()
    } else {
        SearchPolicy::full()
    };
    if let Some(allow) = allow {
        policy = match kind_set(allow) {
            Ok(set) => policy.with_allowed_kinds(set),
            Err(code) => return code,
        };
    }
    policy = policy
        .with_max_lorentz_part(max_lorentz_part)
        .with_max_results(max_results);
    eprintln!("target: {cone}  {}", cone.signature());
    let found = find_simulacra(&cone, &policy);
    if found.is_empty() {
        eprintln!("no simulacra found");
        return ExitCode::from(CHECK_FAILED);
    }
    let mut body = String::new();
    for witness in &found {
        body.push_str(&witness.to_string());
        body.push('\n');
    }
    emit(&body)
}

fn cmd_verify(claim: &str, json: Option<&std::path::Path>) -> ExitCode {
    let Some(report) = claims::run(claim) else {
        eprintln!("error: unknown claim '{claim}'");
        eprintln!("known claims: {}", claims::CLAIM_IDS.join(", "));
        return ExitCode::from(USAGE_ERROR);
    };
    println!(
        "claim {}: {} ({} records, {} ms)",
        report.claim,
        report.verdict,
        report.records.len(),
        report.elapsed_ms
    );
    for failure in report.failures() {
        println!(
            "  FAIL {}: expected {}; got {}",
            failure.input, failure.expected, failure.actual
        );
    }
    if let Some(path) = json {
        let body = serde_json::to_string_pretty(&report).expect("reports serialize");
        if let Err(e) = std::fs::write(path, body) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(USAGE_ERROR);
        }
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(CHECK_FAILED)
    }
}

fn cmd_table(which: tables::TableId, format: Format) -> ExitCode {
    match tables::generate(which) {
        Ok(table) => {
            let body = match format {
                Format::Csv => tables::to_csv(&table),
                Format::Json => {
                    let mut json = tables::to_json(&table);
                    json.push('\n');
                    json
                }
            };
            emit(&body)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(CHECK_FAILED)
        }
    }
}
