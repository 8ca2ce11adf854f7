use std::fmt::Display;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use torsionkit::cert::{self, Certificate};
use torsionkit::classify_an::{self, Decomposition, Side};
use torsionkit::classify_tube;
use torsionkit::export;
use torsionkit::oracle::{self, DEFAULT_MAX_CAP, DEFAULT_MAX_N};
use torsionkit::{Error, LinearCategory, Quiver, TorsionPair, Tube};

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_MALFORMED: u8 = 3;
const EXIT_BOUND: u8 = 4;

/// Torsion pairs over linearly oriented A_n and over tubes.
///
/// Exit codes: 0 success, 1 verification failure, 2 usage error,
/// 3 malformed input, 4 resource bound exceeded.
#[derive(Parser)]
#[command(name = "torsionkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every torsion pair as certificates.
    Enumerate {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Write to this file instead of stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Split torsion-pair certificates into a part partition and a residual pair.
    Decompose {
        /// Certificate file, or `-` for stdin.
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = SideArg::Left)]
        side: SideArg,
    },
    /// Rebuild torsion-pair certificates from `decompose` output.
    Assemble {
        /// Decomposition file, or `-` for stdin.
        input: PathBuf,
    },
    /// Check certificates against the torsion-pair axioms.
    Verify {
        /// Certificate file, or `-` for stdin.
        input: PathBuf,
        /// Largest module length checked for tube certificates.
        #[arg(long, default_value_t = 6)]
        cap: u32,
        #[arg(long, default_value_t = DEFAULT_MAX_CAP)]
        max_cap: u32,
    },
    /// Count torsion pairs.
    Count {
        #[command(flatten)]
        target: Target,
        /// Cross-check the count by independent methods.
        #[arg(long)]
        check: bool,
        #[command(flatten)]
        bounds: Bounds,
        /// Largest truncated tube (rank times length) brute-forced by `--check`.
        #[arg(long, default_value_t = 20)]
        max_objects: u32,
    },
    /// Graphviz output for the Auslander-Reiten quiver or the lattice of torsion classes.
    Export {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum)]
        dot: DotKind,
        /// Largest module length drawn for tubes.
        #[arg(long, default_value_t = 4)]
        cap: u32,
        #[command(flatten)]
        bounds: Bounds,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Target {
    /// Linearly oriented A_n with arrows i -> i+1.
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u32).range(1..))]
    an: Option<u32>,
    /// Tube of the given rank.
    #[arg(long, value_name = "RANK", value_parser = clap::value_parser!(u32).range(1..))]
    tube: Option<u32>,
}

#[derive(Args)]
struct Bounds {
    /// Largest n (or tube rank) accepted.
    #[arg(long, default_value_t = DEFAULT_MAX_N)]
    max_n: u32,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    /// One JSON array.
    Json,
    /// One certificate per line.
    Jsonl,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Left,
    Right,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum DotKind {
    Ar,
    Lattice,
}

/// One line of `decompose` output.
#[derive(Serialize, Deserialize)]
struct DecomposeRecord {
    schema: String,
    category: Quiver,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    left: Option<Decomposition>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    right: Option<Decomposition>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    residuals_agree: Option<bool>,
}

#[derive(Serialize)]
struct CountCheck {
    target: String,
    n: u32,
    count: u128,
    methods: Vec<(String, u128)>,
    agree: bool,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Display) -> Self {
        Failure { code, message: message.to_string() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BoundExceeded { .. } => EXIT_BOUND,
            Error::ZeroSize(_) | Error::ZeroCap => EXIT_USAGE,
            _ => EXIT_MALFORMED,
        };
        Failure::new(code, e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::new(EXIT_MALFORMED, e)
    }
}

type Outcome = Result<u8, Failure>;

fn bounded(what: &'static str, value: u32, bound: u32) -> Result<(), Failure> {
    if value > bound {
        return Err(Error::BoundExceeded { what, value: value.into(), bound: bound.into() }.into());
    }
    Ok(())
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::new(EXIT_MALFORMED, format!("{}: {e}", path.display())))
    }
}

/// One JSON value, an array of them, or one per line.
fn parse_records<T: DeserializeOwned>(text: &str) -> Result<Vec<T>, Failure> {
    let malformed = |e: serde_json::Error| Failure::new(EXIT_MALFORMED, format!("malformed input: {e}"));
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(Failure::new(EXIT_MALFORMED, "malformed input: empty"));
    }
    match serde_json::from_str::<serde_json::Value>(trimmed) {
        Ok(serde_json::Value::Array(items)) => items.into_iter().map(|v| serde_json::from_value(v).map_err(malformed)).collect(),
        Ok(value) => Ok(vec![serde_json::from_value(value).map_err(malformed)?]),
        Err(_) => trimmed
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| serde_json::from_str(l).map_err(malformed))
            .collect(),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable")
}

fn render(lines: &[String], format: Format) -> String {
    match format {
        Format::Json if lines.is_empty() => "[]\n".into(),
        Format::Json => format!("[\n{}\n]\n", lines.join(",\n")),
        Format::Jsonl => lines.iter().map(|l| format!("{l}\n")).collect(),
    }
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::new(EXIT_MALFORMED, format!("{}: {e}", path.display()))),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn enumerate(target: &Target, format: Format, output: Option<&Path>, bounds: &Bounds) -> Outcome {
    let certs: Vec<Certificate> = match (target.an, target.tube) {
        (Some(n), _) => {
            bounded("n", n, bounds.max_n)?;
            let cat = LinearCategory::linear(n)?;
            classify_an::enumerate_torsion_pairs(&cat)?
                .into_iter()
                .map(|tp| Certificate::pair(cat.quiver().clone(), tp))
                .collect()
        }
        (_, Some(rank)) => {
            bounded("rank", rank, bounds.max_n)?;
            classify_tube::enumerate_tube_tps(rank)?.into_iter().map(Certificate::tube).collect::<Result<_, _>>()?
        }
        _ => unreachable!("clap requires one target"),
    };
    let lines: Vec<String> = certs.iter().map(to_json).collect();
    emit(&render(&lines, format), output)?;
    Ok(0)
}

fn decompose(input: &Path, side: SideArg) -> Outcome {
    let certs = cert::parse_certificates(&read_input(input)?)?;
    let mut out = String::new();
    for c in &certs {
        let (cat, tp) = c.linear_pair()?;
        let left = matches!(side, SideArg::Left | SideArg::Both).then(|| classify_an::decompose_left(&cat, &tp)).transpose()?;
        let right =
            matches!(side, SideArg::Right | SideArg::Both).then(|| classify_an::decompose_right(&cat, &tp)).transpose()?;
        let residuals_agree = match (&left, &right) {
            (Some(l), Some(r)) => Some(l.residual == r.residual),
            _ => None,
        };
        let record = DecomposeRecord { schema: cert::SCHEMA.into(), category: c.category.clone(), left, right, residuals_agree };
        out.push_str(&to_json(&record));
        out.push('\n');
    }
    emit(&out, None)?;
    Ok(0)
}

fn assemble(input: &Path) -> Outcome {
    let records: Vec<DecomposeRecord> = parse_records(&read_input(input)?)?;
    let mut out = String::new();
    let mut code = 0;
    for record in records {
        if record.schema != cert::SCHEMA {
            return Err(Failure::new(EXIT_MALFORMED, format!("unknown schema {:?}", record.schema)));
        }
        let cat = LinearCategory::new(record.category.clone())?;
        let mut rebuilt: Vec<TorsionPair<_>> = Vec::new();
        for d in record.left.iter().chain(record.right.iter()) {
            rebuilt.push(match d.side {
                Side::Left => classify_an::assemble(&cat, &d.partition, &d.residual)?,
                Side::Right => classify_an::assemble_right(&cat, &d.partition, &d.residual)?,
            });
        }
        let Some(tp) = rebuilt.first().cloned() else {
            return Err(Failure::new(EXIT_MALFORMED, "record has neither a left nor a right decomposition"));
        };
        if rebuilt.iter().any(|other| *other != tp) {
            eprintln!("left and right decompositions assemble to different pairs");
            code = EXIT_FAILED;
        }
        out.push_str(&to_json(&Certificate::pair(record.category, tp)));
        out.push('\n');
    }
    emit(&out, None)?;
    Ok(code)
}

fn verify(input: &Path, cap: u32, max_cap: u32) -> Outcome {
    bounded("cap", cap, max_cap)?;
    let certs = cert::parse_certificates(&read_input(input)?)?;
    let mut out = String::new();
    let mut code = 0;
    for (i, c) in certs.iter().enumerate() {
        let verdict = cert::verify(c, cap)?;
        let status = if verdict.passed { "PASS" } else { "FAIL" };
        out.push_str(&format!("{status} {i}: {}\n", verdict.detail));
        if !verdict.passed {
            code = EXIT_FAILED;
        }
    }
    emit(&out, None)?;
    Ok(code)
}

fn count(target: &Target, check: bool, bounds: &Bounds, max_objects: u32) -> Outcome {
    let report = match (target.an, target.tube) {
        (Some(n), _) => {
            if !check {
                println!("{}", classify_an::count_torsion_pairs(n)?);
                return Ok(0);
            }
            let r = classify_an::verify_count(n, bounds.max_n)?;
            CountCheck {
                target: "an".into(),
                n,
                count: r.formula,
                methods: vec![
                    ("catalan".into(), r.formula),
                    ("partitions".into(), r.partitions as u128),
                    ("brute_force".into(), r.brute_force as u128),
                ],
                agree: r.consistent(),
            }
        }
        (_, Some(rank)) => {
            bounded("rank", rank, bounds.max_n)?;
            let by_kind = classify_tube::enumerate_tube_tps(rank)?;
            if !check {
                println!("{}", by_kind.len());
                return Ok(0);
            }
            let by_partition = classify_tube::enumerate_tube_tps_by_partition(rank)?;
            let truncated = oracle::enumerate_truncated_tube_pairs(rank, rank.max(2), max_objects)?;
            CountCheck {
                target: "tube".into(),
                n: rank,
                count: by_kind.len() as u128,
                methods: vec![
                    ("classification".into(), by_kind.len() as u128),
                    ("partitions".into(), by_partition.len() as u128),
                    ("truncated_brute_force".into(), truncated.len() as u128),
                ],
                agree: by_kind == by_partition && truncated.len() == by_kind.len(),
            }
        }
        _ => unreachable!("clap requires one target"),
    };
    println!("{}", report.count);
    println!("{}", to_json(&report));
    Ok(if report.agree { 0 } else { EXIT_FAILED })
}

fn export_dot(target: &Target, dot: DotKind, cap: u32, bounds: &Bounds) -> Outcome {
    let text = match (target.an, target.tube) {
        (Some(n), _) => {
            bounded("n", n, bounds.max_n)?;
            let cat = LinearCategory::linear(n)?;
            match dot {
                DotKind::Ar => export::ar_quiver_linear(&cat),
                DotKind::Lattice => export::lattice_linear(&cat)?,
            }
        }
        (_, Some(rank)) => {
            bounded("rank", rank, bounds.max_n)?;
            if cap == 0 {
                return Err(Error::ZeroCap.into());
            }
            bounded("cap", cap, DEFAULT_MAX_CAP)?;
            let tube = Tube::new(rank)?;
            match dot {
                DotKind::Ar => export::ar_quiver_tube(&tube, cap),
                DotKind::Lattice => export::lattice_tube(&tube)?,
            }
        }
        _ => unreachable!("clap requires one target"),
    };
    emit(&text, None)?;
    Ok(0)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Enumerate { target, format, output, bounds } => enumerate(&target, format, output.as_deref(), &bounds),
        Command::Decompose { input, side } => decompose(&input, side),
        Command::Assemble { input } => assemble(&input),
        Command::Verify { input, cap, max_cap } => verify(&input, cap, max_cap),
        Command::Count { target, check, bounds, max_objects } => count(&target, check, &bounds, max_objects),
        Command::Export { target, dot, cap, bounds } => export_dot(&target, dot, cap, &bounds),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
