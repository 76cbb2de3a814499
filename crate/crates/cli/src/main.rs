//! Command-line front end for the covering library: decide whether a
//! covering exists, enumerate sources, construct a covering to a spec file,
//! verify a spec file, and query the map pointwise.
//!
//! Every invocation prints exactly one JSON document on stdout with
//! deterministic key order; diagnostics go to stderr. The exit code is a
//! function of the `status` field alone: 0 for exists/verified, 1 for
//! not_exists/failed, 2 for error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::Signed;
use serde_json::{json, Map, Value};

use seifert_cover::{
    decide_cover, enumerate_sources, sample_points, CoverSpec, Error, Rational, SeifertInvariant,
    UCPoint,
};

#[derive(Parser)]
#[command(
    name = "seifert-cover",
    version,
    about = "Fiber-preserving branched coverings of Seifert fibered solid tori, decided and verified in exact arithmetic"
)]
struct Cli {
    /// Pretty-print the JSON output (whitespace only; content is identical)
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a degree-k fiber-preserving branched covering exists
    Decide(DecideArgs),
    /// List every source invariant admitting a degree-k covering onto the target
    Enumerate(EnumerateArgs),
    /// Build the covering map and write it to a spec file
    Construct(ConstructArgs),
    /// Re-check a spec file's identities over deterministic sample points
    Verify(VerifyArgs),
    /// Apply the covering map to one point of the source solid torus
    MapPoint(PointArgs),
    /// List all preimages of one point of the target solid torus
    Preimages(PointArgs),
}

#[derive(Args)]
struct DecideArgs {
    /// Source invariant as "alpha,beta"
    #[arg(long, allow_hyphen_values = true)]
    inv1: String,
    /// Target invariant as "alpha,beta"
    #[arg(long, allow_hyphen_values = true)]
    inv2: String,
    /// Covering degree
    #[arg(short, long = "degree", allow_hyphen_values = true)]
    k: String,
    /// Also search over cross-section changes of the source
    #[arg(long)]
    search_sections: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Target invariant as "alpha,beta"
    #[arg(long, allow_hyphen_values = true)]
    inv2: String,
    /// Covering degree
    #[arg(short, long = "degree", allow_hyphen_values = true)]
    k: String,
}

#[derive(Args)]
struct ConstructArgs {
    /// Source invariant as "alpha,beta"
    #[arg(long, allow_hyphen_values = true)]
    inv1: String,
    /// Target invariant as "alpha,beta"
    #[arg(long, allow_hyphen_values = true)]
    inv2: String,
    /// Covering degree
    #[arg(short, long = "degree", allow_hyphen_values = true)]
    k: String,
    /// Path the covering spec JSON is written to
    #[arg(short, long = "out")]
    out: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    /// Covering spec file produced by `construct`
    spec: PathBuf,
    /// Number of sample points
    #[arg(long, default_value_t = 500)]
    samples: usize,
    /// Seed for the deterministic sampler
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest denominator drawn for sample coordinates
    #[arg(long, default_value_t = 1000)]
    denominator_bound: u64,
}

#[derive(Args)]
struct PointArgs {
    /// Covering spec file produced by `construct`
    spec: PathBuf,
    /// Radial coordinate, a rational in [0, 1]
    #[arg(long, allow_hyphen_values = true)]
    r: String,
    /// Angle coordinate in turns, any rational (reduced mod 1)
    #[arg(long, allow_hyphen_values = true)]
    theta: String,
    /// Height coordinate, any rational (reduced into the torus)
    #[arg(long, allow_hyphen_values = true)]
    t: String,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Exists,
    NotExists,
    Verified,
    Failed,
    Error,
}

impl Status {
    fn name(self) -> &'static str {
        match self {
            Status::Exists => "exists",
            Status::NotExists => "not_exists",
            Status::Verified => "verified",
            Status::Failed => "failed",
            Status::Error => "error",
        }
    }

    fn exit_code(self) -> u8 {
        match self {
            Status::Exists | Status::Verified => 0,
            Status::NotExists | Status::Failed => 1,
            Status::Error => 2,
        }
    }
}

struct CommandResult {
    status: Status,
    payload: Value,
}

struct CliError(String);

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(cli.command).unwrap_or_else(|e| CommandResult {
        status: Status::Error,
        payload: json!({ "message": e.0 }),
    });
    let mut doc = match result.payload {
        Value::Object(map) => map,
        other => Map::from_iter([("payload".to_owned(), other)]),
    };
    doc.insert("status".to_owned(), json!(result.status.name()));
    let doc = Value::Object(doc);
    let text = if cli.pretty {
        serde_json::to_string_pretty(&doc)
    } else {
        serde_json::to_string(&doc)
    }
    .expect("the output document always serializes");
    println!("{text}");
    ExitCode::from(result.status.exit_code())
}

fn run(command: Command) -> Result<CommandResult, CliError> {
    match command {
        Command::Decide(a) => cmd_decide(a),
        Command::Enumerate(a) => cmd_enumerate(a),
        Command::Construct(a) => cmd_construct(a),
        Command::Verify(a) => cmd_verify(a),
        Command::MapPoint(a) => cmd_map_point(a),
        Command::Preimages(a) => cmd_preimages(a),
    }
}

fn cmd_decide(a: DecideArgs) -> Result<CommandResult, CliError> {
    let inv1 = parse_invariant(&a.inv1, "--inv1")?;
    let inv2 = parse_invariant(&a.inv2, "--inv2")?;
    let k = parse_degree(&a.k)?;
    let record = decide_cover(&inv1, &inv2, &k, a.search_sections);
    let status = if record.exists {
        Status::Exists
    } else {
        Status::NotExists
    };
    Ok(CommandResult {
        status,
        payload: json!({
            "k": big(&k),
            "inv1": serde_json::to_value(&inv1)?,
            "inv2": serde_json::to_value(&inv2)?,
            "search_sections": a.search_sections,
            "decision": serde_json::to_value(&record)?,
        }),
    })
}

fn cmd_enumerate(a: EnumerateArgs) -> Result<CommandResult, CliError> {
    let inv2 = parse_invariant(&a.inv2, "--inv2")?;
    let k = parse_degree(&a.k)?;
    let sources = enumerate_sources(&inv2, &k);
    let status = if sources.is_empty() {
        Status::NotExists
    } else {
        Status::Exists
    };
    Ok(CommandResult {
        status,
        payload: json!({
            "k": big(&k),
            "inv2": serde_json::to_value(&inv2)?,
            "sources": serde_json::to_value(&sources)?,
            "count": sources.len(),
        }),
    })
}

fn cmd_construct(a: ConstructArgs) -> Result<CommandResult, CliError> {
    let inv1 = parse_invariant(&a.inv1, "--inv1")?;
    let inv2 = parse_invariant(&a.inv2, "--inv2")?;
    let k = parse_degree(&a.k)?;
    let spec = match CoverSpec::build(&inv1, &inv2, &k) {
        Ok(spec) => spec,
        Err(e @ Error::RatioCondition { .. }) => {
            return Ok(CommandResult {
                status: Status::NotExists,
                payload: json!({
                    "k": big(&k),
                    "inv1": serde_json::to_value(&inv1)?,
                    "inv2": serde_json::to_value(&inv2)?,
                    "message": e.to_string(),
                }),
            });
        }
        Err(e) => return Err(e.into()),
    };
    let divisibility = spec.divisibility_check()?;
    let spec_value = serde_json::to_value(&spec)?;
    let mut text = serde_json::to_string_pretty(&spec_value)?;
    text.push('\n');
    fs::write(&a.out, text)
        .map_err(|e| CliError(format!("cannot write {}: {e}", a.out.display())))?;
    Ok(CommandResult {
        status: Status::Exists,
        payload: json!({
            "spec": spec_value,
            "divisibility_check": big(&divisibility),
            "out": a.out.display().to_string(),
        }),
    })
}

fn cmd_verify(a: VerifyArgs) -> Result<CommandResult, CliError> {
    let spec = load_spec(&a.spec)?;
    if a.samples < 1 {
        return Err(CliError("--samples must be at least 1".into()));
    }
    if a.denominator_bound < 2 {
        return Err(CliError("--denominator-bound must be at least 2".into()));
    }
    let samples = sample_points(a.seed, a.samples, a.denominator_bound);
    let report = spec.verify(&samples);
    let status = if report.passed() {
        Status::Verified
    } else {
        Status::Failed
    };
    Ok(CommandResult {
        status,
        payload: json!({
            "spec": serde_json::to_value(&spec)?,
            "samples": a.samples,
            "seed": a.seed,
            "denominator_bound": a.denominator_bound,
            "report": serde_json::to_value(&report)?,
        }),
    })
}

fn cmd_map_point(a: PointArgs) -> Result<CommandResult, CliError> {
    let spec = load_spec(&a.spec)?;
    let p = parse_point(&a)?;
    let x = spec.deck1().canonical_rep(&p);
    let image = spec.quotient_map_apply(&x);
    Ok(CommandResult {
        status: Status::Exists,
        payload: json!({
            "point": serde_json::to_value(x.rep())?,
            "image": serde_json::to_value(image.rep())?,
        }),
    })
}

fn cmd_preimages(a: PointArgs) -> Result<CommandResult, CliError> {
    let spec = load_spec(&a.spec)?;
    let p = parse_point(&a)?;
    let y = spec.deck2().canonical_rep(&p);
    let pre = spec.preimages(&y);
    let reps: Vec<&UCPoint> = pre.iter().map(|x| x.rep()).collect();
    Ok(CommandResult {
        status: Status::Exists,
        payload: json!({
            "point": serde_json::to_value(y.rep())?,
            "preimages": serde_json::to_value(&reps)?,
            "count": reps.len(),
        }),
    })
}

fn load_spec(path: &Path) -> Result<CoverSpec, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError(format!("invalid covering spec {}: {e}", path.display())))
}

fn parse_invariant(s: &str, flag: &str) -> Result<SeifertInvariant, CliError> {
    let parts: Vec<&str> = s.split(',').collect();
    let [alpha, beta] = parts[..] else {
        return Err(CliError(format!(
            "{flag}: expected \"alpha,beta\" with two comma-separated integers, got {s:?}"
        )));
    };
    let alpha: BigInt = alpha
        .trim()
        .parse()
        .map_err(|_| CliError(format!("{flag}: alpha part {alpha:?} is not an integer")))?;
    let beta: BigInt = beta
        .trim()
        .parse()
        .map_err(|_| CliError(format!("{flag}: beta part {beta:?} is not an integer")))?;
    SeifertInvariant::new(alpha, beta).map_err(|e| CliError(format!("{flag}: {e}")))
}

fn parse_degree(s: &str) -> Result<BigInt, CliError> {
    let k: BigInt = s
        .trim()
        .parse()
        .map_err(|_| CliError(format!("degree {s:?} is not an integer")))?;
    if !k.is_positive() {
        return Err(CliError(Error::InvalidDegree(k).to_string()));
    }
    Ok(k)
}

fn parse_point(a: &PointArgs) -> Result<UCPoint, CliError> {
    let r = parse_rational(&a.r, "--r")?;
    let theta = parse_rational(&a.theta, "--theta")?;
    let t = parse_rational(&a.t, "--t")?;
    UCPoint::new(r, theta, t).map_err(CliError::from)
}

fn parse_rational(s: &str, flag: &str) -> Result<Rational, CliError> {
    s.parse().map_err(|e| CliError(format!("{flag}: {e}")))
}

/// A BigInt as a JSON number (arbitrary precision, no quoting).
fn big(v: &BigInt) -> Value {
    Value::Number(serde_json::from_str(&v.to_string()).expect("an integer is a JSON number"))
}
