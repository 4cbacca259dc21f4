//! `isojac` command line. Every command builds a JSON report; text mode
//! renders a subset of the same report.
//!
//! Exit codes: 0 when the computation ran and its expectations hold, 1 on an
//! expectation mismatch or internal failure, 2 on usage and precondition
//! errors.

use clap::{Parser, Subcommand, ValueEnum};
use isojac::distinct::{charp_analysis, full_scan, prime_support};
use isojac::exact::serial::{field_json, poly_json, render_poly};
use isojac::exact::{parse_poly, parse_rational, Fp, Poly, PrimeField};
use isojac::families::{family_sextic, map_poly, FamilyId};
use isojac::glue::verify_reconstruction;
use isojac::igusa::igusa_vector;
use isojac::obstruction::{obstruction_record, square_condition_consistency, verify_obstruction};
use isojac::reproduce::{run_all, run_criterion, CriterionOutcome};
use isojac::Error;
use num_rational::BigRational;
use serde_json::{json, Value};
use std::io::Write;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "isojac",
    version,
    about = "Genus-2 curve pairs with isomorphic Jacobians"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Output::Json, global = true)]
    output: Output,
    /// Worker threads (0 = one per core).
    #[arg(long, default_value_t = 0, global = true)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Family curves.
    #[command(subcommand)]
    Family(FamilyCmd),
    /// Reconstruct `C_t`, `C_-t` by gluing over `F_p`.
    Glue {
        #[arg(long)]
        family: FamilyId,
        #[arg(long)]
        p: u64,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
    },
    /// Igusa invariants of a sextic in `x`, over Q or `F_p`.
    Igusa {
        #[arg(long, allow_hyphen_values = true)]
        sextic: String,
        #[arg(long)]
        p: Option<u64>,
    },
    /// Distinguishing `C_t` from `C_-t`.
    #[command(subcommand)]
    Distinct(DistinctCmd),
    /// Obstruction curves for other isogeny degrees.
    #[command(subcommand)]
    Obstruction(ObstructionCmd),
    /// Run the reproduction criteria.
    Reproduce {
        #[arg(long, conflicts_with = "criterion")]
        all: bool,
        #[arg(long)]
        criterion: Option<u8>,
    },
}

#[derive(Subcommand)]
enum FamilyCmd {
    /// `twist * y^2 = sextic(x)` at a parameter value.
    Gen {
        #[arg(long)]
        family: FamilyId,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        #[arg(long)]
        p: Option<u64>,
    },
}

#[derive(Subcommand)]
enum DistinctCmd {
    PrimeSupport {
        #[arg(long)]
        family: FamilyId,
    },
    Charp {
        #[arg(long)]
        family: FamilyId,
        #[arg(long)]
        p: u64,
    },
    Scan {
        #[arg(long)]
        family: FamilyId,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        ext: usize,
    },
}

#[derive(Subcommand)]
enum ObstructionCmd {
    Verify {
        #[arg(long)]
        degree: u32,
        /// Height bound for the point search.
        #[arg(long)]
        bound: Option<u64>,
    },
}

/// A finished command: its report, whether expectations held, and the text rendering.
struct Outcome {
    report: Value,
    ok: bool,
    text: String,
}

enum Failure {
    Usage(String),
    Failed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Precondition(_)
            | Error::Parse(_)
            | Error::OutsideLocus(_)
            | Error::Unsupported(_) => Failure::Usage(e.to_string()),
            _ => Failure::Failed(e.to_string()),
        }
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn fp_of(t: &BigRational, p: u64) -> Result<Fp, Failure> {
    PrimeField::new(p)?;
    Fp::from_rational(t, p).ok_or_else(|| Failure::Usage(format!("t = {t} has a pole mod {p}")))
}

/// `key: value` lines for every scalar leaf, in report order.
fn flatten(v: &Value, prefix: &str, out: &mut Vec<String>) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(x, &key, out);
            }
        }
        Value::Array(xs) if xs.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let items: Vec<String> = xs.iter().map(scalar).collect();
            out.push(format!("{prefix}: [{}]", items.join(", ")));
        }
        Value::Array(xs) => {
            for (i, x) in xs.iter().enumerate() {
                flatten(x, &format!("{prefix}[{i}]"), out);
            }
        }
        _ => out.push(format!("{prefix}: {}", scalar(v))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        _ => v.to_string(),
    }
}

fn flat_text(v: &Value) -> String {
    let mut out = Vec::new();
    flatten(v, "", &mut out);
    out.join("\n")
}

fn family_gen(family: FamilyId, t: &str, p: Option<u64>) -> Result<Outcome, Failure> {
    let tq = parse_rational(t)?;
    let spec = family.spec();
    let (report, text) = match p {
        None => {
            let (twist, sextic) = family_sextic(spec, &tq)?;
            let report = json!({
                "family": family,
                "t": tq.to_string(),
                "twist": twist.to_string(),
                "sextic": poly_json(&sextic),
                "field": field_json(0, 1),
            });
            (
                report,
                format!("{twist}*y^2 = {}", render_poly(&sextic, "x")),
            )
        }
        Some(p) => {
            let tp = fp_of(&tq, p)?;
            let (twist, sextic) = family_sextic(spec, &tp)?;
            let report = json!({
                "family": family,
                "t": tp.value().to_string(),
                "twist": twist.value().to_string(),
                "sextic": poly_json(&sextic),
                "field": field_json(p, 1),
            });
            (
                report,
                format!(
                    "{}*y^2 = {}  over F_{p}",
                    twist.value(),
                    render_poly(&sextic, "x")
                ),
            )
        }
    };
    Ok(Outcome {
        report,
        ok: true,
        text,
    })
}

fn igusa(sextic: &str, p: Option<u64>) -> Result<Outcome, Failure> {
    let f = parse_poly(sextic, "x")?;
    let (values, field): (Vec<String>, Value) = match p {
        None => (
            igusa_vector(&f)?.j.iter().map(|v| v.to_string()).collect(),
            field_json(0, 1),
        ),
        Some(p) => {
            let k = PrimeField::new(p)?;
            let fp: Poly<Fp> = map_poly(&f, &k.zero())?;
            (
                igusa_vector(&fp)?
                    .j
                    .iter()
                    .map(|v| v.value().to_string())
                    .collect(),
                field_json(p, 1),
            )
        }
    };
    let names = ["J2", "J4", "J6", "J8", "J10"];
    let mut report = serde_json::Map::new();
    for (n, v) in names.iter().zip(&values) {
        report.insert(n.to_string(), Value::String(v.clone()));
    }
    report.insert("field".into(), field);
    let text = names
        .iter()
        .zip(&values)
        .map(|(n, v)| format!("{n} = {v}"))
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Outcome {
        report: Value::Object(report),
        ok: true,
        text,
    })
}

fn glue(family: FamilyId, p: u64, t: &str) -> Result<Outcome, Failure> {
    let tp = fp_of(&parse_rational(t)?, p)?;
    let r = verify_reconstruction(family.spec(), &tp)?;
    let report = to_json(&r);
    let text = format!(
        "{family} p={p} t={}: graphs tried {}, classes {}, match {}, A,B in F_p {}, twists match {}",
        r.t, r.graphs_tried, r.classes_found, r.matched, r.a_b_in_base_field, r.twists_match
    );
    Ok(Outcome {
        report,
        ok: r.passed(),
        text,
    })
}

fn distinct(cmd: DistinctCmd) -> Result<Outcome, Failure> {
    let (report, ok) = match cmd {
        DistinctCmd::PrimeSupport { family } => {
            let r = prime_support(family.spec())?;
            (to_json(&r), r.match_above5)
        }
        DistinctCmd::Charp { family, p } => {
            let r = charp_analysis(family.spec(), p)?;
            (to_json(&r), r.passed())
        }
        DistinctCmd::Scan { family, p, ext } => {
            let r = full_scan(family.spec(), p, ext)?;
            (to_json(&r), r.passed())
        }
    };
    let text = flat_text(&report);
    Ok(Outcome { report, ok, text })
}

fn obstruction(degree: u32, bound: Option<u64>) -> Result<Outcome, Failure> {
    let rec = obstruction_record(degree)?;
    let points = verify_obstruction(&rec, bound)?;
    let square = square_condition_consistency(&rec)?;
    // the printed-class discrepancy is reported, not an expectation failure
    let ok = points.passed() && square.j_relation == isojac::obstruction::Relation::Equal;
    let report = json!({"points": to_json(&points), "squareCondition": to_json(&square)});
    let text = flat_text(&report);
    Ok(Outcome { report, ok, text })
}

fn reproduce(all: bool, criterion: Option<u8>) -> Result<Outcome, Failure> {
    let outcomes: Vec<CriterionOutcome> = match (all, criterion) {
        (_, Some(id)) => vec![run_criterion(id)?],
        (true, None) => run_all(),
        (false, None) => {
            return Err(Failure::Usage(
                "reproduce needs --all or --criterion N".into(),
            ))
        }
    };
    let ok = outcomes.iter().all(|o| o.passed);
    let passed = outcomes.iter().filter(|o| o.passed).count();
    let mut lines: Vec<String> = outcomes.iter().map(|o| o.line()).collect();
    lines.push(format!(
        "{passed} passed, {} failed",
        outcomes.len() - passed
    ));
    let report = json!({"criteria": to_json(&outcomes), "passed": passed, "failed": outcomes.len() - passed});
    Ok(Outcome {
        report,
        ok,
        text: lines.join("\n"),
    })
}

fn dispatch(command: Command) -> Result<Outcome, Failure> {
    match command {
        Command::Family(FamilyCmd::Gen { family, t, p }) => family_gen(family, &t, p),
        Command::Glue { family, p, t } => glue(family, p, &t),
        Command::Igusa { sextic, p } => igusa(&sextic, p),
        Command::Distinct(cmd) => distinct(cmd),
        Command::Obstruction(ObstructionCmd::Verify { degree, bound }) => {
            obstruction(degree, bound)
        }
        Command::Reproduce { all, criterion } => reproduce(all, criterion),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build_global()
    {
        eprintln!("error: thread pool: {e}");
        return ExitCode::from(2);
    }
    match dispatch(cli.command) {
        Ok(o) => {
            let body = match cli.output {
                Output::Json => serde_json::to_string_pretty(&o.report).expect("json"),
                Output::Text => o.text,
            };
            // a closed pipe is not a failure of the command
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            if o.ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("expectation mismatch");
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Failed(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
