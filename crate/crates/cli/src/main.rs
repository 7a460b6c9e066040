//! `congruent`: command-line frontend over the exact-arithmetic core.
//!
//! Every subcommand is a thin adapter: parse, call the core, serialize.
//! All numeric output is exact decimal strings — never floats, never
//! native JSON integers that a consumer might truncate.

mod config;

use std::fmt::Write as _;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use congruent_core::audit::{self, Bounds};
use congruent_core::diophantine;
use congruent_core::factor;
use congruent_core::generators;
use congruent_core::oracle::{self, CertifyOutcome};
use congruent_core::rational::triangle_from_strs;
use congruent_core::triples::enumerate_triples;
use congruent_core::RationalTriangle;

use config::RunConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Parser)]
#[command(
    name = "congruent",
    version,
    about = "Exact-arithmetic toolkit for congruent numbers",
    long_about = "Exact-arithmetic toolkit for congruent numbers: primitive \
Pythagorean triples, square parts, witness generation, bounded certification, \
Diophantine searches, and a claim-audit registry.\n\nA flat key=value config \
file supplies defaults (output format, audit bounds). The default path is \
./congruent.conf; the CONGRUENT_CONFIG environment variable overrides it. \
Recognized keys: `format`, `out`, and `<claim-id>.<bound>` for audit bounds, \
e.g. `thm-4.1.max_ab = 50`."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate primitive Pythagorean triples with hypotenuse <= max-c
    Triples {
        #[arg(long)]
        max_c: u128,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Largest d with d^2 dividing n
    Squarepart { n: u128 },
    /// Classify a rational right triangle given its three sides
    Classify {
        /// First leg, as "num" or "num/den"
        leg1: String,
        /// Second leg
        leg2: String,
        /// Hypotenuse
        hyp: String,
    },
    /// Congruent-number witnesses from a Euclid seed (m, n)
    Generate {
        #[arg(long)]
        m: u128,
        #[arg(long)]
        n: u128,
        /// Emit only the sorted distinct values
        #[arg(long)]
        distinct: bool,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Bounded search for a certificate that N is congruent
    Certify {
        n: u128,
        #[arg(long)]
        max_m: u128,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// All solutions of a*x^4 + b*y^4 = z^2 with x, y <= max-xy
    SearchQuartic {
        #[arg(long)]
        a: u128,
        #[arg(long)]
        b: u128,
        #[arg(long)]
        max_xy: u128,
    },
    /// Smallest k with k^2 - 64 p^2 = l^2, l > 1, for a prime p
    Pell {
        #[arg(long)]
        p: u128,
    },
    /// Check that coprime 1/a + 1/b = 1/c forces a + b to be a square
    UnitFractions {
        #[arg(long)]
        max: u128,
    },
    /// Run registered claim audits and emit structured reports
    Audit {
        /// Claim id, e.g. thm-4.1 (thm41 is accepted as shorthand)
        #[arg(long, conflicts_with = "all")]
        claim: Option<String>,
        /// Run the whole registry with default bounds
        #[arg(long)]
        all: bool,
        /// Override a bound, e.g. --bound max_ab=50 (repeatable)
        #[arg(long = "bound", value_name = "NAME=VALUE")]
        bounds: Vec<String>,
        /// Write the report here instead of stdout
        #[arg(long)]
        out: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match RunConfig::load() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    match run(cli.command, &cfg) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command, cfg: &RunConfig) -> Result<(), String> {
    match command {
        Command::Triples { max_c, format } => {
            let triples: Vec<_> = enumerate_triples(max_c).collect();
            match pick_format(format, cfg) {
                Format::Csv => {
                    let mut out = String::from("m,n,a,b,c\n");
                    for t in &triples {
                        writeln!(out, "{},{},{},{},{}", t.m, t.n, t.a, t.b, t.c).unwrap();
                    }
                    print!("{out}");
                }
                Format::Json => {
                    let rows: Vec<Value> = triples
                        .iter()
                        .map(|t| {
                            json!({
                                "m": t.m.to_string(),
                                "n": t.n.to_string(),
                                "a": t.a.to_string(),
                                "b": t.b.to_string(),
                                "c": t.c.to_string(),
                            })
                        })
                        .collect();
                    emit(&Value::Array(rows));
                }
            }
            Ok(())
        }
        Command::Squarepart { n } => {
            let d = factor::square_part(&n).map_err(stringify)?;
            println!("{d}");
            Ok(())
        }
        Command::Classify { leg1, leg2, hyp } => {
            let t = triangle_from_strs(&leg1, &leg2, &hyp).map_err(stringify)?;
            emit(&json!({
                "triangle": triangle_json(&t),
                "class": t.classify().to_string(),
                "area": t.area().to_string(),
            }));
            Ok(())
        }
        Command::Generate { m, n, distinct, format } => {
            if distinct {
                let values = generators::distinct_values_from_seed(m, n).map_err(stringify)?;
                match pick_format(format, cfg) {
                    Format::Csv => {
                        println!("value");
                        for v in values {
                            println!("{v}");
                        }
                    }
                    Format::Json => {
                        let rows: Vec<Value> =
                            values.iter().map(|v| Value::String(v.to_string())).collect();
                        emit(&Value::Array(rows));
                    }
                }
                return Ok(());
            }
            let witnesses = generators::candidates_from_seed(m, n).map_err(stringify)?;
            match pick_format(format, cfg) {
                Format::Csv => {
                    println!("value,m,n,sigma1,sigma2,leg1,leg2,hyp,class");
                    for w in &witnesses {
                        println!(
                            "{},{},{},{},{},{},{},{},{}",
                            w.value,
                            w.seed_m,
                            w.seed_n,
                            w.sigma1,
                            w.sigma2,
                            w.triangle.leg1(),
                            w.triangle.leg2(),
                            w.triangle.hyp(),
                            w.klass
                        );
                    }
                }
                Format::Json => {
                    let rows: Vec<Value> = witnesses
                        .iter()
                        .map(|w| {
                            json!({
                                "value": w.value.to_string(),
                                "m": w.seed_m.to_string(),
                                "n": w.seed_n.to_string(),
                                "sigma1": w.sigma1.to_string(),
                                "sigma2": w.sigma2.to_string(),
                                "triangle": triangle_json(&w.triangle),
                                "class": w.klass.to_string(),
                            })
                        })
                        .collect();
                    emit(&Value::Array(rows));
                }
            }
            Ok(())
        }
        Command::Certify { n, max_m, format: _ } => {
            match oracle::certify(n, max_m).map_err(stringify)? {
                CertifyOutcome::Certified(cert) => emit(&json!({
                    "value": cert.value.to_string(),
                    "m": cert.seed_m.to_string(),
                    "n": cert.seed_n.to_string(),
                    "k": cert.scale_k.to_string(),
                    "triangle": triangle_json(&cert.triangle),
                })),
                CertifyOutcome::UnknownUpToBound { max_m } => emit(&json!({
                    "value": n.to_string(),
                    "status": "unknown_up_to_bound",
                    "max_m": max_m.to_string(),
                })),
            }
            Ok(())
        }
        Command::SearchQuartic { a, b, max_xy } => {
            let rows: Vec<Value> = diophantine::search_quartic(a, b, max_xy)
                .iter()
                .map(|s| {
                    json!({
                        "a": s.a.to_string(),
                        "b": s.b.to_string(),
                        "x": s.x.to_string(),
                        "y": s.y.to_string(),
                        "z": s.z.to_string(),
                    })
                })
                .collect();
            emit(&Value::Array(rows));
            Ok(())
        }
        Command::Pell { p } => {
            let solution = diophantine::pell_like_search(p).map_err(stringify)?;
            emit(&json!({
                "p": p.to_string(),
                "solution": solution.map(|(k, l)| json!({
                    "k": k.to_string(),
                    "l": l.to_string(),
                })),
            }));
            Ok(())
        }
        Command::UnitFractions { max } => {
            let report = diophantine::unit_fraction_audit(max);
            let violations: Vec<Value> = report
                .violations
                .iter()
                .map(|(a, b, c)| {
                    json!([a.to_string(), b.to_string(), c.to_string()])
                })
                .collect();
            emit(&json!({
                "checked": report.checked.to_string(),
                "violations": violations,
            }));
            Ok(())
        }
        Command::Audit { claim, all, bounds, out } => {
            let out = out.or_else(|| cfg.output_path.clone());
            let reports = if all {
                run_all_audits(cfg)?
            } else {
                let raw = claim.ok_or("audit requires --claim <id> or --all")?;
                let id = resolve_claim_id(&raw);
                let mut b = audit::default_bounds(&id).map_err(stringify)?;
                for (name, value) in cfg.claim_bounds(&id) {
                    b.insert(name, value);
                }
                for spec in &bounds {
                    let (name, value) = parse_bound(spec)?;
                    b.insert(name, value);
                }
                vec![timed_claim(&id, &b)?]
            };
            let value = if reports.len() == 1 && !all {
                reports.into_iter().next().unwrap()
            } else {
                Value::Array(reports)
            };
            let rendered = format!("{:#}", value);
            match out {
                Some(path) => std::fs::write(&path, rendered + "\n")
                    .map_err(|e| format!("cannot write {path}: {e}"))?,
                None => println!("{rendered}"),
            }
            Ok(())
        }
    }
}

fn run_all_audits(cfg: &RunConfig) -> Result<Vec<Value>, String> {
    audit::known_claims()
        .into_iter()
        .map(|id| {
            let mut b = audit::default_bounds(id).map_err(stringify)?;
            for (name, value) in cfg.claim_bounds(id) {
                b.insert(name, value);
            }
            timed_claim(id, &b)
        })
        .collect()
}

/// Runs one claim and serializes its report, adding `elapsed_ms`.
///
/// The core report is a pure function of (claim, bounds); the timing field
/// is attached only here, at the serialization boundary.
fn timed_claim(id: &str, bounds: &Bounds) -> Result<Value, String> {
    let start = Instant::now();
    let report = audit::run_claim(id, bounds).map_err(stringify)?;
    let elapsed_ms = start.elapsed().as_millis() as u64;
    let mut obj = Map::new();
    obj.insert("claim_id".into(), Value::String(report.claim_id));
    obj.insert(
        "paper_location".into(),
        Value::String(report.paper_location),
    );
    let bounds_obj: Map<String, Value> = report
        .bounds
        .iter()
        .map(|(k, v)| (k.clone(), Value::String(v.to_string())))
        .collect();
    obj.insert("bounds".into(), Value::Object(bounds_obj));
    obj.insert("status".into(), Value::String(report.status.to_string()));
    obj.insert("checked_count".into(), json!(report.checked_count));
    let witnesses: Vec<Value> = report
        .witnesses
        .iter()
        .map(|w| {
            Value::Object(
                w.iter()
                    .map(|(k, v)| (k.clone(), Value::String(v.clone())))
                    .collect(),
            )
        })
        .collect();
    obj.insert("witnesses".into(), Value::Array(witnesses));
    obj.insert("elapsed_ms".into(), json!(elapsed_ms));
    Ok(Value::Object(obj))
}

/// Accepts `thm-4.1` verbatim and `thm41`-style shorthand.
fn resolve_claim_id(raw: &str) -> String {
    let raw = raw.trim().to_ascii_lowercase();
    if audit::known_claims().contains(&raw.as_str()) {
        return raw;
    }
    let prefix: String = raw.chars().take_while(|c| c.is_ascii_alphabetic()).collect();
    let digits: String = raw[prefix.len()..].chars().filter(|c| c.is_ascii_digit()).collect();
    if digits.len() == 2 {
        let candidate = format!("{prefix}-{}.{}", &digits[..1], &digits[1..]);
        if audit::known_claims().contains(&candidate.as_str()) {
            return candidate;
        }
    }
    raw
}

fn parse_bound(spec: &str) -> Result<(String, u128), String> {
    let (name, value) = spec
        .split_once('=')
        .ok_or_else(|| format!("bound must be NAME=VALUE, got {spec:?}"))?;
    let value: u128 = value
        .trim()
        .parse()
        .map_err(|_| format!("bound value must be a positive integer, got {spec:?}"))?;
    Ok((name.trim().to_string(), value))
}

fn pick_format(flag: Option<Format>, cfg: &RunConfig) -> Format {
    flag.unwrap_or(cfg.output_format)
}

fn triangle_json(t: &RationalTriangle) -> Value {
    Value::Array(
        t.sides()
            .iter()
            .map(|s| Value::String(s.to_string()))
            .collect(),
    )
}

fn emit(value: &Value) {
    println!("{:#}", value);
}

fn stringify(e: impl std::fmt::Display) -> String {
    e.to_string()
}
