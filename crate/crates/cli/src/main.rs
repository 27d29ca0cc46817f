//! Batch driver: exact tables and verification sweeps behind one binary.
//!
//! Every subcommand builds its payload once as a JSON tree; the CSV and
//! text emitters walk the same tree, so the numeric fields cannot drift
//! apart between formats. Exit codes: 0 all good, 1 a verification
//! failed, 2 bad configuration.

use std::path::PathBuf;
use std::process::ExitCode;

use chrono::{SecondsFormat, Utc};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use betagamma::character::character_series;
use betagamma::flow::spectral_flow_module;
use betagamma::fock::{zhu_circle, zhu_star, FockVector, PbwMonomial};
use betagamma::induced::induce;
use betagamma::mta::{contraction_constant, unity, verify_strong_unity, zhu_structure};
use betagamma::partitions::{bipartitions_of, count_bipartitions};
use betagamma::rational::{format_q, Q};
use betagamma::verification;
use betagamma::weight::{
    submodule_lattice, weakly_interlocked, BoundaryStatus, Family, SubSpace, WeightModuleSpec,
};

#[derive(Parser)]
#[command(
    name = "betagamma",
    version,
    about = "Exact tables and verification sweeps for the rank-one Weyl vertex algebra (c = 2)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write the report to this file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Omit the generated_at field so reruns are byte-identical
    #[arg(long, global = true)]
    no_timestamp: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Graded character table of the Fock module
    Characters {
        /// Largest conformal weight in the table
        #[arg(long, default_value_t = 8)]
        max_d: u32,
        /// Charge window: coefficients for |j| up to this bound
        #[arg(long, default_value_t = 8)]
        j_window: i64,
    },
    /// Bipartition counts, optionally listing one degree
    P2 {
        /// Largest degree counted
        #[arg(long, alias = "max", default_value_t = 10)]
        max_d: u32,
        /// Also list the bipartitions of this degree
        #[arg(long)]
        level: Option<u32>,
    },
    /// Contraction constants, unity, and the strong-unity report at one level
    Mta {
        #[arg(long, default_value_t = 1)]
        level: u32,
    },
    /// Zhu-algebra block descriptor at one level
    Zhu {
        #[arg(long, default_value_t = 1)]
        level: u32,
    },
    /// Sample tables of the circle and star products on small states
    ZhuProducts {
        /// Product index n for both families
        #[arg(long, default_value_t = 0)]
        level: u32,
    },
    /// Socle, radical, and interlock diagnostics for one weight family
    Modules {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, default_value_t = 12)]
        window: u32,
        /// Exponent offset p/q for the wlambda family, strictly between 0 and 1
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long, value_enum, default_value_t = ModulesReport::Interlock)]
        report: ModulesReport,
    },
    /// Twisted-action verification for one spectral flow of an induced module
    Flow {
        #[arg(long)]
        ell: i64,
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        lambda: Option<String>,
        /// Truncation depth; defaults to the smallest size the checks accept
        #[arg(long)]
        depth: Option<u32>,
        /// Exponent window; defaults to the smallest size the checks accept
        #[arg(long)]
        window: Option<u32>,
    },
    /// The full verification suite
    VerifyAll {
        /// Trim sweep sizes for interactive use
        #[arg(long)]
        quick: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    V,
    Cv,
    Wlambda,
    #[value(name = "w0+")]
    W0Plus,
    #[value(name = "w0-")]
    W0Minus,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum ModulesReport {
    Interlock,
    Lattice,
}

/// A configuration problem: reported as a machine-readable object, exit 2.
struct ConfigError(String);

/// A computation that did not verify: report still emitted, exit 1.
struct Outcome {
    payload: Value,
    failed: bool,
}

fn parse_rational(s: &str) -> Result<Q, ConfigError> {
    let parse_int = |t: &str| {
        t.trim()
            .parse::<i64>()
            .map_err(|_| ConfigError(format!("cannot parse '{t}' as an integer")))
    };
    match s.split_once('/') {
        Some((num, den)) => {
            let n = parse_int(num)?;
            let d = parse_int(den)?;
            if d == 0 {
                return Err(ConfigError("zero denominator".into()));
            }
            Ok(Q::new(n.into(), d.into()))
        }
        None => Ok(Q::from_integer(parse_int(s)?.into())),
    }
}

fn resolve_family(arg: FamilyArg, lambda: &Option<String>) -> Result<Family, ConfigError> {
    match arg {
        FamilyArg::Wlambda => {
            let raw = lambda
                .as_ref()
                .ok_or_else(|| ConfigError("family wlambda needs --lambda p/q".into()))?;
            let l = parse_rational(raw)?;
            if l <= Q::from_integer(0.into()) || l >= Q::from_integer(1.into()) {
                return Err(ConfigError(format!(
                    "lambda must lie strictly between 0 and 1, got {}",
                    format_q(&l)
                )));
            }
            Ok(Family::WLambda(l))
        }
        other => {
            if lambda.is_some() {
                return Err(ConfigError(
                    "--lambda only applies to the wlambda family".into(),
                ));
            }
            Ok(match other {
                FamilyArg::V => Family::V,
                FamilyArg::Cv => Family::ConjV,
                FamilyArg::W0Plus => Family::W0Plus,
                FamilyArg::W0Minus => Family::W0Minus,
                FamilyArg::Wlambda => unreachable!(),
            })
        }
    }
}

fn subspace_str(s: &SubSpace) -> String {
    match s {
        SubSpace::Zero => "zero".into(),
        SubSpace::UpSet { min_exponent } => format!("upset({min_exponent})"),
        SubSpace::Whole => "whole".into(),
    }
}

fn boundary_str(b: BoundaryStatus) -> &'static str {
    match b {
        BoundaryStatus::Clean => "clean",
        BoundaryStatus::InconclusiveAtBoundary => "inconclusive-at-boundary",
    }
}

fn small_states() -> Vec<(&'static str, FockVector)> {
    vec![
        ("1", FockVector::vacuum()),
        ("a", FockVector::monomial(PbwMonomial::new(vec![-1], vec![]))),
        ("a*", FockVector::monomial(PbwMonomial::new(vec![], vec![0]))),
        ("J", FockVector::current_j()),
        ("w", FockVector::omega()),
    ]
}

fn run(cmd: &Command) -> Result<Outcome, ConfigError> {
    match cmd {
        Command::Characters { max_d, j_window } => {
            if *j_window < 0 {
                return Err(ConfigError("--j-window must be non-negative".into()));
            }
            let series = character_series(*max_d, *j_window)
                .map_err(|e| ConfigError(format!("character table rejected the config: {e}")))?;
            let mut rows = Vec::new();
            for d in 0..=*max_d {
                for j in -*j_window..=*j_window {
                    rows.push(json!({
                        "d": d,
                        "j": j,
                        "coefficient": series.coefficient(d, j).to_string(),
                    }));
                }
            }
            Ok(Outcome {
                payload: json!({
                    "report": "characters",
                    "max_d": max_d,
                    "j_window": j_window,
                    "prefactor_exponent": format_q(&series.prefactor_exponent()),
                    "charge_convention": series.charge_convention(),
                    "table": rows,
                }),
                failed: false,
            })
        }
        Command::P2 { max_d, level } => {
            let counts: Vec<u64> = (0..=*max_d).map(count_bipartitions).collect();
            let mut payload = json!({
                "report": "p2",
                "max_d": max_d,
                "counts": counts,
            });
            if let Some(level) = level {
                let list: Vec<String> =
                    bipartitions_of(*level).iter().map(|b| b.to_string()).collect();
                payload["level"] = json!(level);
                payload["bipartitions"] = json!(list);
            }
            Ok(Outcome {
                payload,
                failed: false,
            })
        }
        Command::Mta { level } => {
            let bps = bipartitions_of(*level);
            let mut constants = Vec::new();
            for bp in &bps {
                let c = contraction_constant(bp)
                    .map_err(|e| ConfigError(format!("contraction constant failed: {e}")))?;
                constants.push(json!({
                    "bipartition": bp.to_string(),
                    "constant": format_q(&c),
                }));
            }
            let u =
                unity(*level).map_err(|e| ConfigError(format!("unity failed: {e}")))?;
            let unity_entries: Vec<Value> = u
                .entries()
                .map(|((row, col), w)| {
                    let coeff = w
                        .as_scalar()
                        .map(|c| format_q(&c))
                        .unwrap_or_else(|| w.to_string());
                    json!({
                        "row": row.to_string(),
                        "col": col.to_string(),
                        "coefficient": coeff,
                    })
                })
                .collect();
            let su = verify_strong_unity(*level, *level)
                .map_err(|e| ConfigError(format!("strong unity failed: {e}")))?;
            let failed = !su.passed;
            Ok(Outcome {
                payload: json!({
                    "report": "mta",
                    "level": level,
                    "bipartitions": bps.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
                    "constants": constants,
                    "unity": unity_entries,
                    "strong_unity": {
                        "n": su.n,
                        "m": su.m,
                        "cases": su.cases,
                        "passed": su.passed,
                        "failures": su.failures,
                    },
                }),
                failed,
            })
        }
        Command::Zhu { level } => {
            let desc = zhu_structure(*level);
            Ok(Outcome {
                payload: json!({
                    "report": "zhu",
                    "level": desc.level,
                    "blocks": desc.blocks,
                    "total_rank": desc.total_rank,
                }),
                failed: false,
            })
        }
        Command::ZhuProducts { level } => {
            let states = small_states();
            let mut rows = Vec::new();
            for (lu, u) in &states {
                for (lv, v) in &states {
                    let circ = zhu_circle(u, v, *level)
                        .map_err(|e| ConfigError(format!("circle product failed: {e}")))?;
                    let star = zhu_star(u, v, *level)
                        .map_err(|e| ConfigError(format!("star product failed: {e}")))?;
                    rows.push(json!({
                        "left": lu, "right": lv, "op": "circle", "n": level,
                        "result": circ.to_string(),
                    }));
                    rows.push(json!({
                        "left": lu, "right": lv, "op": "star", "n": level,
                        "result": star.to_string(),
                    }));
                }
            }
            Ok(Outcome {
                payload: json!({
                    "report": "zhu-products",
                    "n": level,
                    "table": rows,
                }),
                failed: false,
            })
        }
        Command::Modules {
            family,
            window,
            lambda,
            report,
        } => {
            if *window < 2 {
                return Err(ConfigError("--window must be at least 2".into()));
            }
            let family = resolve_family(*family, lambda)?;
            let spec = WeightModuleSpec::new(family, *window);
            let payload = match report {
                ModulesReport::Interlock => {
                    let rep = weakly_interlocked(&spec);
                    json!({
                        "report": "modules-interlock",
                        "family": rep.family_label,
                        "window": rep.window,
                        "socle": subspace_str(&rep.socle),
                        "radical": subspace_str(&rep.radical),
                        "weakly_interlocked": rep.weakly_interlocked,
                        "witness": rep.witness,
                        "boundary_status": boundary_str(rep.boundary),
                    })
                }
                ModulesReport::Lattice => {
                    let lat = submodule_lattice(&spec);
                    json!({
                        "report": "modules-lattice",
                        "family": lat.spec.family.label(),
                        "window": lat.spec.window,
                        "closed": lat.closed.iter().map(subspace_str).collect::<Vec<_>>(),
                        "socle": subspace_str(&lat.socle),
                        "radical": subspace_str(&lat.radical),
                        "boundary_status": boundary_str(lat.boundary),
                    })
                }
            };
            Ok(Outcome {
                payload,
                failed: false,
            })
        }
        Command::Flow {
            ell,
            family,
            lambda,
            depth,
            window,
        } => {
            let family = resolve_family(*family, lambda)?;
            let slack = u32::try_from(ell.unsigned_abs()).expect("small flow parameter");
            let depth = depth.unwrap_or(3 + 2 * slack);
            let window = window.unwrap_or(8 + 2 * slack);
            let spec = WeightModuleSpec::new(family.clone(), window);
            let base = induce(spec, depth)
                .map_err(|e| ConfigError(format!("induction at depth {depth} failed: {e}")))?;
            let flowed = spectral_flow_module(&base, *ell);
            let rep = flowed.report();
            Ok(Outcome {
                payload: json!({
                    "report": "flow",
                    "family": family.label(),
                    "ell": rep.ell,
                    "depth": depth,
                    "window": window,
                    "commutator_cases": rep.commutator_cases,
                    "twisted_current_cases": rep.twisted_current_cases,
                    "twisted_virasoro_cases": rep.twisted_virasoro_cases,
                    "delta_crosscheck_cases": rep.delta_crosscheck_cases,
                    "truncation_errors": rep.truncation_errors,
                    "failures": rep.failures,
                    "passed": rep.passed,
                    "skipped": rep.skipped,
                }),
                failed: !rep.passed,
            })
        }
        Command::VerifyAll { quick } => {
            let reports = verification::run_all(*quick);
            let all_passed = reports.iter().all(|r| r.passed);
            let checks: Vec<Value> = reports
                .iter()
                .map(|r| {
                    json!({
                        "id": r.id,
                        "name": r.name,
                        "cases": r.cases,
                        "passed": r.passed,
                        "details": r.details,
                    })
                })
                .collect();
            Ok(Outcome {
                payload: json!({
                    "report": "verify-all",
                    "quick": quick,
                    "checks": checks,
                    "passed": all_passed,
                }),
                failed: !all_passed,
            })
        }
    }
}

/// Flattens one payload tree to CSV: scalar fields become `# key: value`
/// comments, each array of uniform objects becomes a header plus rows.
fn to_csv(payload: &Value) -> String {
    fn scalar(v: &Value) -> Option<String> {
        match v {
            Value::Null => Some(String::new()),
            Value::Bool(b) => Some(b.to_string()),
            Value::Number(n) => Some(n.to_string()),
            Value::String(s) => Some(s.clone()),
            _ => None,
        }
    }
    fn csv_quote(s: &str) -> String {
        if s.contains([',', '"', '\n']) {
            format!("\"{}\"", s.replace('"', "\"\""))
        } else {
            s.to_string()
        }
    }
    fn comments(prefix: &str, v: &Value, out: &mut String) {
        match v {
            Value::Object(map) => {
                for (k, val) in map {
                    let key = if prefix.is_empty() {
                        k.clone()
                    } else {
                        format!("{prefix}.{k}")
                    };
                    comments(&key, val, out);
                }
            }
            Value::Array(items) if items.iter().all(|i| scalar(i).is_some()) => {
                let joined: Vec<String> = items.iter().map(|i| scalar(i).unwrap()).collect();
                out.push_str(&format!("# {prefix}: [{}]\n", joined.join(", ")));
            }
            Value::Array(_) => {} // tables are emitted separately
            other => {
                out.push_str(&format!("# {prefix}: {}\n", scalar(other).unwrap_or_default()));
            }
        }
    }
    let mut out = String::new();
    comments("", payload, &mut out);
    if let Value::Object(map) = payload {
        for (k, v) in map {
            if let Value::Array(items) = v {
                let objects: Vec<&Map<String, Value>> = items
                    .iter()
                    .filter_map(|i| i.as_object())
                    .collect();
                if objects.is_empty() || objects.len() != items.len() {
                    continue;
                }
                out.push_str(&format!("# table: {k}\n"));
                let headers: Vec<&String> = objects[0].keys().collect();
                out.push_str(
                    &headers
                        .iter()
                        .map(|h| csv_quote(h))
                        .collect::<Vec<_>>()
                        .join(","),
                );
                out.push('\n');
                for row in &objects {
                    let cells: Vec<String> = headers
                        .iter()
                        .map(|h| {
                            row.get(*h)
                                .and_then(scalar)
                                .map(|s| csv_quote(&s))
                                .unwrap_or_default()
                        })
                        .collect();
                    out.push_str(&cells.join(","));
                    out.push('\n');
                }
            }
        }
    }
    out
}

/// Human-readable rendering of the same tree.
fn to_text(payload: &Value) -> String {
    fn walk(indent: usize, key: &str, v: &Value, out: &mut String) {
        let pad = "  ".repeat(indent);
        match v {
            Value::Object(map) => {
                if !key.is_empty() {
                    out.push_str(&format!("{pad}{key}:\n"));
                }
                for (k, val) in map {
                    walk(indent + usize::from(!key.is_empty()), k, val, out);
                }
            }
            Value::Array(items) => {
                out.push_str(&format!("{pad}{key}:\n"));
                for item in items {
                    match item {
                        Value::Object(map) => {
                            let cells: Vec<String> = map
                                .iter()
                                .map(|(k, v)| format!("{k}={}", render_scalar(v)))
                                .collect();
                            out.push_str(&format!("{pad}  {}\n", cells.join("  ")));
                        }
                        other => out.push_str(&format!("{pad}  {}\n", render_scalar(other))),
                    }
                }
            }
            other => out.push_str(&format!("{pad}{key}: {}\n", render_scalar(other))),
        }
    }
    fn render_scalar(v: &Value) -> String {
        match v {
            Value::String(s) => s.clone(),
            Value::Null => "-".into(),
            other => other.to_string(),
        }
    }
    let mut out = String::new();
    walk(0, "", payload, &mut out);
    out
}

fn emit(cli: &Cli, mut payload: Value) -> Result<(), String> {
    if !cli.no_timestamp {
        payload["generated_at"] =
            json!(Utc::now().to_rfc3339_opts(SecondsFormat::Secs, true));
    }
    let (body, ext) = match cli.format {
        Format::Json => (
            serde_json::to_string_pretty(&payload).expect("serializable tree") + "\n",
            "json",
        ),
        Format::Csv => (to_csv(&payload), "csv"),
        Format::Text => (to_text(&payload), "txt"),
    };
    let target = cli.out.clone().or_else(|| {
        std::env::var_os("BETAGAMMA_OUT_DIR").map(|dir| {
            let name = payload["report"]
                .as_str()
                .unwrap_or("report")
                .to_string();
            PathBuf::from(dir).join(format!("{name}.{ext}"))
        })
    });
    match target {
        Some(path) => std::fs::write(&path, body)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(outcome) => {
            let failed = outcome.failed;
            if let Err(msg) = emit(&cli, outcome.payload) {
                eprintln!("{}", json!({ "error": { "kind": "io", "message": msg } }));
                return ExitCode::from(2);
            }
            if failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(ConfigError(msg)) => {
            eprintln!(
                "{}",
                json!({ "error": { "kind": "config", "message": msg } })
            );
            ExitCode::from(2)
        }
    }
}
