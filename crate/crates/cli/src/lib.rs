//! Command-line layer over `cyclic-sieve`: argument handling, JSON payloads,
//! CSV and b-file exports, and the on-disk result cache.

pub mod args;
pub mod cache;
pub mod commands;
pub mod schema;
pub mod selftest;

use std::fmt::Write as _;
use std::path::Path;

use serde_json::{json, Value};

use args::{Cli, Command, LyndonCommand};
use cache::{Cache, Params};
use commands::Instance;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Verification(String),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => 1,
            _ => 2,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Verification(_) => "verification",
            CliError::Io(_) => "io",
            CliError::Internal(_) => "internal",
        }
    }

    /// Machine-readable description for stderr.
    pub fn to_json(&self) -> Value {
        json!({ "status": "error", "kind": self.kind(), "message": self.to_string() })
    }
}

/// Result of one invocation, ready to print.
#[derive(Debug, Clone)]
pub struct Response {
    /// Payload kind, which is also the schema name.
    pub kind: &'static str,
    pub payload: Value,
    /// `None` when the result is a pass.
    pub failure: Option<String>,
    pub stdout: String,
    pub warnings: Vec<String>,
}

impl Response {
    pub fn exit_code(&self) -> i32 {
        if self.failure.is_some() {
            1
        } else {
            0
        }
    }

    pub fn failure_json(&self) -> Option<Value> {
        self.failure
            .as_ref()
            .map(|r| json!({ "status": "fail", "command": self.kind, "reason": r }))
    }
}

enum Export {
    None,
    Table,
    Bfile,
}

pub fn execute(cli: &Cli) -> Result<Response, CliError> {
    let g = &cli.global;
    let mut cache = Cache::new(g.cache_dir.as_deref(), g.no_cache);
    let (kind, payload, export) = match &cli.command {
        Command::Count(a) => {
            let req = commands::count_request(a)?;
            let v = cache.fetch_or_compute(req.kind, req.params.clone(), || {
                Ok(commands::count_payload(&req))
            })?;
            let export = if a.table {
                Export::Table
            } else if a.bfile {
                Export::Bfile
            } else {
                Export::None
            };
            (req.kind, v, export)
        }
        Command::Verify(a) => {
            if a.poly {
                return Err(CliError::Usage("--poly applies to orbits".into()));
            }
            let inst = Instance::from_args(a)?;
            let v = cache.fetch_or_compute("verify", inst.cache_params(&[]), || {
                commands::verify_payload(&inst)
            })?;
            (
                "verify",
                v,
                if a.table { Export::Table } else { Export::None },
            )
        }
        Command::Orbits(a) => {
            if a.table {
                return Err(CliError::Usage(
                    "--table applies to verify and count".into(),
                ));
            }
            let inst = Instance::from_args(a)?;
            let p = inst.cache_params(&[("poly", json!(a.poly))]);
            let v =
                cache.fetch_or_compute("orbits", p, || commands::orbits_payload(&inst, a.poly))?;
            ("orbits", v, Export::None)
        }
        Command::Lyndon { command } => match command {
            LyndonCommand::Params(a) => {
                let sizes = match (&a.sizes, &a.file) {
                    (Some(s), None) => commands::parse_sizes(s)?,
                    (None, Some(f)) => commands::read_sizes(f)?,
                    _ => return Err(CliError::Usage("give one of --sizes and --file".into())),
                };
                if sizes.is_empty() {
                    return Err(CliError::Usage("no sizes given".into()));
                }
                let p: Params = [(
                    "sizes".to_string(),
                    json!(sizes.iter().map(|s| s.to_string()).collect::<Vec<_>>()),
                )]
                .into_iter()
                .collect();
                let v = cache.fetch_or_compute("lyndon-params", p, || {
                    Ok(commands::params_payload(&sizes))
                })?;
                ("lyndon-params", v, Export::None)
            }
            LyndonCommand::Check(a) => {
                let family = commands::family_from_args(a)?;
                commands::check_limits(family, a.max_n)?;
                let p: Params = [
                    (
                        "family".to_string(),
                        serde_json::to_value(family).expect("family serializes"),
                    ),
                    ("max_n".to_string(), json!(a.max_n)),
                ]
                .into_iter()
                .collect();
                let v = cache.fetch_or_compute("lyndon-check", p, || {
                    commands::check_payload(family, a.max_n)
                })?;
                ("lyndon-check", v, Export::None)
            }
            LyndonCommand::Construct(a) => {
                let (t, n) = commands::construct_params(a)?;
                let p: Params = [
                    (
                        "t".to_string(),
                        serde_json::to_value(&t).expect("parameters serialize")["t"].clone(),
                    ),
                    ("n".to_string(), json!(n)),
                ]
                .into_iter()
                .collect();
                let v = cache.fetch_or_compute("lyndon-construct", p, || {
                    commands::construct_payload(&t, n)
                })?;
                ("lyndon-construct", v, Export::None)
            }
        },
        Command::Homomesy(a) => {
            let name = if a.action == args::Action::Alpha {
                "alpha"
            } else {
                "beta"
            };
            let p: Params = [
                ("n".to_string(), json!(a.n)),
                ("action".to_string(), json!(name)),
            ]
            .into_iter()
            .collect();
            let v = cache
                .fetch_or_compute("homomesy", p, || commands::homomesy_payload(a.n, a.action))?;
            ("homomesy", v, Export::None)
        }
        Command::Selftest(a) => (
            "selftest",
            selftest::run(a.max_n, &mut cache)?,
            Export::None,
        ),
    };

    if let Some(path) = &g.csv {
        write_csv(path, &csv_rows(kind, &payload)?)?;
    }
    let stdout = match export {
        Export::Table => csv_string(&csv_rows(kind, &payload)?)?,
        Export::Bfile => bfile(&payload),
        Export::None if g.json => {
            serde_json::to_string_pretty(&payload).expect("payload serializes") + "\n"
        }
        Export::None => summary(kind, &payload),
    };
    Ok(Response {
        kind,
        failure: failure(kind, &payload),
        payload,
        stdout,
        warnings: cache.warnings,
    })
}

fn s(v: &Value) -> String {
    match v {
        Value::String(x) => x.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn rational(v: &Value) -> String {
    if v.is_null() {
        return "-".into();
    }
    let (num, den) = (s(&v["num"]), s(&v["den"]));
    if den == "1" {
        num
    } else {
        format!("{num}/{den}")
    }
}

fn poly(v: &Value) -> String {
    serde_json::from_value::<cyclic_sieve::IntPolynomial>(v.clone())
        .map(|p| p.to_string())
        .unwrap_or_else(|_| v.to_string())
}

fn evaluation(v: &Value) -> String {
    match v {
        Value::String(x) => x.clone(),
        other => format!("non-constant({})", poly(&other["non_constant"])),
    }
}

fn params_text(v: &Value) -> String {
    v.as_object()
        .map(|m| {
            m.iter()
                .map(|(k, x)| format!("{k}={}", s(x)))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .unwrap_or_default()
}

/// Why the payload counts as a failure, if it does.
fn failure(kind: &str, v: &Value) -> Option<String> {
    let t = json!(true);
    match kind {
        "verify" if v["verdict"] != "pass" => Some(format!(
            "cyclic sieving fails at k = {}",
            s(&v["first_mismatch"])
        )),
        "orbits" if v.get("comparison").is_some() && v["comparison"]["agrees"] != t => {
            Some("orbit polynomial differs from the closed form mod q^n - 1".into())
        }
        "lyndon-params" if v["valid"] != t => Some(format!(
            "t_{} = {} is not a non-negative integer",
            s(&v["failed_at"]),
            rational(&v["failed_value"])
        )),
        "lyndon-check" if v["lyndon_like"] != t => Some("family is not Lyndon-like".into()),
        "lyndon-construct" if v["csp"]["verdict"] != "pass" => {
            Some("construction fails cyclic sieving".into())
        }
        "homomesy" if v["expected_homomesic"] == t && v["homomesic"] != t => {
            Some("inv is not homomesic".into())
        }
        "selftest" if v["failed"] != json!(0) => {
            Some(format!("{} criteria failed", s(&v["failed"])))
        }
        _ => None,
    }
}

fn summary(kind: &str, v: &Value) -> String {
    let mut o = String::new();
    let arr = |k: &str| v[k].as_array().cloned().unwrap_or_default();
    match kind {
        "count" => {
            let _ = writeln!(o, "CDP({}, {}) = {}", v["n"], v["w"], s(&v["count"]));
            if let Some(q) = v.get("q_poly") {
                let _ = writeln!(o, "q-polynomial: {}", poly(q));
            }
        }
        "count-table" => {
            for r in arr("rows") {
                let _ = writeln!(o, "CDP({}, {}) = {}", r["n"], r["w"], s(&r["count"]));
            }
        }
        "verify" => {
            let _ = writeln!(
                o,
                "{} {}: {}",
                s(&v["target"]),
                params_text(&v["parameters"]),
                s(&v["verdict"])
            );
            for r in arr("rows") {
                let mark = if r["matches"] == json!(true) {
                    "ok"
                } else {
                    "MISMATCH"
                };
                let _ = writeln!(
                    o,
                    "  k={} gcd={} f(ω^k)={} fixed={} {mark}",
                    r["k"],
                    r["gcd"],
                    evaluation(&r["evaluation"]),
                    s(&r["fixed_count"])
                );
            }
            for w in arr("warnings") {
                let _ = writeln!(o, "  warning: {}", s(&w));
            }
        }
        "orbits" => {
            let _ = writeln!(
                o,
                "{} {}: {} elements in {} orbits",
                s(&v["target"]),
                params_text(&v["parameters"]),
                s(&v["total"]),
                arr("orbits").len()
            );
            if let Some(c) = v["census"].as_object() {
                for (size, count) in c {
                    let _ = writeln!(o, "  size {size}: {}", s(count));
                }
            }
            let _ = writeln!(o, "orbit polynomial: {}", poly(&v["orbit_poly"]));
            if let Some(c) = v.get("comparison") {
                let verdict = if c["agrees"] == json!(true) {
                    "agrees"
                } else {
                    "differs"
                };
                let _ = writeln!(
                    o,
                    "closed form mod q^n - 1: {} ({verdict})",
                    poly(&c["folded"])
                );
            }
        }
        "lyndon-params" => {
            if v["valid"] == json!(true) {
                let t: Vec<String> = v["t"]
                    .as_object()
                    .map(|m| m.values().map(s).collect())
                    .unwrap_or_default();
                let _ = writeln!(o, "valid: t = {}", t.join(", "));
            } else {
                let _ = writeln!(o, "invalid: {}", failure(kind, v).unwrap_or_default());
            }
        }
        "lyndon-check" => {
            let verdict = if v["lyndon_like"] == json!(true) {
                "Lyndon-like"
            } else {
                "not Lyndon-like"
            };
            let _ = writeln!(
                o,
                "{} up to n = {}: {verdict}",
                params_text(&v["family"]),
                v["max_n"]
            );
            for f in arr("failures") {
                let _ = writeln!(
                    o,
                    "  n={} m={}: expected {}, got {}",
                    f["n"],
                    f["m"],
                    s(&f["expected"]),
                    s(&f["got"])
                );
            }
            for n in arr("csp_failures") {
                let _ = writeln!(o, "  n={n}: member fails cyclic sieving");
            }
        }
        "lyndon-construct" => {
            let _ = writeln!(
                o,
                "n = {}: |X| = {}, cyclic sieving {}",
                v["n"],
                s(&v["size"]),
                s(&v["csp"]["verdict"])
            );
            let _ = writeln!(o, "f = {}", poly(&v["f"]));
        }
        "homomesy" => {
            let verdict = if v["homomesic"] == json!(true) {
                "homomesic"
            } else {
                "not homomesic"
            };
            let _ = writeln!(
                o,
                "inv under {}, n = {}: {verdict}, global average {}",
                s(&v["action"]),
                v["n"],
                rational(&v["global_average"])
            );
            for a in arr("orbit_averages") {
                let _ = writeln!(
                    o,
                    "  {} (size {}): {}",
                    s(&a["representative"]),
                    a["size"],
                    rational(&a["average"])
                );
            }
            if !v["witness"].is_null() {
                let w = &v["witness"];
                let _ = writeln!(
                    o,
                    "witness: orbit of {} has average {}",
                    s(&w["representative"]),
                    rational(&w["average"])
                );
            }
        }
        "selftest" => {
            for c in arr("criteria") {
                let mark = if c["passed"] == json!(true) {
                    "PASS"
                } else {
                    "FAIL"
                };
                let _ = writeln!(
                    o,
                    "[{:02}] {mark}  {}: {}",
                    c["index"].as_u64().unwrap_or(0),
                    s(&c["name"]),
                    s(&c["detail"])
                );
            }
            let _ = writeln!(
                o,
                "selftest at max-n {}: {} passed, {} failed",
                v["max_n"], v["passed"], v["failed"]
            );
        }
        _ => o = serde_json::to_string_pretty(v).expect("payload serializes") + "\n",
    }
    o
}

fn csv_rows(kind: &str, v: &Value) -> Result<Vec<Vec<String>>, CliError> {
    let arr = |k: &str| v[k].as_array().cloned().unwrap_or_default();
    let mut rows: Vec<Vec<String>> = Vec::new();
    match kind {
        "verify" => {
            rows.push(vec!["k".into(), "evaluation".into(), "fixed_count".into()]);
            for r in arr("rows") {
                rows.push(vec![
                    r["k"].to_string(),
                    evaluation(&r["evaluation"]),
                    s(&r["fixed_count"]),
                ]);
            }
        }
        "count" => {
            rows.push(vec!["n".into(), "w".into(), "count".into()]);
            rows.push(vec![v["n"].to_string(), v["w"].to_string(), s(&v["count"])]);
        }
        "count-table" => {
            rows.push(vec!["n".into(), "w".into(), "count".into()]);
            for r in arr("rows") {
                rows.push(vec![r["n"].to_string(), r["w"].to_string(), s(&r["count"])]);
            }
        }
        "orbits" => {
            rows.push(vec!["size".into(), "orbits".into()]);
            if let Some(c) = v["census"].as_object() {
                let mut census: Vec<(usize, String)> = c
                    .iter()
                    .map(|(k, x)| (k.parse().unwrap_or(0), s(x)))
                    .collect();
                census.sort();
                rows.extend(census.into_iter().map(|(k, x)| vec![k.to_string(), x]));
            }
        }
        "lyndon-params" => {
            rows.push(vec!["d".into(), "t".into()]);
            if let Some(t) = v["t"].as_object() {
                let mut t: Vec<(usize, String)> = t
                    .iter()
                    .map(|(k, x)| (k.parse().unwrap_or(0), s(x)))
                    .collect();
                t.sort();
                rows.extend(t.into_iter().map(|(k, x)| vec![k.to_string(), x]));
            }
        }
        "selftest" => {
            rows.push(vec![
                "index".into(),
                "name".into(),
                "passed".into(),
                "detail".into(),
            ]);
            for c in arr("criteria") {
                rows.push(vec![
                    c["index"].to_string(),
                    s(&c["name"]),
                    c["passed"].to_string(),
                    s(&c["detail"]),
                ]);
            }
        }
        other => return Err(CliError::Usage(format!("{other} has no CSV form"))),
    }
    Ok(rows)
}

fn csv_string(rows: &[Vec<String>]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.write_record(r)
            .map_err(|e| CliError::Internal(e.to_string()))?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Internal(e.to_string()))
}

fn write_csv(path: &Path, rows: &[Vec<String>]) -> Result<(), CliError> {
    std::fs::write(path, csv_string(rows)?)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn bfile(v: &Value) -> String {
    let mut o = String::new();
    for r in v["rows"].as_array().cloned().unwrap_or_default() {
        let _ = writeln!(o, "{} {}", r["n"], s(&r["count"]));
    }
    o
}
