//! Payload construction for every command. Payloads are plain JSON values
//! with sorted keys; integers that count things are decimal strings.

use std::collections::BTreeMap;
use std::path::Path;

use cyclic_sieve::actions::{
    avl_superset_action, bw_action, cdp_action, cmp_action, orbit_poly, word_rotation_action,
    CyclicAction,
};
use cyclic_sieve::csp::{
    family_member, inv_homomesy, lyndon_check, lyndon_construct, lyndon_params, verify_avl_csp,
    verify_bw_csp, verify_cdp_csp, verify_cmp_csp, verify_csp, verify_word_csp, CmpPolynomial,
    CspError, Family, HomomesyAction,
};
use cyclic_sieve::genfunc::{bw_q, cdp_count, cdp_q_closed, cmp_q, BwForm};
use cyclic_sieve::paths::bits_to_string;
use cyclic_sieve::qpoly::{mod_cyclic, q_multinomial};
use cyclic_sieve::{IntPolynomial, LyndonParameters};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::args::{
    Action, CheckArgs, CmpPoly, ConstructArgs, CountArgs, FamilyName, Target, TargetArgs,
};
use crate::cache::Params;
use crate::CliError;

pub const COUNT_MAX_N: usize = 200;
pub const LYNDON_MAX_N: usize = 10;
pub const HOMOMESY_MAX_N: usize = 10;

/// Largest `n` accepted per target, keeping carriers below a few million.
fn target_guard(t: Target) -> usize {
    match t {
        Target::Cdp | Target::Avl => 10,
        Target::Cmp | Target::Bw => 16,
        Target::Words => 14,
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

impl From<CspError> for CliError {
    fn from(e: CspError) -> Self {
        match e {
            CspError::RouteDisagreement { .. } => CliError::Verification(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("payload types serialize")
}

/// Object `base` with the entries of `extra` added.
fn merge(base: Value, extra: Value) -> Value {
    let mut m: Map<String, Value> = match base {
        Value::Object(m) => m,
        other => panic!("expected an object, got {other}"),
    };
    if let Value::Object(e) = extra {
        m.extend(e);
    }
    Value::Object(m)
}

fn strings<T: ToString>(xs: impl IntoIterator<Item = T>) -> Vec<String> {
    xs.into_iter().map(|x| x.to_string()).collect()
}

fn census_json(census: &BTreeMap<usize, usize>) -> Value {
    Value::Object(
        census
            .iter()
            .map(|(k, v)| (k.to_string(), Value::String(v.to_string())))
            .collect(),
    )
}

fn positive(name: &str, v: usize) -> Result<usize, CliError> {
    if v == 0 {
        Err(usage(format!("--{name} must be at least 1")))
    } else {
        Ok(v)
    }
}

fn at_most(name: &str, v: usize, limit: usize) -> Result<usize, CliError> {
    if v > limit {
        Err(usage(format!("--{name} {v} exceeds the limit {limit}")))
    } else {
        Ok(v)
    }
}

fn params(pairs: impl IntoIterator<Item = (&'static str, Value)>) -> Params {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

// ---- count ---------------------------------------------------------------

pub struct CountRequest {
    pub kind: &'static str,
    pub params: Params,
}

pub fn count_request(a: &CountArgs) -> Result<CountRequest, CliError> {
    if let Some(w) = a.w {
        positive("w", w)?;
        at_most("w", w, COUNT_MAX_N)?;
    }
    match (a.n, a.max_n) {
        (Some(n), None) => {
            positive("n", n)?;
            at_most("n", n, COUNT_MAX_N)?;
            let w = a.w.unwrap_or(n);
            Ok(CountRequest {
                kind: "count",
                params: params([("n", json!(n)), ("w", json!(w)), ("q", json!(a.q))]),
            })
        }
        (None, Some(max_n)) => {
            positive("max-n", max_n)?;
            at_most("max-n", max_n, COUNT_MAX_N)?;
            if a.q {
                return Err(usage("--q applies to a single n"));
            }
            Ok(CountRequest {
                kind: "count-table",
                params: params([("max_n", json!(max_n)), ("w", json!(a.w))]),
            })
        }
        _ => Err(usage("give exactly one of --n and --max-n")),
    }
}

pub fn count_payload(req: &CountRequest) -> Value {
    let p = &req.params;
    let w = p["w"].as_u64().map(|w| w as usize);
    if req.kind == "count" {
        let n = p["n"].as_u64().unwrap() as usize;
        let w = w.unwrap();
        let mut v = json!({ "n": n, "w": w, "count": cdp_count(n, w).to_string() });
        if p["q"] == json!(true) {
            v["q_poly"] = to_json(&cdp_q_closed(n, w));
        }
        v
    } else {
        let max_n = p["max_n"].as_u64().unwrap() as usize;
        let rows: Vec<Value> = (1..=max_n)
            .map(|n| {
                let wn = w.unwrap_or(n);
                json!({ "n": n, "w": wn, "count": cdp_count(n, wn).to_string() })
            })
            .collect();
        json!({ "w": w, "max_n": max_n, "rows": rows })
    }
}

// ---- verify and orbits -----------------------------------------------------

fn target_name(t: Target) -> &'static str {
    match t {
        Target::Cdp => "cdp",
        Target::Cmp => "cmp",
        Target::Bw => "bw",
        Target::Avl => "avl",
        Target::Words => "words",
    }
}

fn cmp_poly(p: CmpPoly) -> CmpPolynomial {
    match p {
        CmpPoly::HalfBw => CmpPolynomial::HalfBw,
        CmpPoly::Maj => CmpPolynomial::Maj,
    }
}

/// Validated instance parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Cdp { n: usize, w: usize },
    Cmp { n: usize, poly: CmpPolynomial },
    Bw { n: usize },
    Avl { n: usize, w: usize },
    Words { content: Vec<usize> },
}

impl Instance {
    pub fn from_args(a: &TargetArgs) -> Result<Self, CliError> {
        let name = target_name(a.target);
        let reject = |flag: &str, present: bool| {
            if present {
                Err(usage(format!("--{flag} does not apply to {name}")))
            } else {
                Ok(())
            }
        };
        let need_n = || -> Result<usize, CliError> {
            let n = a.n.ok_or_else(|| usage(format!("{name} needs --n")))?;
            at_most("n", positive("n", n)?, target_guard(a.target))
        };
        if a.target != Target::Cmp && a.polynomial != CmpPoly::Maj {
            return Err(usage(format!("--polynomial does not apply to {name}")));
        }
        match a.target {
            Target::Cdp => {
                reject("content", a.content.is_some())?;
                let n = need_n()?;
                Ok(Instance::Cdp {
                    n,
                    w: positive("w", a.w.unwrap_or(n))?,
                })
            }
            Target::Cmp => {
                reject("w", a.w.is_some())?;
                reject("content", a.content.is_some())?;
                Ok(Instance::Cmp {
                    n: need_n()?,
                    poly: cmp_poly(a.polynomial),
                })
            }
            Target::Bw => {
                reject("w", a.w.is_some())?;
                reject("content", a.content.is_some())?;
                Ok(Instance::Bw { n: need_n()? })
            }
            Target::Avl => {
                reject("content", a.content.is_some())?;
                let n = need_n()?;
                let w = a.w.ok_or_else(|| usage("avl needs --w"))?;
                Ok(Instance::Avl {
                    n,
                    w: positive("w", w)?,
                })
            }
            Target::Words => {
                reject("n", a.n.is_some())?;
                reject("w", a.w.is_some())?;
                let content = a
                    .content
                    .clone()
                    .ok_or_else(|| usage("words needs --content"))?;
                let len: usize = content.iter().sum();
                positive("content total", len)?;
                at_most("content total", len, target_guard(Target::Words))?;
                if content.len() > 10 {
                    return Err(usage("--content supports at most 10 letters"));
                }
                Ok(Instance::Words { content })
            }
        }
    }

    pub fn target(&self) -> &'static str {
        match self {
            Instance::Cdp { .. } => "cdp",
            Instance::Cmp { .. } => "cmp",
            Instance::Bw { .. } => "bw",
            Instance::Avl { .. } => "avl",
            Instance::Words { .. } => "words",
        }
    }

    pub fn parameters(&self) -> Value {
        match self {
            Instance::Cdp { n, w } | Instance::Avl { n, w } => json!({ "n": n, "w": w }),
            Instance::Cmp { n, poly } => json!({ "n": n, "polynomial": poly }),
            Instance::Bw { n } => json!({ "n": n }),
            Instance::Words { content } => json!({ "content": content }),
        }
    }

    pub fn cache_params(&self, extra: &[(&'static str, Value)]) -> Params {
        let mut p = params([
            ("target", json!(self.target())),
            ("parameters", self.parameters()),
        ]);
        for (k, v) in extra {
            p.insert(k.to_string(), v.clone());
        }
        p
    }

    /// The polynomial the instance is checked against.
    fn closed_form(&self) -> Result<IntPolynomial, CliError> {
        Ok(match self {
            Instance::Cdp { n, w } => cdp_q_closed(*n, *w),
            Instance::Cmp {
                n,
                poly: CmpPolynomial::Maj,
            } => cmp_q(*n),
            Instance::Cmp {
                n,
                poly: CmpPolynomial::HalfBw,
            } => bw_q(*n, BwForm::B)
                .map_err(|e| usage(e.to_string()))?
                .div_scalar_exact(&BigInt::from(2))
                .map_err(|e| CliError::Internal(e.to_string()))?,
            Instance::Bw { n } => bw_q(*n, BwForm::A).map_err(|e| usage(e.to_string()))?,
            Instance::Words { content } => q_multinomial(content),
            Instance::Avl { .. } => {
                return Err(usage(
                    "avl is a subset instance and has no orbit polynomial; use verify avl",
                ))
            }
        })
    }
}

pub fn verify_payload(inst: &Instance) -> Result<Value, CliError> {
    let report = match inst {
        Instance::Cdp { n, w } => verify_cdp_csp(*n, *w)?,
        Instance::Cmp { n, poly } => verify_cmp_csp(*n, *poly)?,
        Instance::Bw { n } => verify_bw_csp(*n)?,
        Instance::Avl { n, w } => verify_avl_csp(*n, *w)?,
        Instance::Words { content } => verify_word_csp(content)?,
    };
    Ok(merge(
        to_json(&report),
        json!({ "target": inst.target(), "parameters": inst.parameters() }),
    ))
}

fn letters(b: &[u8]) -> Value {
    Value::String(bits_to_string(b))
}

fn orbit_json<T: Ord + Clone + std::fmt::Debug>(
    action: &CyclicAction<T>,
    label: impl Fn(&T) -> Value,
) -> Result<(Value, IntPolynomial), CliError> {
    let dec = action.orbits();
    let orbits: Vec<Value> = dec
        .orbits
        .iter()
        .map(|o| {
            json!({
                "size": o.size,
                "stabilizer_order": o.stabilizer_order,
                "elements": o.elements.iter().map(&label).collect::<Vec<_>>(),
            })
        })
        .collect();
    let poly = orbit_poly(&dec, action.order()).map_err(|e| CliError::Internal(e.to_string()))?;
    let v = json!({
        "order": action.order(),
        "total": dec.total().to_string(),
        "census": census_json(&dec.census()),
        "orbits": orbits,
        "orbit_poly": to_json(&poly),
    });
    Ok((v, poly))
}

pub fn orbits_payload(inst: &Instance, compare: bool) -> Result<Value, CliError> {
    let closed = if compare {
        Some(inst.closed_form()?)
    } else {
        None
    };
    let csp = |e: cyclic_sieve::actions::ActionError| CliError::from(CspError::from(e));
    let (body, poly) = match inst {
        Instance::Cdp { n, w } => orbit_json(&cdp_action(*n, *w).map_err(csp)?, to_json)?,
        Instance::Cmp { n, .. } => orbit_json(&cmp_action(*n).map_err(csp)?, to_json)?,
        Instance::Bw { n } => orbit_json(&bw_action(*n).map_err(csp)?, |b| letters(b))?,
        Instance::Avl { n, .. } => {
            orbit_json(&avl_superset_action(*n).map_err(csp)?, |b| letters(b))?
        }
        Instance::Words { content } => {
            orbit_json(&word_rotation_action(content).map_err(csp)?, |b| letters(b))?
        }
    };
    let order = body["order"].as_u64().unwrap() as usize;
    let mut v = merge(
        body,
        json!({ "target": inst.target(), "parameters": inst.parameters() }),
    );
    if let Some(f) = closed {
        let folded = IntPolynomial::from_coeffs(mod_cyclic(&f, order));
        v["comparison"] = json!({
            "closed_form": to_json(&f),
            "agrees": folded == poly,
            "folded": to_json(&folded),
        });
    }
    Ok(v)
}

// ---- lyndon ----------------------------------------------------------------

pub fn parse_sizes(raw: &[String]) -> Result<Vec<BigInt>, CliError> {
    raw.iter()
        .map(|s| {
            s.trim()
                .parse::<BigInt>()
                .map_err(|_| usage(format!("not an integer: {s:?}")))
        })
        .collect()
}

/// Reads sizes from a file: comma or whitespace separated values, or
/// b-file lines `n count` with `n = 1, 2, ...`. Lines starting with `#` are
/// skipped.
pub fn read_sizes(path: &Path) -> Result<Vec<BigInt>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let bfile = !lines.is_empty() && lines.iter().all(|l| l.split_whitespace().count() == 2);
    let raw: Vec<String> = if bfile {
        let mut out = Vec::new();
        for (i, l) in lines.iter().enumerate() {
            let mut it = l.split_whitespace();
            let idx = it.next().unwrap();
            if idx != (i + 1).to_string() {
                return Err(usage(format!(
                    "b-file index {idx} where {} was expected",
                    i + 1
                )));
            }
            out.push(it.next().unwrap().to_string());
        }
        out
    } else {
        lines
            .iter()
            .flat_map(|l| l.split(|c: char| c == ',' || c.is_whitespace()))
            .filter(|s| !s.is_empty())
            .map(String::from)
            .collect()
    };
    if raw.is_empty() {
        return Err(usage(format!("{}: no sizes found", path.display())));
    }
    parse_sizes(&raw)
}

pub fn params_payload(sizes: &[BigInt]) -> Value {
    merge(
        to_json(&lyndon_params(sizes)),
        json!({ "sizes": strings(sizes) }),
    )
}

pub fn family_from_args(a: &CheckArgs) -> Result<Family, CliError> {
    let forbid = |flag: &str, present: bool| {
        if present {
            Err(usage(format!("--{flag} does not apply to this family")))
        } else {
            Ok(())
        }
    };
    Ok(match a.family {
        FamilyName::CdpFixedW => {
            forbid("k", a.k.is_some())?;
            Family::CdpFixedW {
                w: positive("w", a.w.ok_or_else(|| usage("cdp-fixed-w needs --w"))?)?,
            }
        }
        FamilyName::BinaryWords => {
            forbid("w", a.w.is_some())?;
            forbid("k", a.k.is_some())?;
            Family::binary_words()
        }
        FamilyName::KaryWords => {
            forbid("w", a.w.is_some())?;
            Family::KaryWords {
                k: positive("k", a.k.ok_or_else(|| usage("k-ary-words needs --k"))?)?,
            }
        }
        FamilyName::Cmp => {
            forbid("w", a.w.is_some())?;
            forbid("k", a.k.is_some())?;
            Family::Cmp
        }
    })
}

pub fn check_limits(family: Family, max_n: usize) -> Result<(), CliError> {
    at_most("max-n", positive("max-n", max_n)?, LYNDON_MAX_N)?;
    if let Family::KaryWords { k } = family {
        if (k as f64).powi(max_n as i32) > 2e6 {
            return Err(usage(format!("{k}^{max_n} words is too many")));
        }
    }
    Ok(())
}

pub fn check_payload(family: Family, max_n: usize) -> Result<Value, CliError> {
    let members = (1..=max_n)
        .map(|n| family_member(family, n))
        .collect::<Result<Vec<_>, _>>()?;
    let report = lyndon_check(&members)?;
    let sizes = strings(members.iter().map(|m| &m.size));
    Ok(merge(
        to_json(&report),
        json!({ "family": to_json(&family), "sizes": sizes }),
    ))
}

pub fn construct_params(a: &ConstructArgs) -> Result<(LyndonParameters, usize), CliError> {
    let t = parse_sizes(&a.t)?;
    let p = LyndonParameters::from_values(&t)?;
    positive("n", a.n)?;
    if a.n > t.len() {
        return Err(usage(format!("--n {} needs t_1..t_{}", a.n, a.n)));
    }
    Ok((p, a.n))
}

pub fn construct_payload(t: &LyndonParameters, n: usize) -> Result<Value, CliError> {
    let inst = lyndon_construct(t, n)?;
    let csp = verify_csp(&inst.action, &inst.f)?;
    Ok(json!({
        "t": to_json(t)["t"],
        "n": n,
        "size": inst.action.len().to_string(),
        "f": to_json(&inst.f),
        "census": census_json(&inst.action.orbits().census()),
        "csp": to_json(&csp),
    }))
}

// ---- homomesy --------------------------------------------------------------

pub fn homomesy_payload(n: usize, action: Action) -> Result<Value, CliError> {
    at_most("n", positive("n", n)?, HOMOMESY_MAX_N)?;
    let (name, which) = match action {
        Action::Alpha => ("alpha", HomomesyAction::Alpha),
        Action::Beta => ("beta", HomomesyAction::Beta),
    };
    let report = inv_homomesy(n, which)?;
    Ok(merge(
        to_json(&report),
        json!({ "n": n, "action": name, "expected_homomesic": action == Action::Alpha }),
    ))
}
