use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::{verify_csp, CspError, CspReport};
use crate::actions::{orbit_poly, CyclicAction};
use crate::arith::divisors;
use crate::qpoly::{eval_at_unity, IntPolynomial, RootOfUnityIndex, UnityValue};

/// Solution `t_1, ..., t_N` of `|X_n| = Σ_{d | n} d t_d`.
///
/// Extraction stops at the first `d` where `t_d` is negative or not an
/// integer; that value is kept as an exact rational.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LyndonParameters {
    #[serde(serialize_with = "super::ser::bigint_map")]
    pub t: BTreeMap<usize, BigInt>,
    pub valid: bool,
    pub failed_at: Option<usize>,
    #[serde(serialize_with = "super::ser::opt_rational")]
    pub failed_value: Option<BigRational>,
}

impl LyndonParameters {
    /// Valid parameters from explicit values `t_1, t_2, ...`.
    pub fn from_values(values: &[BigInt]) -> Result<Self, CspError> {
        if let Some(d) = values.iter().position(|v| v.is_negative()) {
            return Err(CspError::InvalidParameters(format!(
                "t_{} is negative",
                d + 1
            )));
        }
        Ok(Self {
            t: values
                .iter()
                .enumerate()
                .map(|(i, v)| (i + 1, v.clone()))
                .collect(),
            valid: true,
            failed_at: None,
            failed_value: None,
        })
    }

    /// `Σ_{d | n} d t_d`.
    pub fn size(&self, n: usize) -> Option<BigInt> {
        divisors(n)
            .into_iter()
            .map(|d| self.t.get(&d).map(|t| t * d))
            .sum()
    }
}

pub fn lyndon_params(sizes: &[BigInt]) -> LyndonParameters {
    let mut t: BTreeMap<usize, BigInt> = BTreeMap::new();
    for (i, size) in sizes.iter().enumerate() {
        let n = i + 1;
        let rest: BigInt = divisors(n)
            .into_iter()
            .filter(|&d| d < n)
            .map(|d| &t[&d] * d)
            .sum();
        let numer = size - rest;
        let (q, r) = numer.div_rem(&BigInt::from(n));
        if !r.is_zero() || numer.is_negative() {
            return LyndonParameters {
                t,
                valid: false,
                failed_at: Some(n),
                failed_value: Some(BigRational::new(numer, BigInt::from(n))),
            };
        }
        t.insert(n, q);
    }
    LyndonParameters {
        t,
        valid: true,
        failed_at: None,
        failed_value: None,
    }
}

/// One member `(X_n, C_n, f_n)` of a family, indexed from `n = 1`.
#[derive(Debug, Clone)]
pub struct FamilyMember {
    pub n: usize,
    pub size: BigInt,
    pub f: IntPolynomial,
    pub csp: CspReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LyndonFailure {
    pub n: usize,
    pub m: usize,
    /// `f_{n/m}(1)`.
    pub expected: String,
    /// `f_n` at a primitive `m`-th root of unity.
    pub got: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LyndonReport {
    pub max_n: usize,
    pub lyndon_like: bool,
    pub csp_failures: Vec<usize>,
    pub failures: Vec<LyndonFailure>,
}

/// Checks `f_{n/m}(1) = f_n(ω_m)` for all `n` and all `m | n`, and that each
/// member exhibits cyclic sieving on its own.
pub fn lyndon_check(family: &[FamilyMember]) -> Result<LyndonReport, CspError> {
    for (i, m) in family.iter().enumerate() {
        if m.n != i + 1 {
            return Err(CspError::InvalidInput(format!(
                "family must be indexed 1..N, found {} at {}",
                m.n,
                i + 1
            )));
        }
    }
    let mut failures = Vec::new();
    for member in family {
        let n = member.n;
        for m in divisors(n) {
            let expected = UnityValue::Integer(family[n / m - 1].f.eval_at_one());
            let got = eval_at_unity(&member.f, RootOfUnityIndex::new(m).expect("m >= 1"));
            if got != expected {
                failures.push(LyndonFailure {
                    n,
                    m,
                    expected: expected.to_string(),
                    got: got.to_string(),
                });
            }
        }
    }
    let csp_failures: Vec<usize> = family
        .iter()
        .filter(|m| !m.csp.passed())
        .map(|m| m.n)
        .collect();
    Ok(LyndonReport {
        max_n: family.len(),
        lyndon_like: failures.is_empty() && csp_failures.is_empty(),
        csp_failures,
        failures,
    })
}

/// The canonical instance attached to Lyndon parameters.
#[derive(Debug, Clone)]
pub struct LyndonInstance {
    pub action: CyclicAction<(usize, usize, usize)>,
    pub f: IntPolynomial,
}

/// `X_n = {(d, i, j) : d | n, 1 <= i <= t_d, 1 <= j <= d}`, with the generator
/// advancing `j` cyclically inside `1..=d`, so that `(d, i, ·)` is an orbit
/// of size `d`; `f` is the orbit polynomial.
pub fn lyndon_construct(t: &LyndonParameters, n: usize) -> Result<LyndonInstance, CspError> {
    if !t.valid {
        return Err(CspError::InvalidParameters("extraction failed".into()));
    }
    if n == 0 {
        return Err(CspError::InvalidInput("n must be at least 1".into()));
    }
    let mut carrier = Vec::new();
    for d in divisors(n) {
        let td =
            t.t.get(&d)
                .ok_or_else(|| CspError::InvalidParameters(format!("t_{d} is missing")))?;
        let td = td.to_usize().ok_or_else(|| {
            CspError::InvalidParameters(format!("t_{d} = {td} is too large or negative"))
        })?;
        for i in 1..=td {
            for j in 1..=d {
                carrier.push((d, i, j));
            }
        }
    }
    let action = CyclicAction::new(carrier, n, |&(d, i, j)| (d, i, j % d + 1))?;
    let f = orbit_poly(&action.orbits(), n)?;
    debug_assert!(verify_csp(&action, &f).map(|r| r.passed()).unwrap_or(false));
    Ok(LyndonInstance { action, f })
}
