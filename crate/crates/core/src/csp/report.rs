use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use super::CspError;
use crate::actions::{orbit_poly, CyclicAction};
use crate::arith::{divisors, gcd, ramanujan_sum};
use crate::qpoly::{eval_at_unity, mod_cyclic, IntPolynomial, RootOfUnityIndex, UnityValue};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CspRow {
    pub k: usize,
    pub gcd: usize,
    pub evaluation: UnityValue,
    #[serde(serialize_with = "super::ser::bigint")]
    pub fixed_count: BigInt,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CspReport {
    pub order: usize,
    pub rows: Vec<CspRow>,
    pub verdict: Verdict,
    pub first_mismatch: Option<usize>,
    pub warnings: Vec<String>,
}

impl CspReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    fn from_rows(order: usize, rows: Vec<CspRow>) -> Self {
        let first_mismatch = rows.iter().find(|r| !r.matches).map(|r| r.k);
        let verdict = if first_mismatch.is_none() {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        Self {
            order,
            rows,
            verdict,
            first_mismatch,
            warnings: Vec::new(),
        }
    }
}

fn rows_for(n: usize, f: &IntPolynomial, fixed: impl Fn(usize) -> usize) -> Vec<CspRow> {
    (1..=n)
        .map(|k| {
            let m = RootOfUnityIndex::of_power(n, k).expect("n >= 1");
            let evaluation = eval_at_unity(f, m);
            let fixed_count = BigInt::from(fixed(k));
            let matches = evaluation.as_integer() == Some(&fixed_count);
            CspRow {
                k,
                gcd: gcd(k, n),
                evaluation,
                fixed_count,
                matches,
            }
        })
        .collect()
}

/// Compares `f(ω_n^k)` with the number of points fixed by `g^k` for every
/// `k ∈ [n]`.
///
/// As a second, independent route, `f mod (q^n - 1)` is compared with the
/// orbit polynomial of the action. The two routes decide the same question,
/// so a disagreement is reported as an error rather than a verdict.
pub fn verify_csp<T: Ord + Clone + Debug>(
    action: &CyclicAction<T>,
    f: &IntPolynomial,
) -> Result<CspReport, CspError> {
    let n = action.order();
    let report = CspReport::from_rows(n, rows_for(n, f, |k| action.fixed_count(k)));
    let folded = IntPolynomial::from_coeffs(mod_cyclic(f, n));
    let canonical = orbit_poly(&action.orbits(), n)?;
    if (folded == canonical) != report.passed() {
        return Err(CspError::RouteDisagreement { order: n });
    }
    Ok(report)
}

/// Subset variant: fixed points of `g^k` are counted inside `subset` only,
/// while `g` acts on the superset carried by `action`.
///
/// The second route recovers the coefficients of the unique degree `< n`
/// polynomial with the observed values through Ramanujan sums,
/// `n a_l = Σ_{d | n} F(d) c_{n/d}(l)`, and compares it with `f mod (q^n - 1)`.
pub fn verify_subset_csp<T: Ord + Clone + Debug>(
    subset: &[T],
    action: &CyclicAction<T>,
    f: &IntPolynomial,
) -> Result<CspReport, CspError> {
    let n = action.order();
    let mut in_subset = vec![false; action.len()];
    for x in subset {
        let i = action.index_of(x).ok_or_else(|| CspError::NotSubset {
            witness: format!("{x:?}"),
        })?;
        in_subset[i] = true;
    }
    let fixed = |k: usize| {
        action
            .fixed_indices(k)
            .into_iter()
            .filter(|&i| in_subset[i])
            .count()
    };
    let report = CspReport::from_rows(n, rows_for(n, f, fixed));

    let mut integral = true;
    let mut coeffs = Vec::with_capacity(n);
    for l in 0..n {
        let total: BigInt = divisors(n)
            .into_iter()
            .map(|d| BigInt::from(fixed(d)) * ramanujan_sum(n / d, l))
            .sum();
        let (a, r) = total.div_rem(&BigInt::from(n));
        integral &= r.is_zero();
        coeffs.push(a);
    }
    let second = integral
        && IntPolynomial::from_coeffs(coeffs) == IntPolynomial::from_coeffs(mod_cyclic(f, n));
    if second != report.passed() {
        return Err(CspError::RouteDisagreement { order: n });
    }
    Ok(report)
}
