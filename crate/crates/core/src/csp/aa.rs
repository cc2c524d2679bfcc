use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::arith::{divisors, mobius};
use crate::qpoly::{eval_at_unity, IntPolynomial, RootOfUnityIndex, UnityValue};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AaReport {
    pub order: usize,
    /// `S_k` for every `k | n`.
    #[serde(serialize_with = "super::ser::bigint_map")]
    pub s: BTreeMap<usize, BigInt>,
    /// `S_k / k` where it is an integer.
    #[serde(serialize_with = "super::ser::bigint_map")]
    pub orbit_counts: BTreeMap<usize, BigInt>,
    pub feasible: bool,
    pub diagnosis: Option<String>,
}

/// `S_k = Σ_{j | k} μ(k/j) f(ω_n^j)` for `k | n`. Feasible iff every value
/// `f(ω_n^j)` is an integer, every `S_k >= 0` and `k | S_k`, since `S_k` counts
/// the elements lying in orbits of size `k`.
pub fn theorem_aa(f: &IntPolynomial, n: usize) -> AaReport {
    let mut report = AaReport {
        order: n,
        s: BTreeMap::new(),
        orbit_counts: BTreeMap::new(),
        feasible: true,
        diagnosis: None,
    };
    if n == 0 {
        report.feasible = false;
        report.diagnosis = Some("order must be at least 1".into());
        return report;
    }
    let divs = divisors(n);
    let mut values = BTreeMap::new();
    for &j in &divs {
        let m = RootOfUnityIndex::new(n / j).expect("n / j >= 1");
        match eval_at_unity(f, m) {
            UnityValue::Integer(v) => {
                values.insert(j, v);
            }
            UnityValue::NonConstant(_) => {
                report.feasible = false;
                report.diagnosis = Some(format!(
                    "f is not an integer at primitive {}-th roots of unity",
                    n / j
                ));
                return report;
            }
        }
    }
    for &k in &divs {
        let s: BigInt = divisors(k)
            .into_iter()
            .map(|j| &values[&j] * mobius(k / j))
            .sum();
        let (q, r) = s.div_rem(&BigInt::from(k));
        if report.feasible && s.is_negative() {
            report.feasible = false;
            report.diagnosis = Some(format!("S_{k} = {s} is negative"));
        } else if report.feasible && !r.is_zero() {
            report.feasible = false;
            report.diagnosis = Some(format!("S_{k} = {s} is not divisible by {k}"));
        }
        if r.is_zero() && !s.is_negative() {
            report.orbit_counts.insert(k, q);
        }
        report.s.insert(k, s);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::cdp_action;
    use crate::genfunc::cdp_q_closed;

    #[test]
    fn examples() {
        let r = theorem_aa(&IntPolynomial::from_i64(&[1, 1, 1]), 3);
        assert_eq!(r.s[&1], 0.into());
        assert_eq!(r.s[&3], 3.into());
        assert!(r.feasible);
        assert_eq!(r.orbit_counts[&3], 1.into());

        let r = theorem_aa(&IntPolynomial::from_i64(&[0, 2]), 2);
        assert_eq!(r.s[&1], (-2).into());
        assert!(!r.feasible);

        let r = theorem_aa(&IntPolynomial::from_i64(&[1, 2]), 3);
        assert!(!r.feasible);

        // 1 + q^2 takes the value 2 at both square roots of unity: two fixed points
        let r = theorem_aa(&IntPolynomial::from_i64(&[1, 0, 1]), 2);
        assert_eq!(r.s[&1], 2.into());
        assert_eq!(r.s[&2], 0.into());
        assert!(r.feasible);

        // 1 + q + q^2 at n = 2: values 1 at -1 and 3 at 1, so S_2 = 2 and one 2-orbit
        let r = theorem_aa(&IntPolynomial::from_i64(&[1, 1, 1]), 2);
        assert_eq!(r.orbit_counts[&2], 1.into());

        // 1 + 2q at n = 2: S_1 = f(-1) = -1
        assert!(!theorem_aa(&IntPolynomial::from_i64(&[1, 2]), 2).feasible);

        // 2 + q^2 at n = 3 is 3 at q = 1 but 2 + ω^2 at a primitive cube root
        let r = theorem_aa(&IntPolynomial::from_i64(&[2, 0, 1]), 3);
        assert!(!r.feasible);
    }

    #[test]
    fn census_matches_cdp() {
        let act = cdp_action(6, 3).unwrap();
        let r = theorem_aa(&cdp_q_closed(6, 3), 6);
        assert!(r.feasible);
        let census = act.orbits().census();
        for (k, count) in &r.orbit_counts {
            assert_eq!(
                *count,
                BigInt::from(*census.get(k).unwrap_or(&0)),
                "k = {k}"
            );
        }
    }
}
