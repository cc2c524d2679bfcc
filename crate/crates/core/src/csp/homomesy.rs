use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::CspError;
use crate::actions::{homomesy_alpha_action, homomesy_beta_action, CyclicAction};
use crate::paths::{bits_to_string, inv};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitAverage {
    pub representative: String,
    pub size: usize,
    #[serde(serialize_with = "super::ser::rational")]
    pub average: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomomesyReport {
    pub statistic: String,
    #[serde(serialize_with = "super::ser::rational")]
    pub global_average: BigRational,
    pub orbit_averages: Vec<OrbitAverage>,
    pub homomesic: bool,
    pub witness: Option<OrbitAverage>,
}

/// Compares the average of `stat` on every orbit with its average on the
/// whole carrier, exactly.
pub fn homomesy_check<T: Ord + Clone + Debug>(
    action: &CyclicAction<T>,
    statistic: &str,
    stat: impl Fn(&T) -> BigInt,
    label: impl Fn(&T) -> String,
) -> HomomesyReport {
    let avg = |xs: &[T]| {
        let total: BigInt = xs.iter().map(&stat).sum();
        BigRational::new(total, BigInt::from(xs.len().max(1)))
    };
    let global_average = avg(action.carrier());
    let orbit_averages: Vec<OrbitAverage> = action
        .orbits()
        .orbits
        .into_iter()
        .map(|o| OrbitAverage {
            representative: label(&o.elements[0]),
            size: o.size,
            average: avg(&o.elements),
        })
        .collect();
    let witness = orbit_averages
        .iter()
        .find(|o| o.average != global_average)
        .cloned();
    HomomesyReport {
        statistic: statistic.to_string(),
        global_average,
        homomesic: witness.is_none(),
        orbit_averages,
        witness,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HomomesyAction {
    /// z-vector rotation on balanced words ending in `1`.
    Alpha,
    /// Two-step rotation on all balanced words.
    Beta,
}

/// `inv` on balanced words of length `2n` under the chosen action.
pub fn inv_homomesy(n: usize, action: HomomesyAction) -> Result<HomomesyReport, CspError> {
    if n == 0 {
        return Err(CspError::InvalidInput("n must be at least 1".into()));
    }
    let act = match action {
        HomomesyAction::Alpha => homomesy_alpha_action(n)?,
        HomomesyAction::Beta => homomesy_beta_action(n)?,
    };
    Ok(homomesy_check(
        &act,
        "inv",
        |b| BigInt::from(inv(b)),
        |b| bits_to_string(b),
    ))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessSearch {
    pub max_n: usize,
    /// Sizes checked, in order, up to and including the first witness.
    pub checked: Vec<usize>,
    pub witness_n: Option<usize>,
    pub witness: Option<OrbitAverage>,
    #[serde(serialize_with = "super::ser::opt_rational")]
    pub global_average: Option<BigRational>,
    pub message: String,
}

/// Looks for the smallest `2 <= n <= max_n` where `inv` is not homomesic
/// under two-step rotation. At `n = 1` the group is trivial and every orbit
/// is a single word, so that case carries no information about the action.
pub fn beta_witness_search(max_n: usize) -> Result<WitnessSearch, CspError> {
    let mut checked = Vec::new();
    for n in 2..=max_n {
        checked.push(n);
        let r = inv_homomesy(n, HomomesyAction::Beta)?;
        if let Some(w) = r.witness {
            return Ok(WitnessSearch {
                max_n,
                message: format!("not homomesic at n = {n}"),
                checked,
                witness_n: Some(n),
                witness: Some(w),
                global_average: Some(r.global_average),
            });
        }
    }
    Ok(WitnessSearch {
        max_n,
        checked,
        witness_n: None,
        witness: None,
        global_average: None,
        message: format!("no counterexample found <= {max_n}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn small_alpha_example() {
        let r = inv_homomesy(2, HomomesyAction::Alpha).unwrap();
        assert!(r.homomesic);
        assert_eq!(r.orbit_averages.len(), 2);
        assert!(r.orbit_averages.iter().all(|o| o.average == rat(3, 1)));
    }

    #[test]
    fn alpha_average_is_binomial() {
        for n in 1..=6i64 {
            let r = inv_homomesy(n as usize, HomomesyAction::Alpha).unwrap();
            assert!(r.homomesic, "n = {n}");
            assert_eq!(r.global_average, rat(n * (n + 1) / 2, 1));
        }
    }

    #[test]
    fn beta_witness() {
        let s = beta_witness_search(6).unwrap();
        // orbits {0011, 1100}, {0101}, {0110, 1001}, {1010}; inv total 12 over 6 words
        assert_eq!(s.witness_n, Some(2));
        let w = s.witness.unwrap();
        assert_eq!(w.representative, "0101");
        assert_eq!(w.average, rat(3, 1));
        assert_eq!(s.global_average, Some(rat(2, 1)));
        assert_eq!(s.checked, vec![2]);
        assert!(!inv_homomesy(3, HomomesyAction::Beta).unwrap().homomesic);
    }
}
