use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use super::IntPolynomial;
use crate::arith::divisors;

fn cache() -> &'static RwLock<HashMap<usize, IntPolynomial>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, IntPolynomial>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The `m`-th cyclotomic polynomial, `(q^m - 1) / prod_{d | m, d < m} Phi_d`.
///
/// # Panics
///
/// Panics if `m == 0`.
pub fn cyclotomic(m: usize) -> IntPolynomial {
    assert!(m > 0, "cyclotomic polynomial index must be positive");
    if let Some(p) = cache().read().expect("cyclotomic cache poisoned").get(&m) {
        return p.clone();
    }
    let mut acc = &IntPolynomial::q_pow(m) - &IntPolynomial::one();
    for d in divisors(m) {
        if d < m {
            acc = acc
                .div_exact(&cyclotomic(d))
                .expect("cyclotomic factors divide q^m - 1");
        }
    }
    cache()
        .write()
        .expect("cyclotomic cache poisoned")
        .insert(m, acc.clone());
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(cyclotomic(1), IntPolynomial::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic(2), IntPolynomial::from_i64(&[1, 1]));
        assert_eq!(cyclotomic(4), IntPolynomial::from_i64(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), IntPolynomial::from_i64(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), IntPolynomial::from_i64(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn first_non_unit_coefficient_at_105() {
        // Phi_105 is the first cyclotomic polynomial with a coefficient -2.
        assert!(cyclotomic(105).coeffs().iter().any(|c| *c == (-2).into()));
        assert_eq!(cyclotomic(105).degree(), Some(48));
    }

    #[test]
    fn product_over_divisors_is_q_m_minus_one() {
        for m in 1..=60 {
            let prod = divisors(m)
                .into_iter()
                .fold(IntPolynomial::one(), |acc, d| &acc * &cyclotomic(d));
            assert_eq!(
                prod,
                &IntPolynomial::q_pow(m) - &IntPolynomial::one(),
                "m = {m}"
            );
        }
    }
}
