use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;

use super::{eval_at_unity, IntPolynomial, RootOfUnityIndex, UnityValue};
use crate::arith::binomial;

/// Rows of the q-Pascal triangle kept in memory. Larger requests fall back
/// to the product/quotient route.
const PASCAL_ROWS: usize = 96;

/// `[n]_q = 1 + q + ... + q^{n-1}`; `[0]_q = 0`.
pub fn q_int(n: usize) -> IntPolynomial {
    IntPolynomial::from_coeffs(vec![BigInt::from(1); n])
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: usize) -> IntPolynomial {
    (1..=n).fold(IntPolynomial::one(), |acc, i| &acc * &q_int(i))
}

fn pascal() -> &'static RwLock<Vec<Vec<IntPolynomial>>> {
    static ROWS: OnceLock<RwLock<Vec<Vec<IntPolynomial>>>> = OnceLock::new();
    ROWS.get_or_init(|| RwLock::new(vec![vec![IntPolynomial::one()]]))
}

fn pascal_entry(n: usize, k: usize) -> IntPolynomial {
    {
        let rows = pascal().read().expect("q-Pascal cache poisoned");
        if let Some(row) = rows.get(n) {
            return row[k].clone();
        }
    }
    let mut rows = pascal().write().expect("q-Pascal cache poisoned");
    while rows.len() <= n {
        let prev = rows.last().expect("row 0 is seeded");
        let m = prev.len();
        // [m choose j] = q^j [m-1 choose j] + [m-1 choose j-1]
        let mut row = Vec::with_capacity(m + 1);
        for j in 0..=m {
            let mut entry = IntPolynomial::zero();
            if j < m {
                entry += &prev[j].shift(j);
            }
            if j > 0 {
                entry += &prev[j - 1];
            }
            row.push(entry);
        }
        rows.push(row);
    }
    rows[n][k].clone()
}

/// Gaussian binomial `[n choose k]_q`, zero unless `0 <= k <= n`.
pub fn q_binomial(n: i64, k: i64) -> IntPolynomial {
    if n < 0 || k < 0 || k > n {
        return IntPolynomial::zero();
    }
    let (n, k) = (n as usize, k as usize);
    if n < PASCAL_ROWS {
        pascal_entry(n, k)
    } else {
        q_binomial_by_division(n as i64, k as i64)
    }
}

/// Gaussian binomial via `prod_{i=1}^{k} [n-k+i]_q / [i]_q`.
///
/// Each partial product is itself a Gaussian binomial, so every division is
/// exact. Kept as an independent route to the recurrence.
pub fn q_binomial_by_division(n: i64, k: i64) -> IntPolynomial {
    if n < 0 || k < 0 || k > n {
        return IntPolynomial::zero();
    }
    let (n, k) = (n as usize, k.min(n - k) as usize);
    let mut acc = IntPolynomial::one();
    for i in 1..=k {
        acc = (&acc * &q_int(n - k + i))
            .div_exact(&q_int(i))
            .expect("partial products are Gaussian binomials");
    }
    acc
}

/// q-multinomial `[n; mu_1, ..., mu_r]_q = [n]_q! / prod [mu_i]_q!`.
pub fn q_multinomial(content: &[usize]) -> IntPolynomial {
    let n: usize = content.iter().sum();
    let denom = content
        .iter()
        .fold(IntPolynomial::one(), |acc, &m| &acc * &q_factorial(m));
    q_factorial(n)
        .div_exact(&denom)
        .expect("q-multinomials are polynomials")
}

/// q-multinomial as a product of Gaussian binomials over partial sums.
pub fn q_multinomial_by_binomials(content: &[usize]) -> IntPolynomial {
    let mut total = 0usize;
    let mut acc = IntPolynomial::one();
    for &m in content {
        total += m;
        acc = &acc * &q_binomial(total as i64, m as i64);
    }
    acc
}

/// `[n choose k]_q` at a primitive `m`-th root of unity via q-Lucas:
/// `C(n div m, k div m) * [n mod m choose k mod m]_q`.
pub fn q_lucas_eval(n: i64, k: i64, m: RootOfUnityIndex) -> UnityValue {
    if n < 0 || k < 0 || k > n {
        return UnityValue::Integer(BigInt::zero());
    }
    let md = m.get() as i64;
    let outer = binomial(n / md, k / md);
    if outer.is_zero() {
        return UnityValue::Integer(outer);
    }
    match eval_at_unity(&q_binomial(n % md, k % md), m) {
        UnityValue::Integer(v) => UnityValue::Integer(outer * v),
        UnityValue::NonConstant(r) => UnityValue::NonConstant(r.scale(&outer)),
    }
}
