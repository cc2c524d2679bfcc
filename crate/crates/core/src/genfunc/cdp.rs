use num_bigint::BigInt;

use super::{shift_bound, tally, GenError};
use crate::arith::binomial;
use crate::paths::{balanced_words, maj};
use crate::qpoly::{q_binomial, IntPolynomial};

/// `|CDP(n, w)|_q` as the inclusion-exclusion double sum
/// `Σ_s Σ_{j=1}^{w} q^{s²δ + s(j+1)} ([2n-1, n-1-δs] - [2n-1, n+j+δs])`
/// with `δ = w + 2`.
pub fn cdp_q_closed(n: usize, w: usize) -> IntPolynomial {
    cdp_double_sum(n, w, |delta, s| n as i64 - 1 - delta * s)
}

/// The same double sum with `[2n-1, n+δs]` as the first binomial.
pub fn cdp_q_closed_restated(n: usize, w: usize) -> IntPolynomial {
    cdp_double_sum(n, w, |delta, s| n as i64 + delta * s)
}

fn cdp_double_sum(n: usize, w: usize, first: impl Fn(i64, i64) -> i64) -> IntPolynomial {
    if n == 0 || w == 0 {
        return IntPolynomial::zero();
    }
    let row = 2 * n as i64 - 1;
    let delta = w as i64 + 2;
    let bound = shift_bound(2 * n, w + 2);
    let mut total = IntPolynomial::zero();
    for s in -bound..=bound {
        for j in 1..=w as i64 {
            let e = s * s * delta + s * (j + 1);
            let term =
                &q_binomial(row, first(delta, s)) - &q_binomial(row, n as i64 + j + delta * s);
            if !term.is_zero() {
                total += &term.shift(e as usize);
            }
        }
    }
    total
}

/// `w[2n-1, n-1] - Σ_j q^j [2n-1, n+j] - Σ_j [2n-1, n+j-(w+2)]`, valid when
/// `w >= n` because no path can then touch both forbidden diagonals.
pub fn cdp_q_three_term(n: usize, w: usize) -> Result<IntPolynomial, GenError> {
    if n == 0 || w < n {
        return Err(GenError::Precondition(format!(
            "need w >= n >= 1, got n = {n}, w = {w}"
        )));
    }
    let (n, w) = (n as i64, w as i64);
    let row = 2 * n - 1;
    let mut total = q_binomial(row, n - 1).scale(&BigInt::from(w));
    for j in 1..=w {
        total -= &q_binomial(row, n + j).shift(j as usize);
        total -= &q_binomial(row, n + j - (w + 2));
    }
    Ok(total)
}

const CDP_GUARD: usize = 16;

/// Σ q^maj over every start `x0 ∈ [1, w]` and every balanced word ending in a
/// north step whose path stays within `1 <= x - y <= w + 1`.
pub fn cdp_q_bruteforce(n: usize, w: usize) -> Result<IntPolynomial, GenError> {
    if n + w > CDP_GUARD {
        return Err(GenError::Guard {
            what: format!("n + w = {}", n + w),
            limit: CDP_GUARD,
        });
    }
    let words = balanced_words(n);
    let hits = words.iter().filter(|b| b.last() == Some(&1)).flat_map(|b| {
        (1..=w as i64)
            .filter(move |&x0| in_strip(b, x0, w as i64))
            .map(move |_| maj(b))
    });
    Ok(tally(hits))
}

fn in_strip(bits: &[u8], x0: i64, w: i64) -> bool {
    let mut d = x0;
    bits.iter().all(|&b| {
        d += if b == 0 { 1 } else { -1 };
        (1..=w + 1).contains(&d)
    })
}

/// `|CDP(n, w)| = (w+2) Σ_t C(2n-1, n+(w+2)t) - 2^{2n-1}`.
pub fn cdp_count(n: usize, w: usize) -> BigInt {
    if n == 0 || w == 0 {
        return BigInt::from(0);
    }
    let (ni, delta) = (n as i64, w as i64 + 2);
    let bound = shift_bound(2 * n, w + 2);
    let sum: BigInt = (-bound..=bound)
        .map(|t| binomial(2 * ni - 1, ni + delta * t))
        .sum();
    sum * delta - (BigInt::from(1) << (2 * n - 1))
}
