//! Small integer helpers shared across modules.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Divisors of `n` in increasing order; empty for `n == 0`.
pub fn divisors(n: usize) -> Vec<usize> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn gcd(a: usize, b: usize) -> usize {
    num_integer::gcd(a, b)
}

/// The number-theoretic Möbius function.
pub fn mobius(mut n: usize) -> i64 {
    assert!(n > 0, "mobius(0) is undefined");
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Ordinary binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Ramanujan's sum `c_m(l) = sum_{d | gcd(m, l)} mu(m/d) d`, i.e. the sum of
/// the `l`-th powers of the primitive `m`-th roots of unity.
pub fn ramanujan_sum(m: usize, l: usize) -> i64 {
    let g = gcd(m, l);
    divisors(g)
        .into_iter()
        .map(|d| mobius(m / d) * d as i64)
        .sum()
}
