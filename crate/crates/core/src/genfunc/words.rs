use serde::{Deserialize, Serialize};

use super::{shift_bound, tally, GenError};
use crate::paths::{binary_words, complement, enumerate_avl, enumerate_cmp, enumerate_dyck, maj};
use crate::qpoly::{q_binomial, IntPolynomial};

/// `Σ_s q^{2s²w + sw} ([2n, n+2sw] - [2n, n+w+2sw])`.
pub fn avl_q_closed(n: usize, w: usize) -> IntPolynomial {
    if w == 0 {
        return IntPolynomial::zero();
    }
    let (ni, wi) = (n as i64, w as i64);
    let bound = shift_bound(2 * n, 2 * w);
    let mut total = IntPolynomial::zero();
    for s in -bound..=bound {
        let e = 2 * s * s * wi + s * wi;
        let term = &q_binomial(2 * ni, ni + 2 * s * wi) - &q_binomial(2 * ni, ni + wi + 2 * s * wi);
        if !term.is_zero() {
            total += &term.shift(e as usize);
        }
    }
    total
}

pub fn avl_q_bruteforce(n: usize, w: usize) -> IntPolynomial {
    tally(enumerate_avl(n, w).iter().map(|b| maj(b)))
}

/// The three expressions for the binary-word polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BwForm {
    /// `Σ_k q^{C(k,2)} [n, k]_q`
    A,
    /// `Π_{j=0}^{n-1} (1 + q^j)`
    B,
    /// `Σ_b q^{maj(b) + maj(b̂)}` over all binary words of length `n`
    C,
}

const BW_GUARD: usize = 20;

pub fn bw_q(n: usize, form: BwForm) -> Result<IntPolynomial, GenError> {
    Ok(match form {
        BwForm::A => (0..=n as i64)
            .map(|k| q_binomial(n as i64, k).shift((k * (k - 1) / 2) as usize))
            .sum(),
        BwForm::B => (0..n).fold(IntPolynomial::one(), |acc, j| {
            &acc * &(&IntPolynomial::one() + &IntPolynomial::q_pow(j))
        }),
        BwForm::C => {
            if n > BW_GUARD {
                return Err(GenError::Guard {
                    what: format!("n = {n}"),
                    limit: BW_GUARD,
                });
            }
            tally(binary_words(n).iter().map(|b| maj(b) + maj(&complement(b))))
        }
    })
}

/// Σ q^maj over the full words of `CMP(n)`.
pub fn cmp_q(n: usize) -> IntPolynomial {
    tally(enumerate_cmp(n).iter().map(|m| maj(&m.full().bits)))
}

/// `[2n, n]_q / [n+1]_q`.
pub fn carlitz_q_catalan(n: usize) -> IntPolynomial {
    q_binomial(2 * n as i64, n as i64)
        .div_exact(&crate::qpoly::q_int(n + 1))
        .expect("Carlitz q-Catalan division is exact")
}

/// Σ q^maj over the zeros-first Dyck words of semilength `n`.
pub fn dp_q_bruteforce(n: usize) -> IntPolynomial {
    tally(enumerate_dyck(n).iter().map(|p| maj(p.bits())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::mod_cyclic;
    use num_bigint::BigInt;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn avl_examples() {
        assert!(avl_q_closed(2, 1).is_zero());
        assert_eq!(avl_q_closed(3, 2).eval_at_one(), 8.into());
        for n in 1..=5 {
            for w in 1..=n + 1 {
                assert_eq!(avl_q_closed(n, w), avl_q_bruteforce(n, w), "n={n} w={w}");
            }
        }
    }

    #[test]
    fn binary_word_forms() {
        assert_eq!(bw_q(1, BwForm::A).unwrap(), p(&[2]));
        assert_eq!(bw_q(2, BwForm::A).unwrap(), p(&[2, 2]));
        assert_eq!(bw_q(2, BwForm::B).unwrap(), p(&[2, 2]));
        assert_eq!(bw_q(0, BwForm::C).unwrap(), IntPolynomial::one());
        for n in 0..=10 {
            let a = bw_q(n, BwForm::A).unwrap();
            assert_eq!(a, bw_q(n, BwForm::B).unwrap());
            assert_eq!(a, bw_q(n, BwForm::C).unwrap());
        }
        assert!(bw_q(21, BwForm::C).is_err());
    }

    #[test]
    fn mobius_polynomial() {
        assert_eq!(cmp_q(2), p(&[1, 1]));
        for n in 1..=9 {
            let c = cmp_q(n);
            assert_eq!(c.eval_at_one(), BigInt::from(1u64 << (n - 1)));
            let doubled = c.scale(&BigInt::from(2));
            assert_eq!(
                mod_cyclic(&doubled, n),
                mod_cyclic(&bw_q(n, BwForm::B).unwrap(), n)
            );
        }
    }

    #[test]
    fn catalan() {
        assert_eq!(carlitz_q_catalan(1), IntPolynomial::one());
        assert_eq!(carlitz_q_catalan(2), p(&[1, 0, 1]));
        for n in 1..=6 {
            assert_eq!(carlitz_q_catalan(n), dp_q_bruteforce(n));
        }
    }
}
