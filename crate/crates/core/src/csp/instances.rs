use serde::{Deserialize, Serialize};

use super::{verify_csp, verify_subset_csp, CspError, CspReport};
use crate::actions::{
    avl_superset_action, bw_action, cdp_action, cmp_action, word_rotation_action,
};
use crate::arith::gcd;
use crate::genfunc::{avl_q_closed, bw_q, cdp_q_closed, cmp_q, BwForm};
use crate::paths::{enumerate_avl, enumerate_cdp};
use crate::qpoly::q_multinomial;

/// `(CDP(n, w), α, |CDP(n, w)|_q)`.
pub fn verify_cdp_csp(n: usize, w: usize) -> Result<CspReport, CspError> {
    verify_csp(&cdp_action(n, w)?, &cdp_q_closed(n, w))
}

/// `(BW(n), η, Σ_k q^{C(k,2)} [n, k]_q)`.
pub fn verify_bw_csp(n: usize) -> Result<CspReport, CspError> {
    verify_csp(&bw_action(n)?, &bw_q(n, BwForm::A)?)
}

/// Polynomial attached to `CMP(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CmpPolynomial {
    /// Half of the binary-word polynomial.
    HalfBw,
    /// Σ q^maj over `CMP(n)`.
    Maj,
}

pub fn verify_cmp_csp(n: usize, poly: CmpPolynomial) -> Result<CspReport, CspError> {
    let f = match poly {
        CmpPolynomial::HalfBw => bw_q(n, BwForm::B)?
            .div_scalar_exact(&2.into())
            .map_err(|e| CspError::InvalidInput(e.to_string()))?,
        CmpPolynomial::Maj => cmp_q(n),
    };
    verify_csp(&cmp_action(n)?, &f)
}

/// `(AVL(n, w) ⊂ AVL(n, n+1), β, |AVL(n, w)|_q)`, flagged when `gcd(n, w) != 1`.
pub fn verify_avl_csp(n: usize, w: usize) -> Result<CspReport, CspError> {
    let subset = enumerate_avl(n, w);
    let mut report = verify_subset_csp(&subset, &avl_superset_action(n)?, &avl_q_closed(n, w))?;
    if gcd(n, w) != 1 {
        report.warnings.push(format!(
            "gcd({n}, {w}) != 1: coprimality hypothesis not met"
        ));
    }
    Ok(report)
}

/// Words of content `mu` under rotation, with the q-multinomial.
pub fn verify_word_csp(mu: &[usize]) -> Result<CspReport, CspError> {
    verify_csp(&word_rotation_action(mu)?, &q_multinomial(mu))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixedLemmaCheck {
    pub n: usize,
    pub w: usize,
    pub k: usize,
    pub gcd: usize,
    /// Members of `CDP(n, w)` fixed by rotating `k` steps.
    pub fixed: usize,
    /// `|CDP(gcd(n, k), w)|`.
    pub smaller: usize,
    pub holds: bool,
}

/// Counts both sides by enumeration; the rotation is applied to the raw
/// sequence, independently of the action machinery.
pub fn verify_cdp_fixed_lemma(n: usize, w: usize, k: usize) -> Result<FixedLemmaCheck, CspError> {
    if k == 0 || k > n {
        return Err(CspError::InvalidInput(format!(
            "need 1 <= k <= n, got k = {k}, n = {n}"
        )));
    }
    let fixed = enumerate_cdp(n, w)
        .filter(|a| {
            let v = a.values();
            (0..n).all(|i| v[i] == v[(i + k) % n])
        })
        .count();
    let d = gcd(n, k);
    let smaller = enumerate_cdp(d, w).count();
    Ok(FixedLemmaCheck {
        n,
        w,
        k,
        gcd: d,
        fixed,
        smaller,
        holds: fixed == smaller,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_csp() {
        assert!(verify_word_csp(&[4]).unwrap().passed());
        assert!(verify_word_csp(&[2, 2]).unwrap().passed());
        assert!(verify_word_csp(&[1, 1, 1]).unwrap().passed());
        assert!(verify_word_csp(&[2, 1, 3]).unwrap().passed());
    }

    #[test]
    fn fixed_lemma_examples() {
        let c = verify_cdp_fixed_lemma(4, 4, 2).unwrap();
        assert_eq!((c.fixed, c.smaller), (10, 10));
        let c = verify_cdp_fixed_lemma(5, 3, 5).unwrap();
        assert!(c.holds);
        assert_eq!(c.fixed, enumerate_cdp(5, 3).count());
        let c = verify_cdp_fixed_lemma(6, 3, 4).unwrap();
        assert!(c.holds);
        assert_eq!(c.smaller, enumerate_cdp(2, 3).count());
        assert!(verify_cdp_fixed_lemma(3, 3, 0).is_err());
    }

    #[test]
    fn avl_examples() {
        assert!(verify_avl_csp(3, 2).unwrap().passed());
        assert!(verify_avl_csp(5, 2).unwrap().passed());
        let r = verify_avl_csp(4, 2).unwrap();
        assert_eq!(r.warnings.len(), 1);
    }

    #[test]
    fn cmp_and_bw() {
        for n in 2..=7 {
            assert!(verify_bw_csp(n).unwrap().passed(), "bw {n}");
            assert!(
                verify_cmp_csp(n, CmpPolynomial::HalfBw).unwrap().passed(),
                "cmp half {n}"
            );
            assert!(
                verify_cmp_csp(n, CmpPolynomial::Maj).unwrap().passed(),
                "cmp maj {n}"
            );
        }
    }
}
