use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{verify_csp, CspError, FamilyMember};
use crate::actions::{cdp_action, cmp_action, CyclicAction};
use crate::genfunc::{cdp_q_closed, cmp_q};
use crate::paths::words_with_content;
use crate::qpoly::{q_multinomial, IntPolynomial};

/// Built-in families `n -> (X_n, C_n, f_n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "family")]
pub enum Family {
    /// `CDP(n, w)` for a fixed width under area rotation.
    CdpFixedW { w: usize },
    /// All words of length `n` over `k` letters under rotation.
    KaryWords { k: usize },
    /// `CMP(n)` under the induced twisted shift.
    Cmp,
}

impl Family {
    pub fn binary_words() -> Self {
        Family::KaryWords { k: 2 }
    }
}

fn compositions(n: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for mut rest in compositions(n - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn family_member(family: Family, n: usize) -> Result<FamilyMember, CspError> {
    if n == 0 {
        return Err(CspError::InvalidInput(
            "families are indexed from n = 1".into(),
        ));
    }
    let (size, f, csp) = match family {
        Family::CdpFixedW { w } => {
            let action = cdp_action(n, w)?;
            let f = cdp_q_closed(n, w);
            (action.len(), f.clone(), verify_csp(&action, &f)?)
        }
        Family::KaryWords { k } => {
            if k == 0 {
                return Err(CspError::InvalidInput("alphabet must be non-empty".into()));
            }
            let contents = compositions(n, k);
            let carrier: Vec<Vec<u8>> = contents
                .iter()
                .flat_map(|c| words_with_content(c))
                .collect();
            let f: IntPolynomial = contents.iter().map(|c| q_multinomial(c)).sum();
            let action = CyclicAction::new(carrier, n, |b: &Vec<u8>| {
                let mut c = b.clone();
                c.rotate_left(1);
                c
            })?;
            (action.len(), f.clone(), verify_csp(&action, &f)?)
        }
        Family::Cmp => {
            let action = cmp_action(n)?;
            let f = cmp_q(n);
            (action.len(), f.clone(), verify_csp(&action, &f)?)
        }
    };
    Ok(FamilyMember {
        n,
        size: BigInt::from(size),
        f,
        csp,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::csp::{lyndon_check, lyndon_params};

    fn family(f: Family, max_n: usize) -> Vec<FamilyMember> {
        (1..=max_n).map(|n| family_member(f, n).unwrap()).collect()
    }

    #[test]
    fn words_and_cdp_are_lyndon_like() {
        assert!(
            lyndon_check(&family(Family::binary_words(), 6))
                .unwrap()
                .lyndon_like
        );
        assert!(
            lyndon_check(&family(Family::KaryWords { k: 3 }, 5))
                .unwrap()
                .lyndon_like
        );
        assert!(
            lyndon_check(&family(Family::CdpFixedW { w: 2 }, 6))
                .unwrap()
                .lyndon_like
        );
    }

    #[test]
    fn binary_sizes_give_lyndon_numbers() {
        let sizes: Vec<BigInt> = family(Family::binary_words(), 6)
            .into_iter()
            .map(|m| m.size)
            .collect();
        let p = lyndon_params(&sizes);
        assert!(p.valid);
        assert_eq!(p.t[&6], 9.into());
    }

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(3, 2).len(), 4);
        assert_eq!(compositions(0, 3), vec![vec![0, 0, 0]]);
    }
}
