use super::{alpha, beta, eta, eta_tilde, z_rotate, ActionError, CyclicAction};
use crate::paths::{
    balanced_words, binary_words, enumerate_cdp, enumerate_cmp, words_with_content, AreaSequence,
    MobiusWord,
};

/// `CDP(n, w)` under right rotation of the area sequence.
pub fn cdp_action(n: usize, w: usize) -> Result<CyclicAction<AreaSequence>, ActionError> {
    CyclicAction::new(enumerate_cdp(n, w).collect(), n, alpha)
}

/// All binary words of length `n >= 2` under the twisted shift.
pub fn bw_action(n: usize) -> Result<CyclicAction<Vec<u8>>, ActionError> {
    if n < 2 {
        return Err(ActionError::InvalidInput(format!(
            "eta needs n >= 2, got {n}"
        )));
    }
    CyclicAction::new(binary_words(n), n, |b| eta(b).expect("length n >= 2"))
}

/// `CMP(n)` under the induced twisted shift.
pub fn cmp_action(n: usize) -> Result<CyclicAction<MobiusWord>, ActionError> {
    CyclicAction::new(enumerate_cmp(n), n, eta_tilde)
}

/// All paths `(0,0) -> (n,n)` under two-step rotation; the ambient set for
/// the diagonal-avoiding subsets.
pub fn avl_superset_action(n: usize) -> Result<CyclicAction<Vec<u8>>, ActionError> {
    CyclicAction::new(balanced_words(n), n.max(1), |b| {
        beta(b).expect("even length")
    })
}

/// Words of the given content under one-step left rotation.
pub fn word_rotation_action(content: &[usize]) -> Result<CyclicAction<Vec<u8>>, ActionError> {
    let n: usize = content.iter().sum();
    if n == 0 {
        return Err(ActionError::InvalidInput("empty content".into()));
    }
    CyclicAction::new(words_with_content(content), n, |b| {
        let mut c = b.clone();
        c.rotate_left(1);
        c
    })
}

/// Balanced words of length `2n` ending in `1` under z-vector rotation.
pub fn homomesy_alpha_action(n: usize) -> Result<CyclicAction<Vec<u8>>, ActionError> {
    let carrier = balanced_words(n)
        .into_iter()
        .filter(|b| b.last() == Some(&1))
        .collect();
    CyclicAction::new(carrier, n, |b| z_rotate(b).expect("ends in 1"))
}

/// All balanced words of length `2n` under two-step rotation. The rotation
/// does not keep a final `1`, so the carrier is the full set.
pub fn homomesy_beta_action(n: usize) -> Result<CyclicAction<Vec<u8>>, ActionError> {
    avl_superset_action(n)
}
