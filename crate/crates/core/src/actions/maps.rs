use super::ActionError;
use crate::paths::{complement, word_from_z, z_vector, AreaSequence, MobiusWord};

/// Right rotation of the area sequence.
pub fn alpha(a: &AreaSequence) -> AreaSequence {
    a.rotate()
}

/// Rotation of an even-length word two letters to the left.
pub fn beta(bits: &[u8]) -> Result<Vec<u8>, ActionError> {
    if !bits.len().is_multiple_of(2) {
        return Err(ActionError::InvalidInput(format!(
            "odd word length {}",
            bits.len()
        )));
    }
    let mut out = bits.to_vec();
    if !out.is_empty() {
        out.rotate_left(2);
    }
    Ok(out)
}

/// `(b_1, ..., b_n) -> (1-b_{n-1}, 1-b_n, b_1, ..., b_{n-2})`.
pub fn eta(bits: &[u8]) -> Result<Vec<u8>, ActionError> {
    let n = bits.len();
    if n < 2 {
        return Err(ActionError::InvalidInput(format!(
            "eta needs length at least 2, got {n}"
        )));
    }
    let mut out = complement(&bits[n - 2..]);
    out.extend_from_slice(&bits[..n - 2]);
    Ok(out)
}

/// The twisted shift carried over to Möbius words.
///
/// The half-word `b_1 ... b_{n-1} 0` corresponds to the odd-parity word
/// `b_1 ... b_{n-1} c`; apply [`eta`] to that word and read off the new
/// half-word as its first `n - 1` letters followed by `0`.
pub fn eta_tilde(m: &MobiusWord) -> MobiusWord {
    let n = m.n();
    if n == 1 {
        return m.clone();
    }
    let mut odd = m.half().to_vec();
    let ones = odd[..n - 1].iter().filter(|&&b| b == 1).count();
    odd[n - 1] = if ones % 2 == 0 { 1 } else { 0 };
    let mut half = eta(&odd).expect("n >= 2");
    half[n - 1] = 0;
    MobiusWord::new(half).expect("half-word ends in 0")
}

/// Right rotation of the zeros-between-ones vector of a word ending in `1`.
pub fn z_rotate(bits: &[u8]) -> Result<Vec<u8>, ActionError> {
    if bits.last() != Some(&1) {
        return Err(ActionError::InvalidInput("word must end in 1".into()));
    }
    let mut z = z_vector(bits);
    z.rotate_right(1);
    Ok(word_from_z(&z))
}
