use super::PathError;

/// Sum of the 1-based descent positions `i` with `b_i > b_{i+1}`.
pub fn maj(bits: &[u8]) -> usize {
    bits.windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(i, _)| i + 1)
        .sum()
}

/// Number of pairs `i < j` with `b_i = 0` and `b_j = 1`.
pub fn inv(bits: &[u8]) -> usize {
    let mut zeros = 0;
    let mut total = 0;
    for &b in bits {
        if b == 0 {
            zeros += 1;
        } else {
            total += zeros;
        }
    }
    total
}

/// `z_i` is the number of zeros between the `(i-1)`-th and `i`-th one.
/// Zeros after the last one are dropped.
pub fn z_vector(bits: &[u8]) -> Vec<usize> {
    let mut z = Vec::new();
    let mut gap = 0;
    for &b in bits {
        if b == 0 {
            gap += 1;
        } else {
            z.push(gap);
            gap = 0;
        }
    }
    z
}

/// Inverse of [`z_vector`] for words ending in `1`.
pub fn word_from_z(z: &[usize]) -> Vec<u8> {
    let mut out = Vec::with_capacity(z.len() + z.iter().sum::<usize>());
    for &g in z {
        out.extend(std::iter::repeat_n(0, g));
        out.push(1);
    }
    out
}

pub fn complement(bits: &[u8]) -> Vec<u8> {
    bits.iter().map(|&b| 1 - b).collect()
}

pub fn bits_to_string(bits: &[u8]) -> String {
    bits.iter()
        .map(|&b| if b == 0 { '0' } else { '1' })
        .collect()
}

pub fn parse_bits(s: &str) -> Result<Vec<u8>, PathError> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            other => Err(PathError::InvalidWord(format!(
                "unexpected character {other:?}"
            ))),
        })
        .collect()
}
