use serde::Serialize;

use super::word::{bits_to_string, complement};
use super::{path_to_area, AreaSequence, LatticeWord, PathError};

/// Circular Möbius path given by its first half `b_1 ... b_n`; the second half
/// is the complement, so `b_{n+i} = 1 - b_i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MobiusWord {
    half: Vec<u8>,
}

impl MobiusWord {
    pub fn new(half: Vec<u8>) -> Result<Self, PathError> {
        match half.last() {
            Some(0) => Ok(Self { half }),
            Some(_) => Err(PathError::NotMobius("b_n must be 0".into())),
            None => Err(PathError::NotMobius("empty half-word".into())),
        }
    }

    pub fn half(&self) -> &[u8] {
        &self.half
    }

    pub fn n(&self) -> usize {
        self.half.len()
    }

    /// The full lattice word. Its start `n + 1 - #zeros(half)` is the one
    /// making the second half the mirror image of the first across the strip.
    pub fn full(&self) -> LatticeWord {
        let n = self.n();
        let zeros = self.half.iter().filter(|&&b| b == 0).count();
        let mut bits = self.half.clone();
        bits.extend(complement(&self.half));
        LatticeWord {
            start: n + 1 - zeros,
            bits,
        }
    }

    pub fn to_area(&self) -> AreaSequence {
        path_to_area(&self.full(), self.n()).expect("Möbius words are circular Dyck paths")
    }
}

impl Serialize for MobiusWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let full = self.full();
        let mut st = s.serialize_struct("MobiusWord", 3)?;
        st.serialize_field("half", &bits_to_string(&self.half))?;
        st.serialize_field("start", &full.start)?;
        st.serialize_field("bits", &bits_to_string(&full.bits))?;
        st.end()
    }
}

/// All of `CMP(n)`, ordered by half-word.
pub fn enumerate_cmp(n: usize) -> Vec<MobiusWord> {
    if n == 0 {
        return Vec::new();
    }
    (0..1usize << (n - 1))
        .map(|code| {
            let mut half: Vec<u8> = (0..n - 1).rev().map(|i| ((code >> i) & 1) as u8).collect();
            half.push(0);
            MobiusWord { half }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::{area_to_path, maj, parse_bits};

    #[test]
    fn small_cases() {
        let one = enumerate_cmp(1);
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].full().bits, parse_bits("01").unwrap());
        assert_eq!(enumerate_cmp(4).len(), 8);
        assert!(MobiusWord::new(vec![0, 1]).is_err());
    }

    #[test]
    fn members_are_cdp_elements() {
        for n in 1..=8 {
            let all = enumerate_cmp(n);
            assert_eq!(all.len(), 1 << (n - 1));
            for m in all {
                let p = m.full();
                assert_eq!(p.bits[n - 1], 0);
                assert_eq!(p.bits[2 * n - 1], 1);
                assert_eq!(area_to_path(&m.to_area()), p);
            }
        }
    }

    #[test]
    fn maj_of_concatenation_splits_mod_n() {
        for n in 1..=12usize {
            for code in 0..1usize << n {
                let b: Vec<u8> = (0..n).map(|i| ((code >> i) & 1) as u8).collect();
                let mut full = b.clone();
                full.extend(complement(&b));
                assert_eq!(maj(&full) % n, (maj(&b) + maj(&complement(&b))) % n);
            }
        }
    }
}
