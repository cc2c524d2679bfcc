use serde::Serialize;

use super::word::bits_to_string;
use super::{AreaSequence, PathError};

/// A path given by its starting point `(start, 0)` and its step word.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeWord {
    pub start: usize,
    pub bits: Vec<u8>,
}

impl Serialize for LatticeWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("LatticeWord", 2)?;
        st.serialize_field("start", &self.start)?;
        st.serialize_field("bits", &bits_to_string(&self.bits))?;
        st.end()
    }
}

/// Lattice word of a circular Dyck path.
///
/// The north step of row `r` sits at abscissa `r + w - a_r` and the path
/// starts at `x_0 = w - a_n`. The word has `n` ones and `n` zeros, ends in a
/// one and every point lies strictly between `y = x` and `y = x - (w + 2)`.
pub fn area_to_path(a: &AreaSequence) -> LatticeWord {
    let w = a.width();
    let v = a.values();
    let n = v.len();
    let start = w - v[n - 1];
    let mut x = start;
    let mut bits = Vec::with_capacity(2 * n);
    for (r, &ar) in v.iter().enumerate() {
        let target = r + 1 + w - ar;
        bits.extend(std::iter::repeat_n(0, target - x));
        bits.push(1);
        x = target;
    }
    LatticeWord { start, bits }
}

/// Inverse of [`area_to_path`] for width `w`.
pub fn path_to_area(p: &LatticeWord, w: usize) -> Result<AreaSequence, PathError> {
    let bad = |msg: &str| PathError::InvalidWord(msg.to_string());
    if p.bits.last() != Some(&1) {
        return Err(bad("last step must be north"));
    }
    if p.start < 1 || p.start > w {
        return Err(bad("start out of range"));
    }
    let (mut x, mut y) = (p.start as i64, 0i64);
    let mut values = Vec::new();
    for &b in &p.bits {
        if b == 0 {
            x += 1;
        } else {
            // north step of row y + 1
            let a = y + 1 + w as i64 - x;
            if a < 0 {
                return Err(bad("path touches the lower diagonal"));
            }
            values.push(a as usize);
            y += 1;
        }
        if x - y < 1 || x - y > w as i64 + 1 {
            return Err(bad("path leaves the strip between the diagonals"));
        }
    }
    if x - p.start as i64 != y {
        return Err(bad("word is not balanced"));
    }
    let a = AreaSequence::new(values, w)?;
    if area_to_path(&a) != *p {
        return Err(bad("start point inconsistent with the area sequence"));
    }
    Ok(a)
}
