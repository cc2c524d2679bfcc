use serde::Serialize;

use super::word::{bits_to_string, complement};
use super::{area_to_path, enumerate_cdp, path_to_area, AreaSequence, LatticeWord, PathError};

/// A classical Dyck path stored as a zeros-first word: every prefix has at
/// least as many zeros as ones.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckPath {
    bits: Vec<u8>,
}

impl Serialize for DyckPath {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&bits_to_string(&self.bits))
    }
}

impl DyckPath {
    pub fn new(bits: Vec<u8>) -> Result<Self, PathError> {
        if !bits.len().is_multiple_of(2) {
            return Err(PathError::NotDyck("odd length".into()));
        }
        let mut h: i64 = 0;
        for &b in &bits {
            h += if b == 0 { 1 } else { -1 };
            if h < 0 {
                return Err(PathError::NotDyck(bits_to_string(&bits)));
            }
        }
        if h != 0 {
            return Err(PathError::NotDyck(bits_to_string(&bits)));
        }
        Ok(Self { bits })
    }

    /// The path with classical area sequence `a` (`a_1 = 0`, `a_{i+1} <= a_i + 1`).
    ///
    /// The `k`-th zero is taken at height `k - 1 - a_k`.
    pub fn from_area(a: &AreaSequence) -> Result<Self, PathError> {
        let v = a.values();
        if v.first() != Some(&0) {
            return Err(PathError::NotDyck("area sequence must start with 0".into()));
        }
        let n = v.len();
        let mut bits = Vec::with_capacity(2 * n);
        let mut y = 0;
        for (k, &ak) in v.iter().enumerate() {
            if ak > k {
                return Err(PathError::NotDyck(format!("a_{} = {ak} too large", k + 1)));
            }
            let target = k - ak;
            if target < y {
                return Err(PathError::NotDyck(format!(
                    "a_{} = {ak} climbs too fast",
                    k + 1
                )));
            }
            bits.extend(std::iter::repeat_n(1, target - y));
            bits.push(0);
            y = target;
        }
        bits.extend(std::iter::repeat_n(1, n - y));
        Ok(Self { bits })
    }

    pub fn area(&self) -> AreaSequence {
        let n = self.size();
        let mut y = 0;
        let mut k = 0;
        let mut values = Vec::with_capacity(n);
        for &b in &self.bits {
            if b == 1 {
                y += 1;
            } else {
                values.push(k - y);
                k += 1;
            }
        }
        AreaSequence::new(values, n).expect("Dyck paths have classical area sequences")
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// Semilength.
    pub fn size(&self) -> usize {
        self.bits.len() / 2
    }

    /// Length of the leading run of zeros.
    pub fn h_first(&self) -> usize {
        self.bits.iter().take_while(|&&b| b == 0).count()
    }

    /// Length of the trailing run of ones.
    pub fn h_last(&self) -> usize {
        self.bits.iter().rev().take_while(|&&b| b == 1).count()
    }
}

/// All Dyck paths of semilength `n`, in lexicographic order of area sequence.
pub fn enumerate_dyck(n: usize) -> Vec<DyckPath> {
    enumerate_cdp(n, n)
        .filter(|a| a.values()[0] == 0)
        .map(|a| DyckPath::from_area(&a).expect("classical sequence"))
        .collect()
}

/// Pair of Dyck paths attached to a member of `CDP(n, n)`.
pub fn dyck_pair(a: &AreaSequence) -> Result<(DyckPath, DyckPath), PathError> {
    if a.len() != a.width() {
        return Err(PathError::NotMultiple {
            height: a.len(),
            width: a.width(),
        });
    }
    let mut t = dyck_tuple(a)?;
    let q = t.pop().expect("two members");
    let p = t.pop().expect("two members");
    Ok((p, q))
}

pub fn dyck_pair_inverse(p: &DyckPath, q: &DyckPath) -> Result<AreaSequence, PathError> {
    dyck_tuple_inverse(&[p.clone(), q.clone()])
}

/// Cuts the lattice word of a member of `CDP(kn, n)` into `2k` Dyck paths of
/// semilength `n`.
///
/// The path lives on the `n + 1` levels `1 <= x - y <= n + 1`. Odd members
/// are excursions off the bottom level, even members are excursions off the
/// top level, stored complemented so that all members are zeros-first. Two
/// consecutive members overlap in a run of `h_last(P_j) + h_first(P_{j+1}) - n`
/// letters, which is why that quantity must be non-negative.
pub fn dyck_tuple(a: &AreaSequence) -> Result<Vec<DyckPath>, PathError> {
    let n = a.width();
    if !a.len().is_multiple_of(n) {
        return Err(PathError::NotMultiple {
            height: a.len(),
            width: n,
        });
    }
    let pieces = 2 * (a.len() / n);
    let LatticeWord { start, bits } = area_to_path(a);
    let corrupt = || PathError::InvalidWord("word does not split into Dyck paths".into());

    let mut h_last_prev = n + 1 - start;
    let mut pos = 0;
    let mut out = Vec::with_capacity(pieces);
    for j in 0..pieces {
        // odd members (j even here) open with a run of zeros, even ones with ones
        let run_letter = if j % 2 == 0 { 0 } else { 1 };
        let run = bits[pos..].iter().take_while(|&&b| b == run_letter).count();
        pos += run;
        let h_first = run + n - h_last_prev;
        if h_first > n {
            return Err(corrupt());
        }
        let mut mid = Vec::new();
        let mut seen = 0;
        while seen < n - h_first {
            let b = *bits.get(pos).ok_or_else(corrupt)?;
            if b == run_letter {
                seen += 1;
            }
            mid.push(b);
            pos += 1;
        }
        let others = mid.iter().filter(|&&b| b != run_letter).count();
        let h_last = n.checked_sub(others).ok_or_else(corrupt)?;
        let mut actual = vec![run_letter; h_first];
        actual.extend_from_slice(&mid);
        actual.extend(std::iter::repeat_n(1 - run_letter, h_last));
        let stored = if run_letter == 0 {
            actual
        } else {
            complement(&actual)
        };
        out.push(DyckPath::new(stored)?);
        h_last_prev = h_last;
    }
    if pos != bits.len() || dyck_tuple_inverse(&out)? != *a {
        return Err(corrupt());
    }
    Ok(out)
}

/// Reassembles `2k` Dyck paths of a common semilength `n` into a member of
/// `CDP(kn, n)`; rejects tuples violating `h_last(P_j) + h_first(P_{j+1}) >= n`.
pub fn dyck_tuple_inverse(tuple: &[DyckPath]) -> Result<AreaSequence, PathError> {
    let m = tuple.len();
    if m == 0 || !m.is_multiple_of(2) {
        return Err(PathError::NotDyck(
            "tuple length must be even and positive".into(),
        ));
    }
    let n = tuple[0].size();
    if n == 0 || tuple.iter().any(|p| p.size() != n) {
        return Err(PathError::NotDyck(
            "members must share a positive semilength".into(),
        ));
    }
    for j in 0..m {
        let prev = &tuple[(j + m - 1) % m];
        if prev.h_last() + tuple[j].h_first() < n {
            return Err(PathError::PeakInequality((j + m - 1) % m + 1, j + 1));
        }
    }
    let start = n + 1 - tuple[m - 1].h_last();
    let mut bits = Vec::with_capacity(m * n);
    for j in 0..m {
        let prev = &tuple[(j + m - 1) % m];
        let p = &tuple[j];
        let run = prev.h_last() + p.h_first() - n;
        let mid = &p.bits()[p.h_first()..2 * n - p.h_last()];
        if j % 2 == 0 {
            bits.extend(std::iter::repeat_n(0, run));
            bits.extend_from_slice(mid);
        } else {
            bits.extend(std::iter::repeat_n(1, run));
            bits.extend(complement(mid));
        }
    }
    path_to_area(&LatticeWord { start, bits }, n)
}
