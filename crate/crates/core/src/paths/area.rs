use serde::Serialize;

use super::PathError;

/// Area sequence `(a_1, ..., a_n)` of a circular Dyck path of width `w`.
///
/// Serializes as the bare integer array.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct AreaSequence {
    values: Vec<usize>,
    #[serde(skip)]
    width: usize,
}

impl AreaSequence {
    pub fn new(values: Vec<usize>, width: usize) -> Result<Self, PathError> {
        if validate_area_sequence(&values, width) {
            Ok(Self { values, width })
        } else {
            Err(PathError::InvalidArea { values, width })
        }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// The height `n`.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Classical Dyck paths are the sequences with `w = n` and `a_1 = 0`.
    pub fn is_classical(&self) -> bool {
        self.width == self.len() && self.values[0] == 0
    }

    /// Right rotation `(a_n, a_1, ..., a_{n-1})`.
    pub fn rotate(&self) -> Self {
        let mut values = self.values.clone();
        values.rotate_right(1);
        Self {
            values,
            width: self.width,
        }
    }
}

/// True iff `n >= 1`, every `a_i <= w - 1` and `a_{i+1} <= a_i + 1` with the
/// index read cyclically.
pub fn validate_area_sequence(values: &[usize], w: usize) -> bool {
    let n = values.len();
    n >= 1 && values.iter().all(|&a| a < w) && (0..n).all(|i| values[(i + 1) % n] <= values[i] + 1)
}

/// Number of `i` with `a_{i+1} <= a_i`, cyclically.
pub fn valley_count(a: &AreaSequence) -> usize {
    let v = a.values();
    let n = v.len();
    (0..n).filter(|&i| v[(i + 1) % n] <= v[i]).count()
}

/// Lexicographic depth-first enumeration of `CDP(n, w)`.
pub fn enumerate_cdp(n: usize, w: usize) -> CdpIter {
    CdpIter::new(n, w)
}

/// Iterator behind [`enumerate_cdp`].
///
/// A prefix ending in `a_i` can be completed iff `a_i + (n - 1 - i) + 1 >= a_1`,
/// since values climb by at most one per step and the last must reach
/// `a_1 - 1`. At the leaf this is exactly the wrap condition, so every
/// completed prefix is valid and no leaf is rejected.
#[derive(Debug, Clone)]
pub struct CdpIter {
    n: usize,
    w: usize,
    cur: Vec<usize>,
    state: IterState,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum IterState {
    Fresh,
    Running,
    Done,
}

impl CdpIter {
    fn new(n: usize, w: usize) -> Self {
        let state = if n == 0 || w == 0 {
            IterState::Done
        } else {
            IterState::Fresh
        };
        Self {
            n,
            w,
            cur: vec![0; n],
            state,
        }
    }

    fn max_at(&self, i: usize) -> usize {
        if i == 0 {
            self.w - 1
        } else {
            (self.cur[i - 1] + 1).min(self.w - 1)
        }
    }

    /// Smallest completion of positions `from..n`.
    fn fill(&mut self, from: usize) {
        for j in from..self.n {
            self.cur[j] = if j == 0 {
                0
            } else {
                self.cur[0].saturating_sub(self.n - j)
            };
        }
    }

    fn advance(&mut self) -> bool {
        for i in (0..self.n).rev() {
            if self.cur[i] < self.max_at(i) {
                self.cur[i] += 1;
                self.fill(i + 1);
                return true;
            }
        }
        false
    }
}

impl Iterator for CdpIter {
    type Item = AreaSequence;

    fn next(&mut self) -> Option<AreaSequence> {
        match self.state {
            IterState::Done => return None,
            IterState::Fresh => {
                self.fill(0);
                self.state = IterState::Running;
            }
            IterState::Running => {
                if !self.advance() {
                    self.state = IterState::Done;
                    return None;
                }
            }
        }
        debug_assert!(validate_area_sequence(&self.cur, self.w));
        Some(AreaSequence {
            values: self.cur.clone(),
            width: self.w,
        })
    }
}
