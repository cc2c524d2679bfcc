use serde::Serialize;

use super::{GenError, Tally};
use crate::paths::maj;
use crate::qpoly::{q_binomial, IntPolynomial};

/// Endpoint `y = (east, north)` and diagonals `d_1, ..., d_l`, where `d`
/// names the diagonal `x - y = d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagonalSpec {
    pub target: (usize, usize),
    pub diagonals: Vec<i64>,
}

/// Which diagonal an alternating list starts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl DiagonalSpec {
    pub fn new(target: (usize, usize), diagonals: Vec<i64>) -> Self {
        Self { target, diagonals }
    }

    /// `<a, b>_len`: the list `(a, b, a, b, ...)` of length `len`.
    pub fn alternating_list(a: i64, b: i64, len: usize) -> Vec<i64> {
        (0..len).map(|i| if i % 2 == 0 { a } else { b }).collect()
    }

    /// The four alternating cases. A target lying on `d_l` counts as being on
    /// either side of it; with a single diagonal there is no final relation
    /// to constrain, so either side qualifies.
    pub fn is_alternating(&self) -> bool {
        let d = &self.diagonals;
        let l = d.len();
        if l == 0 {
            return true;
        }
        let pos = self.target.0 as i64 - self.target.1 as i64;
        let right = pos >= d[l - 1];
        let left = pos <= d[l - 1];
        // relation i holds between d_i and d_{i+1}; `up` means d_i < d_{i+1}
        let zigzag = |first_up: bool| {
            (0..l - 1).all(|i| {
                let up = (i % 2 == 0) == first_up;
                if up {
                    d[i] < d[i + 1]
                } else {
                    d[i] > d[i + 1]
                }
            })
        };
        let last_up = |first_up: bool| l.is_multiple_of(2) == first_up;
        let free = l == 1;
        let case1 = d[0] <= 0 && zigzag(true) && (free || !last_up(true)) && right;
        let case2 = d[0] <= 0 && zigzag(true) && (free || last_up(true)) && left;
        let case3 = d[0] >= 0 && zigzag(false) && (free || last_up(false)) && left;
        let case4 = d[0] >= 0 && zigzag(false) && (free || !last_up(false)) && right;
        case1 || case2 || case3 || case4
    }
}

const H_GUARD: usize = 14;

/// Σ q^maj over NE words `(0,0) -> target` that visit the diagonals in order.
///
/// Visits are matched greedily: at every point of the path, including the
/// start, the cursor advances past each consecutive diagonal through it.
pub fn h_bruteforce(spec: &DiagonalSpec) -> Result<IntPolynomial, GenError> {
    let (e, nn) = spec.target;
    if e > H_GUARD || nn > H_GUARD {
        return Err(GenError::Guard {
            what: format!("target {:?}", spec.target),
            limit: H_GUARD,
        });
    }
    let mut majs = Tally::default();
    let mut word = Vec::with_capacity(e + nn);
    walk(spec, 0, 0, 0, &mut word, &mut majs);
    Ok(majs.into_poly())
}

fn walk(
    spec: &DiagonalSpec,
    x: usize,
    y: usize,
    cursor: usize,
    word: &mut Vec<u8>,
    majs: &mut Tally,
) {
    let d = &spec.diagonals;
    let mut c = cursor;
    while c < d.len() && x as i64 - y as i64 == d[c] {
        c += 1;
    }
    if (x, y) == spec.target {
        if c == d.len() {
            majs.add(maj(word));
        }
        return;
    }
    if x < spec.target.0 {
        word.push(0);
        walk(spec, x + 1, y, c, word, majs);
        word.pop();
    }
    if y < spec.target.1 {
        word.push(1);
        walk(spec, x, y + 1, c, word, majs);
        word.pop();
    }
}

/// `[i+j-x choose j]_q - q^x [i+j-x choose j-x]_q`, the maj-count of NE paths
/// from `(x, 0)` to `(i, j)` that avoid the diagonal `x = y`.
///
/// The count needs the endpoint strictly right of the diagonal (`i > j`) or
/// `x = 0`; for `i = j` every path ends on the diagonal and the formula does
/// not vanish.
pub fn gen_q_ballot(x: usize, i: usize, j: usize) -> IntPolynomial {
    let (x, i, j) = (x as i64, i as i64, j as i64);
    &q_binomial(i + j - x, j) - &q_binomial(i + j - x, j - x).shift(x as usize)
}

/// `H((n, n-1); <γ, γ-δ>_l)` (right first) or `H((n, n-1); <γ-δ, γ>_l)`
/// (left first), for `δ > γ > 0`.
pub fn h_closed(
    n: usize,
    gamma: i64,
    delta: i64,
    ell: usize,
    side: Side,
) -> Result<IntPolynomial, GenError> {
    if !(delta > gamma && gamma > 0) {
        return Err(GenError::Precondition(format!(
            "need δ > γ > 0, got δ = {delta}, γ = {gamma}"
        )));
    }
    if n == 0 {
        return Err(GenError::Precondition("n must be positive".into()));
    }
    let row = 2 * n as i64 - 1;
    let base = n as i64 - 1;
    let (exponent, k) = match (side, ell % 2) {
        (Side::Right, 0) => {
            let l = (ell / 2) as i64;
            (l * l * delta + l * gamma, base - delta * l)
        }
        (Side::Right, _) => {
            let l = (ell / 2) as i64;
            (l * l * delta + l * gamma, base + gamma + delta * l)
        }
        (Side::Left, 0) => {
            let l = (ell / 2) as i64;
            (l * l * delta - l * gamma, base + delta * l)
        }
        (Side::Left, _) => {
            let l = (ell as i64 + 1) / 2;
            (l * l * delta - l * gamma, base + gamma - delta * l)
        }
    };
    Ok(q_binomial(row, k).shift(exponent as usize))
}

/// `L_j(n, w, l)` (left) or `R_j(n, w, l)` (right): paths from
/// `(w+1-j, 0)` to `(n+w+1-j, n-1)` touching the diagonals through `(0,0)`
/// and `(w+2, 0)` alternately `l` times.
///
/// After translating the start to the origin these are the configurations
/// `<j+1-δ, j+1>` and `<j+1, j+1-δ>` with `δ = w + 2`.
pub fn lr_count(
    n: usize,
    w: usize,
    ell: usize,
    j: usize,
    side: Side,
) -> Result<IntPolynomial, GenError> {
    if j < 1 || j > w {
        return Err(GenError::Precondition(format!(
            "need 1 <= j <= w, got j = {j}, w = {w}"
        )));
    }
    h_closed(n, j as i64 + 1, w as i64 + 2, ell, side)
}
