//! q-enumerations by closed formula, each paired with a brute-force
//! maj-generating oracle.

mod cdp;
mod diagonal;
mod words;

pub use cdp::{cdp_count, cdp_q_bruteforce, cdp_q_closed, cdp_q_closed_restated, cdp_q_three_term};
pub use diagonal::{gen_q_ballot, h_bruteforce, h_closed, lr_count, DiagonalSpec, Side};
pub use words::{
    avl_q_bruteforce, avl_q_closed, bw_q, carlitz_q_catalan, cmp_q, dp_q_bruteforce, BwForm,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("{what} exceeds the brute-force guard {limit}")]
    Guard { what: String, limit: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// Largest `|s|` that can contribute to a sum over `s` whose binomial
/// indices move in steps of `step` inside a row of length `row`.
pub(crate) fn shift_bound(row: usize, step: usize) -> i64 {
    (row.div_ceil(step) + 1) as i64
}

/// Histogram of exponents, read off as `Σ count_e q^e`.
#[derive(Default)]
pub(crate) struct Tally(Vec<u64>);

impl Tally {
    pub(crate) fn add(&mut self, e: usize) {
        if self.0.len() <= e {
            self.0.resize(e + 1, 0);
        }
        self.0[e] += 1;
    }

    pub(crate) fn into_poly(self) -> crate::qpoly::IntPolynomial {
        crate::qpoly::IntPolynomial::from_exponent_counts(
            self.0.into_iter().enumerate().map(|(e, c)| (e, c.into())),
        )
    }
}

/// `Σ q^e` over a stream of exponents.
pub(crate) fn tally(exponents: impl IntoIterator<Item = usize>) -> crate::qpoly::IntPolynomial {
    let mut t = Tally::default();
    exponents.into_iter().for_each(|e| t.add(e));
    t.into_poly()
}
