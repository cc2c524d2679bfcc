//! Exact integer-polynomial kernel: q-integers, Gaussian binomials,
//! cyclotomic polynomials and root-of-unity evaluation by reduction.
//!
//! Nothing here touches floating point. A value "at a primitive `m`-th root
//! of unity" is the remainder modulo the cyclotomic polynomial `Phi_m`; when
//! that remainder is a constant it is the common value at every primitive
//! `m`-th root.

mod cyclotomic;
mod poly;
mod qanalog;
mod unity;

pub use cyclotomic::cyclotomic;
pub use poly::IntPolynomial;
pub use qanalog::{
    q_binomial, q_binomial_by_division, q_factorial, q_int, q_lucas_eval, q_multinomial,
    q_multinomial_by_binomials,
};
pub use unity::{eval_at_unity, mod_cyclic, RootOfUnityIndex, UnityValue};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("division is not exact over the integers")]
    NotDivisible,
    #[error("modulus must be monic")]
    NotMonic,
    #[error("root-of-unity order must be at least 1")]
    ZeroOrder,
}
