use num_bigint::BigInt;
use num_traits::Zero;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::{cyclotomic, IntPolynomial, PolyError};

/// Multiplicative order `m >= 1` of the root of unity a polynomial is
/// evaluated at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootOfUnityIndex(usize);

impl RootOfUnityIndex {
    pub fn new(m: usize) -> Result<Self, PolyError> {
        if m == 0 {
            Err(PolyError::ZeroOrder)
        } else {
            Ok(Self(m))
        }
    }

    /// Order of `omega_n^k`, namely `n / gcd(k, n)`.
    pub fn of_power(n: usize, k: usize) -> Result<Self, PolyError> {
        if n == 0 {
            return Err(PolyError::ZeroOrder);
        }
        Self::new(n / num_integer::gcd(n, k))
    }

    pub fn get(self) -> usize {
        self.0
    }
}

/// Result of evaluating an integer polynomial at a primitive root of unity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UnityValue {
    /// The remainder mod `Phi_m` is this constant.
    Integer(BigInt),
    /// The remainder mod `Phi_m` is not constant, so the value is not an
    /// integer at any primitive `m`-th root.
    NonConstant(IntPolynomial),
}

impl UnityValue {
    pub fn as_integer(&self) -> Option<&BigInt> {
        match self {
            UnityValue::Integer(v) => Some(v),
            UnityValue::NonConstant(_) => None,
        }
    }

    pub fn is_integer(&self) -> bool {
        matches!(self, UnityValue::Integer(_))
    }
}

impl std::fmt::Display for UnityValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            UnityValue::Integer(v) => write!(f, "{v}"),
            UnityValue::NonConstant(r) => write!(f, "non-constant({r})"),
        }
    }
}

impl Serialize for UnityValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            UnityValue::Integer(v) => serializer.serialize_str(&v.to_string()),
            UnityValue::NonConstant(r) => {
                let mut map = serializer.serialize_map(Some(1))?;
                map.serialize_entry("non_constant", r)?;
                map.end()
            }
        }
    }
}

/// Evaluates `f` at a primitive `m`-th root of unity by reduction modulo
/// `Phi_m`. For `m = 1` this is `f(1)`.
pub fn eval_at_unity(f: &IntPolynomial, m: RootOfUnityIndex) -> UnityValue {
    if m.get() == 1 {
        return UnityValue::Integer(f.eval_at_one());
    }
    let r = f
        .rem_monic(&cyclotomic(m.get()))
        .expect("cyclotomic polynomials are monic");
    match r.as_constant() {
        Some(c) => UnityValue::Integer(c),
        None => UnityValue::NonConstant(r),
    }
}

/// Coefficients of `f mod (q^n - 1)`: the coefficient of `q^i` is added to
/// slot `i mod n`.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn mod_cyclic(f: &IntPolynomial, n: usize) -> Vec<BigInt> {
    assert!(n > 0, "mod_cyclic needs n >= 1");
    let mut out = vec![BigInt::zero(); n];
    for (i, c) in f.coeffs().iter().enumerate() {
        out[i % n] += c;
    }
    out
}
