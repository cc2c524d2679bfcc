//! Cyclic sieving for lattice paths: exact q-polynomial arithmetic, path
//! enumeration, generating functions, cyclic actions and verification.
//!
//! Everything is exact. Values at roots of unity are remainders modulo
//! cyclotomic polynomials; averages are rationals.
//!
//! ```
//! use cyclic_sieve::csp::verify_cdp_csp;
//! use cyclic_sieve::genfunc::cdp_count;
//!
//! assert_eq!(cdp_count(3, 3), 18.into());
//! assert!(verify_cdp_csp(4, 3).unwrap().passed());
//! ```

pub mod actions;
pub mod arith;
pub mod csp;
pub mod genfunc;
pub mod paths;
pub mod qpoly;

pub use actions::{CyclicAction, Orbit, OrbitDecomposition};
pub use csp::{CspReport, HomomesyReport, LyndonParameters, Verdict};
pub use genfunc::DiagonalSpec;
pub use paths::{AreaSequence, DyckPath, LatticeWord, MobiusWord};
pub use qpoly::{IntPolynomial, RootOfUnityIndex, UnityValue};

/// Version string recorded in cached results.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
