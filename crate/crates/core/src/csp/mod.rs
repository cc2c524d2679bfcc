//! Verification engines: cyclic sieving (full and subset), Theorem AA
//! feasibility, Lyndon-like families and parameters, homomesy.

mod aa;
mod families;
mod homomesy;
mod instances;
mod lyndon;
mod report;
pub mod ser;

pub use aa::{theorem_aa, AaReport};
pub use families::{family_member, Family};
pub use homomesy::{
    beta_witness_search, homomesy_check, inv_homomesy, HomomesyAction, HomomesyReport,
    OrbitAverage, WitnessSearch,
};
pub use instances::{
    verify_avl_csp, verify_bw_csp, verify_cdp_csp, verify_cdp_fixed_lemma, verify_cmp_csp,
    verify_word_csp, CmpPolynomial, FixedLemmaCheck,
};
pub use lyndon::{
    lyndon_check, lyndon_construct, lyndon_params, FamilyMember, LyndonFailure, LyndonInstance,
    LyndonParameters, LyndonReport,
};
pub use report::{verify_csp, verify_subset_csp, CspReport, CspRow, Verdict};

use thiserror::Error;

use crate::actions::ActionError;
use crate::genfunc::GenError;
use crate::paths::PathError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CspError {
    #[error("internal: root-of-unity route and coefficient route disagree at order {order}")]
    RouteDisagreement { order: usize },
    #[error("subset element {witness} is not in the superset")]
    NotSubset { witness: String },
    #[error("invalid Lyndon parameters: {0}")]
    InvalidParameters(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error(transparent)]
    Path(#[from] PathError),
}
