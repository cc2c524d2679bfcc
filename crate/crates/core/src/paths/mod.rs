//! Circular Dyck paths, circular Möbius paths, diagonal-avoiding paths and
//! classical Dyck paths: validation, enumeration, bijections, statistics.
//!
//! Binary words are `Vec<u8>` over `{0, 1}`, written first letter first. A
//! `0` is an east step and a `1` a north step.

mod area;
mod avl;
mod dyck;
mod lattice;
mod mobius;
mod word;

pub use area::{enumerate_cdp, validate_area_sequence, valley_count, AreaSequence, CdpIter};
pub use avl::{balanced_words, binary_words, enumerate_avl, words_with_content};
pub use dyck::{
    dyck_pair, dyck_pair_inverse, dyck_tuple, dyck_tuple_inverse, enumerate_dyck, DyckPath,
};
pub use lattice::{area_to_path, path_to_area, LatticeWord};
pub use mobius::{enumerate_cmp, MobiusWord};
pub use word::{bits_to_string, complement, inv, maj, parse_bits, word_from_z, z_vector};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("invalid area sequence {values:?} for width {width}")]
    InvalidArea { values: Vec<usize>, width: usize },
    #[error("invalid lattice word: {0}")]
    InvalidWord(String),
    #[error("not a Dyck path: {0}")]
    NotDyck(String),
    #[error("peak inequality fails between tuple members {0} and {1}")]
    PeakInequality(usize, usize),
    #[error("height {height} is not a positive multiple of width {width}")]
    NotMultiple { height: usize, width: usize },
    #[error("not a Möbius word: {0}")]
    NotMobius(String),
}
