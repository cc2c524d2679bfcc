//! Cyclic group actions on finite carriers, orbit decomposition, fixed-point
//! counts and the orbit polynomial.

mod instances;
mod maps;

pub use instances::{
    avl_superset_action, bw_action, cdp_action, cmp_action, homomesy_alpha_action,
    homomesy_beta_action, word_rotation_action,
};
pub use maps::{alpha, beta, eta, eta_tilde, z_rotate};

use std::collections::BTreeMap;
use std::fmt::Debug;

use serde::Serialize;
use thiserror::Error;

use crate::qpoly::IntPolynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error("action order must be at least 1")]
    ZeroOrder,
    #[error("generator maps {witness} outside the carrier")]
    NotClosed { witness: String },
    #[error("generator is not injective: {witness} has two preimages")]
    NotBijective { witness: String },
    #[error("generator has a cycle of length {cycle} through {witness}, which does not divide the order {order}")]
    WrongOrder {
        witness: String,
        cycle: usize,
        order: usize,
    },
    #[error("orbit of size {size} does not divide the order {order}")]
    OrbitSize { size: usize, order: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

/// Carriers up to this size have the generator order checked on construction.
pub const ORDER_CHECK_LIMIT: usize = 1_000_000;

/// A cyclic group `C_n = <g>` acting on a finite set, stored as a
/// permutation of the sorted carrier.
#[derive(Debug, Clone)]
pub struct CyclicAction<T> {
    order: usize,
    carrier: Vec<T>,
    image: Vec<usize>,
}

impl<T: Ord + Clone + Debug> CyclicAction<T> {
    /// Tabulates `g` on the carrier and checks closure, bijectivity and (for
    /// carriers up to [`ORDER_CHECK_LIMIT`]) that `g^order` is the identity.
    pub fn new(
        mut carrier: Vec<T>,
        order: usize,
        g: impl Fn(&T) -> T,
    ) -> Result<Self, ActionError> {
        if order == 0 {
            return Err(ActionError::ZeroOrder);
        }
        carrier.sort();
        carrier.dedup();
        let mut image = Vec::with_capacity(carrier.len());
        for x in &carrier {
            let y = g(x);
            let j = carrier
                .binary_search(&y)
                .map_err(|_| ActionError::NotClosed {
                    witness: format!("{x:?}"),
                })?;
            image.push(j);
        }
        let mut hit = vec![false; carrier.len()];
        for &j in &image {
            if std::mem::replace(&mut hit[j], true) {
                return Err(ActionError::NotBijective {
                    witness: format!("{:?}", carrier[j]),
                });
            }
        }
        let action = Self {
            order,
            carrier,
            image,
        };
        if action.carrier.len() <= ORDER_CHECK_LIMIT {
            for orbit in action.orbit_indices() {
                if !order.is_multiple_of(orbit.len()) {
                    return Err(ActionError::WrongOrder {
                        witness: format!("{:?}", action.carrier[orbit[0]]),
                        cycle: orbit.len(),
                        order,
                    });
                }
            }
        }
        Ok(action)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The carrier in sorted order.
    pub fn carrier(&self) -> &[T] {
        &self.carrier
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn index_of(&self, x: &T) -> Option<usize> {
        self.carrier.binary_search(x).ok()
    }

    pub fn apply(&self, x: &T) -> Option<&T> {
        self.index_of(x).map(|i| &self.carrier[self.image[i]])
    }

    /// `g^k` as an index permutation, composed step by step.
    pub fn power(&self, k: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..self.carrier.len()).collect();
        for _ in 0..k {
            for v in p.iter_mut() {
                *v = self.image[*v];
            }
        }
        p
    }

    /// Indices of the elements fixed by `g^k`.
    pub fn fixed_indices(&self, k: usize) -> Vec<usize> {
        self.power(k)
            .into_iter()
            .enumerate()
            .filter(|&(i, j)| i == j)
            .map(|(i, _)| i)
            .collect()
    }

    /// `|{x : g^k x = x}|`.
    pub fn fixed_count(&self, k: usize) -> usize {
        self.fixed_indices(k).len()
    }

    fn orbit_indices(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.carrier.len()];
        let mut out = Vec::new();
        // the carrier is sorted, so each orbit is found from its minimal element
        for start in 0..self.carrier.len() {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start] = true;
            let mut i = self.image[start];
            while i != start {
                seen[i] = true;
                orbit.push(i);
                i = self.image[i];
            }
            out.push(orbit);
        }
        out
    }

    /// Orbits ordered by minimal element, each listed from its minimal
    /// element along the generator.
    pub fn orbits(&self) -> OrbitDecomposition<T> {
        let orbits = self
            .orbit_indices()
            .into_iter()
            .map(|idx| Orbit {
                size: idx.len(),
                stabilizer_order: self.order / idx.len(),
                elements: idx.into_iter().map(|i| self.carrier[i].clone()).collect(),
            })
            .collect();
        OrbitDecomposition {
            order: self.order,
            orbits,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Orbit<T> {
    pub elements: Vec<T>,
    pub size: usize,
    pub stabilizer_order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitDecomposition<T> {
    pub order: usize,
    pub orbits: Vec<Orbit<T>>,
}

impl<T> OrbitDecomposition<T> {
    pub fn total(&self) -> usize {
        self.orbits.iter().map(|o| o.size).sum()
    }

    /// Number of orbits of each size.
    pub fn census(&self) -> BTreeMap<usize, usize> {
        let mut c = BTreeMap::new();
        for o in &self.orbits {
            *c.entry(o.size).or_insert(0) += 1;
        }
        c
    }
}

/// Degree `< n` polynomial whose coefficient `a_l` counts the orbits whose
/// stabilizer order divides `l`.
pub fn orbit_poly<T>(dec: &OrbitDecomposition<T>, n: usize) -> Result<IntPolynomial, ActionError> {
    census_poly(&dec.census(), n)
}

/// [`orbit_poly`] from a census `size -> number of orbits`.
pub fn census_poly(
    census: &BTreeMap<usize, usize>,
    n: usize,
) -> Result<IntPolynomial, ActionError> {
    if n == 0 {
        return Err(ActionError::ZeroOrder);
    }
    let mut coeffs = vec![0i64; n];
    for (&size, &count) in census {
        if size == 0 || !n.is_multiple_of(size) {
            return Err(ActionError::OrbitSize { size, order: n });
        }
        let stab = n / size;
        for (l, c) in coeffs.iter_mut().enumerate() {
            if l % stab == 0 {
                *c += count as i64;
            }
        }
    }
    Ok(IntPolynomial::from_i64(&coeffs))
}
