//! The lattices `Dis(n)` and `Dis_k(n)` of distinct-part partitions of `n`
//! under majorization.
//!
//! Elements are listed in canonical order (length ascending, then
//! lexicographically descending), covers are the transitive reduction, and
//! meet/join are found by explicit bound search with a uniqueness check: a
//! non-unique extremal bound would mean the order is not a lattice and is
//! surfaced as [`DisError::LatticeViolation`].

use thiserror::Error;

use crate::partition::{distinct_partitions, Partition};
use crate::poset::{LatticeError, Poset};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DisError {
    #[error("{0} is not an element of Dis({1})")]
    NotAnElement(String, u32),
    #[error("lattice violation in Dis({n}): {source}")]
    LatticeViolation {
        n: u32,
        #[source]
        source: LatticeError,
    },
}

/// `Dis(n)` or `Dis_k(n)` with its Hasse diagram.
#[derive(Debug, Clone)]
pub struct DisPoset {
    n: u32,
    /// `Some(k)` when restricted to partitions with exactly `k` parts.
    k: Option<usize>,
    poset: Poset<Partition>,
}

/// All of `Dis(n)`. `Dis(0)` is empty.
pub fn enumerate_dis(n: u32) -> DisPoset {
    let elements = distinct_partitions(n);
    let poset = Poset::build(elements, |a, b| b.majorizes(a));
    DisPoset { n, k: None, poset }
}

/// The sublattice `Dis_k(n)` of elements with exactly `k` parts.
pub fn enumerate_dis_k(n: u32, k: usize) -> DisPoset {
    let elements: Vec<Partition> = distinct_partitions(n)
        .into_iter()
        .filter(|p| p.len() == k)
        .collect();
    let poset = Poset::build(elements, |a, b| b.majorizes(a));
    DisPoset {
        n,
        k: Some(k),
        poset,
    }
}

impl DisPoset {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> Option<usize> {
        self.k
    }

    pub fn poset(&self) -> &Poset<Partition> {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn elements(&self) -> &[Partition] {
        self.poset.elements()
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        self.poset.covers()
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.poset.index_of(p)
    }

    fn require(&self, p: &Partition) -> Result<usize, DisError> {
        self.index_of(p)
            .ok_or_else(|| DisError::NotAnElement(p.to_string(), self.n))
    }

    /// Greatest lower bound under majorization.
    pub fn meet(&self, a: &Partition, b: &Partition) -> Result<Partition, DisError> {
        let (i, j) = (self.require(a)?, self.require(b)?);
        let m = self
            .poset
            .meet(i, j)
            .map_err(|source| DisError::LatticeViolation { n: self.n, source })?;
        Ok(self.poset.element(m).clone())
    }

    /// Least upper bound under majorization.
    pub fn join(&self, a: &Partition, b: &Partition) -> Result<Partition, DisError> {
        let (i, j) = (self.require(a)?, self.require(b)?);
        let m = self
            .poset
            .join(i, j)
            .map_err(|source| DisError::LatticeViolation { n: self.n, source })?;
        Ok(self.poset.element(m).clone())
    }

    /// True when `upper` covers `lower` (a Hasse edge).
    pub fn is_cover(&self, upper: &Partition, lower: &Partition) -> Result<bool, DisError> {
        let (u, l) = (self.require(upper)?, self.require(lower)?);
        Ok(self.poset.covers().contains(&(u, l)))
    }
}
