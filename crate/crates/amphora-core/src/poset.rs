//! Finite poset plumbing shared by every enumerated order in the crate.
//!
//! A [`Poset`] stores its elements in a fixed canonical order together with
//! the full order relation as bitset rows, the Hasse covers (transitive
//! reduction), and meet/join by exhaustive bound search. Meets and joins
//! insist on a *unique* extremal bound; a violation would falsify a lattice
//! claim and is reported as [`LatticeError::NotALattice`].

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    /// The two elements have no common bound of the requested kind.
    #[error("no common {0} bound")]
    NoBound(&'static str),
    /// The extremal common bounds are not unique: the order is not a lattice.
    #[error("not a lattice: {count} incomparable extremal {kind} bounds")]
    NotALattice { kind: &'static str, count: usize },
    /// An argument index is out of range.
    #[error("element index {0} out of range")]
    OutOfRange(usize),
}

/// Outcome of [`Poset::verify_amphora`]: the unique bottom and the antichain
/// of tops of an order-convex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmphoraShape {
    pub bottom: usize,
    pub tops: Vec<usize>,
}

/// Row-major bitset matrix.
#[derive(Debug, Clone)]
struct BitMatrix {
    words_per_row: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn new(rows: usize, cols: usize) -> Self {
        let words_per_row = cols.div_ceil(64);
        BitMatrix {
            words_per_row,
            bits: vec![0; rows * words_per_row],
        }
    }

    fn set(&mut self, r: usize, c: usize) {
        self.bits[r * self.words_per_row + c / 64] |= 1u64 << (c % 64);
    }

    fn get(&self, r: usize, c: usize) -> bool {
        self.bits[r * self.words_per_row + c / 64] >> (c % 64) & 1 == 1
    }

    fn row(&self, r: usize) -> &[u64] {
        &self.bits[r * self.words_per_row..(r + 1) * self.words_per_row]
    }
}

/// A finite poset over `T` with precomputed order and covers.
#[derive(Debug, Clone)]
pub struct Poset<T> {
    elements: Vec<T>,
    /// above.get(i, j) = elements[i] <= elements[j] (up-set rows, reflexive)
    above: BitMatrix,
    /// (upper, lower) pairs of the transitive reduction, lexicographic order.
    covers: Vec<(usize, usize)>,
}

impl<T> Poset<T> {
    /// Builds the order matrix from `le` and derives the Hasse covers.
    /// `le` must be a partial order on distinct `elements`.
    pub fn build(elements: Vec<T>, le: impl Fn(&T, &T) -> bool) -> Self {
        let n = elements.len();
        let mut below = BitMatrix::new(n, n);
        let mut above = BitMatrix::new(n, n);
        for i in 0..n {
            for j in 0..n {
                if le(&elements[j], &elements[i]) {
                    below.set(i, j);
                    above.set(j, i);
                }
            }
        }
        // (i, j) is a cover (i above j) exactly when the interval
        // [j, i] = down(i) intersect up(j) contains only its endpoints.
        let mut covers = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j && below.get(i, j) {
                    let interval: usize = below
                        .row(i)
                        .iter()
                        .zip(above.row(j))
                        .map(|(a, b)| (a & b).count_ones() as usize)
                        .sum();
                    if interval == 2 {
                        covers.push((i, j));
                    }
                }
            }
        }
        covers.sort_unstable();
        Poset {
            elements,
            above,
            covers,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &T {
        &self.elements[i]
    }

    /// `elements[i] <= elements[j]`.
    pub fn le(&self, i: usize, j: usize) -> bool {
        self.above.get(i, j)
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.le(i, j)
    }

    /// `(upper, lower)` pairs of the transitive reduction.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn index_of(&self, x: &T) -> Option<usize>
    where
        T: PartialEq,
    {
        self.elements.iter().position(|e| e == x)
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| (0..self.len()).all(|j| j == i || !self.le(j, i)))
            .collect()
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| (0..self.len()).all(|j| j == i || !self.le(i, j)))
            .collect()
    }

    /// Indices `j` with `elements[j] <= elements[i]`.
    pub fn down_set(&self, i: usize) -> Vec<usize> {
        (0..self.len()).filter(|&j| self.le(j, i)).collect()
    }

    /// Indices `j` with `elements[i] <= elements[j]`.
    pub fn up_set(&self, i: usize) -> Vec<usize> {
        (0..self.len()).filter(|&j| self.le(i, j)).collect()
    }

    pub fn is_antichain(&self, set: &[usize]) -> bool {
        set.iter()
            .all(|&i| set.iter().all(|&j| i == j || !self.le(i, j)))
    }

    /// Greatest lower bound by down-set intersection; the maximal common
    /// lower bound must be unique.
    pub fn meet(&self, i: usize, j: usize) -> Result<usize, LatticeError> {
        self.extremal_bound(i, j, true)
    }

    /// Least upper bound by up-set intersection; the minimal common upper
    /// bound must be unique.
    pub fn join(&self, i: usize, j: usize) -> Result<usize, LatticeError> {
        self.extremal_bound(i, j, false)
    }

    fn extremal_bound(&self, i: usize, j: usize, lower: bool) -> Result<usize, LatticeError> {
        let n = self.len();
        if i >= n {
            return Err(LatticeError::OutOfRange(i));
        }
        if j >= n {
            return Err(LatticeError::OutOfRange(j));
        }
        let kind = if lower { "lower" } else { "upper" };
        let common: Vec<usize> = (0..n)
            .filter(|&z| {
                if lower {
                    self.le(z, i) && self.le(z, j)
                } else {
                    self.le(i, z) && self.le(j, z)
                }
            })
            .collect();
        let extremal: Vec<usize> = common
            .iter()
            .copied()
            .filter(|&z| {
                common.iter().all(|&w| {
                    w == z
                        || if lower {
                            !self.le(z, w)
                        } else {
                            !self.le(w, z)
                        }
                })
            })
            .collect();
        match extremal.len() {
            0 => Err(LatticeError::NoBound(kind)),
            1 => Ok(extremal[0]),
            count => Err(LatticeError::NotALattice { kind, count }),
        }
    }

    /// Checks that `set` is an amphora inside this poset: a unique bottom
    /// `x`, the maximal elements `A` of the set as its antichain of tops, and
    /// the set equal to `{y : x <= y <= a for some a in A}` computed against
    /// the *ambient* poset. Returns the shape or a description of the
    /// violation.
    pub fn verify_amphora(&self, set: &[usize]) -> Result<AmphoraShape, String> {
        if set.is_empty() {
            return Err("empty set".into());
        }
        let inside = |i: usize| set.contains(&i);
        let bottoms: Vec<usize> = set
            .iter()
            .copied()
            .filter(|&i| set.iter().all(|&j| j == i || !self.le(j, i)))
            .collect();
        if bottoms.len() != 1 {
            return Err(format!(
                "{} minimal elements, expected exactly 1",
                bottoms.len()
            ));
        }
        let bottom = bottoms[0];
        let tops: Vec<usize> = set
            .iter()
            .copied()
            .filter(|&i| set.iter().all(|&j| j == i || !self.le(i, j)))
            .collect();
        if !self.is_antichain(&tops) {
            return Err("tops are not an antichain".into());
        }
        for y in 0..self.len() {
            let in_interval = self.le(bottom, y) && tops.iter().any(|&a| self.le(y, a));
            if in_interval != inside(y) {
                return Err(format!(
                    "element {y} is {} the interval but {} the set",
                    if in_interval { "inside" } else { "outside" },
                    if inside(y) { "inside" } else { "outside" },
                ));
            }
        }
        let mut tops = tops;
        tops.sort_unstable();
        Ok(AmphoraShape { bottom, tops })
    }
}
