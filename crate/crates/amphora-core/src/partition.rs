//! Integer partitions, majorization, and the diagonal decomposition.
//!
//! A [`Partition`] is a non-increasing sequence of positive integers. The
//! Ferrers diagram of a partition `pi` splits along its main diagonal into
//!
//! * `alpha(pi)` - row `i` contributes `d_i - (i-1)` cells when `d_i >= i`
//!   (the diagonal cell and everything to its right), and
//! * `beta(pi)` - column `j` contributes one cell for every row `i > j` with
//!   `d_i >= j` (everything strictly below the diagonal).
//!
//! Both halves are strictly decreasing. With `m` the largest index such that
//! `d_m >= m - 1` (the modified Durfee count, here [`mark`]), `beta` always
//! has `m - 1` parts and `alpha` has `m - 1` or `m` parts. [`decompose`]
//! computes the pair by column counting; the cell-by-cell painting of the
//! diagram is kept as an independent oracle in the tests.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

/// Violations of the partition text format or of value preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    /// Part at `index` (0-based) is not a positive integer.
    #[error("part {index} is not a positive integer")]
    InvalidPart { index: usize },
    /// Part at `index` is zero or negative; parts must be positive.
    #[error("part {index} must be positive")]
    NonPositive { index: usize },
    /// Part at `index` exceeds its predecessor; parts must be non-increasing.
    #[error("parts must be non-increasing: part {index} exceeds part {}", index - 1)]
    NotNonIncreasing { index: usize },
    /// The empty string is not a partition literal.
    #[error("empty partition literal")]
    EmptyLiteral,
    /// `Dis_k(n)` is empty: its staircase minimum needs `n >= k(k+1)/2`.
    #[error("Dis_{k}({n}) is empty: need n >= k(k+1)/2 and k >= 1")]
    DisKEmpty { n: u32, k: usize },
}

/// A non-increasing sequence of positive integers. The empty partition is a
/// valid value (it appears as the `beta` of a one-row diagram).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Validates that `parts` is non-increasing and positive.
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        for (index, &p) in parts.iter().enumerate() {
            if p == 0 {
                return Err(PartitionError::NonPositive { index });
            }
            if index > 0 && p > parts[index - 1] {
                return Err(PartitionError::NotNonIncreasing { index });
            }
        }
        Ok(Partition { parts })
    }

    /// The partition with no parts.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of all parts; 0 for the empty partition.
    pub fn sum(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Smallest (last) part, if any.
    pub fn last(&self) -> Option<u32> {
        self.parts.last().copied()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.parts[i]
    }

    /// True when the parts are strictly decreasing.
    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Majorization: equal sums and every shared prefix of `self` dominates.
    /// With equal sums, dominance over the shorter length already forces the
    /// dominating partition to be the shorter one, so no zero padding is
    /// needed.
    pub fn majorizes(&self, other: &Partition) -> bool {
        if self.sum() != other.sum() {
            return false;
        }
        self.dominates_prefixes(other)
    }

    /// Weak majorization: `self` may partition a larger total, and every
    /// prefix up to the shorter length dominates.
    pub fn weakly_majorizes(&self, other: &Partition) -> bool {
        if self.sum() < other.sum() {
            return false;
        }
        self.dominates_prefixes(other)
    }

    fn dominates_prefixes(&self, other: &Partition) -> bool {
        let k = self.len().min(other.len());
        let (mut a, mut b) = (0u32, 0u32);
        for i in 0..k {
            a += self.parts[i];
            b += other.parts[i];
            if a < b {
                return false;
            }
        }
        true
    }
}

/// Canonical order: length ascending, then parts lexicographically
/// descending. This is the element order used by every enumerated poset.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Text format: comma-separated parts, e.g. `6,5,2,2,2,1,1,1`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(PartitionError::EmptyLiteral);
        }
        let mut parts = Vec::new();
        for (index, tok) in s.split(',').enumerate() {
            let p: u32 = tok
                .trim()
                .parse()
                .map_err(|_| PartitionError::InvalidPart { index })?;
            if p == 0 {
                return Err(PartitionError::NonPositive { index });
            }
            if let Some(&prev) = parts.last() {
                if p > prev {
                    return Err(PartitionError::NotNonIncreasing { index });
                }
            }
            parts.push(p);
        }
        Ok(Partition { parts })
    }
}

/// The diagonal decomposition of a partition: diagonal rows `alpha`,
/// sub-diagonal columns `beta`, and the mark `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaBeta {
    pub alpha: Partition,
    pub beta: Partition,
    pub mark: usize,
}

/// Largest `i` (1-based) with `d_i >= i - 1`. The predicate holds on a
/// prefix, so a linear scan suffices.
///
/// Panics if `pi` is empty.
pub fn mark(pi: &Partition) -> usize {
    assert!(!pi.is_empty(), "mark is undefined for the empty partition");
    let d = pi.parts();
    let mut m = 1;
    while m < d.len() && d[m] as usize >= m {
        m += 1;
    }
    m
}

/// Splits `pi` along the main diagonal of its Ferrers diagram.
///
/// `alpha_i = d_i - (i-1)` for rows with `d_i >= i`; `beta_j` counts the rows
/// `i > j` with `d_i >= j`, for `j = 1..mark-1`. Both are strictly
/// decreasing and `sum(alpha) + sum(beta) = sum(pi)`.
///
/// Panics if `pi` is empty.
pub fn decompose(pi: &Partition) -> AlphaBeta {
    assert!(
        !pi.is_empty(),
        "decompose is undefined for the empty partition"
    );
    let d = pi.parts();
    let m = mark(pi);

    let mut alpha = Vec::new();
    for (i, &di) in d.iter().enumerate() {
        if di as usize > i {
            alpha.push(di - i as u32);
        } else {
            break;
        }
    }

    let mut beta = Vec::new();
    for j in 1..m {
        let count = d.iter().skip(j).filter(|&&di| di as usize >= j).count();
        beta.push(count as u32);
    }

    let alpha = Partition::new(alpha).expect("alpha rows are strictly decreasing");
    let beta = Partition::new(beta).expect("beta columns are strictly decreasing");
    debug_assert!(alpha.has_distinct_parts() && beta.has_distinct_parts());
    debug_assert_eq!(beta.len(), m - 1);
    debug_assert!(alpha.len() == m - 1 || alpha.len() == m);
    debug_assert_eq!(alpha.sum() + beta.sum(), pi.sum());
    AlphaBeta {
        alpha,
        beta,
        mark: m,
    }
}

fn staircase_weight(k: usize) -> u32 {
    (k as u32 * (k as u32 + 1)) / 2
}

/// Maximum of `Dis_k(n)`: `(n - k(k-1)/2, k-1, k-2, ..., 1)`.
///
/// Needs `k >= 1` and `n >= k(k+1)/2` (otherwise `Dis_k(n)` is empty).
pub fn tau_prime(n: u32, k: usize) -> Result<Partition, PartitionError> {
    if k == 0 || n < staircase_weight(k) {
        return Err(PartitionError::DisKEmpty { n, k });
    }
    let mut parts = Vec::with_capacity(k);
    parts.push(n - staircase_weight(k - 1));
    for i in (1..k).rev() {
        parts.push(i as u32);
    }
    Partition::new(parts)
}

/// Minimum of `Dis_k(n)`: the flattest spread `n - k(k+1)/2 = qk + r` over a
/// staircase, `(q+1)` added to the top `r` steps and `q` to the rest.
///
/// Needs `k >= 1` and `n >= k(k+1)/2`.
pub fn tau(n: u32, k: usize) -> Result<Partition, PartitionError> {
    if k == 0 || n < staircase_weight(k) {
        return Err(PartitionError::DisKEmpty { n, k });
    }
    let nk = n - staircase_weight(k);
    let q = nk / k as u32;
    let r = (nk % k as u32) as usize;
    let mut parts = Vec::with_capacity(k);
    for i in 0..k {
        let hat = if i < r { q + 1 } else { q };
        parts.push(hat + (k - i) as u32);
    }
    Partition::new(parts)
}

/// All partitions of `n` (any multiplicities), in no particular order.
/// Support for exhaustive suites; `n = 0` yields only the empty partition.
pub fn all_partitions(n: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max_part: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: stack.clone(),
            });
            return;
        }
        let top = remaining.min(max_part);
        for first in (1..=top).rev() {
            stack.push(first);
            rec(remaining - first, first, stack, out);
            stack.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of `n` with at most `k` parts (any multiplicities).
pub fn partitions_at_most_parts(n: u32, k: usize) -> Vec<Partition> {
    fn rec(
        remaining: u32,
        max_part: u32,
        slots: usize,
        stack: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition {
                parts: stack.clone(),
            });
            return;
        }
        if slots == 0 {
            return;
        }
        let top = remaining.min(max_part);
        for first in (1..=top).rev() {
            stack.push(first);
            rec(remaining - first, first, slots - 1, stack, out);
            stack.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, k, &mut Vec::new(), &mut out);
    out
}

/// All partitions of `n` into distinct parts, in canonical order
/// (length ascending, then lexicographically descending).
pub fn distinct_partitions(n: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max_part: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: stack.clone(),
            });
            return;
        }
        let top = remaining.min(max_part);
        for first in (1..=top).rev() {
            stack.push(first);
            rec(remaining - first, first.saturating_sub(1), stack, out);
            stack.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out.sort();
    out
}
