//! Validated blocks `[alpha|beta]`, block majorization, the round-trip to
//! degree sequences, and degree-sequence classification.
//!
//! A block pairs `alpha` in `Dis(n1)` with `beta` in `Dis(n2)` such that
//! `n1` and `n2` share parity, `n2 >= n1`, `beta` weakly majorizes `alpha`,
//! and `len(alpha)` is `len(beta)` or `len(beta) + 1`. An S-block is a block
//! with `n1 = n2`; a degree sequence is split exactly when its diagonal
//! decomposition is an S-block. Block majorization reverses on the second
//! component: `[a1|b1] >= [a2|b2]` iff `a1` majorizes `a2` and `b2`
//! majorizes `b1`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::dis::{enumerate_dis, DisPoset};
use crate::partition::{decompose, Partition, PartitionError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Alpha,
    Beta,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Alpha => write!(f, "alpha"),
            Side::Beta => write!(f, "beta"),
        }
    }
}

/// Violations of the block clauses, each naming the clause it breaks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlockError {
    #[error("{side} must be a nonempty partition")]
    Empty { side: Side },
    #[error("{side} must have distinct parts: part {index} repeats its predecessor")]
    RepeatedParts { side: Side, index: usize },
    #[error("parity clause: alpha partitions {n1} but beta partitions {n2}")]
    ParityMismatch { n1: u32, n2: u32 },
    #[error("weight clause: beta must partition at least as much as alpha ({n2} < {n1})")]
    BetaTooSmall { n1: u32, n2: u32 },
    #[error("weak-majorization clause: beta prefix {prefix} falls below alpha")]
    NotWeaklyMajorized { prefix: usize },
    #[error(
        "length clause: len(alpha) = {len_alpha} must be len(beta) = {len_beta} or len(beta) + 1"
    )]
    LengthClause { len_alpha: usize, len_beta: usize },
    #[error("blocks of shape [{a1}|{b1}] and [{a2}|{b2}] are not comparable domains")]
    ShapeMismatch { a1: u32, b1: u32, a2: u32, b2: u32 },
    #[error("reconstructed sequence is not non-increasing at index {index}")]
    NotMonotone { index: usize },
    #[error("reconstructed sequence does not decompose back to the block")]
    RoundTripFailed,
    #[error("block literal must be `alpha|beta`")]
    BadLiteral,
    #[error("{side}: {source}")]
    BadPartition {
        side: Side,
        #[source]
        source: PartitionError,
    },
    #[error("operation needs an S-block (n1 = n2), got n1 = {n1}, n2 = {n2}")]
    NotSBlock { n1: u32, n2: u32 },
    #[error("operation needs the full lattice of partitions of {expected}, got {got}")]
    WrongLattice { expected: u32, got: String },
}

/// A validated block `[alpha|beta]`.
///
/// `Ord` is the canonical listing order (alpha first, then beta), not block
/// majorization, which is partial and lives in [`block_majorizes`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Block {
    alpha: Partition,
    beta: Partition,
}

/// Checks every block clause; the error names the first violated one.
pub fn make_block(alpha: Partition, beta: Partition) -> Result<Block, BlockError> {
    for (side, part) in [(Side::Alpha, &alpha), (Side::Beta, &beta)] {
        if part.is_empty() {
            return Err(BlockError::Empty { side });
        }
        if let Some(w) = part.parts().windows(2).position(|w| w[0] == w[1]) {
            return Err(BlockError::RepeatedParts { side, index: w + 1 });
        }
    }
    let (n1, n2) = (alpha.sum(), beta.sum());
    if n1 % 2 != n2 % 2 {
        return Err(BlockError::ParityMismatch { n1, n2 });
    }
    if n2 < n1 {
        return Err(BlockError::BetaTooSmall { n1, n2 });
    }
    if !beta.weakly_majorizes(&alpha) {
        let k = alpha.len().min(beta.len());
        let mut prefix = k;
        let (mut a, mut b) = (0u32, 0u32);
        for i in 0..k {
            a += alpha.part(i);
            b += beta.part(i);
            if b < a {
                prefix = i + 1;
                break;
            }
        }
        return Err(BlockError::NotWeaklyMajorized { prefix });
    }
    if alpha.len() != beta.len() && alpha.len() != beta.len() + 1 {
        return Err(BlockError::LengthClause {
            len_alpha: alpha.len(),
            len_beta: beta.len(),
        });
    }
    Ok(Block { alpha, beta })
}

impl Block {
    pub fn alpha(&self) -> &Partition {
        &self.alpha
    }

    pub fn beta(&self) -> &Partition {
        &self.beta
    }

    pub fn n1(&self) -> u32 {
        self.alpha.sum()
    }

    pub fn n2(&self) -> u32 {
        self.beta.sum()
    }

    pub fn len_alpha(&self) -> usize {
        self.alpha.len()
    }

    pub fn len_beta(&self) -> usize {
        self.beta.len()
    }

    /// Both halves partition the same weight.
    pub fn is_sblock(&self) -> bool {
        self.n1() == self.n2()
    }
}

/// Text format: `alpha|beta` with comma-separated parts, e.g. `5,3,2|7,2,1`.
impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.alpha, self.beta)
    }
}

/// Serializes as the `alpha|beta` literal.
impl Serialize for Block {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for Block {
    type Err = BlockError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, b) = s.split_once('|').ok_or(BlockError::BadLiteral)?;
        if b.contains('|') {
            return Err(BlockError::BadLiteral);
        }
        let alpha: Partition = a.parse().map_err(|source| BlockError::BadPartition {
            side: Side::Alpha,
            source,
        })?;
        let beta: Partition = b.parse().map_err(|source| BlockError::BadPartition {
            side: Side::Beta,
            source,
        })?;
        make_block(alpha, beta)
    }
}

/// Block majorization: `b1 >= b2` iff `alpha1` majorizes `alpha2` and
/// `beta2` majorizes `beta1` (the second component reverses). Only blocks
/// over the same pair `(n1, n2)` are comparable.
pub fn block_majorizes(b1: &Block, b2: &Block) -> Result<bool, BlockError> {
    if b1.n1() != b2.n1() || b1.n2() != b2.n2() {
        return Err(BlockError::ShapeMismatch {
            a1: b1.n1(),
            b1: b1.n2(),
            a2: b2.n1(),
            b2: b2.n2(),
        });
    }
    Ok(b1.alpha.majorizes(&b2.alpha) && b2.beta.majorizes(&b1.beta))
}

/// How a decomposed degree sequence relates to the block clauses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// A valid S-block: the sequence is a split degree sequence.
    SBlock,
    /// A valid block with `n2 > n1`: graphic, but not split.
    BlockOnly,
    /// Not a block; the clause that fails. Not a graphic sequence when the
    /// parity or weight clause fails.
    Invalid(BlockError),
}

/// The diagonal decomposition of a sequence together with its verdict.
/// Invalidity is data, not an error: the raw pair is always returned.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequencePair {
    pub alpha: Partition,
    pub beta: Partition,
    pub mark: usize,
    pub verdict: Verdict,
}

/// Decomposes `pi` and reports whether the pair forms an (S-)block.
///
/// Panics if `pi` is empty.
pub fn sequence_to_block(pi: &Partition) -> SequencePair {
    let ab = decompose(pi);
    let verdict = match make_block(ab.alpha.clone(), ab.beta.clone()) {
        Ok(b) if b.is_sblock() => Verdict::SBlock,
        Ok(_) => Verdict::BlockOnly,
        Err(e) => Verdict::Invalid(e),
    };
    SequencePair {
        alpha: ab.alpha,
        beta: ab.beta,
        mark: ab.mark,
        verdict,
    }
}

/// Rebuilds the degree sequence whose diagonal decomposition is `b`.
///
/// Row `i <= len(alpha)` has `alpha_i + (i-1)` cells; below that, row `i`
/// has one cell for every beta column `j` reaching it (`beta_j >= i - j`),
/// stopping at the last row any column reaches. The result is checked to be
/// non-increasing and to decompose back to `b`; a failure on either count is
/// a genuine finding and is surfaced as an error.
pub fn block_to_sequence(b: &Block) -> Result<Partition, BlockError> {
    let alpha = b.alpha.parts();
    let beta = b.beta.parts();
    let mut d: Vec<u32> = alpha
        .iter()
        .enumerate()
        .map(|(i, &a)| a + i as u32)
        .collect();
    let mut i = alpha.len() + 1;
    loop {
        let reach = (0..beta.len())
            .filter(|&j| beta[j] as usize >= i - (j + 1))
            .count() as u32;
        if reach == 0 {
            break;
        }
        d.push(reach);
        i += 1;
    }
    if let Some(w) = d.windows(2).position(|w| w[1] > w[0]) {
        return Err(BlockError::NotMonotone { index: w + 1 });
    }
    let pi = Partition::new(d).expect("checked non-increasing and positive");
    let back = sequence_to_block(&pi);
    if back.alpha != b.alpha || back.beta != b.beta {
        return Err(BlockError::RoundTripFailed);
    }
    Ok(pi)
}

/// Every degree-sequence-readable property of a block, as one record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub n1: u32,
    pub n2: u32,
    pub len_alpha: usize,
    pub len_beta: usize,
    /// `n1 = n2`: the sequence is split.
    pub is_sblock: bool,
    /// S-block with `alpha = beta`: the sequence is threshold.
    pub is_threshold: bool,
    /// S-block with `len(alpha) = len(beta) + 1`.
    pub is_balanced: bool,
    /// S-block with `len(alpha) = len(beta)`.
    pub is_unbalanced: bool,
    /// Unbalanced S-block whose beta ends in 1 (clique-style core).
    pub is_ng1: bool,
    /// Unbalanced S-block whose alpha ends in at least 2 (stable-style core).
    pub is_ng2: bool,
    /// The five-cycle-core family: alpha ends `2,1`, beta ends `4,3`, equal
    /// lengths, trimmed beta majorizes trimmed alpha (forces `n2 = n1 + 4`,
    /// which is re-checked anyway).
    pub is_ng3: bool,
    /// Split or NG-3.
    pub is_pseudo_split: bool,
    /// S-block whose beta covers alpha in `Dis(n)`.
    pub is_threshold_covered: bool,
}

fn ng3_conditions(b: &Block) -> bool {
    let (alpha, beta) = (b.alpha.parts(), b.beta.parts());
    let k = alpha.len();
    if k < 2 || beta.len() != k {
        return false;
    }
    if alpha[k - 2..] != [2, 1] || beta[k - 2..] != [4, 3] {
        return false;
    }
    if b.n2() != b.n1() + 4 {
        return false;
    }
    let alpha_tilde = Partition::new(alpha[..k - 2].to_vec()).expect("prefix of a partition");
    let beta_tilde = Partition::new(beta[..k - 2].to_vec()).expect("prefix of a partition");
    beta_tilde.majorizes(&alpha_tilde)
}

/// True when `beta` covers `alpha` in `Dis(n)` (a threshold-covered
/// S-block: the only blocks above it are `[alpha|alpha]` and `[beta|beta]`).
///
/// `b` must be an S-block and `dis` the full lattice for its weight.
pub fn is_threshold_covered(b: &Block, dis: &DisPoset) -> Result<bool, BlockError> {
    if !b.is_sblock() {
        return Err(BlockError::NotSBlock {
            n1: b.n1(),
            n2: b.n2(),
        });
    }
    if dis.k().is_some() || dis.n() != b.n1() {
        return Err(BlockError::WrongLattice {
            expected: b.n1(),
            got: match dis.k() {
                Some(k) => format!("Dis_{}({})", k, dis.n()),
                None => format!("Dis({})", dis.n()),
            },
        });
    }
    dis.is_cover(&b.beta, &b.alpha)
        .map_err(|_| BlockError::WrongLattice {
            expected: b.n1(),
            got: format!("Dis({})", dis.n()),
        })
}

fn classify_with(b: &Block, dis: Option<&DisPoset>) -> Classification {
    let sblock = b.is_sblock();
    let unbalanced = sblock && b.len_alpha() == b.len_beta();
    let balanced = sblock && b.len_alpha() == b.len_beta() + 1;
    let ng1 = unbalanced && b.beta.last() == Some(1);
    let ng2 = unbalanced && b.alpha.last().is_some_and(|x| x >= 2);
    let ng3 = ng3_conditions(b);
    let covered = sblock
        && is_threshold_covered(b, dis.expect("S-blocks come with their lattice"))
            .expect("S-block with its own lattice");
    Classification {
        n1: b.n1(),
        n2: b.n2(),
        len_alpha: b.len_alpha(),
        len_beta: b.len_beta(),
        is_sblock: sblock,
        is_threshold: sblock && b.alpha == b.beta,
        is_balanced: balanced,
        is_unbalanced: unbalanced,
        is_ng1: ng1,
        is_ng2: ng2,
        is_ng3: ng3,
        is_pseudo_split: sblock || ng3,
        is_threshold_covered: covered,
    }
}

/// Classifies `b`, reusing a prebuilt `Dis(n)` for the covering flag.
/// The lattice is only consulted when `b` is an S-block.
pub fn classify_in(b: &Block, dis: &DisPoset) -> Classification {
    classify_with(b, Some(dis))
}

/// Classifies `b`, enumerating `Dis(n)` on demand for the covering flag.
pub fn classify(b: &Block) -> Classification {
    if b.is_sblock() {
        classify_with(b, Some(&enumerate_dis(b.n1())))
    } else {
        classify_with(b, None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::distinct_partitions;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn blk(s: &str) -> Block {
        s.parse().unwrap()
    }

    #[test]
    fn make_block_names_the_violated_clause() {
        let err = make_block(p("4,3,2,1"), p("7,3")).unwrap_err();
        assert_eq!(
            err,
            BlockError::LengthClause {
                len_alpha: 4,
                len_beta: 2
            }
        );

        let err = make_block(p("3"), p("4")).unwrap_err();
        assert_eq!(err, BlockError::ParityMismatch { n1: 3, n2: 4 });

        let err = make_block(p("5,3"), p("4,2")).unwrap_err();
        assert_eq!(err, BlockError::BetaTooSmall { n1: 8, n2: 6 });

        let err = make_block(p("5,1"), p("4,2")).unwrap_err();
        assert_eq!(err, BlockError::NotWeaklyMajorized { prefix: 1 });

        let err = make_block(p("4,4,2"), p("6,4")).unwrap_err();
        assert_eq!(
            err,
            BlockError::RepeatedParts {
                side: Side::Alpha,
                index: 1
            }
        );

        let err = make_block(Partition::empty(), p("6,4")).unwrap_err();
        assert_eq!(err, BlockError::Empty { side: Side::Alpha });
    }

    #[test]
    fn block_literal_round_trip() {
        let b = blk("5,3,2|7,2,1");
        assert_eq!(b.to_string(), "5,3,2|7,2,1");
        assert_eq!((b.n1(), b.n2()), (10, 10));
        assert!("5,3,2".parse::<Block>().is_err());
        assert!("5,3,2|7,2,1|1".parse::<Block>().is_err());
        let err = "5,3,a|7,2,1".parse::<Block>().unwrap_err();
        assert!(matches!(
            err,
            BlockError::BadPartition {
                side: Side::Alpha,
                ..
            }
        ));
    }

    #[test]
    fn block_majorization_examples() {
        assert!(block_majorizes(&blk("6,3,1|6,3,1"), &blk("5,3,2|7,2,1")).unwrap());
        // Distinct maximal S-blocks are incomparable.
        assert!(!block_majorizes(&blk("5,3,2|5,3,2"), &blk("5,4,1|5,4,1")).unwrap());
        assert!(!block_majorizes(&blk("5,4,1|5,4,1"), &blk("5,3,2|5,3,2")).unwrap());
        // Different weights are a domain error, not `false`.
        assert!(block_majorizes(&blk("6,4|6,4"), &blk("6,4|8,4")).is_err());
    }

    #[test]
    fn sequence_verdicts() {
        let sp = sequence_to_block(&p("6,5,2,2,2,1,1,1"));
        assert_eq!(
            (sp.alpha, sp.beta, sp.verdict),
            (p("6,4"), p("7,3"), Verdict::SBlock)
        );

        // A four-cycle: a valid block, but beta outweighs alpha.
        let sp = sequence_to_block(&p("2,2,2,2"));
        assert_eq!((sp.alpha, sp.beta), (p("2,1"), p("3,2")));
        assert_eq!(sp.verdict, Verdict::BlockOnly);

        // A single edge.
        let sp = sequence_to_block(&p("1,1"));
        assert_eq!(
            (sp.alpha, sp.beta, sp.verdict),
            (p("1"), p("1"), Verdict::SBlock)
        );

        // Not graphic: the weight clause fails.
        let sp = sequence_to_block(&p("3,1"));
        assert_eq!(
            sp.verdict,
            Verdict::Invalid(BlockError::BetaTooSmall { n1: 3, n2: 1 })
        );

        // One row: beta is empty.
        let sp = sequence_to_block(&p("5"));
        assert_eq!(
            sp.verdict,
            Verdict::Invalid(BlockError::Empty { side: Side::Beta })
        );
    }

    #[test]
    fn reconstruction_examples() {
        assert_eq!(
            block_to_sequence(&blk("10|10")).unwrap(),
            p("10,1,1,1,1,1,1,1,1,1,1")
        );
        assert_eq!(
            block_to_sequence(&blk("5,3,2|9,1")).unwrap(),
            p("5,4,4,1,1,1,1,1,1,1")
        );
        assert_eq!(
            block_to_sequence(&blk("6,4|7,3")).unwrap(),
            p("6,5,2,2,2,1,1,1")
        );
        assert_eq!(block_to_sequence(&blk("2,1|3,2")).unwrap(), p("2,2,2,2"));
        assert_eq!(
            block_to_sequence(&blk("5,3,2|7,2,1")).unwrap(),
            p("5,4,4,3,1,1,1,1")
        );
    }

    #[test]
    fn reconstruction_round_trips_all_sblocks_up_to_16() {
        for n in 1..=16u32 {
            let dn = distinct_partitions(n);
            for alpha in &dn {
                for beta in &dn {
                    let Ok(b) = make_block(alpha.clone(), beta.clone()) else {
                        continue;
                    };
                    let pi = block_to_sequence(&b)
                        .unwrap_or_else(|e| panic!("reconstruction failed for {b}: {e}"));
                    assert_eq!(pi.sum(), 2 * n);
                }
            }
        }
    }

    #[test]
    fn reconstruction_round_trips_mixed_weight_blocks() {
        for n1 in 1..=10u32 {
            for n2 in (n1..=n1 + 10).step_by(2) {
                for alpha in distinct_partitions(n1) {
                    for beta in distinct_partitions(n2) {
                        let Ok(b) = make_block(alpha.clone(), beta.clone()) else {
                            continue;
                        };
                        let pi = block_to_sequence(&b)
                            .unwrap_or_else(|e| panic!("reconstruction failed for {b}: {e}"));
                        assert_eq!(pi.sum(), n1 + n2);
                    }
                }
            }
        }
    }

    #[test]
    fn classify_ng_flags() {
        // Both families: beta ends 1 and alpha ends 2.
        let c = classify(&blk("5,3,2|6,3,1"));
        assert!(c.is_unbalanced && c.is_ng1 && c.is_ng2);

        // Beta ends 1 but alpha ends 1: clique core only.
        let c = classify(&blk("5,4,1|6,3,1"));
        assert!(c.is_ng1 && !c.is_ng2);

        // Alpha ends 4 but beta ends 3: stable core only.
        let c = classify(&blk("6,4|7,3"));
        assert!(!c.is_ng1 && c.is_ng2);

        // Balanced S-blocks are in no NG family.
        let c = classify(&blk("5,3,2|6,4"));
        assert!(c.is_balanced && !c.is_ng1 && !c.is_ng2);
    }

    #[test]
    fn classify_threshold_and_pseudo_split() {
        let c = classify(&blk("6,4|6,4"));
        assert!(c.is_sblock && c.is_threshold && c.is_unbalanced && c.is_pseudo_split);

        let c = classify(&blk("7,5,2,1|7,5,4,3"));
        assert!(!c.is_sblock && c.is_ng3 && c.is_pseudo_split);
        assert_eq!((c.n1, c.n2), (15, 19));

        // The five-cycle block: empty cores.
        let c = classify(&blk("2,1|4,3"));
        assert!(c.is_ng3);

        // Right tails, wrong weight gap: n2 must be n1 + 4.
        let c = classify(&blk("5,2,1|9,4,3"));
        assert!(!c.is_ng3 && !c.is_pseudo_split);
    }

    #[test]
    fn threshold_covered_flag() {
        let dis = enumerate_dis(10);
        assert!(is_threshold_covered(&blk("6,3,1|6,4"), &dis).unwrap());
        assert!(!is_threshold_covered(&blk("5,3,2|7,2,1"), &dis).unwrap());
        assert!(is_threshold_covered(&blk("6,4|7,3"), &dis).unwrap());
        // Threshold blocks have alpha = beta, and nothing covers itself.
        assert!(!is_threshold_covered(&blk("6,4|6,4"), &dis).unwrap());
        // Domain errors: not an S-block; lattice for the wrong weight.
        assert!(matches!(
            is_threshold_covered(&blk("5,3,2|7,5,2"), &dis),
            Err(BlockError::NotSBlock { n1: 10, n2: 14 })
        ));
        assert!(matches!(
            is_threshold_covered(&blk("6,4|7,3"), &enumerate_dis(12)),
            Err(BlockError::WrongLattice { expected: 10, .. })
        ));
    }

    #[test]
    fn every_unbalanced_sblock_is_ng1_or_ng2_up_to_16() {
        for n in 1..=16u32 {
            let dis = enumerate_dis(n);
            let dn = dis.elements().to_vec();
            for alpha in &dn {
                for beta in &dn {
                    let Ok(b) = make_block(alpha.clone(), beta.clone()) else {
                        continue;
                    };
                    let c = classify_in(&b, &dis);
                    if c.is_unbalanced {
                        assert!(c.is_ng1 || c.is_ng2, "{b} escapes both NG families");
                    }
                    // Flag coherence.
                    assert_eq!(c.is_sblock, c.is_balanced || c.is_unbalanced);
                    if c.is_threshold {
                        assert!(c.is_unbalanced);
                    }
                    if c.is_ng3 {
                        assert!(!c.is_sblock);
                    }
                    assert_eq!(c.is_pseudo_split, c.is_sblock || c.is_ng3);
                }
            }
        }
    }

    #[test]
    fn classification_serializes_with_flat_fields() {
        let c = classify(&blk("6,4|7,3"));
        let json = serde_json::to_value(&c).unwrap();
        assert_eq!(json["n1"], 10);
        assert_eq!(json["n2"], 10);
        assert_eq!(json["is_sblock"], true);
        assert_eq!(json["is_ng2"], true);
        assert_eq!(json["is_ng1"], false);
    }
}
