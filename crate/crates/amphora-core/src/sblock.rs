//! The poset of S-blocks of weight `n` and everything built on top of it:
//! the partition into amphoras, the window poset `W(n)` of amphora kinds,
//! the NG subfamilies with their amphora bijections, the five-cycle-core
//! family `NG_3`, and the bounded lattice completion with its case table.
//!
//! S-blocks of weight `n` under block majorization are not a lattice, but
//! adjoining a global bottom and top makes them one, and the meet/join have
//! closed forms: the meet is the component-wise `[meet(alphas)|join(betas)]`
//! whenever the length gap allows a valid block (bottom otherwise), and the
//! join is `[join(alphas)|meet(betas)]` whenever that beta majorizes that
//! alpha (top otherwise). Which case applies, and which amphora the result
//! lands in, depends only on the amphora kinds of the operands; the case
//! table makes those predictions exact.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::block::{block_majorizes, classify, make_block, Block, BlockError};
use crate::dis::{enumerate_dis, enumerate_dis_k, DisError, DisPoset};
use crate::partition::Partition;
use crate::poset::{AmphoraShape, Poset};

/// Domain violations for S-block constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SBlockError {
    #[error("no S-blocks exist for weight {n}")]
    EmptyDomain { n: u32 },
    #[error("expected an S-block of weight {expected}, got weight {got}")]
    WrongWeight { expected: u32, got: u32 },
    #[error("expected an S-block, got weights ({n1}, {n2})")]
    NotSBlock { n1: u32, n2: u32 },
    #[error("expected an unbalanced S-block, got {block}")]
    NotUnbalanced { block: String },
    #[error("{block} is not in the {star} cell of its amphora")]
    NotInCell { block: String, star: NgStar },
    #[error("the length-1 clique-tail family has no image amphora")]
    NoImageAmphora,
    #[error("amphora A({n},{k}) is empty")]
    EmptyAmphora { n: u32, k: usize },
    #[error("NG3({n},{k}) is empty; it needs n >= 4k + k(k+1)/2")]
    EmptyNg3 { n: u32, k: usize },
    #[error("class {kind} is not an amphora: {reason}")]
    NotAnAmphora { kind: String, reason: String },
    #[error(transparent)]
    Block(#[from] BlockError),
    #[error(transparent)]
    Dis(#[from] DisError),
}

/// The amphora an S-block belongs to, named by its alpha length.
///
/// `Unbalanced { k }` holds the blocks with `len(alpha) = len(beta) = k`;
/// `Balanced { k }` those with `len(alpha) = k = len(beta) + 1`. The derived
/// listing order is the zigzag `U(1), B(2), U(2), B(3), ...`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum AmphoraKind {
    Unbalanced { k: usize },
    Balanced { k: usize },
}

impl AmphoraKind {
    pub fn k(&self) -> usize {
        match *self {
            AmphoraKind::Unbalanced { k } | AmphoraKind::Balanced { k } => k,
        }
    }

    pub fn is_balanced(&self) -> bool {
        matches!(self, AmphoraKind::Balanced { .. })
    }
}

impl Ord for AmphoraKind {
    fn cmp(&self, other: &Self) -> Ordering {
        let key = |a: &AmphoraKind| (a.k(), u8::from(!a.is_balanced()));
        key(self).cmp(&key(other))
    }
}

impl PartialOrd for AmphoraKind {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for AmphoraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AmphoraKind::Unbalanced { k } => write!(f, "U({k})"),
            AmphoraKind::Balanced { k } => write!(f, "B({k})"),
        }
    }
}

/// Per-block structural flags inside the S-block poset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AmphoraLabel {
    pub kind: AmphoraKind,
    /// Unbalanced with beta ending in 1.
    pub ng1: bool,
    /// Unbalanced with alpha ending in at least 2.
    pub ng2: bool,
    /// Beta covers alpha in `Dis(n)`: exactly the blocks whose strict
    /// up-set is the two-element antichain `{[alpha|alpha], [beta|beta]}`.
    pub in_tc: bool,
}

fn kind_of(b: &Block) -> AmphoraKind {
    if b.len_alpha() == b.len_beta() {
        AmphoraKind::Unbalanced { k: b.len_alpha() }
    } else {
        AmphoraKind::Balanced { k: b.len_alpha() }
    }
}

fn label_for(b: &Block, dis: &DisPoset) -> AmphoraLabel {
    let kind = kind_of(b);
    let unbalanced = !kind.is_balanced();
    AmphoraLabel {
        kind,
        ng1: unbalanced && b.beta().last() == Some(1),
        ng2: unbalanced && b.alpha().last().is_some_and(|x| x >= 2),
        in_tc: dis
            .is_cover(b.beta(), b.alpha())
            .expect("both halves of an S-block of weight n lie in Dis(n)"),
    }
}

/// An element of the S-block lattice completion: a block, or one of the two
/// adjoined bounds.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Extended {
    Bottom,
    Element(Block),
    Top,
}

impl Extended {
    pub fn as_block(&self) -> Option<&Block> {
        match self {
            Extended::Element(b) => Some(b),
            _ => None,
        }
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Bottom => write!(f, "bottom"),
            Extended::Top => write!(f, "top"),
            Extended::Element(b) => write!(f, "{b}"),
        }
    }
}

impl Serialize for Extended {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Where a meet or join lands, named without computing the element itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseLocation {
    Bottom,
    Top,
    In(AmphoraKind),
}

/// The three last-part cells partitioning an unbalanced amphora:
/// `OneStar` = both halves end in 1 (clique-tail only), `TwoStar` = both
/// end in at least 2 (stable-tail only), `Both` = alpha ends in at least 2
/// while beta ends in 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NgCell {
    OneStar,
    TwoStar,
    Both,
}

/// Cell-level predictions for a pair of blocks in the same unbalanced
/// amphora: the meet's cell, and the join's cell when the join is a block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NgRefinement {
    /// The operands' cells, in normalized order.
    pub cells: (NgCell, NgCell),
    pub meet_cell: NgCell,
    pub join_cell: Option<NgCell>,
}

/// The resolved case-table entry for a pair of S-blocks: which row of the
/// kind-by-kind table applies, exactly where meet and join land, and the
/// cell refinement when both operands share an unbalanced amphora.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableCase {
    /// Row label: "1" U(k)xU(k), "2" B(k)xB(k), "3a"/"3b" U(k)xU(j) with
    /// gap >= 2 / = 1, "4a"/"4b" B(k)xB(j) likewise, "5" U(k)xB(j) with
    /// k in {j-1, j}, "6" the remaining mixed pairs.
    pub row: &'static str,
    /// Operand kinds in normalized (listing) order.
    pub kinds: (AmphoraKind, AmphoraKind),
    pub meet: CaseLocation,
    pub join: CaseLocation,
    pub refinement: Option<NgRefinement>,
}

/// The bounded lattice of S-blocks of weight `n`, backed by `Dis(n)`.
#[derive(Debug, Clone)]
pub struct BlockLattice {
    dis: DisPoset,
}

/// Builds the weight-`n` S-block lattice context. `n` must be positive.
pub fn block_lattice(n: u32) -> Result<BlockLattice, SBlockError> {
    if n == 0 {
        return Err(SBlockError::EmptyDomain { n });
    }
    Ok(BlockLattice {
        dis: enumerate_dis(n),
    })
}

impl BlockLattice {
    pub fn n(&self) -> u32 {
        self.dis.n()
    }

    pub fn dis(&self) -> &DisPoset {
        &self.dis
    }

    fn member(&self, b: &Block) -> Result<(), SBlockError> {
        if !b.is_sblock() {
            return Err(SBlockError::NotSBlock {
                n1: b.n1(),
                n2: b.n2(),
            });
        }
        if b.n1() != self.n() {
            return Err(SBlockError::WrongWeight {
                expected: self.n(),
                got: b.n1(),
            });
        }
        Ok(())
    }

    /// Block order: `b1 <= b2`.
    pub fn le(&self, b1: &Block, b2: &Block) -> Result<bool, SBlockError> {
        self.member(b1)?;
        self.member(b2)?;
        Ok(block_majorizes(b2, b1)?)
    }

    /// Greatest lower bound in the completion. The component form
    /// `[meet(alphas)|join(betas)]` is a valid S-block exactly when the
    /// largest cross length gap `len(alpha_i) - len(beta_j)` is at most 1;
    /// otherwise the only lower bound is the adjoined bottom.
    pub fn meet(&self, b1: &Block, b2: &Block) -> Result<Extended, SBlockError> {
        self.member(b1)?;
        self.member(b2)?;
        let gap = |x: &Block, y: &Block| x.len_alpha() as isize - y.len_beta() as isize;
        if gap(b1, b2).max(gap(b2, b1)) > 1 {
            return Ok(Extended::Bottom);
        }
        let a = self
            .dis
            .meet(b1.alpha(), b2.alpha())
            .expect("Dis(n) is a lattice over its own elements");
        let b = self
            .dis
            .join(b1.beta(), b2.beta())
            .expect("Dis(n) is a lattice over its own elements");
        let blk = make_block(a, b)
            .expect("component meet/join with length gap at most 1 is a valid S-block");
        Ok(Extended::Element(blk))
    }

    /// Least upper bound in the completion. The component form
    /// `[join(alphas)|meet(betas)]` is a valid S-block exactly when that
    /// beta majorizes that alpha; otherwise the only upper bound is the
    /// adjoined top.
    pub fn join(&self, b1: &Block, b2: &Block) -> Result<Extended, SBlockError> {
        self.member(b1)?;
        self.member(b2)?;
        let (a, b) = self.join_components(b1, b2);
        if b.majorizes(&a) {
            let blk =
                make_block(a, b).expect("majorizing component join/meet pair is a valid S-block");
            Ok(Extended::Element(blk))
        } else {
            Ok(Extended::Top)
        }
    }

    fn join_components(&self, b1: &Block, b2: &Block) -> (Partition, Partition) {
        let a = self
            .dis
            .join(b1.alpha(), b2.alpha())
            .expect("Dis(n) is a lattice over its own elements");
        let b = self
            .dis
            .meet(b1.beta(), b2.beta())
            .expect("Dis(n) is a lattice over its own elements");
        (a, b)
    }

    /// Meet extended to the adjoined bounds: bottom absorbs, top is neutral.
    pub fn meet_ext(&self, x: &Extended, y: &Extended) -> Result<Extended, SBlockError> {
        match (x, y) {
            (Extended::Bottom, _) | (_, Extended::Bottom) => Ok(Extended::Bottom),
            (Extended::Top, z) | (z, Extended::Top) => Ok(z.clone()),
            (Extended::Element(a), Extended::Element(b)) => self.meet(a, b),
        }
    }

    /// Join extended to the adjoined bounds: top absorbs, bottom is neutral.
    pub fn join_ext(&self, x: &Extended, y: &Extended) -> Result<Extended, SBlockError> {
        match (x, y) {
            (Extended::Top, _) | (_, Extended::Top) => Ok(Extended::Top),
            (Extended::Bottom, z) | (z, Extended::Bottom) => Ok(z.clone()),
            (Extended::Element(a), Extended::Element(b)) => self.join(a, b),
        }
    }

    /// Resolves the case table for a pair: the row selected by the two
    /// amphora kinds, the exact meet/join locations, and the cell
    /// refinement when both operands lie in the same unbalanced amphora.
    pub fn table_case(&self, b1: &Block, b2: &Block) -> Result<TableCase, SBlockError> {
        use AmphoraKind::{Balanced, Unbalanced};
        self.member(b1)?;
        self.member(b2)?;
        let (k1, k2) = (kind_of(b1), kind_of(b2));
        let (a, b) = self.join_components(b1, b2);
        let join_exists = b.majorizes(&a);

        let (row, meet, join_kind) = match (k1, k2) {
            (Unbalanced { k }, Unbalanced { k: j }) if k == j => (
                "1",
                CaseLocation::In(Unbalanced { k }),
                Some(Unbalanced { k }),
            ),
            (Unbalanced { k }, Unbalanced { k: j }) if k.abs_diff(j) == 1 => {
                ("3b", CaseLocation::In(Balanced { k: k.max(j) }), None)
            }
            (Unbalanced { .. }, Unbalanced { .. }) => ("3a", CaseLocation::Bottom, None),
            (Balanced { k }, Balanced { k: j }) if k == j => {
                ("2", CaseLocation::In(Balanced { k }), Some(Balanced { k }))
            }
            (Balanced { k }, Balanced { k: j }) if k.abs_diff(j) == 1 => {
                ("4b", CaseLocation::Bottom, Some(Unbalanced { k: k.min(j) }))
            }
            (Balanced { .. }, Balanced { .. }) => ("4a", CaseLocation::Bottom, None),
            (Unbalanced { k }, Balanced { k: j }) | (Balanced { k: j }, Unbalanced { k })
                if k == j || k + 1 == j =>
            {
                (
                    "5",
                    CaseLocation::In(Balanced { k: j }),
                    Some(Unbalanced { k }),
                )
            }
            (Unbalanced { .. }, Balanced { .. }) | (Balanced { .. }, Unbalanced { .. }) => {
                ("6", CaseLocation::Bottom, None)
            }
        };
        // In rows whose join column is a plain top, the join criterion can
        // never hold: the component lengths already forbid a valid block.
        debug_assert!(join_kind.is_some() || !join_exists);
        let join = match join_kind {
            Some(kind) if join_exists => CaseLocation::In(kind),
            _ => CaseLocation::Top,
        };

        let refinement = (row == "1").then(|| {
            let a1 = b1.alpha().last() == Some(1);
            let a2 = b2.alpha().last() == Some(1);
            let c1 = b1.beta().last() == Some(1);
            let c2 = b2.beta().last() == Some(1);
            let cell_pair = |x: NgCell, y: NgCell| if x <= y { (x, y) } else { (y, x) };
            let cells = cell_pair(cell_from(a1, c1), cell_from(a2, c2));
            NgRefinement {
                cells,
                // Moving down lifts last parts, moving up lowers them:
                // the meet's alpha ends in 1 only if both alphas do, and
                // its beta ends in 1 if either beta does. Dually for join.
                meet_cell: cell_from(a1 && a2, c1 || c2),
                join_cell: join_exists.then(|| cell_from(a1 || a2, c1 && c2)),
            }
        });

        let kinds = if k1 <= k2 { (k1, k2) } else { (k2, k1) };
        Ok(TableCase {
            row,
            kinds,
            meet,
            join,
            refinement,
        })
    }
}

fn cell_from(alpha_ends_one: bool, beta_ends_one: bool) -> NgCell {
    match (alpha_ends_one, beta_ends_one) {
        (true, true) => NgCell::OneStar,
        (false, false) => NgCell::TwoStar,
        (false, true) => NgCell::Both,
        (true, false) => {
            unreachable!("an unbalanced S-block with alpha ending 1 has beta ending 1")
        }
    }
}

/// The full poset of S-blocks of weight `n` with per-element labels.
#[derive(Debug, Clone)]
pub struct SBlockPoset {
    n: u32,
    lattice: BlockLattice,
    poset: Poset<Block>,
    labels: Vec<AmphoraLabel>,
}

/// Enumerates all S-blocks of weight `n` (all majorizing pairs over
/// `Dis(n)` that satisfy the block clauses) and builds their poset under
/// block majorization, labeled by amphora kind and NG flags.
pub fn build_sblock_poset(n: u32) -> Result<SBlockPoset, SBlockError> {
    let lattice = block_lattice(n)?;
    let mut blocks = Vec::new();
    for alpha in lattice.dis().elements() {
        for beta in lattice.dis().elements() {
            if let Ok(b) = make_block(alpha.clone(), beta.clone()) {
                blocks.push(b);
            }
        }
    }
    blocks.sort();
    let poset = Poset::build(blocks, |x, y| {
        block_majorizes(y, x).expect("all blocks share the weight pair (n, n)")
    });
    let labels = poset
        .elements()
        .iter()
        .map(|b| label_for(b, lattice.dis()))
        .collect();
    Ok(SBlockPoset {
        n,
        lattice,
        poset,
        labels,
    })
}

impl SBlockPoset {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn poset(&self) -> &Poset<Block> {
        &self.poset
    }

    pub fn lattice(&self) -> &BlockLattice {
        &self.lattice
    }

    pub fn labels(&self) -> &[AmphoraLabel] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> AmphoraLabel {
        self.labels[i]
    }

    pub fn index_of(&self, b: &Block) -> Option<usize> {
        self.poset.index_of(b)
    }

    /// The amphora kinds present, in zigzag listing order.
    pub fn kinds(&self) -> Vec<AmphoraKind> {
        let mut kinds: Vec<AmphoraKind> = self.labels.iter().map(|l| l.kind).collect();
        kinds.sort_unstable();
        kinds.dedup();
        kinds
    }

    /// Indices of the blocks in the given amphora, in listing order.
    pub fn members(&self, kind: AmphoraKind) -> Vec<usize> {
        (0..self.poset.len())
            .filter(|&i| self.labels[i].kind == kind)
            .collect()
    }

    /// The unbalanced amphora `A(n, k)`.
    pub fn amphora(&self, k: usize) -> Vec<usize> {
        self.members(AmphoraKind::Unbalanced { k })
    }

    /// The balanced amphora with alpha length `k` (and beta length `k-1`).
    pub fn amphora_balanced(&self, k: usize) -> Vec<usize> {
        self.members(AmphoraKind::Balanced { k })
    }

    /// The NG index sets of the unbalanced amphora `A(n, k)`: the two
    /// families, their intersection, and the two difference cells.
    pub fn ng_subsets(&self, k: usize) -> NgSubsets {
        let members = self.amphora(k);
        let pick = |f: &dyn Fn(&AmphoraLabel) -> bool| -> Vec<usize> {
            members
                .iter()
                .copied()
                .filter(|&i| f(&self.labels[i]))
                .collect()
        };
        NgSubsets {
            ng1: pick(&|l| l.ng1),
            ng2: pick(&|l| l.ng2),
            both: pick(&|l| l.ng1 && l.ng2),
            ng1_star: pick(&|l| l.ng1 && !l.ng2),
            ng2_star: pick(&|l| l.ng2 && !l.ng1),
        }
    }

    /// Verifies that every kind class is an amphora of the ambient poset
    /// (unique bottom, antichain of tops, equal to the interval they span)
    /// and returns the shapes, in zigzag listing order.
    pub fn amphora_shapes(&self) -> Result<Vec<(AmphoraKind, AmphoraShape)>, SBlockError> {
        self.kinds()
            .into_iter()
            .map(|kind| {
                self.poset
                    .verify_amphora(&self.members(kind))
                    .map(|shape| (kind, shape))
                    .map_err(|reason| SBlockError::NotAnAmphora {
                        kind: kind.to_string(),
                        reason,
                    })
            })
            .collect()
    }
}

/// Index sets of the NG families inside one unbalanced amphora.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NgSubsets {
    pub ng1: Vec<usize>,
    pub ng2: Vec<usize>,
    pub both: Vec<usize>,
    pub ng1_star: Vec<usize>,
    pub ng2_star: Vec<usize>,
}

/// Builds the unbalanced amphora `A(n, k)` standalone: all pairs over
/// `Dis_k(n)` where beta majorizes alpha, under block majorization.
pub fn amphora_poset(n: u32, k: usize) -> Result<Poset<Block>, SBlockError> {
    let dk = enumerate_dis_k(n, k);
    if dk.is_empty() {
        return Err(SBlockError::EmptyAmphora { n, k });
    }
    let mut blocks = Vec::new();
    for alpha in dk.elements() {
        for beta in dk.elements() {
            if beta.majorizes(alpha) {
                blocks.push(
                    make_block(alpha.clone(), beta.clone())
                        .expect("equal-length majorizing pairs are unbalanced S-blocks"),
                );
            }
        }
    }
    blocks.sort();
    Ok(Poset::build(blocks, |x, y| {
        block_majorizes(y, x).expect("all blocks share the weight pair (n, n)")
    }))
}

/// The two difference cells that map onto smaller amphoras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NgStar {
    /// Clique-tail only: both halves end in 1.
    One,
    /// Stable-tail only: both halves end in at least 2.
    Two,
}

impl fmt::Display for NgStar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NgStar::One => write!(f, "NG-1*"),
            NgStar::Two => write!(f, "NG-2*"),
        }
    }
}

/// Maps one block of the `star` cell of `A(n, k)` into the image amphora:
/// the clique-tail cell drops the final 1 and lowers every remaining part
/// by 1 (landing in `A(n-k, k-1)`); the stable-tail cell lowers every part
/// by 1 (landing in `A(n-k, k)`).
pub fn ng_star_map(star: NgStar, b: &Block) -> Result<Block, SBlockError> {
    if !b.is_sblock() {
        return Err(SBlockError::NotSBlock {
            n1: b.n1(),
            n2: b.n2(),
        });
    }
    if b.len_alpha() != b.len_beta() {
        return Err(SBlockError::NotUnbalanced {
            block: b.to_string(),
        });
    }
    let alpha_one = b.alpha().last() == Some(1);
    let beta_one = b.beta().last() == Some(1);
    match star {
        NgStar::One => {
            if !(alpha_one && beta_one) {
                return Err(SBlockError::NotInCell {
                    block: b.to_string(),
                    star,
                });
            }
            if b.len_alpha() == 1 {
                return Err(SBlockError::NoImageAmphora);
            }
            let strip = |p: &Partition| {
                let parts: Vec<u32> = p.parts()[..p.len() - 1].iter().map(|x| x - 1).collect();
                Partition::new(parts)
                    .expect("dropping the final 1 and lowering keeps strict decrease")
            };
            Ok(make_block(strip(b.alpha()), strip(b.beta()))
                .expect("the clique-tail image satisfies every block clause"))
        }
        NgStar::Two => {
            if alpha_one || beta_one {
                return Err(SBlockError::NotInCell {
                    block: b.to_string(),
                    star,
                });
            }
            let lower = |p: &Partition| {
                Partition::new(p.parts().iter().map(|x| x - 1).collect())
                    .expect("lowering distinct parts of size at least 2 by 1")
            };
            Ok(make_block(lower(b.alpha()), lower(b.beta()))
                .expect("the stable-tail image satisfies every block clause"))
        }
    }
}

/// Maps the whole `star` cell of `A(n, k)` and certifies the result is an
/// order-preserving bijection onto the image amphora (`A(n-k, k-1)` for the
/// clique-tail cell, `A(n-k, k)` for the stable-tail cell). Returns the
/// (source, image) pairs in listing order.
///
/// Panics if the certified correspondence fails: that would falsify the
/// structure this crate is built on, not signal bad input.
pub fn ng_star_bijection(
    star: NgStar,
    n: u32,
    k: usize,
) -> Result<Vec<(Block, Block)>, SBlockError> {
    if star == NgStar::One && k == 1 {
        return Err(SBlockError::NoImageAmphora);
    }
    let source = amphora_poset(n, k)?;
    let pairs: Vec<(Block, Block)> = source
        .elements()
        .iter()
        .filter(|b| {
            let alpha_one = b.alpha().last() == Some(1);
            let beta_one = b.beta().last() == Some(1);
            match star {
                NgStar::One => alpha_one && beta_one,
                NgStar::Two => !alpha_one && !beta_one,
            }
        })
        .map(|b| {
            let img = ng_star_map(star, b).expect("cell membership just checked");
            (b.clone(), img)
        })
        .collect();

    let m = n - k as u32;
    let image_k = match star {
        NgStar::One => k - 1,
        NgStar::Two => k,
    };
    match amphora_poset(m, image_k) {
        Err(SBlockError::EmptyAmphora { .. }) => {
            assert!(
                pairs.is_empty(),
                "{star} cell of A({n},{k}) is nonempty but A({m},{image_k}) is empty"
            );
        }
        Ok(target) => {
            assert_eq!(
                pairs.len(),
                target.len(),
                "{star} cell of A({n},{k}) and A({m},{image_k}) differ in size"
            );
            let mut images: Vec<&Block> = pairs.iter().map(|(_, img)| img).collect();
            images.sort();
            images.dedup();
            assert_eq!(images.len(), pairs.len(), "{star} map is not injective");
            for img in &images {
                assert!(
                    target.index_of(img).is_some(),
                    "{star} image {img} is not in A({m},{image_k})"
                );
            }
            for (x, fx) in &pairs {
                for (y, fy) in &pairs {
                    assert_eq!(
                        block_majorizes(x, y).expect("same weights"),
                        block_majorizes(fx, fy).expect("same weights"),
                        "{star} map does not preserve order on ({x}, {y})"
                    );
                }
            }
        }
        Err(e) => return Err(e),
    }
    Ok(pairs)
}

/// A node of the window poset `W(n)`: one amphora kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum WNode {
    Unbalanced { k: usize },
    Balanced { k: usize },
}

impl fmt::Display for WNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WNode::Unbalanced { k } => write!(f, "U({k})"),
            WNode::Balanced { k } => write!(f, "B({k})"),
        }
    }
}

/// The window poset `W(n)` of amphora kinds: `U(k)` exists for
/// `k(k+1)/2 <= n`, `B(k)` additionally needs `k >= 2`, and the only strict
/// relations are `B(k) < U(k)` and `B(k) < U(k-1)` - a zigzag fence.
pub fn build_w(n: u32) -> Result<Poset<WNode>, SBlockError> {
    if n == 0 {
        return Err(SBlockError::EmptyDomain { n });
    }
    let mut nodes = Vec::new();
    let mut k = 1usize;
    while (k * (k + 1) / 2) as u64 <= u64::from(n) {
        if k >= 2 {
            nodes.push(WNode::Balanced { k });
        }
        nodes.push(WNode::Unbalanced { k });
        k += 1;
    }
    Ok(Poset::build(nodes, |x, y| {
        x == y
            || matches!((x, y), (WNode::Balanced { k }, WNode::Unbalanced { k: j })
                if *j == *k || *j + 1 == *k)
    }))
}

/// The poset `NG3(n, k)`: blocks whose alpha ends `2,1` and beta ends
/// `4,3`, with cores (the parts above the tails) drawn from the distinct
/// `k`-part partitions of `n` with every part at least 5, paired so the
/// beta core majorizes the alpha core. `n` is the core weight: the blocks
/// themselves have weights `n+3` and `n+7`.
#[derive(Debug, Clone)]
pub struct Ng3Poset {
    n: u32,
    k: usize,
    poset: Poset<Block>,
}

impl Ng3Poset {
    /// Core weight.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Core length.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn poset(&self) -> &Poset<Block> {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }
}

/// Builds `NG3(n, k)` under block majorization. Empty exactly when
/// `n < 4k + k(k+1)/2`, reported as an error.
pub fn build_ng3_poset(n: u32, k: usize) -> Result<Ng3Poset, SBlockError> {
    let dk = enumerate_dis_k(n, k);
    let cores: Vec<Partition> = dk
        .elements()
        .iter()
        .filter(|p| p.last().is_some_and(|x| x >= 5))
        .cloned()
        .collect();
    if cores.is_empty() {
        return Err(SBlockError::EmptyNg3 { n, k });
    }
    let extend = |core: &Partition, tail: [u32; 2]| {
        let mut parts = core.parts().to_vec();
        parts.extend(tail);
        Partition::new(parts).expect("tails sit strictly below parts of size at least 5")
    };
    let mut blocks = Vec::new();
    for a in &cores {
        for b in &cores {
            if b.majorizes(a) {
                let blk = make_block(extend(a, [2, 1]), extend(b, [4, 3]))
                    .expect("majorizing cores extend to a valid block");
                debug_assert!(classify(&blk).is_ng3);
                blocks.push(blk);
            }
        }
    }
    blocks.sort();
    let poset = Poset::build(blocks, |x, y| {
        block_majorizes(y, x).expect("all blocks share the same weight pair")
    });
    Ok(Ng3Poset { n, k, poset })
}
