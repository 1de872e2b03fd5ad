//! Degree-sequence block calculus for split graphs.
//!
//! A degree sequence, read as an integer partition, splits along the main
//! diagonal of its Ferrers diagram into a pair of strictly decreasing
//! partitions: the diagonal rows `alpha` and the sub-diagonal columns `beta`.
//! The sequence is split precisely when `beta` majorizes `alpha`, and most
//! structure of the graph (balanced/unbalanced, threshold, the NG families)
//! is readable from the pair alone.
//!
//! The crate provides:
//!
//! * [`partition`] - partitions, majorization, the alpha/beta decomposition,
//!   and the extreme elements of the distinct-part lattices;
//! * [`poset`] - finite-poset plumbing: order bitsets, Hasse covers, and
//!   meet/join by exhaustive search with uniqueness checks;
//! * [`dis`] - the lattices `Dis(n)` and `Dis_k(n)` of distinct-part
//!   partitions under majorization;
//! * [`block`] - validated blocks `[alpha|beta]`, block majorization, the
//!   sequence round-trip, and degree-sequence classification;
//! * [`sblock`] - the poset of S-blocks of weight `n`, its amphora
//!   decomposition, the window poset `W(n)`, NG subfamilies with their
//!   bijections, the bounded-lattice meet/join, and the case table;
//! * [`oracle`] - a brute-force graph oracle (realization, forbidden
//!   subgraphs, chromatic number, balance, NG status) used to cross-validate
//!   every degree-sequence characterization;
//! * [`checks`] - the runnable verification suites behind `amphora verify`;
//! * [`dot`] - deterministic Graphviz output for the Hasse diagrams.

pub mod block;
pub mod checks;
pub mod dis;
pub mod dot;
pub mod oracle;
pub mod partition;
pub mod poset;
pub mod sblock;

pub use block::{
    block_majorizes, block_to_sequence, classify, classify_in, is_threshold_covered, make_block,
    sequence_to_block, Block, BlockError, Classification, SequencePair, Side, Verdict,
};
pub use checks::{run_all, Check};
pub use dis::{enumerate_dis, enumerate_dis_k, DisError, DisPoset};
pub use oracle::{
    abc_partition, balance_status, chromatic_number, chromatic_number_bounded, erdos_gallai,
    forbidden_subgraphs, ng_status, realize_ng3, realize_split, verify_theorems, AbcPartition,
    Balance, ForbiddenSubgraphs, Graph, NgStatus, OracleError, TheoremCheck, TheoremReport,
};
pub use partition::{decompose, mark, tau, tau_prime, AlphaBeta, Partition, PartitionError};
pub use poset::{AmphoraShape, LatticeError, Poset};
pub use sblock::{
    amphora_poset, block_lattice, build_ng3_poset, build_sblock_poset, build_w, ng_star_bijection,
    ng_star_map, AmphoraKind, AmphoraLabel, BlockLattice, CaseLocation, Extended, Ng3Poset, NgCell,
    NgRefinement, NgStar, NgSubsets, SBlockError, SBlockPoset, TableCase, WNode,
};
