//! Brute-force graph oracle: realize degree sequences as labeled graphs and
//! measure them from first principles (forbidden subgraphs, exact chromatic
//! number, clique/stable partitions), so every degree-sequence
//! characterization in the rest of the crate can be cross-validated against
//! structures that were actually built.
//!
//! Everything here is exhaustive and deterministic: realizations use a fixed
//! greedy order, searches enumerate subsets, and `verify_theorems` walks
//! every labeled graph up to a vertex bound.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::block::{classify, make_block, sequence_to_block, Verdict};
use crate::partition::{mark, Partition};

/// Adjacency rows are single `u64` masks.
pub const MAX_VERTICES: usize = 64;

/// Default vertex bound for exact coloring searches.
pub const CHROMATIC_LIMIT: usize = 12;

/// Domain violations for oracle operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph with {n} vertices exceeds the limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("{pi} is not a split degree sequence")]
    NotSplitSequence { pi: String },
    #[error("the graph is not split")]
    NotSplitGraph,
    #[error("{pi} does not have the five-cycle-core shape")]
    NotNg3Sequence { pi: String },
    #[error("graph text line {line}: {reason}")]
    BadGraphText { line: usize, reason: String },
}

/// A small labeled simple graph. Vertices are `0..n`; adjacency is stored
/// as one neighbor bitmask per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Graph, OracleError> {
        if n > MAX_VERTICES {
            return Err(OracleError::TooLarge {
                n,
                limit: MAX_VERTICES,
            });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list. Panics on loops, repeats, or
    /// out-of-range endpoints; use the text format for untrusted input.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut g = Graph::new(n).expect("vertex count within the adjacency-mask limit");
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Adds the edge `{u, v}`. Panics if it is a loop, out of range, or
    /// already present: every caller builds edge sets it controls.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(
            u != v && u < self.n && v < self.n,
            "edge ({u}, {v}) out of range"
        );
        assert!(!self.has_edge(u, v), "edge ({u}, {v}) added twice");
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & (1 << v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Degrees indexed by vertex.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// The degree sequence as a partition (sorted, positive parts), or
    /// `None` if some vertex is isolated.
    pub fn degree_partition(&self) -> Option<Partition> {
        let mut d: Vec<u32> = (0..self.n).map(|v| self.degree(v) as u32).collect();
        if d.contains(&0) {
            return None;
        }
        d.sort_unstable_by(|a, b| b.cmp(a));
        Some(Partition::new(d).expect("sorted positive degrees form a partition"))
    }

    pub fn complement(&self) -> Graph {
        let full = mask_of_all(self.n);
        let adj = (0..self.n)
            .map(|v| (full & !self.adj[v]) & !(1u64 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    fn is_clique_mask(&self, mask: u64) -> bool {
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            if self.adj[v] & mask != mask & !(1u64 << v) {
                return false;
            }
        }
        true
    }

    fn is_stable_mask(&self, mask: u64) -> bool {
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            if self.adj[v] & mask != 0 {
                return false;
            }
        }
        true
    }
}

fn mask_of_all(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn mask_to_vec(mask: u64) -> Vec<usize> {
    let mut out = Vec::new();
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

/// Text format: first nonblank line the vertex count, then one `u v` edge
/// per line (0-based).
impl FromStr for Graph {
    type Err = OracleError;

    fn from_str(s: &str) -> Result<Graph, OracleError> {
        let bad = |line: usize, reason: &str| OracleError::BadGraphText {
            line,
            reason: reason.to_string(),
        };
        let mut g: Option<Graph> = None;
        for (i, raw) in s.lines().enumerate() {
            let line = i + 1;
            let text = raw.trim();
            if text.is_empty() {
                continue;
            }
            match g {
                None => {
                    let n: usize = text
                        .parse()
                        .map_err(|_| bad(line, "expected a vertex count"))?;
                    g =
                        Some(Graph::new(n).map_err(|_| {
                            bad(line, "vertex count exceeds the adjacency-mask limit")
                        })?);
                }
                Some(ref mut graph) => {
                    let (u, v) = text
                        .split_once(' ')
                        .ok_or_else(|| bad(line, "expected `u v`"))?;
                    let u: usize = u.trim().parse().map_err(|_| bad(line, "bad endpoint"))?;
                    let v: usize = v.trim().parse().map_err(|_| bad(line, "bad endpoint"))?;
                    if u == v {
                        return Err(bad(line, "loop edge"));
                    }
                    if u >= graph.n || v >= graph.n {
                        return Err(bad(line, "endpoint out of range"));
                    }
                    if graph.has_edge(u, v) {
                        return Err(bad(line, "duplicate edge"));
                    }
                    graph.add_edge(u, v);
                }
            }
        }
        g.ok_or_else(|| bad(1, "empty graph text"))
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.n)?;
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    write!(f, "\n{u} {v}")?;
                }
            }
        }
        Ok(())
    }
}

/// The classical graphic-sequence inequality test (with the parity check).
pub fn erdos_gallai(pi: &Partition) -> bool {
    let d: Vec<u64> = pi.parts().iter().map(|&x| u64::from(x)).collect();
    if d.iter().sum::<u64>() % 2 != 0 {
        return false;
    }
    for k in 1..=d.len() {
        let lhs: u64 = d[..k].iter().sum();
        let rhs =
            (k as u64) * (k as u64 - 1) + d[k..].iter().map(|&x| x.min(k as u64)).sum::<u64>();
        if lhs > rhs {
            return false;
        }
    }
    true
}

/// Realizes a split degree sequence: vertex `i` receives degree `pi[i]`,
/// the top `m` vertices (the mark) form a clique, the rest a stable set,
/// and the cross edges are assigned greedily - largest residual demand
/// first, to the partners with the largest remaining capacity, ties broken
/// by lowest index - so the output is deterministic.
pub fn realize_split(pi: &Partition) -> Result<Graph, OracleError> {
    let sp = sequence_to_block(pi);
    if !matches!(sp.verdict, Verdict::SBlock) {
        return Err(OracleError::NotSplitSequence { pi: pi.to_string() });
    }
    let m = sp.mark;
    let n = pi.len();
    let mut g = Graph::new(n)?;
    for u in 0..m {
        for v in (u + 1)..m {
            g.add_edge(u, v);
        }
    }
    let mut cap: Vec<u32> = (0..m).map(|i| pi.part(i) - (m as u32 - 1)).collect();
    let mut need: Vec<u32> = (m..n).map(|i| pi.part(i)).collect();
    while let Some(s) = (0..need.len())
        .filter(|&s| need[s] > 0)
        .max_by_key(|&s| need[s])
    {
        let mut partners: Vec<usize> = (0..m).filter(|&i| cap[i] > 0).collect();
        partners.sort_by(|&a, &b| cap[b].cmp(&cap[a]).then(a.cmp(&b)));
        assert!(
            partners.len() >= need[s] as usize,
            "greedy cross-edge assignment ran out of clique capacity for {pi}"
        );
        for &c in &partners[..need[s] as usize] {
            g.add_edge(c, m + s);
            cap[c] -= 1;
        }
        need[s] = 0;
    }
    assert!(
        (0..n).all(|v| g.degree(v) as u32 == pi.part(v)),
        "greedy realization missed the degrees of the split sequence {pi}"
    );
    Ok(g)
}

/// Realizes a five-cycle-core degree sequence (alpha ending `2,1`, beta
/// ending `4,3`, equal lengths, weights four apart): lower the five degrees
/// at 1-based positions `k-1 ..= k+3` by two, realize the remaining split
/// sequence, and close a five-cycle over those positions.
pub fn realize_ng3(pi: &Partition) -> Result<Graph, OracleError> {
    let sp = sequence_to_block(pi);
    let not_ng3 = || OracleError::NotNg3Sequence { pi: pi.to_string() };
    let block = make_block(sp.alpha.clone(), sp.beta.clone()).map_err(|_| not_ng3())?;
    if !classify(&block).is_ng3 {
        return Err(not_ng3());
    }
    let k = block.len_alpha();
    let n = pi.len();
    let ring = [k - 2, k - 1, k, k + 1, k + 2];
    let mut demands: Vec<u32> = pi.parts().to_vec();
    for &p in &ring {
        demands[p] -= 2;
    }
    let mut g = if demands.iter().all(|&d| d == 0) {
        Graph::new(n)?
    } else {
        let residual = Partition::new(demands)
            .expect("lowering the five equal middle degrees keeps the sequence sorted");
        realize_split(&residual)
            .expect("removing the five-cycle degrees from this shape leaves a split sequence")
    };
    for i in 0..5 {
        g.add_edge(ring[i], ring[(i + 1) % 5]);
    }
    assert!(
        (0..n).all(|v| g.degree(v) as u32 == pi.part(v)),
        "five-cycle completion missed the degrees of {pi}"
    );
    Ok(g)
}

/// Which of the four obstruction graphs occur as induced subgraphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ForbiddenSubgraphs {
    pub two_k2: bool,
    pub c4: bool,
    pub c5: bool,
    pub p4: bool,
}

impl ForbiddenSubgraphs {
    pub fn is_split(&self) -> bool {
        !self.two_k2 && !self.c4 && !self.c5
    }

    pub fn is_threshold(&self) -> bool {
        self.is_split() && !self.p4
    }

    pub fn is_pseudo_split(&self) -> bool {
        !self.two_k2 && !self.c4
    }
}

/// Exhaustive induced-subgraph scan over all 4- and 5-vertex subsets.
/// Four-vertex shapes are recognized by their induced degree multiset; a
/// five-subset inducing a 2-regular graph is necessarily a single
/// five-cycle (the only other union of cycles on five vertices would need
/// a two-cycle).
pub fn forbidden_subgraphs(g: &Graph) -> ForbiddenSubgraphs {
    let n = g.vertex_count();
    let mut found = ForbiddenSubgraphs {
        two_k2: false,
        c4: false,
        c5: false,
        p4: false,
    };
    let mut quads: Vec<[usize; 4]> = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                for d in (c + 1)..n {
                    quads.push([a, b, c, d]);
                }
            }
        }
    }
    for q in quads {
        let mask = q.iter().fold(0u64, |m, &v| m | (1 << v));
        let mut degs: Vec<u32> = q
            .iter()
            .map(|&v| (g.neighbors(v) & mask).count_ones())
            .collect();
        degs.sort_unstable();
        match degs.as_slice() {
            [1, 1, 1, 1] => found.two_k2 = true,
            [2, 2, 2, 2] => found.c4 = true,
            [1, 1, 2, 2] => found.p4 = true,
            _ => {}
        }
    }
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                for d in (c + 1)..n {
                    for e in (d + 1)..n {
                        let mask = (1u64 << a) | (1 << b) | (1 << c) | (1 << d) | (1 << e);
                        if [a, b, c, d, e]
                            .iter()
                            .all(|&v| (g.neighbors(v) & mask).count_ones() == 2)
                        {
                            found.c5 = true;
                        }
                    }
                }
            }
        }
    }
    found
}

fn max_clique_size(g: &Graph) -> u32 {
    fn grow(adj: &[u64], mut cand: u64, size: u32, best: &mut u32) {
        while cand != 0 {
            if size + cand.count_ones() <= *best {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            *best = (*best).max(size + 1);
            grow(adj, cand & adj[v], size + 1, best);
        }
    }
    let mut best = 0;
    grow(&g.adj, mask_of_all(g.vertex_count()), 0, &mut best);
    best
}

fn colorable(g: &Graph, order: &[usize], t: u32) -> bool {
    fn rec(g: &Graph, order: &[usize], t: u32, pos: usize, colors: &mut [u32]) -> bool {
        if pos == order.len() {
            return true;
        }
        let v = order[pos];
        let mut forbidden = 0u32;
        for &u in &order[..pos] {
            if g.has_edge(u, v) {
                forbidden |= 1 << colors[u];
            }
        }
        // Color classes are interchangeable: cap the palette at one past
        // the highest color already in use.
        let cap = order[..pos]
            .iter()
            .map(|&u| colors[u] + 1)
            .max()
            .unwrap_or(0)
            .min(t - 1);
        for c in 0..=cap {
            if forbidden & (1 << c) == 0 {
                colors[v] = c;
                if rec(g, order, t, pos + 1, colors) {
                    return true;
                }
            }
        }
        false
    }
    if order.is_empty() {
        return true;
    }
    let mut colors = vec![0u32; g.vertex_count()];
    rec(g, order, t, 0, &mut colors)
}

/// Exact chromatic number under the default vertex limit.
pub fn chromatic_number(g: &Graph) -> Result<u32, OracleError> {
    chromatic_number_bounded(g, CHROMATIC_LIMIT)
}

/// Exact chromatic number by iterative deepening over a backtracking
/// colorability search, bounded below by a maximum clique.
pub fn chromatic_number_bounded(g: &Graph, limit: usize) -> Result<u32, OracleError> {
    let n = g.vertex_count();
    if n > limit {
        return Err(OracleError::TooLarge { n, limit });
    }
    if n == 0 {
        return Ok(0);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
    let lower = max_clique_size(g);
    for t in lower.. {
        if colorable(g, &order, t) {
            return Ok(t);
        }
    }
    unreachable!("a graph on n vertices is n-colorable");
}

/// Whether a split graph admits a partition that is simultaneously
/// clique-maximum and stable-maximum, with the witnessing partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Balance {
    Balanced {
        clique: Vec<usize>,
        stable: Vec<usize>,
    },
    /// No such partition; `swing` can move from the listed maximum clique
    /// to its stable complement, which yields a stable-maximum partition.
    Unbalanced {
        clique: Vec<usize>,
        stable: Vec<usize>,
        swing: usize,
    },
}

impl Balance {
    pub fn is_balanced(&self) -> bool {
        matches!(self, Balance::Balanced { .. })
    }
}

fn first_clique_of_size(g: &Graph, size: u32, stable_complement: bool) -> Option<u64> {
    fn rec(g: &Graph, start: usize, mask: u64, left: u32, stable_complement: bool) -> Option<u64> {
        if left == 0 {
            let rest = mask_of_all(g.vertex_count()) & !mask;
            if !stable_complement || g.is_stable_mask(rest) {
                return Some(mask);
            }
            return None;
        }
        for v in start..g.vertex_count() {
            if mask & !g.neighbors(v) != 0 {
                continue;
            }
            if let Some(found) = rec(g, v + 1, mask | (1 << v), left - 1, stable_complement) {
                return Some(found);
            }
        }
        None
    }
    rec(g, 0, 0, size, stable_complement)
}

/// Determines balance from first principles: compute the clique number and
/// the independence number, take the lexicographically least maximum clique
/// whose complement is stable, and compare sizes. For a split graph such a
/// partition always exists, and it is simultaneously stable-maximum exactly
/// when clique number plus independence number equals the vertex count.
pub fn balance_status(g: &Graph) -> Result<Balance, OracleError> {
    if !forbidden_subgraphs(g).is_split() {
        return Err(OracleError::NotSplitGraph);
    }
    let n = g.vertex_count();
    let omega = max_clique_size(g);
    let alpha = max_clique_size(&g.complement());
    let k_mask = first_clique_of_size(g, omega, true)
        .expect("a split graph has a maximum clique with stable complement");
    let s_mask = mask_of_all(n) & !k_mask;
    let clique = mask_to_vec(k_mask);
    let stable = mask_to_vec(s_mask);
    if omega + alpha == n as u32 {
        return Ok(Balance::Balanced { clique, stable });
    }
    // The remaining case forces independence number = |stable| + 1, and a
    // maximum stable set meets the clique in exactly one vertex, which has
    // no neighbors outside the clique.
    let swing = clique
        .iter()
        .copied()
        .find(|&v| g.neighbors(v) & s_mask == 0)
        .expect("a clique-maximum partition of an unbalanced split graph has a swing vertex");
    Ok(Balance::Unbalanced {
        clique,
        stable,
        swing,
    })
}

/// The vertex partition by degree relative to one less than the chromatic
/// number: `a` at it, `b` above it, `c` below it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbcPartition {
    pub chi: u32,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub c: Vec<usize>,
}

pub fn abc_partition(g: &Graph) -> Result<AbcPartition, OracleError> {
    let chi = chromatic_number(g)?;
    let pivot = chi as usize - 1;
    let mut parts = AbcPartition {
        chi,
        a: Vec::new(),
        b: Vec::new(),
        c: Vec::new(),
    };
    for v in 0..g.vertex_count() {
        match g.degree(v).cmp(&pivot) {
            std::cmp::Ordering::Equal => parts.a.push(v),
            std::cmp::Ordering::Greater => parts.b.push(v),
            std::cmp::Ordering::Less => parts.c.push(v),
        }
    }
    Ok(parts)
}

/// Where a graph sits relative to the chromatic extremal bound
/// (chromatic number of the graph plus that of its complement equaling the
/// vertex count plus one), refined by the induced structure on the
/// critical-degree vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NgStatus {
    NotNg,
    /// Critical-degree vertices induce a clique.
    Ng1,
    /// Critical-degree vertices induce a stable set.
    Ng2,
    /// A single critical-degree vertex: clique and stable set at once.
    Ng1And2,
    /// Critical-degree vertices induce a five-cycle.
    Ng3,
}

impl fmt::Display for NgStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let token = match self {
            NgStatus::NotNg => "not-NG",
            NgStatus::Ng1 => "NG-1",
            NgStatus::Ng2 => "NG-2",
            NgStatus::Ng1And2 => "NG-1-and-2",
            NgStatus::Ng3 => "NG-3",
        };
        write!(f, "{token}")
    }
}

impl Serialize for NgStatus {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl NgStatus {
    pub fn is_ng(&self) -> bool {
        !matches!(self, NgStatus::NotNg)
    }
}

fn ng_status_given(g: &Graph, chi: u32, chi_complement: u32) -> NgStatus {
    let n = g.vertex_count();
    if (chi + chi_complement) as usize != n + 1 {
        return NgStatus::NotNg;
    }
    let a_mask = (0..n)
        .filter(|&v| g.degree(v) as u32 == chi - 1)
        .fold(0u64, |m, v| m | (1 << v));
    assert!(
        a_mask != 0,
        "an extremal graph has a vertex of critical degree"
    );
    if a_mask.count_ones() == 1 {
        return NgStatus::Ng1And2;
    }
    if g.is_clique_mask(a_mask) {
        return NgStatus::Ng1;
    }
    if g.is_stable_mask(a_mask) {
        return NgStatus::Ng2;
    }
    let five_cycle = a_mask.count_ones() == 5
        && mask_to_vec(a_mask)
            .iter()
            .all(|&v| (g.neighbors(v) & a_mask).count_ones() == 2);
    assert!(
        five_cycle,
        "critical-degree vertices of an extremal graph induce a clique, a stable set, or a five-cycle"
    );
    NgStatus::Ng3
}

/// Classifies a graph against the chromatic extremal bound.
pub fn ng_status(g: &Graph) -> Result<NgStatus, OracleError> {
    ng_status_bounded(g, CHROMATIC_LIMIT)
}

/// `ng_status` with a custom coloring vertex limit. The search stays fast
/// well past the default on graphs whose clique number equals their
/// chromatic number, split graphs included.
pub fn ng_status_bounded(g: &Graph, limit: usize) -> Result<NgStatus, OracleError> {
    let chi = chromatic_number_bounded(g, limit)?;
    let chi_complement = chromatic_number_bounded(&g.complement(), limit)?;
    Ok(ng_status_given(g, chi, chi_complement))
}

/// One structural claim checked over every enumerated graph.
#[derive(Debug, Clone, Serialize)]
pub struct TheoremCheck {
    pub name: &'static str,
    pub pass: bool,
    pub counterexamples: Vec<String>,
}

/// Outcome of the exhaustive graph-level verification.
#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub max_vertices: usize,
    pub graphs_checked: u64,
    pub pass: bool,
    pub checks: Vec<TheoremCheck>,
}

const CHECK_NAMES: [&str; 6] = [
    "balanced-split-has-induced-p4",
    "threshold-is-unbalanced-split",
    "unbalanced-split-equals-ng1-union-ng2",
    "pseudo-split-decompositions",
    "extremal-chromatic-equals-mark",
    "split-graph-iff-equal-weight-block",
];

#[derive(Default, Clone)]
struct Tally {
    checked: u64,
    counterexamples: [Vec<String>; 6],
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        for (mine, theirs) in self.counterexamples.iter_mut().zip(other.counterexamples) {
            mine.extend(theirs);
        }
        self
    }
}

fn graph_of_mask(v: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let mut g = Graph::new(v).expect("enumeration bound is far below the mask limit");
    for (b, &(x, y)) in pairs.iter().enumerate() {
        if mask & (1 << b) != 0 {
            g.add_edge(x, y);
        }
    }
    g
}

fn scan_graph(g: &Graph, tally: &mut Tally) {
    let Some(pi) = g.degree_partition() else {
        // A graph with an isolated vertex is a smaller graph already
        // enumerated, padded with a vertex outside every structure.
        return;
    };
    tally.checked += 1;

    let fs = forbidden_subgraphs(g);
    let split = fs.is_split();
    let chi = chromatic_number(g).expect("enumeration stays under the coloring limit");
    let chi_complement =
        chromatic_number(&g.complement()).expect("enumeration stays under the coloring limit");
    let status = ng_status_given(g, chi, chi_complement);
    let balanced = split
        && balance_status(g)
            .expect("forbidden-subgraph-split graphs pass the split domain check")
            .is_balanced();
    let sp = sequence_to_block(&pi);

    let mut fail = |idx: usize, g: &Graph, note: String| {
        let text = g.to_string().replace('\n', "; ");
        tally.counterexamples[idx].push(format!("[{text}] {note}"));
    };

    if split && balanced && !fs.p4 {
        fail(
            0,
            g,
            "balanced split graph with no induced path on four vertices".into(),
        );
    }
    if fs.is_threshold() && balanced {
        fail(1, g, "threshold graph that is balanced".into());
    }
    let ng12 = matches!(status, NgStatus::Ng1 | NgStatus::Ng2 | NgStatus::Ng1And2);
    if (split && !balanced) != ng12 {
        fail(
            2,
            g,
            format!(
                "unbalanced-split={} but status={status}",
                split && !balanced
            ),
        );
    }
    let pseudo = fs.is_pseudo_split();
    if pseudo != (split || status == NgStatus::Ng3) {
        fail(
            3,
            g,
            format!("pseudo={pseudo} split={split} status={status}"),
        );
    }
    if pseudo != (status.is_ng() || (split && balanced)) {
        fail(
            3,
            g,
            format!(
                "pseudo={pseudo} ng={} balanced-split={}",
                status.is_ng(),
                split && balanced
            ),
        );
    }
    if status.is_ng() && split && balanced {
        fail(
            3,
            g,
            "graph is both extremal and a balanced split graph".into(),
        );
    }
    if status.is_ng() && chi as usize != mark(&pi) {
        fail(4, g, format!("chi={chi} but mark={}", mark(&pi)));
    }
    if split != matches!(sp.verdict, Verdict::SBlock) {
        fail(5, g, format!("split={split} but verdict={:?}", sp.verdict));
    }
}

/// Walks every labeled graph on up to `max_vertices` vertices (skipping
/// those with isolated vertices, which duplicate smaller graphs) and checks
/// each structural claim, in parallel over edge subsets. Expected result:
/// every check passes with zero counterexamples.
pub fn verify_theorems(max_vertices: usize) -> TheoremReport {
    assert!(
        max_vertices <= 7,
        "exhaustive enumeration is tractable only up to 7 vertices"
    );
    let mut total = Tally::default();
    for v in 1..=max_vertices {
        let pairs: Vec<(usize, usize)> = (0..v)
            .flat_map(|a| ((a + 1)..v).map(move |b| (a, b)))
            .collect();
        let tally = (0u64..1 << pairs.len())
            .into_par_iter()
            .fold(Tally::default, |mut t, mask| {
                scan_graph(&graph_of_mask(v, &pairs, mask), &mut t);
                t
            })
            .reduce(Tally::default, Tally::merge);
        total = total.merge(tally);
    }
    let checks: Vec<TheoremCheck> = CHECK_NAMES
        .iter()
        .zip(total.counterexamples)
        .map(|(&name, mut counterexamples)| {
            counterexamples.sort();
            TheoremCheck {
                name,
                pass: counterexamples.is_empty(),
                counterexamples,
            }
        })
        .collect();
    TheoremReport {
        max_vertices,
        graphs_checked: total.checked,
        pass: checks.iter().all(|c| c.pass),
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>())
    }

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges)
    }

    fn complete(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
            .collect();
        Graph::from_edges(n, &edges)
    }

    #[test]
    fn graphic_test_examples() {
        assert!(erdos_gallai(&pt("6,5,2,2,2,1,1,1")));
        assert!(!erdos_gallai(&pt("3,1")));
        assert!(erdos_gallai(&pt("2,2,2")));
        assert!(erdos_gallai(&pt("1,1")));
        assert!(!erdos_gallai(&pt("1")));
        assert!(!erdos_gallai(&pt("5,5,5,1")));
    }

    #[test]
    fn graphic_iff_beta_weakly_majorizes_alpha_with_even_sum() {
        use crate::partition::all_partitions;
        for n in 1..=18u32 {
            for pi in all_partitions(n) {
                let ab = crate::partition::decompose(&pi);
                let criterion = n % 2 == 0 && ab.beta.weakly_majorizes(&ab.alpha);
                assert_eq!(erdos_gallai(&pi), criterion, "{pi}");
            }
        }
    }

    #[test]
    fn split_realization_examples() {
        let g = realize_split(&pt("6,5,2,2,2,1,1,1")).unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.degree_partition().unwrap(), pt("6,5,2,2,2,1,1,1"));
        assert!(forbidden_subgraphs(&g).is_split());
        assert!(max_clique_size(&g) >= 3);

        let p3 = realize_split(&pt("2,1,1")).unwrap();
        assert_eq!(p3, Graph::from_edges(3, &[(0, 1), (0, 2)]));

        let edge = realize_split(&pt("1,1")).unwrap();
        assert_eq!(edge, Graph::from_edges(2, &[(0, 1)]));

        assert!(matches!(
            realize_split(&pt("2,2,2,2")),
            Err(OracleError::NotSplitSequence { .. })
        ));
    }

    #[test]
    fn split_realizations_are_split_with_exact_degrees_up_to_16() {
        for n in (2..=16u32).step_by(2) {
            for pi in crate::partition::all_partitions(n) {
                let sp = sequence_to_block(&pi);
                if !matches!(sp.verdict, Verdict::SBlock) {
                    continue;
                }
                let g = realize_split(&pi).unwrap();
                assert_eq!(g.degree_partition().unwrap(), pi, "degrees of {pi}");
                assert!(forbidden_subgraphs(&g).is_split(), "splitness of {pi}");
            }
        }
    }

    #[test]
    fn forbidden_subgraph_scan_recognizes_the_obstructions() {
        let c5 = cycle(5);
        let f = forbidden_subgraphs(&c5);
        assert!((f.c5, f.p4, f.c4, f.two_k2) == (true, true, false, false));
        assert!(!f.is_split() && f.is_pseudo_split());

        let f = forbidden_subgraphs(&cycle(4));
        assert!((f.c4, f.c5, f.p4, f.two_k2) == (true, false, false, false));

        let f = forbidden_subgraphs(&path(4));
        assert!((f.p4, f.c4, f.c5, f.two_k2) == (true, false, false, false));
        assert!(f.is_split() && !f.is_threshold());

        let f = forbidden_subgraphs(&Graph::from_edges(4, &[(0, 1), (2, 3)]));
        assert!((f.two_k2, f.p4) == (true, false));

        let star = realize_split(&pt("3,1,1,1")).unwrap();
        assert!(forbidden_subgraphs(&star).is_threshold());
    }

    #[test]
    fn chromatic_number_examples() {
        assert_eq!(chromatic_number(&cycle(5)).unwrap(), 3);
        assert_eq!(chromatic_number(&cycle(6)).unwrap(), 2);
        assert_eq!(chromatic_number(&complete(4)).unwrap(), 4);
        assert_eq!(chromatic_number(&path(4)).unwrap(), 2);
        assert_eq!(chromatic_number(&Graph::new(3).unwrap()).unwrap(), 1);
        assert_eq!(chromatic_number(&Graph::new(0).unwrap()).unwrap(), 0);
        assert!(matches!(
            chromatic_number(&Graph::new(13).unwrap()),
            Err(OracleError::TooLarge { n: 13, limit: 12 })
        ));
        assert_eq!(chromatic_number_bounded(&complete(13), 13).unwrap(), 13);
    }

    #[test]
    fn balance_examples() {
        let p4 = path(4);
        match balance_status(&p4).unwrap() {
            Balance::Balanced { clique, stable } => {
                assert_eq!(clique, [1, 2]);
                assert_eq!(stable, [0, 3]);
            }
            other => panic!("P4 should be balanced, got {other:?}"),
        }

        let star = realize_split(&pt("3,1,1,1")).unwrap();
        match balance_status(&star).unwrap() {
            Balance::Unbalanced { swing, .. } => {
                // Some leaf sits in the 2-clique and can move to the
                // stable side.
                assert!(star.degree(swing) == 1);
            }
            other => panic!("the claw should be unbalanced, got {other:?}"),
        }

        assert!(!balance_status(&complete(3)).unwrap().is_balanced());
        assert!(matches!(
            balance_status(&cycle(4)),
            Err(OracleError::NotSplitGraph)
        ));
    }

    #[test]
    fn abc_partition_of_the_double_family_example() {
        let g = realize_split(&pt("5,4,4,3,2,1,1")).unwrap();
        let abc = abc_partition(&g).unwrap();
        assert_eq!(abc.chi, 4);
        assert_eq!(abc.a.len(), 1);
        assert_eq!(g.degree(abc.a[0]), 3);
        assert_eq!(abc.b.len(), 3);
        assert_eq!(abc.c.len(), 3);
    }

    #[test]
    fn ng_status_examples() {
        assert_eq!(ng_status(&cycle(5)).unwrap(), NgStatus::Ng3);
        assert_eq!(ng_status(&path(4)).unwrap(), NgStatus::NotNg);
        assert_eq!(ng_status(&complete(3)).unwrap(), NgStatus::Ng1);

        let both = realize_split(&pt("5,4,4,3,2,1,1")).unwrap();
        assert_eq!(ng_status(&both).unwrap(), NgStatus::Ng1And2);

        // [5,4,1|5,4,1] reconstructs to a sequence whose two critical
        // vertices land in the clique; [5,3,2|5,3,2] splits them apart.
        let ng1 = realize_split(&pt("5,5,3,3,2,2")).unwrap();
        assert_eq!(ng_status(&ng1).unwrap(), NgStatus::Ng1);
        let ng2 = realize_split(&pt("5,4,4,3,3,1")).unwrap();
        assert_eq!(ng_status(&ng2).unwrap(), NgStatus::Ng2);
    }

    #[test]
    fn five_cycle_core_realizations() {
        let c5 = realize_ng3(&pt("2,2,2,2,2")).unwrap();
        assert_eq!(c5, cycle(5));

        let wheel = realize_ng3(&pt("5,3,3,3,3,3")).unwrap();
        assert_eq!(wheel.degree_partition().unwrap(), pt("5,3,3,3,3,3"));
        assert_eq!(ng_status(&wheel).unwrap(), NgStatus::Ng3);

        let g = realize_ng3(&pt("7,6,4,4,4,4,4,1")).unwrap();
        assert_eq!(g.degree_partition().unwrap(), pt("7,6,4,4,4,4,4,1"));
        assert_eq!(ng_status(&g).unwrap(), NgStatus::Ng3);
        let fs = forbidden_subgraphs(&g);
        assert!(fs.is_pseudo_split() && !fs.is_split());

        assert!(matches!(
            realize_ng3(&pt("6,5,2,2,2,1,1,1")),
            Err(OracleError::NotNg3Sequence { .. })
        ));
    }

    #[test]
    fn graph_text_round_trip() {
        let g = realize_split(&pt("2,1,1")).unwrap();
        let text = g.to_string();
        assert_eq!(text, "3\n0 1\n0 2");
        assert_eq!(text.parse::<Graph>().unwrap(), g);

        assert!(matches!(
            "3\n0 3".parse::<Graph>(),
            Err(OracleError::BadGraphText { line: 2, .. })
        ));
        assert!(matches!(
            "3\n0 0".parse::<Graph>(),
            Err(OracleError::BadGraphText { line: 2, .. })
        ));
        assert!(matches!(
            "3\n0 1\n0 1".parse::<Graph>(),
            Err(OracleError::BadGraphText { line: 3, .. })
        ));
        assert!(matches!(
            "x".parse::<Graph>(),
            Err(OracleError::BadGraphText { line: 1, .. })
        ));
        assert!(matches!(
            "".parse::<Graph>(),
            Err(OracleError::BadGraphText { line: 1, .. })
        ));
    }

    #[test]
    fn theorem_verification_up_to_five_vertices_is_clean() {
        let report = verify_theorems(5);
        assert!(report.pass, "{report:?}");
        // Inclusion-exclusion count of labeled graphs with no isolated
        // vertex on 2..=5 vertices: 1 + 4 + 41 + 768.
        assert_eq!(report.graphs_checked, 814);
        assert_eq!(report.checks.len(), 6);
        assert!(report.checks.iter().all(|c| c.counterexamples.is_empty()));
    }
}
