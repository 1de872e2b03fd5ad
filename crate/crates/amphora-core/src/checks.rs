//! Runnable verification suites. Each suite sweeps a bounded domain,
//! recomputes one structural claim from first principles, and reports the
//! outcome as a [`Check`] with counterexamples. [`run_all`] drives the full
//! battery behind `amphora verify`.

use std::collections::HashMap;

use serde::Serialize;

use crate::block::{classify, classify_in, make_block, sequence_to_block, Block, Verdict};
use crate::dis::{enumerate_dis, enumerate_dis_k, DisPoset};
use crate::oracle::{
    balance_status, chromatic_number_bounded, erdos_gallai, forbidden_subgraphs, ng_status_bounded,
    realize_ng3, realize_split, verify_theorems, NgStatus,
};
use crate::partition::{all_partitions, decompose, mark, tau, tau_prime, Partition};
use crate::sblock::{
    amphora_poset, build_ng3_poset, build_sblock_poset, build_w, ng_star_bijection, AmphoraKind,
    CaseLocation, Extended, NgCell, NgStar, SBlockError, WNode,
};

/// Outcome of one verification suite.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    /// Stable suite name.
    pub name: &'static str,
    /// The swept domain, in words.
    pub scope: String,
    pub pass: bool,
    /// Instances examined.
    pub checked: u64,
    /// Failing instances; empty exactly when `pass`. Capped, with a tally
    /// line appended once the cap is hit.
    pub counterexamples: Vec<String>,
}

const CX_CAP: usize = 20;

struct Suite {
    name: &'static str,
    scope: String,
    checked: u64,
    failures: u64,
    counterexamples: Vec<String>,
}

impl Suite {
    fn new(name: &'static str, scope: String) -> Self {
        Suite {
            name,
            scope,
            checked: 0,
            failures: 0,
            counterexamples: Vec::new(),
        }
    }

    /// Counts one examined instance.
    fn tick(&mut self) {
        self.checked += 1;
    }

    /// Records a verdict; the message is rendered only on failure.
    fn claim(&mut self, ok: bool, message: impl FnOnce() -> String) {
        if !ok {
            self.failures += 1;
            if self.counterexamples.len() < CX_CAP {
                self.counterexamples.push(message());
            }
        }
    }

    fn finish(mut self) -> Check {
        if self.failures > self.counterexamples.len() as u64 {
            self.counterexamples
                .push(format!("... {} failures in total", self.failures));
        }
        Check {
            name: self.name,
            scope: self.scope,
            pass: self.failures == 0,
            checked: self.checked,
            counterexamples: self.counterexamples,
        }
    }
}

/// Largest `k` with `k(k+1)/2 <= n`.
fn max_parts(n: u32) -> usize {
    let mut k = 0usize;
    while ((k + 1) * (k + 2) / 2) as u64 <= u64::from(n) {
        k += 1;
    }
    k
}

fn kind_of_block(b: &Block) -> AmphoraKind {
    if b.len_alpha() == b.len_beta() {
        AmphoraKind::Unbalanced { k: b.len_alpha() }
    } else {
        AmphoraKind::Balanced { k: b.len_alpha() }
    }
}

/// Last-part cell of an unbalanced S-block. `None` for unequal lengths and
/// for the impossible alpha-ends-1 beta-ends-higher combination.
fn cell_of(b: &Block) -> Option<NgCell> {
    if b.len_alpha() != b.len_beta() {
        return None;
    }
    match (b.alpha().last() == Some(1), b.beta().last() == Some(1)) {
        (true, true) => Some(NgCell::OneStar),
        (false, false) => Some(NgCell::TwoStar),
        (false, true) => Some(NgCell::Both),
        (true, false) => None,
    }
}

fn loc_of(x: &Extended) -> CaseLocation {
    match x {
        Extended::Bottom => CaseLocation::Bottom,
        Extended::Top => CaseLocation::Top,
        Extended::Element(b) => CaseLocation::In(kind_of_block(b)),
    }
}

/// `Dis(n)` and `Dis_k(n)` have the advertised members and extremes: every
/// element is a distinct partition of the right weight and length, the
/// global maximum is the single row, each nonempty `Dis_k(n)` runs from
/// `tau(n,k)` up to `tau'(n,k)`, emptiness matches the staircase bound, and
/// every element ends in 1 exactly while `n <= (k+1)(k+2)/2 - 2`.
pub fn check_dis_extremes(max_n: u32) -> Check {
    let mut s = Suite::new(
        "dis-extremes",
        format!("Dis(n) and every Dis_k(n) for 1 <= n <= {max_n}"),
    );
    for n in 1..=max_n {
        let dis = enumerate_dis(n);
        for p in dis.elements() {
            s.tick();
            s.claim(
                !p.is_empty() && p.has_distinct_parts() && p.sum() == n,
                || format!("Dis({n}) lists {p}, not a distinct partition of {n}"),
            );
        }
        let maximal = dis.poset().maximal();
        s.tick();
        s.claim(
            maximal.len() == 1 && dis.elements()[maximal[0]].parts() == [n],
            || format!("Dis({n}) maximum is not the single row"),
        );
        let kmax = max_parts(n);
        let minimal = dis.poset().minimal();
        s.tick();
        s.claim(
            minimal.len() == 1
                && tau(n, kmax)
                    .as_ref()
                    .is_ok_and(|t| &dis.elements()[minimal[0]] == t),
            || format!("Dis({n}) minimum is not tau({n},{kmax})"),
        );
        for k in 1..=kmax + 1 {
            let dk = enumerate_dis_k(n, k);
            s.tick();
            s.claim(dk.is_empty() == (k > kmax), || {
                format!("Dis_{k}({n}) emptiness disagrees with the staircase bound")
            });
            if dk.is_empty() {
                continue;
            }
            for p in dk.elements() {
                s.tick();
                s.claim(
                    p.len() == k && p.sum() == n && p.has_distinct_parts(),
                    || format!("Dis_{k}({n}) lists {p}"),
                );
            }
            let maximal = dk.poset().maximal();
            s.tick();
            s.claim(
                maximal.len() == 1
                    && tau_prime(n, k)
                        .as_ref()
                        .is_ok_and(|t| &dk.elements()[maximal[0]] == t),
                || format!("Dis_{k}({n}) maximum is not tau'({n},{k})"),
            );
            let minimal = dk.poset().minimal();
            s.tick();
            s.claim(
                minimal.len() == 1
                    && tau(n, k)
                        .as_ref()
                        .is_ok_and(|t| &dk.elements()[minimal[0]] == t),
                || format!("Dis_{k}({n}) minimum is not tau({n},{k})"),
            );
            let bound = ((k + 1) * (k + 2) / 2) as u32;
            let all_end_one = dk.elements().iter().all(|p| p.last() == Some(1));
            s.tick();
            s.claim(all_end_one == (n + 2 <= bound), || {
                format!("Dis_{k}({n}): the all-parts-end-in-1 boundary fails at {bound}")
            });
        }
    }
    s.finish()
}

/// The diagonal decomposition has the advertised shape on every sequence:
/// both halves recompute from the raw row and column counts, lengths tie to
/// the mark, both halves have distinct parts, and the weights add up.
pub fn check_decomposition_shape(max_sum: u32) -> Check {
    let mut s = Suite::new(
        "decomposition-shape",
        format!("all partitions of weight 1..={max_sum}"),
    );
    for n in 1..=max_sum {
        for pi in all_partitions(n) {
            s.tick();
            let ab = decompose(&pi);
            let m = mark(&pi);
            let d = pi.parts();
            let expected_alpha: Vec<u32> = d
                .iter()
                .enumerate()
                .take_while(|&(i, &x)| x > i as u32)
                .map(|(i, &x)| x - i as u32)
                .collect();
            let expected_beta: Vec<u32> = (1..m)
                .map(|j| d.iter().skip(j).filter(|&&x| x >= j as u32).count() as u32)
                .collect();
            let ok = ab.mark == m
                && ab.alpha.parts() == expected_alpha.as_slice()
                && ab.beta.parts() == expected_beta.as_slice()
                && ab.alpha.has_distinct_parts()
                && ab.beta.has_distinct_parts()
                && ab.beta.len() + 1 == m
                && (ab.alpha.len() == m || ab.alpha.len() + 1 == m)
                && ab.alpha.sum() + ab.beta.sum() == n;
            s.claim(ok, || {
                format!(
                    "{pi} decomposes as [{}|{}] with mark {}",
                    ab.alpha, ab.beta, ab.mark
                )
            });
        }
    }
    s.finish()
}

/// The inequality test for graphic sequences agrees with the decomposition
/// form: graphic exactly when the weight is even and beta weakly majorizes
/// alpha.
pub fn check_graphic_criterion(max_sum: u32) -> Check {
    let mut s = Suite::new(
        "graphic-criterion",
        format!("all partitions of weight 1..={max_sum}"),
    );
    for n in 1..=max_sum {
        for pi in all_partitions(n) {
            s.tick();
            let ab = decompose(&pi);
            let predicted = n % 2 == 0 && ab.beta.weakly_majorizes(&ab.alpha);
            let direct = erdos_gallai(&pi);
            s.claim(direct == predicted, || {
                format!(
                    "{pi}: the inequality test says {direct}, parity plus weak majorization says {predicted}"
                )
            });
        }
    }
    s.finish()
}

/// The block verdict marks split sequences exactly: equal half weights occur
/// precisely when the sequence is graphic and the head weight meets the
/// clique identity at the mark.
pub fn check_split_criterion(max_sum: u32) -> Check {
    let mut s = Suite::new(
        "split-criterion",
        format!("all partitions of weight 1..={max_sum}"),
    );
    for n in 1..=max_sum {
        for pi in all_partitions(n) {
            s.tick();
            let sp = sequence_to_block(&pi);
            let m = mark(&pi);
            let head: u32 = pi.parts()[..m].iter().sum();
            let tail: u32 = pi.parts()[m..].iter().sum();
            let identity = head == (m * (m - 1)) as u32 + tail;
            let split = matches!(sp.verdict, Verdict::SBlock);
            s.claim(split == (erdos_gallai(&pi) && identity), || {
                format!(
                    "{pi}: verdict {:?} disagrees with graphic={} head identity={}",
                    sp.verdict,
                    erdos_gallai(&pi),
                    identity
                )
            });
        }
    }
    s.finish()
}

/// `Dis(n)` is a lattice under majorization: computed meets and joins are
/// the unique extremal bounds, meets take the longer length and joins the
/// shorter, and within one length class last parts propagate (two parts
/// ending in 1 meet and join ending in 1, two ending higher stay higher,
/// and moving up never raises the last part).
pub fn check_dis_closure(max_n: u32) -> Check {
    let mut s = Suite::new(
        "dis-closure",
        format!("all pairs in Dis(n) for 1 <= n <= {max_n}"),
    );
    for n in 1..=max_n {
        let dis = enumerate_dis(n);
        let el = dis.elements();
        for i in 0..el.len() {
            for j in i..el.len() {
                s.tick();
                let (a, b) = (&el[i], &el[j]);
                let (m, jn) = match (dis.meet(a, b), dis.join(a, b)) {
                    (Ok(m), Ok(jn)) => (m, jn),
                    _ => {
                        s.claim(false, || {
                            format!("Dis({n}): meet or join of {a}, {b} failed")
                        });
                        continue;
                    }
                };
                s.claim(a.majorizes(&m) && b.majorizes(&m), || {
                    format!("Dis({n}): {m} is not below both {a} and {b}")
                });
                s.claim(jn.majorizes(a) && jn.majorizes(b), || {
                    format!("Dis({n}): {jn} is not above both {a} and {b}")
                });
                s.claim(
                    el.iter()
                        .all(|c| !(a.majorizes(c) && b.majorizes(c)) || m.majorizes(c)),
                    || format!("Dis({n}): {m} is not the greatest lower bound of {a}, {b}"),
                );
                s.claim(
                    el.iter()
                        .all(|c| !(c.majorizes(a) && c.majorizes(b)) || c.majorizes(&jn)),
                    || format!("Dis({n}): {jn} is not the least upper bound of {a}, {b}"),
                );
                s.claim(
                    m.len() == a.len().max(b.len()) && jn.len() == a.len().min(b.len()),
                    || {
                        format!(
                            "Dis({n}): meet {m} or join {jn} of {a}, {b} breaks the length rule"
                        )
                    },
                );
                if a.len() == b.len() {
                    match (a.last() == Some(1), b.last() == Some(1)) {
                        (true, true) => s
                            .claim(m.last() == Some(1) && jn.last() == Some(1), || {
                                format!("Dis({n}): {a}, {b} end in 1 but {m} or {jn} does not")
                            }),
                        (false, false) => s.claim(
                            m.last().is_some_and(|x| x >= 2) && jn.last().is_some_and(|x| x >= 2),
                            || format!("Dis({n}): {a}, {b} end above 1 but {m} or {jn} does not"),
                        ),
                        _ => {}
                    }
                    if a.majorizes(b) {
                        s.claim(a.last() <= b.last(), || {
                            format!("Dis({n}): {a} is above {b} but has the larger last part")
                        });
                    }
                }
            }
        }
    }
    s.finish()
}

/// The amphora partition of `S-Block(n)` has the advertised anatomy: each
/// class is an amphora whose bottom is the staircase pair and whose tops
/// are the thresholds (equal-length classes) or the covered blocks
/// (unequal-length classes); the class kinds and their comparabilities
/// reproduce `W(n)`; NG flags recompute from last parts and cover every
/// unbalanced block; covered blocks are exactly those whose strict up-set
/// is the matching pair of thresholds; and the maximal blocks are exactly
/// the thresholds.
pub fn check_amphora_structure(max_n: u32) -> Check {
    let mut s = Suite::new(
        "amphora-structure",
        format!("S-Block(n) classes, W(n), and labels for 1 <= n <= {max_n}"),
    );
    for n in 1..=max_n {
        let sp = match build_sblock_poset(n) {
            Ok(sp) => sp,
            Err(e) => {
                s.tick();
                s.claim(false, || format!("S-Block({n}) failed to build: {e}"));
                continue;
            }
        };
        let poset = sp.poset();
        let el = poset.elements();

        match sp.amphora_shapes() {
            Err(e) => {
                s.tick();
                s.claim(false, || format!("S-Block({n}): {e}"));
            }
            Ok(shapes) => {
                for (kind, shape) in shapes {
                    let k = kind.k();
                    let bottom = match kind {
                        AmphoraKind::Unbalanced { .. } => tau(n, k).ok().zip(tau_prime(n, k).ok()),
                        AmphoraKind::Balanced { .. } => {
                            tau(n, k).ok().zip(tau_prime(n, k - 1).ok())
                        }
                    };
                    s.tick();
                    s.claim(
                        bottom
                            .and_then(|(a, b)| make_block(a, b).ok())
                            .is_some_and(|blk| el[shape.bottom] == blk),
                        || {
                            format!(
                                "S-Block({n}) {kind}: bottom {} is not the staircase pair",
                                el[shape.bottom]
                            )
                        },
                    );
                    let mut expected_tops: Vec<usize> = sp
                        .members(kind)
                        .into_iter()
                        .filter(|&i| {
                            if kind.is_balanced() {
                                sp.label(i).in_tc
                            } else {
                                el[i].alpha() == el[i].beta()
                            }
                        })
                        .collect();
                    expected_tops.sort_unstable();
                    s.tick();
                    s.claim(shape.tops == expected_tops, || {
                        format!("S-Block({n}) {kind}: tops differ from the predicted family")
                    });
                }
            }
        }

        let w = build_w(n).expect("n is positive");
        let as_w = |kind: AmphoraKind| match kind {
            AmphoraKind::Unbalanced { k } => WNode::Unbalanced { k },
            AmphoraKind::Balanced { k } => WNode::Balanced { k },
        };
        let wkey = |x: &WNode| match *x {
            WNode::Unbalanced { k } => (k, 1),
            WNode::Balanced { k } => (k, 0),
        };
        let kinds = sp.kinds();
        let mut from_poset: Vec<WNode> = kinds.iter().copied().map(as_w).collect();
        let mut from_w: Vec<WNode> = w.elements().to_vec();
        from_poset.sort_by_key(wkey);
        from_w.sort_by_key(wkey);
        s.tick();
        s.claim(from_poset == from_w, || {
            format!("S-Block({n}): amphora kinds differ from the W({n}) nodes")
        });

        for &c1 in &kinds {
            for &c2 in &kinds {
                if c1 == c2 {
                    continue;
                }
                s.tick();
                let (Some(i1), Some(i2)) = (w.index_of(&as_w(c1)), w.index_of(&as_w(c2))) else {
                    s.claim(false, || {
                        format!("S-Block({n}): a kind is missing from W({n})")
                    });
                    continue;
                };
                let predicted = w.lt(i1, i2);
                let found = sp
                    .members(c1)
                    .iter()
                    .any(|&x| sp.members(c2).iter().any(|&y| poset.le(x, y)));
                s.claim(found == predicted, || {
                    format!(
                        "S-Block({n}): comparability between {c1} and {c2} disagrees with W({n})"
                    )
                });
            }
        }

        for (i, b) in el.iter().enumerate() {
            s.tick();
            let lab = sp.label(i);
            let unbalanced = b.len_alpha() == b.len_beta();
            let ng1 = unbalanced && b.beta().last() == Some(1);
            let ng2 = unbalanced && b.alpha().last().is_some_and(|x| x >= 2);
            s.claim(lab.ng1 == ng1 && lab.ng2 == ng2, || {
                format!("S-Block({n}): NG flags of [{b}] do not recompute")
            });
            if unbalanced {
                s.claim(ng1 || ng2, || {
                    format!("S-Block({n}): unbalanced [{b}] is in neither NG family")
                });
            }
            let mut strict_ups: Vec<usize> =
                poset.up_set(i).into_iter().filter(|&j| j != i).collect();
            strict_ups.sort_unstable();
            let mut thresholds: Vec<usize> = [b.alpha(), b.beta()]
                .into_iter()
                .filter_map(|h| {
                    make_block(h.clone(), h.clone())
                        .ok()
                        .and_then(|t| poset.index_of(&t))
                })
                .collect();
            thresholds.sort_unstable();
            thresholds.dedup();
            let covered = thresholds.len() == 2 && strict_ups == thresholds;
            s.claim(lab.in_tc == covered, || {
                format!(
                    "S-Block({n}): [{b}] has in_tc={} but its strict up-set {} the threshold pair",
                    lab.in_tc,
                    if covered { "is" } else { "is not" }
                )
            });
            s.claim(strict_ups.is_empty() == (b.alpha() == b.beta()), || {
                format!("S-Block({n}): [{b}] maximality disagrees with being a threshold")
            });
        }
    }
    s.finish()
}

/// The closed meet and join formulas agree with brute-force bounds over the
/// whole poset: the formula meet equals the unique maximal common lower
/// bound (the adjoined bottom when none exists), dually for the join.
pub fn check_completion_bounds(max_n: u32) -> Check {
    let mut s = Suite::new(
        "completion-bounds",
        format!("all S-block pairs of weight n <= {max_n}"),
    );
    for n in 1..=max_n {
        let sp = match build_sblock_poset(n) {
            Ok(sp) => sp,
            Err(e) => {
                s.tick();
                s.claim(false, || format!("S-Block({n}) failed to build: {e}"));
                continue;
            }
        };
        let lat = sp.lattice();
        let poset = sp.poset();
        let el = poset.elements();
        for i in 0..el.len() {
            for j in i..el.len() {
                s.tick();
                let (meet, join) = match (lat.meet(&el[i], &el[j]), lat.join(&el[i], &el[j])) {
                    (Ok(m), Ok(jn)) => (m, jn),
                    _ => {
                        s.claim(false, || {
                            format!(
                                "S-Block({n}): meet or join of [{}], [{}] failed",
                                el[i], el[j]
                            )
                        });
                        continue;
                    }
                };
                let lows: Vec<usize> = (0..el.len())
                    .filter(|&c| poset.le(c, i) && poset.le(c, j))
                    .collect();
                let maxima: Vec<usize> = lows
                    .iter()
                    .copied()
                    .filter(|&c| lows.iter().all(|&d| d == c || !poset.lt(c, d)))
                    .collect();
                let expected_meet = match maxima.as_slice() {
                    [] => Some(Extended::Bottom),
                    [one] => Some(Extended::Element(el[*one].clone())),
                    _ => None,
                };
                s.claim(
                    expected_meet.as_ref() == Some(&meet),
                    || match &expected_meet {
                        Some(x) => format!(
                            "S-Block({n}): meet([{}], [{}]) = {meet}, brute force gives {x}",
                            el[i], el[j]
                        ),
                        None => format!(
                            "S-Block({n}): [{}], [{}] have several maximal lower bounds",
                            el[i], el[j]
                        ),
                    },
                );
                let ups: Vec<usize> = (0..el.len())
                    .filter(|&c| poset.le(i, c) && poset.le(j, c))
                    .collect();
                let minima: Vec<usize> = ups
                    .iter()
                    .copied()
                    .filter(|&c| ups.iter().all(|&d| d == c || !poset.lt(d, c)))
                    .collect();
                let expected_join = match minima.as_slice() {
                    [] => Some(Extended::Top),
                    [one] => Some(Extended::Element(el[*one].clone())),
                    _ => None,
                };
                s.claim(
                    expected_join.as_ref() == Some(&join),
                    || match &expected_join {
                        Some(x) => format!(
                            "S-Block({n}): join([{}], [{}]) = {join}, brute force gives {x}",
                            el[i], el[j]
                        ),
                        None => format!(
                            "S-Block({n}): [{}], [{}] have several minimal upper bounds",
                            el[i], el[j]
                        ),
                    },
                );
            }
        }
    }
    s.finish()
}

/// The case table resolves every pair correctly: the row follows from the
/// two kinds, the predicted meet and join locations match the computed
/// elements, and on same-class unbalanced pairs the cell refinement names
/// the exact cells of the operands, the meet, and the join.
pub fn check_case_table(max_n: u32) -> Check {
    let mut s = Suite::new(
        "case-table",
        format!("all S-block pairs of weight n <= {max_n}"),
    );
    for n in 1..=max_n {
        let sp = match build_sblock_poset(n) {
            Ok(sp) => sp,
            Err(e) => {
                s.tick();
                s.claim(false, || format!("S-Block({n}) failed to build: {e}"));
                continue;
            }
        };
        let lat = sp.lattice();
        let el = sp.poset().elements();
        for i in 0..el.len() {
            for j in i..el.len() {
                s.tick();
                let (b1, b2) = (&el[i], &el[j]);
                let (tc, meet, join) =
                    match (lat.table_case(b1, b2), lat.meet(b1, b2), lat.join(b1, b2)) {
                        (Ok(t), Ok(m), Ok(jn)) => (t, m, jn),
                        _ => {
                            s.claim(false, || {
                                format!("S-Block({n}): case lookup failed for [{b1}], [{b2}]")
                            });
                            continue;
                        }
                    };
                let (mut k1, mut k2) = (kind_of_block(b1), kind_of_block(b2));
                if k2 < k1 {
                    std::mem::swap(&mut k1, &mut k2);
                }
                s.claim(tc.kinds == (k1, k2), || {
                    format!("S-Block({n}): kinds of [{b1}], [{b2}] misreported")
                });
                let expected_row = match (k1.is_balanced(), k2.is_balanced()) {
                    (false, false) => match k1.k().abs_diff(k2.k()) {
                        0 => "1",
                        1 => "3b",
                        _ => "3a",
                    },
                    (true, true) => match k1.k().abs_diff(k2.k()) {
                        0 => "2",
                        1 => "4b",
                        _ => "4a",
                    },
                    _ => {
                        let (u, b) = if k1.is_balanced() { (k2, k1) } else { (k1, k2) };
                        if u.k() == b.k() || u.k() + 1 == b.k() {
                            "5"
                        } else {
                            "6"
                        }
                    }
                };
                s.claim(tc.row == expected_row, || {
                    format!(
                        "S-Block({n}): [{b1}], [{b2}] resolve to row {}, kinds say {expected_row}",
                        tc.row
                    )
                });
                s.claim(loc_of(&meet) == tc.meet, || {
                    format!(
                        "S-Block({n}) row {}: meet of [{b1}], [{b2}] lands at {:?}, table says {:?}",
                        tc.row,
                        loc_of(&meet),
                        tc.meet
                    )
                });
                s.claim(loc_of(&join) == tc.join, || {
                    format!(
                        "S-Block({n}) row {}: join of [{b1}], [{b2}] lands at {:?}, table says {:?}",
                        tc.row,
                        loc_of(&join),
                        tc.join
                    )
                });
                match &tc.refinement {
                    None => s.claim(tc.row != "1", || {
                        format!("S-Block({n}): row 1 pair [{b1}], [{b2}] lacks a refinement")
                    }),
                    Some(r) => {
                        s.claim(tc.row == "1", || {
                            format!("S-Block({n}): row {} pair carries a refinement", tc.row)
                        });
                        let cells =
                            cell_of(b1).zip(cell_of(b2)).map(
                                |(x, y)| {
                                    if x <= y {
                                        (x, y)
                                    } else {
                                        (y, x)
                                    }
                                },
                            );
                        s.claim(cells == Some(r.cells), || {
                            format!(
                                "S-Block({n}): cells of [{b1}], [{b2}] are {cells:?}, refinement says {:?}",
                                r.cells
                            )
                        });
                        s.claim(
                            meet.as_block().and_then(cell_of) == Some(r.meet_cell),
                            || {
                                format!(
                                    "S-Block({n}): meet of [{b1}], [{b2}] is not in cell {:?}",
                                    r.meet_cell
                                )
                            },
                        );
                        match r.join_cell {
                            Some(c) => s.claim(
                                join.as_block().and_then(cell_of) == Some(c),
                                || {
                                    format!(
                                        "S-Block({n}): join of [{b1}], [{b2}] is not in cell {c:?}"
                                    )
                                },
                            ),
                            None => s.claim(join == Extended::Top, || {
                                format!(
                                    "S-Block({n}): refinement promises no join cell but join of [{b1}], [{b2}] is {join}"
                                )
                            }),
                        }
                    }
                }
            }
        }
    }
    s.finish()
}

/// The NG correspondences hold: the three last-part cells partition every
/// equal-length amphora, both certified cell bijections run clean on every
/// feasible pair (the length-1 clique-tail family having no image), and
/// each tail family is carried onto its image amphora by dropping the tails
/// and lowering the cores, preserving order both ways.
pub fn check_ng_bijections(max_n: u32) -> Check {
    let mut s = Suite::new(
        "ng-bijections",
        format!(
            "amphora cells for n <= {max_n}; tail families with core weight <= 40, length <= 5"
        ),
    );
    for n in 1..=max_n {
        for k in 1..=max_parts(n) {
            let Ok(src) = amphora_poset(n, k) else {
                continue;
            };
            let cells: Vec<Option<NgCell>> = src.elements().iter().map(cell_of).collect();
            let count = |c: NgCell| cells.iter().filter(|&&x| x == Some(c)).count();
            let (one, two, both) = (
                count(NgCell::OneStar),
                count(NgCell::TwoStar),
                count(NgCell::Both),
            );
            s.tick();
            s.claim(
                !cells.contains(&None) && one + two + both == src.len(),
                || format!("A({n},{k}): the three cells do not partition the amphora"),
            );
            s.tick();
            if k >= 2 {
                match ng_star_bijection(NgStar::One, n, k) {
                    Ok(pairs) => s.claim(pairs.len() == one, || {
                        format!(
                            "A({n},{k}): clique-tail cell has {one} members but {} map",
                            pairs.len()
                        )
                    }),
                    Err(e) => s.claim(false, || format!("A({n},{k}) clique-tail cell: {e}")),
                }
            } else {
                s.claim(
                    matches!(
                        ng_star_bijection(NgStar::One, n, 1),
                        Err(SBlockError::NoImageAmphora)
                    ),
                    || format!("A({n},1): the clique-tail family should have no image"),
                );
            }
            s.tick();
            match ng_star_bijection(NgStar::Two, n, k) {
                Ok(pairs) => s.claim(pairs.len() == two, || {
                    format!(
                        "A({n},{k}): stable-tail cell has {two} members but {} map",
                        pairs.len()
                    )
                }),
                Err(e) => s.claim(false, || format!("A({n},{k}) stable-tail cell: {e}")),
            }
        }
    }

    for k in 1..=5usize {
        for n in 1..=40u32 {
            let Ok(ng3) = build_ng3_poset(n, k) else {
                continue;
            };
            s.tick();
            let target = match amphora_poset(n - 4 * k as u32, k) {
                Ok(t) => t,
                Err(e) => {
                    s.claim(false, || {
                        format!("NG3({n},{k}) is nonempty but its image amphora failed: {e}")
                    });
                    continue;
                }
            };
            let shrink = |p: &Partition| {
                let core: Vec<u32> = p.parts()[..p.len() - 2]
                    .iter()
                    .map(|x| x.saturating_sub(4))
                    .collect();
                Partition::new(core).ok()
            };
            let mapped: Vec<Option<Block>> = ng3
                .poset()
                .elements()
                .iter()
                .map(|b| {
                    shrink(b.alpha())
                        .zip(shrink(b.beta()))
                        .and_then(|(a, c)| make_block(a, c).ok())
                })
                .collect();
            if mapped.iter().any(Option::is_none) {
                s.claim(false, || {
                    format!("NG3({n},{k}): dropping tails broke a block clause")
                });
                continue;
            }
            let mapped: Vec<Block> = mapped.into_iter().flatten().collect();
            s.claim(mapped.len() == target.len(), || {
                format!(
                    "NG3({n},{k}) has {} elements, its image amphora {}",
                    mapped.len(),
                    target.len()
                )
            });
            s.claim(mapped.iter().all(|b| target.index_of(b).is_some()), || {
                format!("NG3({n},{k}): an image block is outside the image amphora")
            });
            let mut dedup = mapped.clone();
            dedup.sort();
            dedup.dedup();
            s.claim(dedup.len() == mapped.len(), || {
                format!("NG3({n},{k}): the tail-dropping map is not injective")
            });
            let src = ng3.poset();
            let order_ok = (0..mapped.len()).all(|x| {
                (0..mapped.len()).all(|y| {
                    crate::block::block_majorizes(&mapped[x], &mapped[y])
                        .is_ok_and(|v| v == src.le(y, x))
                })
            });
            s.claim(order_ok, || {
                format!("NG3({n},{k}): the tail-dropping map does not preserve order")
            });
        }
    }

    s.tick();
    let named = build_ng3_poset(38, 5);
    s.claim(
        named
            .as_ref()
            .is_ok_and(|x| x.len() == 6 && x.poset().covers().len() == 6),
        || "NG3(38,5) should have 6 elements and 6 cover edges".into(),
    );
    s.finish()
}

/// The NG families are empty exactly at the published edges: no stable-tail
/// members in the length-4 amphora of weight 10, clique-tail members in a
/// length-1 amphora only at weight 1, and each tail family nonempty exactly
/// from core weight `4k + k(k+1)/2` on.
pub fn check_family_boundaries() -> Check {
    let mut s = Suite::new(
        "family-boundaries",
        "NG family emptiness at the edges of the parameter grid".into(),
    );
    match build_sblock_poset(10) {
        Ok(sp) => {
            s.tick();
            s.claim(sp.ng_subsets(4).ng2.is_empty(), || {
                "the length-4 amphora of weight 10 should have no stable-tail members".into()
            });
        }
        Err(e) => {
            s.tick();
            s.claim(false, || format!("S-Block(10): {e}"));
        }
    }
    for n in 1..=16u32 {
        match build_sblock_poset(n) {
            Ok(sp) => {
                s.tick();
                let ng1 = sp.ng_subsets(1).ng1;
                s.claim(ng1.is_empty() == (n != 1), || {
                    format!("A({n},1) clique-tail members: {}", ng1.len())
                });
            }
            Err(e) => {
                s.tick();
                s.claim(false, || format!("S-Block({n}): {e}"));
            }
        }
    }
    for k in 1..=5usize {
        for n in 1..=40u32 {
            s.tick();
            let feasible = u64::from(n) >= (4 * k + k * (k + 1) / 2) as u64;
            match build_ng3_poset(n, k) {
                Ok(_) => s.claim(feasible, || {
                    format!("NG3({n},{k}) is nonempty below the staircase-plus-tails bound")
                }),
                Err(SBlockError::EmptyNg3 { .. }) => s.claim(!feasible, || {
                    format!("NG3({n},{k}) is empty above the staircase-plus-tails bound")
                }),
                Err(e) => s.claim(false, || format!("NG3({n},{k}): unexpected {e}")),
            }
        }
    }
    s.finish()
}

/// Every sequence-level flag agrees with a brute-force graph oracle on a
/// concrete realization: split verdicts match realizability, realized
/// graphs carry the right degree structure, and threshold, balance,
/// chromatic, and NG classifications coincide with their graph-side
/// counterparts. Tail-family sequences realize to pseudo-split graphs in
/// the five-cycle class.
pub fn check_oracle_agreement(max_sum: u32) -> Check {
    let mut s = Suite::new(
        "oracle-agreement",
        format!("sequence flags vs graph oracles, weights 1..={max_sum}"),
    );
    let mut dis_cache: HashMap<u32, DisPoset> = HashMap::new();
    for total in 1..=max_sum {
        for pi in all_partitions(total) {
            s.tick();
            let sp = sequence_to_block(&pi);
            let split = matches!(sp.verdict, Verdict::SBlock);
            let realized = realize_split(&pi);
            s.claim(realized.is_ok() == split, || {
                format!(
                    "{pi}: split realization is_ok={} but verdict is {:?}",
                    realized.is_ok(),
                    sp.verdict
                )
            });
            let cls = make_block(sp.alpha.clone(), sp.beta.clone()).ok().map(|b| {
                if b.is_sblock() {
                    let dis = dis_cache
                        .entry(b.n1())
                        .or_insert_with(|| enumerate_dis(b.n1()));
                    classify_in(&b, dis)
                } else {
                    classify(&b)
                }
            });
            if let (Ok(g), Some(c)) = (&realized, &cls) {
                let fs = forbidden_subgraphs(g);
                s.claim(fs.is_split(), || {
                    format!("{pi}: the realization contains a forbidden subgraph")
                });
                s.claim(c.is_threshold == fs.is_threshold(), || {
                    format!("{pi}: threshold flag disagrees with the subgraph scan")
                });
                match balance_status(g) {
                    Ok(bal) => s.claim(c.is_balanced == bal.is_balanced(), || {
                        format!("{pi}: balance flag disagrees with the partition search")
                    }),
                    Err(e) => s.claim(false, || format!("{pi}: balance status failed: {e}")),
                }
                match chromatic_number_bounded(g, 32) {
                    Ok(chi) => s.claim(chi as usize == mark(&pi), || {
                        format!(
                            "{pi}: chromatic number {chi} differs from the mark {}",
                            mark(&pi)
                        )
                    }),
                    Err(e) => s.claim(false, || format!("{pi}: coloring failed: {e}")),
                }
                match ng_status_bounded(g, 32) {
                    Ok(st) => {
                        s.claim(
                            c.is_ng1 == matches!(st, NgStatus::Ng1 | NgStatus::Ng1And2),
                            || format!("{pi}: NG-1 flag disagrees with graph status {st}"),
                        );
                        s.claim(
                            c.is_ng2 == matches!(st, NgStatus::Ng2 | NgStatus::Ng1And2),
                            || format!("{pi}: NG-2 flag disagrees with graph status {st}"),
                        );
                    }
                    Err(e) => s.claim(false, || format!("{pi}: NG status failed: {e}")),
                }
            }
            let ng3_flag = cls.as_ref().is_some_and(|c| c.is_ng3);
            let realized_ng3 = realize_ng3(&pi);
            s.claim(realized_ng3.is_ok() == ng3_flag, || {
                format!(
                    "{pi}: five-cycle realization is_ok={} but the tail-family flag is {ng3_flag}",
                    realized_ng3.is_ok()
                )
            });
            if let Ok(g) = &realized_ng3 {
                let fs = forbidden_subgraphs(g);
                s.claim(fs.is_pseudo_split() && !fs.is_split(), || {
                    format!("{pi}: the five-cycle realization is not properly pseudo-split")
                });
                match ng_status_bounded(g, 32) {
                    Ok(st) => s.claim(st == NgStatus::Ng3, || {
                        format!("{pi}: five-cycle realization has NG status {st}")
                    }),
                    Err(e) => s.claim(false, || format!("{pi}: NG status failed: {e}")),
                }
                match chromatic_number_bounded(g, 32) {
                    Ok(chi) => s.claim(chi as usize == mark(&pi), || {
                        format!(
                            "{pi}: chromatic number {chi} differs from the mark {}",
                            mark(&pi)
                        )
                    }),
                    Err(e) => s.claim(false, || format!("{pi}: coloring failed: {e}")),
                }
            }
        }
    }
    s.finish()
}

/// Wraps the exhaustive graph battery as a suite: every labeled graph
/// without isolated vertices up to the given order is tested against all
/// six graph-level characterizations.
pub fn check_graph_theorems(max_vertices: usize) -> Check {
    let report = verify_theorems(max_vertices);
    let mut counterexamples = Vec::new();
    for c in &report.checks {
        for cx in &c.counterexamples {
            if counterexamples.len() < CX_CAP {
                counterexamples.push(format!("{}: {cx}", c.name));
            }
        }
    }
    Check {
        name: "graph-theorems",
        scope: format!(
            "all labeled graphs without isolated vertices on up to {} vertices",
            report.max_vertices
        ),
        pass: report.pass,
        checked: report.graphs_checked,
        counterexamples,
    }
}

/// Runs every suite with coherent bounds. Partition-side suites sweep side
/// weights up to `max_n`; sequence-side suites sweep total weights up to
/// `2 * max_n` (a split sequence of side weight n has total weight 2n);
/// tail-family and boundary sweeps are fixed; the graph battery enumerates
/// up to `graphs_max_v` vertices (at most 7).
pub fn run_all(max_n: u32, graphs_max_v: usize) -> Vec<Check> {
    vec![
        check_dis_extremes(max_n),
        check_decomposition_shape(2 * max_n),
        check_graphic_criterion(2 * max_n),
        check_split_criterion(2 * max_n),
        check_dis_closure(max_n),
        check_amphora_structure(max_n),
        check_completion_bounds(max_n),
        check_case_table(max_n),
        check_ng_bijections(max_n),
        check_family_boundaries(),
        check_oracle_agreement(2 * max_n),
        check_graph_theorems(graphs_max_v),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_battery_passes() {
        for c in run_all(8, 5) {
            assert!(c.pass, "{} failed: {:?}", c.name, c.counterexamples);
            assert!(c.checked > 0, "{} checked nothing", c.name);
            assert!(c.counterexamples.is_empty());
        }
    }

    #[test]
    fn failure_tally_is_capped_with_a_summary_line() {
        let mut s = Suite::new("demo", "cap handling".into());
        for i in 0..CX_CAP + 5 {
            s.tick();
            s.claim(false, || format!("bad {i}"));
        }
        let c = s.finish();
        assert!(!c.pass);
        assert_eq!(c.checked, (CX_CAP + 5) as u64);
        assert_eq!(c.counterexamples.len(), CX_CAP + 1);
        assert_eq!(
            c.counterexamples.last().unwrap(),
            "... 25 failures in total"
        );
    }

    #[test]
    fn graph_battery_reports_its_domain_size() {
        let c = check_graph_theorems(5);
        assert!(c.pass, "{:?}", c.counterexamples);
        assert_eq!(c.checked, 814);
    }
}
