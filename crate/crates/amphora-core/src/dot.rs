//! Deterministic Graphviz output for the Hasse diagrams.
//!
//! Output is byte-for-byte reproducible for a fixed input: nodes are listed
//! in element order, edges sorted by (lower, upper), and diagrams read
//! bottom-up (`rankdir=BT`, each cover drawn as `lower -> upper`).

use std::fmt::Write as _;

use crate::dis::DisPoset;
use crate::sblock::{Ng3Poset, SBlockPoset};

fn edges_sorted(covers: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = covers.iter().map(|&(hi, lo)| (lo, hi)).collect();
    edges.sort_unstable();
    edges
}

fn write_edges(out: &mut String, covers: &[(usize, usize)]) {
    for (lo, hi) in edges_sorted(covers) {
        writeln!(out, "  n{lo} -> n{hi};").unwrap();
    }
}

/// Hasse diagram of `Dis(n)` or `Dis_k(n)`.
pub fn dis_dot(dis: &DisPoset) -> String {
    let name = match dis.k() {
        Some(k) => format!("dis_{}_{}", dis.n(), k),
        None => format!("dis_{}", dis.n()),
    };
    let mut out = String::new();
    writeln!(out, "digraph {name} {{").unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=ellipse];").unwrap();
    for (i, p) in dis.elements().iter().enumerate() {
        writeln!(out, "  n{i} [label=\"{p}\"];").unwrap();
    }
    write_edges(&mut out, dis.covers());
    out.push_str("}\n");
    out
}

/// Hasse diagram of the S-block poset, clustered by amphora. Thresholds
/// (equal halves) are drawn as boxes; the NG and cover flags ride along as
/// tooltips so renderers can surface them.
pub fn sblock_dot(sp: &SBlockPoset) -> String {
    let mut out = String::new();
    writeln!(out, "digraph sblock_{} {{", sp.n()).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=ellipse];").unwrap();
    for (c, kind) in sp.kinds().into_iter().enumerate() {
        writeln!(out, "  subgraph cluster_{c} {{").unwrap();
        writeln!(out, "    label=\"{kind}\";").unwrap();
        for i in sp.members(kind) {
            let b = sp.poset().element(i);
            let label = sp.label(i);
            let shape = if b.alpha() == b.beta() {
                "box"
            } else {
                "ellipse"
            };
            let mut flags = Vec::new();
            if label.ng1 {
                flags.push("NG-1");
            }
            if label.ng2 {
                flags.push("NG-2");
            }
            if label.in_tc {
                flags.push("TC");
            }
            let tooltip = if flags.is_empty() {
                String::new()
            } else {
                flags.join(", ")
            };
            writeln!(
                out,
                "    n{i} [label=\"{b}\", shape={shape}, tooltip=\"{tooltip}\"];"
            )
            .unwrap();
        }
        writeln!(out, "  }}").unwrap();
    }
    write_edges(&mut out, sp.poset().covers());
    out.push_str("}\n");
    out
}

/// Hasse diagram of a five-cycle-core family.
pub fn ng3_dot(ng3: &Ng3Poset) -> String {
    let mut out = String::new();
    writeln!(out, "digraph ng3_{}_{} {{", ng3.n(), ng3.k()).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=ellipse];").unwrap();
    for (i, b) in ng3.poset().elements().iter().enumerate() {
        writeln!(out, "  n{i} [label=\"{b}\"];").unwrap();
    }
    write_edges(&mut out, ng3.poset().covers());
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dis::enumerate_dis;
    use crate::sblock::{build_ng3_poset, build_sblock_poset};

    #[test]
    fn dis_diagram_is_stable_and_complete() {
        let dis = enumerate_dis(10);
        let dot = dis_dot(&dis);
        assert_eq!(dot, dis_dot(&dis));
        assert!(dot.starts_with("digraph dis_10 {"));
        assert_eq!(dot.matches(" -> ").count(), dis.covers().len());
        assert!(dot.contains("[label=\"7,2,1\"]"));
        assert!(dot.ends_with("}\n"));
    }

    #[test]
    fn sblock_diagram_clusters_and_shapes() {
        let sp = build_sblock_poset(10).unwrap();
        let dot = sblock_dot(&sp);
        assert_eq!(dot, sblock_dot(&sp));
        assert_eq!(dot.matches("subgraph cluster_").count(), 7);
        assert!(dot.contains("label=\"U(3)\";"));
        assert!(dot.contains("label=\"5,3,2|5,3,2\", shape=box"));
        assert!(dot.contains("label=\"5,3,2|7,2,1\", shape=ellipse"));
        assert_eq!(dot.matches(" -> ").count(), sp.poset().covers().len());
    }

    #[test]
    fn ng3_diagram_has_six_edges_for_the_worked_family() {
        let ng3 = build_ng3_poset(38, 5).unwrap();
        let dot = ng3_dot(&ng3);
        assert!(dot.starts_with("digraph ng3_38_5 {"));
        assert_eq!(dot.matches(" -> ").count(), 6);
    }
}
