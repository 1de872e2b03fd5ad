//! Acceptance battery: ten end-to-end criteria, each printing one
//! `ACCEPTANCE <n>: PASS/FAIL` line. Frozen values come from independent
//! brute-force enumeration.

use std::panic::{catch_unwind, resume_unwind, UnwindSafe};

use amphora_core::checks::{
    check_amphora_structure, check_case_table, check_completion_bounds, check_dis_closure,
    check_family_boundaries, check_graph_theorems, check_graphic_criterion, check_ng_bijections,
    check_oracle_agreement,
};
use amphora_core::{
    amphora_poset, block_lattice, build_ng3_poset, build_sblock_poset, build_w, decompose,
    enumerate_dis, make_block, mark, AmphoraKind, Check, Extended, Partition,
};

fn criterion(number: usize, label: &str, body: impl FnOnce() + UnwindSafe) {
    match catch_unwind(body) {
        Ok(()) => println!("ACCEPTANCE {number}: PASS {label}"),
        Err(e) => {
            println!("ACCEPTANCE {number}: FAIL {label}");
            resume_unwind(e);
        }
    }
}

fn assert_clean(c: Check) {
    assert!(c.pass, "{} failed on {:?}", c.name, c.counterexamples);
}

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn criterion_1_worked_decompositions() {
    criterion(1, "the two worked decompositions reproduce exactly", || {
        let pi = p("6,5,2,2,2,1,1,1");
        let ab = decompose(&pi);
        assert_eq!(
            (ab.alpha.to_string(), ab.beta.to_string()),
            ("6,4".into(), "7,3".into())
        );
        assert_eq!(mark(&pi), 3);

        let pi = p("6,4,3,2,2,1,1,1");
        let ab = decompose(&pi);
        assert_eq!(
            (ab.alpha.to_string(), ab.beta.to_string()),
            ("6,3,1".into(), "7,3".into())
        );
        assert_eq!(mark(&pi), 3);
    });
}

#[test]
fn criterion_2_dis_10_hasse_diagram() {
    criterion(
        2,
        "Dis(10) has 10 elements and the frozen cover edges",
        || {
            let d = enumerate_dis(10);
            assert_eq!(d.len(), 10);
            let idx = |s: &str| d.index_of(&p(s)).unwrap();
            let mut expected: Vec<(usize, usize)> = [
                ("10", "9,1"),
                ("9,1", "8,2"),
                ("8,2", "7,3"),
                ("7,3", "6,4"),
                ("7,3", "7,2,1"),
                ("6,4", "6,3,1"),
                ("7,2,1", "6,3,1"),
                ("6,3,1", "5,4,1"),
                ("5,4,1", "5,3,2"),
                ("5,3,2", "4,3,2,1"),
            ]
            .iter()
            .map(|&(u, l)| (idx(u), idx(l)))
            .collect();
            expected.sort_unstable();
            assert_eq!(d.covers(), &expected[..]);
        },
    );
}

#[test]
fn criterion_3_weight_10_amphora_partition() {
    criterion(
        3,
        "the weight-10 amphora partition, W(10), and the element count reproduce",
        || {
            let sp = build_sblock_poset(10).unwrap();
            assert_eq!(sp.poset().len(), 45);
            let el = sp.poset().elements();
            let name = |i: usize| el[i].to_string();

            let u4 = sp.members(AmphoraKind::Unbalanced { k: 4 });
            assert_eq!(u4.len(), 1);
            assert_eq!(name(u4[0]), "4,3,2,1|4,3,2,1");

            let shapes = sp.amphora_shapes().unwrap();
            let shape_of = |kind: AmphoraKind| {
                shapes
                    .iter()
                    .find(|(k, _)| *k == kind)
                    .map(|(_, s)| s.clone())
                    .unwrap()
            };

            let u3 = shape_of(AmphoraKind::Unbalanced { k: 3 });
            assert_eq!(name(u3.bottom), "5,3,2|7,2,1");
            let mut tops: Vec<String> = u3.tops.iter().map(|&i| name(i)).collect();
            tops.sort();
            assert_eq!(
                tops,
                ["5,3,2|5,3,2", "5,4,1|5,4,1", "6,3,1|6,3,1", "7,2,1|7,2,1"]
            );

            let b3 = shape_of(AmphoraKind::Balanced { k: 3 });
            assert_eq!(name(b3.bottom), "5,3,2|9,1");
            let mut tops: Vec<String> = b3.tops.iter().map(|&i| name(i)).collect();
            tops.sort();
            assert_eq!(tops, ["6,3,1|6,4", "7,2,1|7,3"]);

            let w = build_w(10).unwrap();
            let wnames: Vec<String> = w.elements().iter().map(|x| x.to_string()).collect();
            assert_eq!(
                wnames,
                ["U(1)", "B(2)", "U(2)", "B(3)", "U(3)", "B(4)", "U(4)"]
            );
            assert_eq!(
                w.covers(),
                &[(0, 1), (2, 1), (2, 3), (4, 3), (4, 5), (6, 5)]
            );
        },
    );
}

#[test]
fn criterion_4_meet_join_against_brute_force() {
    criterion(
        4,
        "closed meet/join formulas match brute force for all pairs up to weight 12",
        || {
            assert_clean(check_completion_bounds(12));
            let lat = block_lattice(10).unwrap();
            let b1 = make_block(p("4,3,2,1"), p("7,2,1")).unwrap();
            let b2 = make_block(p("5,3,2"), p("7,3")).unwrap();
            assert_eq!(lat.meet(&b1, &b2).unwrap(), Extended::Bottom);
        },
    );
}

#[test]
fn criterion_5_case_table_predictions() {
    criterion(
        5,
        "case-table locations and cell refinements match up to weight 12",
        || {
            assert_clean(check_case_table(12));
        },
    );
}

#[test]
fn criterion_6_structural_closure_suites() {
    criterion(
        6,
        "structural closure suites are violation-free up to weight 14",
        || {
            assert_clean(check_dis_closure(14));
            assert_clean(check_amphora_structure(14));
            assert_clean(check_completion_bounds(14));
        },
    );
}

#[test]
fn criterion_7_order_isomorphisms() {
    criterion(
        7,
        "cell and tail-family order isomorphisms certify up to weight 16",
        || {
            assert_clean(check_ng_bijections(16));
            let ng3 = build_ng3_poset(38, 5).unwrap();
            assert_eq!(ng3.len(), 6);
            assert_eq!(amphora_poset(18, 5).unwrap().len(), 6);
        },
    );
}

#[test]
fn criterion_8_family_boundaries() {
    criterion(
        8,
        "NG family boundaries hold across the parameter grid",
        || {
            assert_clean(check_family_boundaries());
            let sp = build_sblock_poset(10).unwrap();
            assert!(sp.ng_subsets(4).ng2.is_empty());
            assert!(sp.ng_subsets(1).ng1.is_empty());
        },
    );
}

#[test]
fn criterion_9_graph_oracle_agreement() {
    criterion(
        9,
        "sequence flags match graph oracles to weight 24; graphic test to 30",
        || {
            assert_clean(check_oracle_agreement(24));
            assert_clean(check_graphic_criterion(30));
        },
    );
}

#[test]
fn criterion_10_graph_scale_battery() {
    criterion(
        10,
        "the exhaustive battery over 7-vertex graphs reports zero counterexamples",
        || {
            let c = check_graph_theorems(7);
            assert_eq!(c.checked, 1_915_547);
            assert_clean(c);
        },
    );
}
