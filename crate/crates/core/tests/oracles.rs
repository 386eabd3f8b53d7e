mod common;

use common::{compare_small, SmallGroup};
use grpclass::caps::Caps;
use grpclass::classes::{hierarchy_report, ClassId};
use grpclass::harness::Manifest;
use grpclass::subgroups::all_subgroup_classes;
use grpclass::zoo;

#[test]
fn small_corpus_groups_match_brute_force() {
    let manifest = Manifest::default_corpus(&Caps::default());
    let mut compared = 0;
    for entry in &manifest.entries {
        let g = entry.build().unwrap();
        if g.order() > 48 {
            continue;
        }
        let report = hierarchy_report(&g, &entry.id);
        compare_small(&entry.id, &g, &report.verdicts).unwrap();
        compared += 1;
    }
    assert!(compared >= 60, "only {compared} groups compared");
}

#[test]
fn class_counts_of_small_groups() {
    for (name, count) in [
        ("C6", 4),
        ("C1", 1),
        ("S3", 4),
        ("Q8", 6),
        ("D8", 8),
        ("S4", 11),
        ("A4", 5),
        ("A5", 9),
    ] {
        let g = zoo::by_name(name).unwrap();
        assert_eq!(all_subgroup_classes(&g).unwrap().len(), count, "{name}");
        assert_eq!(
            SmallGroup::new(&g).subgroup_classes().len(),
            count,
            "{name} oracle"
        );
    }
}

#[test]
fn direct_products_match_brute_force() {
    for name in ["S3xC5", "C2xC3", "Q8xC3", "A4xC3"] {
        let g = zoo::by_name(name).unwrap();
        let report = hierarchy_report(&g, name);
        compare_small(name, &g, &report.verdicts).unwrap();
    }
}

#[test]
fn a5_verdicts_match_brute_force() {
    let g = zoo::alternating(5).unwrap();
    let report = hierarchy_report(&g, "A5");
    compare_small("A5", &g, &report.verdicts).unwrap();
    assert!(report.is_member(ClassId::B));
}

#[test]
fn s4_cyclic_witness_is_not_conjugate() {
    let g = zoo::symmetric(4).unwrap();
    let d = grpclass::classes::decide(&g, ClassId::CPi);
    let w = d.witness.unwrap();
    let h = common::subgroup_from_text(&w.first.generators, g.degree());
    let k = common::subgroup_from_text(&w.second.generators, g.degree());
    assert_eq!(h.len(), k.len());
    assert!(!common::conjugates_into(&g, &h, &k));
}
