//! End-to-end classification checks: the multinet corpus, the 16 classes
//! and their table rows, and the well-indexing invariants.

use multinet::exec::ExecMode;
use multinet::golden;
use multinet::{classify_order6, is_isomorphic, is_well_indexed};

#[test]
fn corpus_collapses_to_sixteen_classes() {
    let c = classify_order6(ExecMode::Parallel).unwrap();
    // 146 (table, proper subsquare) pairs across the 12 catalog tables.
    assert_eq!(c.total_multinets, 146);
    assert_eq!(c.classes.len(), 16);
    assert_eq!(c.classes.iter().map(|x| x.member_count).sum::<usize>(), 146);
}

#[test]
fn classification_matches_the_reference_table() {
    let c = classify_order6(ExecMode::Parallel).unwrap();
    for (class, row) in c.classes.iter().zip(&golden::CLASSIFICATION) {
        assert_eq!(class.id, row.id);
        assert_eq!(class.superline_length, row.superline_length, "M{}", row.id);
        assert_eq!(class.aut_order, row.aut_order, "M{}", row.id);
        let names: Vec<&str> = class.quasigroup_names.iter().map(|s| s.as_str()).collect();
        assert_eq!(names, row.quasigroups, "M{}", row.id);
    }
    // Exactly two classes carry a superline of length 3.
    let long: Vec<usize> = c
        .classes
        .iter()
        .filter(|x| x.superline_length == 3)
        .map(|x| x.id)
        .collect();
    assert_eq!(long, vec![1, 2]);
}

#[test]
fn representatives_are_well_indexed_and_distinct() {
    let c = classify_order6(ExecMode::Parallel).unwrap();
    for class in &c.classes {
        assert!(is_well_indexed(&class.representative), "M{}", class.id);
        class.representative.validate().unwrap();
        let sl = class.representative.superline().unwrap().clone();
        assert_eq!(
            class.representative.line_length(&sl).unwrap(),
            class.superline_length
        );
    }
    for i in 0..c.classes.len() {
        for j in (i + 1)..c.classes.len() {
            assert!(
                is_isomorphic(
                    c.classes[i].representative.structure(),
                    c.classes[j].representative.structure()
                )
                .is_none(),
                "M{} and M{} are isomorphic",
                c.classes[i].id,
                c.classes[j].id
            );
        }
    }
}

#[test]
fn sequential_and_parallel_classification_agree() {
    let a = classify_order6(ExecMode::Sequential).unwrap();
    let b = classify_order6(ExecMode::Parallel).unwrap();
    assert_eq!(a.total_multinets, b.total_multinets);
    for (x, y) in a.classes.iter().zip(&b.classes) {
        assert_eq!(x.id, y.id);
        assert_eq!(x.aut_order, y.aut_order);
        assert_eq!(x.representative.structure(), y.representative.structure());
    }
}

#[test]
fn m3_long_line_has_length_2() {
    let c = classify_order6(ExecMode::Parallel).unwrap();
    let m3 = c.class(3).unwrap();
    let sl = m3.representative.superline().unwrap().clone();
    assert_eq!(m3.representative.line_length(&sl).unwrap(), 2);
}
