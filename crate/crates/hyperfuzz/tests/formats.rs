mod common;

use hyperfuzz::{parse_fuzzy, parse_hypergroupoid, render_fuzzy, render_hypergroupoid};
use hyperfuzz_core::explore::{enumerate_fuzzy_subsets, enumerate_hypergroupoids, Budget};
use hyperfuzz_core::{ElementSet, FuzzySubset, Grade, HyperGroupoid};
use proptest::prelude::*;

#[test]
fn every_two_element_table_round_trips() {
    let mut count = 0;
    for h in enumerate_hypergroupoids(2, Budget::DEFAULT).unwrap() {
        let text = render_hypergroupoid(&h);
        assert_eq!(parse_hypergroupoid(&text).unwrap(), h, "{text}");
        count += 1;
    }
    assert_eq!(count, 81);
}

#[test]
fn every_grid_subset_round_trips() {
    let h = common::left_zero();
    for f in enumerate_fuzzy_subsets(&h, 4, Budget::DEFAULT).unwrap() {
        assert_eq!(parse_fuzzy(&render_fuzzy(&h, &f), &h).unwrap(), f);
    }
}

#[test]
fn error_fixtures_report_class_and_position() {
    for (name, class, line, column) in common::ERROR_FIXTURES {
        let e = common::fixture_error(name);
        assert_eq!(e.kind.class(), class, "{name}: {e}");
        assert_eq!((e.position.line, e.position.column), (line, column), "{name}: {e}");
    }
}

#[test]
fn unordered_cells_and_comments_parse_like_rendered_form() {
    let text = "# left zero\r\nelements: a b\r\nb b : b   # last\r\nb a : b\r\n\r\na b : a\r\na a : a\r\n";
    assert_eq!(parse_hypergroupoid(text).unwrap(), common::left_zero());
}

#[test]
fn grades_normalize_on_parse() {
    let h = common::left_zero();
    let f = parse_fuzzy("b 0\na 2/4\n", &h).unwrap();
    assert_eq!(f.grades(), [Grade::new(1, 2).unwrap(), Grade::ZERO]);
    assert_eq!(render_fuzzy(&h, &f), "a 1/2\nb 0\n");
}

fn table() -> impl Strategy<Value = HyperGroupoid> {
    (1..=5usize).prop_flat_map(|n| {
        proptest::collection::vec(1..(1u64 << n), n * n).prop_map(|cells| {
            HyperGroupoid::with_default_names(cells.into_iter().map(ElementSet::from_bits).collect()).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn random_tables_and_subsets_round_trip(
        (h, grades) in table().prop_flat_map(|h| {
            let n = h.size();
            (Just(h), proptest::collection::vec((0..=12i64, 1..=12i64), n))
        })
    ) {
        prop_assert_eq!(&parse_hypergroupoid(&render_hypergroupoid(&h)).unwrap(), &h);
        let f = FuzzySubset::from_grades(
            grades.into_iter().map(|(p, q)| Grade::new(p.min(q), q).unwrap()).collect(),
        );
        prop_assert_eq!(parse_fuzzy(&render_fuzzy(&h, &f), &h).unwrap(), f);
    }
}
