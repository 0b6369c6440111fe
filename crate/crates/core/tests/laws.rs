use hyperfuzz_core::fuzzy::{compose, leq, meet};
use hyperfuzz_core::{Element, ElementSet, FuzzySubset, Grade, HyperGroupoid};
use proptest::prelude::*;

fn table(max_n: usize) -> impl Strategy<Value = HyperGroupoid> {
    (1..=max_n).prop_flat_map(|n| {
        let top = (1u64 << n) - 1;
        proptest::collection::vec(1..=top, n * n).prop_map(|cells| {
            HyperGroupoid::with_default_names(cells.into_iter().map(ElementSet::from_bits).collect()).unwrap()
        })
    })
}

fn subset_of(n: usize) -> impl Strategy<Value = ElementSet> {
    (0..(1u64 << n)).prop_map(ElementSet::from_bits)
}

fn nonempty_subset_of(n: usize) -> impl Strategy<Value = ElementSet> {
    (1..(1u64 << n)).prop_map(ElementSet::from_bits)
}

fn fuzzy_of(n: usize, k: u32) -> impl Strategy<Value = FuzzySubset> {
    proptest::collection::vec(0..=k, n)
        .prop_map(move |is| FuzzySubset::from_grades(is.into_iter().map(|i| Grade::on_grid(i, k)).collect()))
}

fn with_sets() -> impl Strategy<Value = (HyperGroupoid, ElementSet, ElementSet, ElementSet, ElementSet)> {
    table(4).prop_flat_map(|h| {
        let n = h.size();
        (Just(h), nonempty_subset_of(n), nonempty_subset_of(n), subset_of(n), subset_of(n))
    })
}

fn with_fuzzy() -> impl Strategy<Value = (HyperGroupoid, FuzzySubset, FuzzySubset, FuzzySubset)> {
    (table(4), 1..=4u32).prop_flat_map(|(h, k)| {
        let n = h.size();
        (Just(h), fuzzy_of(n, k), fuzzy_of(n, k), fuzzy_of(n, k))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn star_membership((h, a, b, _, _) in with_sets()) {
        let ab = h.star(a, b).unwrap();
        prop_assert!(!ab.is_empty());
        for x in h.elements() {
            let witnessed = a.iter().any(|p| b.iter().any(|q| h.hyperop(p, q).contains(x)));
            prop_assert_eq!(ab.contains(x), witnessed);
        }
        for p in a {
            for q in b {
                prop_assert!(h.hyperop(p, q).is_subset(ab));
            }
        }
    }

    #[test]
    fn star_is_monotone((h, a, c, extra_b, extra_d) in with_sets()) {
        let (b, d) = (a | extra_b, c | extra_d);
        prop_assert!(h.star(a, c).unwrap().is_subset(h.star(b, d).unwrap()));
        prop_assert!(h.star(c, a).unwrap().is_subset(h.star(d, b).unwrap()));
        prop_assert!(h.star(h.carrier(), h.carrier()).unwrap().is_subset(h.carrier()));
    }

    #[test]
    fn star_depends_only_on_contents((h, a, b, _, _) in with_sets()) {
        let a_rev: ElementSet = a.iter().collect::<Vec<_>>().into_iter().rev().collect();
        prop_assert_eq!(h.star(a, b).unwrap(), h.star(a_rev, b).unwrap());
    }

    #[test]
    fn singleton_law(h in table(4)) {
        for x in h.elements() {
            for y in h.elements() {
                prop_assert_eq!(
                    h.star(ElementSet::singleton(x), ElementSet::singleton(y)).unwrap(),
                    h.hyperop(x, y)
                );
            }
        }
    }

    #[test]
    fn preimage_duality(h in table(4)) {
        for a in h.elements() {
            let pairs = h.preimage_pairs(a);
            for y in h.elements() {
                for z in h.elements() {
                    prop_assert_eq!(pairs.contains(y, z), h.hyperop(y, z).contains(a));
                }
            }
        }
    }

    #[test]
    fn composition_picks_input_grades((h, f, g, _) in with_fuzzy()) {
        let c = compose(&h, &f, &g).unwrap();
        for a in h.elements() {
            let v = c[a];
            prop_assert!(v == Grade::ZERO || f.grades().contains(&v) || g.grades().contains(&v));
        }
    }

    #[test]
    fn composition_is_monotone((h, f, g, k) in with_fuzzy()) {
        let lower = meet(&f, &k).unwrap();
        prop_assert!(leq(&compose(&h, &lower, &g).unwrap(), &compose(&h, &f, &g).unwrap()).unwrap());
        prop_assert!(leq(&compose(&h, &g, &lower).unwrap(), &compose(&h, &g, &f).unwrap()).unwrap());
    }

    #[test]
    fn meet_is_infimum((_h, f, g, k) in with_fuzzy()) {
        let m = meet(&f, &g).unwrap();
        prop_assert!(leq(&m, &f).unwrap());
        prop_assert!(leq(&m, &g).unwrap());
        if leq(&k, &f).unwrap() && leq(&k, &g).unwrap() {
            prop_assert!(leq(&k, &m).unwrap());
        }
        let lower = meet(&k, &m).unwrap();
        prop_assert!(leq(&lower, &m).unwrap());
    }

    #[test]
    fn pointwise_order_is_partial_order((h, f, g, k) in with_fuzzy()) {
        prop_assert!(leq(&f, &f).unwrap());
        if leq(&f, &g).unwrap() && leq(&g, &f).unwrap() {
            prop_assert_eq!(&f, &g);
        }
        if leq(&f, &g).unwrap() && leq(&g, &k).unwrap() {
            prop_assert!(leq(&f, &k).unwrap());
        }
        prop_assert!(leq(&f, &FuzzySubset::constant_one(&h)).unwrap());
    }

    #[test]
    fn composition_associates_on_hypersemigroups((h, f, g, k) in with_fuzzy()) {
        if h.is_hypersemigroup().holds() {
            let left = compose(&h, &compose(&h, &f, &g).unwrap(), &k).unwrap();
            let right = compose(&h, &f, &compose(&h, &g, &k).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
    }

    #[test]
    fn element_set_round_trip(bits in any::<u64>()) {
        let set = ElementSet::from_bits(bits);
        let rebuilt: ElementSet = set.iter().collect();
        prop_assert_eq!(rebuilt, set);
        prop_assert_eq!(set.len(), set.iter().count());
        prop_assert!(set.iter().map(Element::index).is_sorted());
    }
}
