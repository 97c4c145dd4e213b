use interval_complex::complex::delta_d;
use interval_complex::graph::GraphEnumeration;
use interval_complex::interval::{Interval, IntervalSystem};
use interval_complex::predicates::{self, EquivVariant, Predicate};
use interval_complex::{Graph, Labeling, PureComplex, VertexSet};
use num_rational::Rational64;
use proptest::prelude::*;

fn implications(c: &PureComplex) {
    let unit = predicates::is_unit_interval_def(c);
    let cond2 = predicates::satisfies_equiv_condition(c, EquivVariant::Cond2);
    let cond3 = predicates::satisfies_equiv_condition(c, EquivVariant::Cond3);
    assert_eq!(unit, cond2, "{c:?}");
    assert_eq!(cond2, cond3, "{c:?}");
    if unit {
        assert!(predicates::satisfies_condition_star(c), "{c:?}");
        assert!(predicates::is_chordal_complex(c), "{c:?}");
        assert!(predicates::is_under_closed_def(c), "{c:?}");
    }
    if predicates::is_under_closed_def(c) {
        assert!(predicates::is_under_closed_local(c), "{c:?}");
    }
}

#[test]
fn local_under_closed_form_is_weaker_per_labeling() {
    // the path 2-1-3-4 at d = 2: gap 2 of facet 134 gives 123, but (1, 2, 4) is missing
    let g = Graph::from_edges(4, [(1, 2), (1, 3), (3, 4)]).unwrap();
    let c = delta_d(&g, 2).unwrap();
    assert_eq!(c.facets().len(), 2);
    assert!(predicates::is_under_closed_local(&c));
    assert!(!predicates::is_under_closed_def(&c));
    let v = predicates::first_violation(Predicate::UnderClosedDef, &c).unwrap();
    assert_eq!(v.missing, [1, 2, 4].iter().collect::<VertexSet>());
}

#[test]
fn per_labeling_implications_on_all_small_graph_complexes() {
    for n in 2..=5 {
        for g in GraphEnumeration::new(n, false).unwrap().iter() {
            for d in 1..n.min(4) {
                let c = delta_d(&g, d).unwrap();
                for l in Labeling::all(n) {
                    implications(&c.relabel(&l).unwrap());
                }
            }
        }
    }
}

#[test]
fn closed_graph_matches_condition_star_on_edges() {
    for n in 2..=5 {
        for g in GraphEnumeration::new(n, false).unwrap().iter() {
            let c = delta_d(&g, 1).unwrap();
            assert_eq!(
                predicates::is_closed_graph(&g),
                predicates::satisfies_condition_star(&c),
                "{g:?}"
            );
        }
    }
}

fn arb_complex() -> impl Strategy<Value = PureComplex> {
    (3usize..=7, 1usize..=3)
        .prop_filter("d + 1 <= n", |(n, d)| d < n)
        .prop_flat_map(|(n, d)| {
            let all: Vec<VertexSet> = VertexSet::full(n).subsets_of_size(d + 1).collect();
            let k = all.len();
            (Just(n), Just(d), Just(all), proptest::collection::vec(any::<bool>(), k))
        })
        .prop_map(|(n, d, all, keep)| {
            let facets = all.into_iter().zip(keep).filter(|(_, k)| *k).map(|(f, _)| f);
            PureComplex::new(n, d, facets).unwrap()
        })
}

fn arb_system(n: usize) -> impl Strategy<Value = IntervalSystem> {
    proptest::collection::vec((-6i64..6, 0i64..5), n).prop_map(|v| {
        let pairs: Vec<(i64, i64)> = v.into_iter().map(|(l, w)| (l, l + w)).collect();
        IntervalSystem::from_integer_pairs(&pairs).unwrap()
    })
}

fn brute_union_is_interval(r: &IntervalSystem, s: VertexSet) -> bool {
    // scan the points k/2 between the outermost endpoints for a hole
    let lo = s.iter().map(|v| r.get(v).left()).min().unwrap();
    let hi = s.iter().map(|v| r.get(v).right()).max().unwrap();
    let mut x = lo;
    let half = Rational64::new(1, 2);
    while x <= hi {
        if !s.iter().any(|v| r.get(v).left() <= x && x <= r.get(v).right()) {
            return false;
        }
        x += half;
    }
    true
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn arbitrary_complexes_satisfy_the_implications(c in arb_complex()) {
        implications(&c);
    }

    #[test]
    fn group_scan_order_does_not_matter(c in arb_complex()) {
        for p in Predicate::ALL {
            let v = predicates::first_violation(p, &c);
            if let Some(v) = v {
                prop_assert!(c.is_facet(v.facet));
                prop_assert!(v.missing.is_empty() || !c.is_facet(v.missing));
            }
        }
    }

    #[test]
    fn union_test_matches_pointwise_scan(r in arb_system(5), bits in 1u32..32) {
        let s = VertexSet::from_bits(bits);
        prop_assert_eq!(r.union_is_interval(s), brute_union_is_interval(&r, s));
    }

    #[test]
    fn validation_is_translation_invariant(
        c in arb_complex(),
        seed in proptest::collection::vec((-6i64..6, 0i64..5), 7),
        num in -20i64..20,
        den in 1i64..7,
    ) {
        let pairs: Vec<(i64, i64)> = seed[..c.n()].iter().map(|&(l, w)| (l, l + w)).collect();
        let r = IntervalSystem::from_integer_pairs(&pairs).unwrap();
        let shifted = r.shifted(Rational64::new(num, den));
        prop_assert_eq!(
            predicates::validate_interval_representation(&c, &r).unwrap(),
            predicates::validate_interval_representation(&c, &shifted).unwrap()
        );
    }
}

#[test]
fn malformed_interval_is_rejected() {
    assert!(Interval::from_integers(2, 1).is_err());
    let g = Graph::path(3);
    let c = delta_d(&g, 1).unwrap();
    let r = IntervalSystem::from_integer_pairs(&[(0, 1), (1, 2)]).unwrap();
    assert!(predicates::validate_interval_representation(&c, &r).is_err());
}
