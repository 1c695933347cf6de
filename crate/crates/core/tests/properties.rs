mod common;

use proptest::prelude::*;

use toric_ech::curves::{
    braid_union_writhe, fredholm_index, negative_end_bounds, positive_end_bounds, EndSign, EndSpec,
};
use toric_ech::domain::{
    ball_inradius, ball_outradius, check_ball_sandwich, contains, make_ellipsoid, ConvexToricDomain,
};
use toric_ech::ech::{
    capacities, capacities_with_witnesses, capacity, enumerate_generators, ConvexGenerator, Edge, EdgeLabel,
};
use toric_ech::obstructions::{ellipsoid_certificate, noncontractibility_certificate, Verdict};
use toric_ech::rational::{int, ratio, Rational};

use common::*;

fn profile() -> impl Strategy<Value = ConvexToricDomain> {
    any::<u64>().prop_map(|s| random_profile(&mut rng(s)))
}

fn positive_rational() -> impl Strategy<Value = Rational> {
    (1i64..=40, 1i64..=8).prop_map(|(n, d)| ratio(n, d))
}

fn generator() -> impl Strategy<Value = ConvexGenerator> {
    let dir = prop_oneof![
        Just((0u64, 1u64)),
        Just((1, 0)),
        Just((1, 1)),
        Just((1, 2)),
        Just((2, 1)),
        Just((1, 3)),
        Just((3, 2)),
        Just((2, 5)),
    ];
    proptest::collection::btree_map(dir, (1u64..=3, any::<bool>()), 0..5).prop_map(|m| {
        let edges = m
            .into_iter()
            .map(|((p, q), (mult, h))| {
                let label = if h && p > 0 && q > 0 { EdgeLabel::H } else { EdgeLabel::E };
                Edge::new(p, q, mult, label)
            })
            .collect();
        ConvexGenerator::new(edges).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn support_is_sublinear(d in profile(), p1 in 0u64..6, q1 in 0u64..6, p2 in 0u64..6, q2 in 0u64..6) {
        let s = |p: u64, q: u64| if p + q == 0 { int(0) } else { d.support(p, q).unwrap() };
        prop_assert!(s(p1 + p2, q1 + q2) <= s(p1, q1) + s(p2, q2));
        prop_assert_eq!(s(2 * p1, 2 * q1), s(p1, q1) * int(2));
    }

    #[test]
    fn inclusion_matches_support_functions(d1 in profile(), d2 in profile(), p in 0u64..8, q in 1u64..8) {
        let i = d1.intersect(&d2);
        prop_assert!(contains(&i, &d1) && contains(&i, &d2));
        prop_assert!(i.support(p, q).unwrap() <= d1.support(p, q).unwrap());
        if contains(&d1, &d2) {
            prop_assert!(d1.support(p, q).unwrap() <= d2.support(p, q).unwrap());
        }
        let lambda = d1.a() / d2.a() + d1.f0() / d2.f0() + int(1);
        prop_assert!(contains(&d1, &d2.scale(&lambda).unwrap()));
    }

    #[test]
    fn radii_are_ordered(d in profile(), lambda in positive_rational()) {
        prop_assert!(ball_inradius(&d) <= ball_outradius(&d));
        let s = d.scale(&lambda).unwrap();
        prop_assert_eq!(ball_outradius(&s), ball_outradius(&d) * &lambda);
        prop_assert_eq!(ball_inradius(&s), ball_inradius(&d) * &lambda);
    }

    #[test]
    fn lattice_count_matches_brute_force(g in generator()) {
        let verts: Vec<(i64, i64)> = g.vertices().into_iter().map(|(x, y)| (x as i64, y as i64)).collect();
        prop_assert_eq!(g.lattice_count(), brute_lattice_count(&verts));
    }

    #[test]
    fn index_parity_and_h_labels(g in generator()) {
        let all_e = ConvexGenerator::new(
            g.edges().iter().map(|e| Edge::new(e.p, e.q, e.m, EdgeLabel::E)).collect(),
        )
        .unwrap();
        prop_assert_eq!(all_e.ech_index() % 2, 0);
        prop_assert_eq!(all_e.ech_index() - g.ech_index(), g.hyperbolic_edges() as i64);
        prop_assert_eq!(ConvexGenerator::from_orbit_set(&g.to_orbit_set()), g);
    }

    #[test]
    fn action_dominates_support_of_the_summed_direction(d in profile(), g in generator()) {
        let (x, y) = g.intercepts();
        prop_assume!(x + y > 0);
        prop_assert!(g.action(&d) >= d.support(x, y).unwrap());
    }

    #[test]
    fn reflection_preserves_capacities(d in profile()) {
        prop_assert_eq!(capacities(&d, 12).values, capacities(&d.reflect(), 12).values);
    }

    #[test]
    fn ellipsoid_capacities_match_the_multiset(a in positive_rational(), b in positive_rational()) {
        let got = capacities(&make_ellipsoid(a.clone(), b.clone()).unwrap(), 50).values;
        prop_assert_eq!(got, ellipsoid_oracle(&a, &b, 50));
    }

    #[test]
    fn sequence_agrees_with_single_capacities(d in profile()) {
        let seq = capacities(&d, 8).values;
        prop_assert_eq!(&seq[0], &int(0));
        prop_assert!(seq.windows(2).all(|w| w[0] <= w[1]));
        for (k, v) in seq.iter().enumerate() {
            prop_assert_eq!(&capacity(&d, k as u64), v);
        }
    }

    #[test]
    fn witnesses_attain_the_capacity(d in profile()) {
        for w in capacities_with_witnesses(&d, 6) {
            prop_assert!(!w.minimizers.is_empty());
            for g in &w.minimizers {
                prop_assert_eq!(g.ech_index(), 2 * w.k as i64);
                prop_assert_eq!(&g.action(&d), &w.value);
            }
        }
    }

    #[test]
    fn enumeration_is_sorted_and_within_budget(d in profile()) {
        let budget = capacity(&d, 4);
        let gens = enumerate_generators(&d, &budget);
        prop_assert!(gens.windows(2).all(|w| (&w[0].action, w[0].ech_index) <= (&w[1].action, w[1].ech_index)));
        for g in &gens {
            prop_assert!(g.action <= budget);
            prop_assert_eq!(g.ech_index, g.generator.ech_index());
        }
        let paths = naive_paths(&d, &budget);
        let labeled: usize = paths.iter().map(|p| 1usize << p.non_axis()).sum();
        prop_assert_eq!(gens.len(), labeled);
    }

    #[test]
    fn never_both_verdicts(d1 in profile(), d2 in profile()) {
        let r = noncontractibility_certificate(&d1, &d2);
        if r.theorem_checks_passed() {
            prop_assert_eq!(r.verdict, Verdict::Noncontractible);
            prop_assert!(check_ball_sandwich(&d1, &d2).is_none());
        }
        if r.verdict == Verdict::ContractibleByBallSandwich {
            prop_assert!(r.ball_interval.is_some());
        }
    }

    #[test]
    fn fredholm_index_is_additive(
        chi1 in -3i64..3, c1 in -3i64..3, chi2 in -3i64..3, c2 in -3i64..3,
        top in proptest::collection::vec(-5i64..6, 0..3),
        mid in proptest::collection::vec(-5i64..6, 0..3),
        bottom in proptest::collection::vec(-5i64..6, 0..3),
    ) {
        let ends = |pos: &[i64], neg: &[i64]| -> Vec<EndSpec> {
            pos.iter().map(|&c| EndSpec::positive(c)).chain(neg.iter().map(|&c| EndSpec::negative(c))).collect()
        };
        let upper = fredholm_index(chi1, c1, &ends(&top, &mid));
        let lower = fredholm_index(chi2, c2, &ends(&mid, &bottom));
        let glued = fredholm_index(chi1 + chi2, c1 + c2, &ends(&top, &bottom));
        prop_assert_eq!(upper + lower, glued);
    }

    #[test]
    fn writhe_bounds(cz in -20i64..20, w1 in -9i64..9, w2 in -9i64..9, l in -9i64..9) {
        prop_assert_eq!(braid_union_writhe(w1, w2, l), braid_union_writhe(w2, w1, l));
        prop_assert_eq!(positive_end_bounds(cz, 1).unwrap().1, 0);
        prop_assert_eq!(negative_end_bounds(cz, 1).unwrap().1, 0);
        let (up, _) = positive_end_bounds(cz, 1).unwrap();
        let (down, _) = negative_end_bounds(cz, 1).unwrap();
        prop_assert!(up <= down && down - up <= 1);
        prop_assert_eq!(EndSpec::new(EndSign::Positive, cz, 0).is_err(), true);
    }
}

#[test]
fn certificate_paths_agree_on_a_sweep() {
    use rand::Rng;
    let mut r = rng(11);
    let mut verdicts = [0usize; 3];
    for _ in 0..1000 {
        let mut v: Vec<Rational> = (0..4).map(|_| ratio(r.gen_range(1..=24), r.gen_range(1..=4))).collect();
        if v[0] > v[1] {
            v.swap(0, 1);
        }
        if v[2] > v[3] {
            v.swap(2, 3);
        }
        let report = ellipsoid_certificate(&v[0], &v[1], &v[2], &v[3]).expect("both certificate paths agree");
        verdicts[report.verdict as usize] += 1;
    }
    // the sweep exercises every verdict
    assert!(verdicts.iter().all(|&n| n > 0), "{verdicts:?}");
}

#[test]
fn results_do_not_depend_on_thread_count() {
    let mut r = rng(12);
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    for _ in 0..10 {
        let d = random_profile(&mut r);
        let serial = pool.install(|| (capacities_with_witnesses(&d, 8), enumerate_generators(&d, &capacity(&d, 3))));
        let parallel = (capacities_with_witnesses(&d, 8), enumerate_generators(&d, &capacity(&d, 3)));
        assert_eq!(serial, parallel);
    }
}
