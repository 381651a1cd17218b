//! Randomized algebraic laws for partitions, bases, and chromatic functions.

use std::collections::BTreeSet;

use ncsym::chromatic::ChromaticEngine;
use ncsym::graph::{proper_coloring_count, stable_partitions, LabeledMultigraph};
use ncsym::ncsym::{induce_at, int, specialize_ones, to_basis, Basis, NCExpr};
use ncsym::partition::{coarsenings, mobius, refinements, Perm, SetPartition};
use ncsym::Limits;
use proptest::prelude::*;

fn partition(d: usize) -> impl Strategy<Value = SetPartition> {
    proptest::collection::vec(0..d as u8, d).prop_map(|labels| SetPartition::from_labels(&labels))
}

fn any_partition() -> impl Strategy<Value = SetPartition> {
    (1usize..=6).prop_flat_map(partition)
}

fn perm(d: usize) -> impl Strategy<Value = Perm> {
    Just((1..=d).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(v).unwrap())
}

fn basis() -> impl Strategy<Value = Basis> {
    prop_oneof![Just(Basis::M), Just(Basis::P), Just(Basis::E)]
}

fn expr(d: usize) -> impl Strategy<Value = NCExpr> {
    (
        basis(),
        proptest::collection::vec((partition(d), -5i64..=5), 1..5),
    )
        .prop_map(move |(b, terms)| {
            let mut x = NCExpr::zero(b, d);
            for (pi, c) in terms {
                x = x.add(&NCExpr::basis_element(b, pi).scale(&int(c))).unwrap();
            }
            x
        })
}

fn multigraph(max_d: usize, max_edges: usize) -> impl Strategy<Value = LabeledMultigraph> {
    (1..=max_d).prop_flat_map(move |d| {
        proptest::collection::vec((1..=d, 1..=d), 0..=max_edges)
            .prop_map(move |e| LabeledMultigraph::from_edges(d, &e).unwrap())
    })
}

fn loopless(max_d: usize, max_edges: usize) -> impl Strategy<Value = LabeledMultigraph> {
    (2..=max_d).prop_flat_map(move |d| {
        proptest::collection::vec((1..=d, 1..=d), 0..=max_edges).prop_map(move |e| {
            let e: Vec<_> = e.into_iter().filter(|(a, b)| a != b).collect();
            LabeledMultigraph::from_edges(d, &e).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mobius_sums_to_delta_over_intervals((a, b) in (1usize..=6).prop_flat_map(|d| (partition(d), partition(d)))) {
        let sigma = a.meet(&b).unwrap();
        let tau = a;
        let total: num_bigint::BigInt = coarsenings(&sigma)
            .into_iter()
            .filter(|(rho, _)| rho.leq(&tau).unwrap())
            .map(|(rho, _)| mobius(&rho, &tau).unwrap())
            .sum();
        let expected = if sigma == tau { 1 } else { 0 };
        prop_assert_eq!(total, expected.into());
    }

    #[test]
    fn interval_mobius_tables_agree_with_mobius(pi in any_partition()) {
        for (s, mu) in coarsenings(&pi) {
            prop_assert_eq!(mobius(&pi, &s).unwrap(), mu);
        }
        for (s, mu) in refinements(&pi) {
            prop_assert_eq!(mobius(&s, &pi).unwrap(), mu);
        }
    }

    #[test]
    fn meet_is_greatest_lower_bound((a, b, c) in (1usize..=7).prop_flat_map(|d| (partition(d), partition(d), partition(d)))) {
        let m = a.meet(&b).unwrap();
        prop_assert_eq!(&m, &b.meet(&a).unwrap());
        prop_assert_eq!(&a.meet(&a).unwrap(), &a);
        prop_assert!(m.leq(&a).unwrap() && m.leq(&b).unwrap());
        prop_assert_eq!(a.meet(&b.meet(&c).unwrap()).unwrap(), m.meet(&c).unwrap());
        if c.leq(&a).unwrap() && c.leq(&b).unwrap() {
            prop_assert!(c.leq(&m).unwrap());
        }
    }

    #[test]
    fn permutation_action_composes((pi, s, t) in (1usize..=7).prop_flat_map(|d| (partition(d), perm(d), perm(d)))) {
        let two_step = pi.apply_perm(&t).unwrap().apply_perm(&s).unwrap();
        prop_assert_eq!(two_step, pi.apply_perm(&s.compose(&t).unwrap()).unwrap());
        prop_assert_eq!(pi.apply_perm(&Perm::identity(pi.degree())).unwrap(), pi.clone());
    }

    #[test]
    fn action_preserves_shape_and_meets((a, b, s) in (1usize..=7).prop_flat_map(|d| (partition(d), partition(d), perm(d)))) {
        let sa = a.apply_perm(&s).unwrap();
        let sb = b.apply_perm(&s).unwrap();
        prop_assert_eq!(sa.shape(), a.shape());
        prop_assert_eq!(sa.meet(&sb).unwrap(), a.meet(&b).unwrap().apply_perm(&s).unwrap());
    }

    #[test]
    fn basis_changes_round_trip((x, via) in (1usize..=5).prop_flat_map(|d| (expr(d), basis()))) {
        prop_assert_eq!(to_basis(&to_basis(&x, via), x.basis()), x);
    }

    #[test]
    fn action_commutes_with_change_of_basis((x, s, b) in (1usize..=5).prop_flat_map(|d| (expr(d), perm(d), basis()))) {
        prop_assert_eq!(
            to_basis(&x.act(&s).unwrap(), b),
            to_basis(&x, b).act(&s).unwrap()
        );
    }

    #[test]
    fn specialization_ignores_basis((x, b) in (1usize..=5).prop_flat_map(|d| (expr(d), basis()))) {
        prop_assert_eq!(specialize_ones(&to_basis(&x, b)), specialize_ones(&x));
    }

    #[test]
    fn stable_partitions_follow_relabeling((g, s) in multigraph(6, 8).prop_flat_map(|g| {
        let d = g.num_vertices();
        (Just(g), perm(d))
    })) {
        let moved: BTreeSet<_> = stable_partitions(&g.relabel(&s).unwrap()).into_iter().collect();
        let expected: BTreeSet<_> = stable_partitions(&g)
            .into_iter()
            .map(|p| p.apply_perm(&s).unwrap())
            .collect();
        prop_assert_eq!(moved, expected);
    }

    #[test]
    fn relabeling_acts_on_y((g, s) in multigraph(5, 7).prop_flat_map(|g| {
        let d = g.num_vertices();
        (Just(g), perm(d))
    })) {
        let eng = ChromaticEngine::default();
        prop_assert_eq!(
            eng.y_stable(&g.relabel(&s).unwrap()).unwrap(),
            eng.y_stable(&g).unwrap().act(&s).unwrap()
        );
    }

    #[test]
    fn deletion_contraction_from_stable_partitions(g in loopless(5, 7)) {
        prop_assume!(g.num_edges() > 0);
        let eng = ChromaticEngine::default();
        let e = g.edges()[g.num_edges() - 1];
        let (k, l) = e.endpoints();
        let contracted = eng.y_stable(&g.contract_edge(e.id).unwrap()).unwrap();
        let rhs = eng
            .y_stable(&g.delete_edge(e.id).unwrap())
            .unwrap()
            .sub(&induce_at(&contracted, k, l).unwrap())
            .unwrap();
        prop_assert_eq!(eng.y_stable(&g).unwrap(), rhs);
    }

    #[test]
    fn colorings_grow_with_colors_and_shrink_with_edges((g, a, b, n) in loopless(5, 6).prop_flat_map(|g| {
        let d = g.num_vertices();
        (Just(g), 1..=d, 1..=d, 0usize..5)
    })) {
        let limits = Limits::default();
        let count = |h: &LabeledMultigraph, n| proper_coloring_count(h, n, &limits).unwrap();
        prop_assert!(count(&g, n) <= count(&g, n + 1));
        let mut h = g.clone();
        h.push_edge(a, b).unwrap();
        prop_assert!(count(&h, n) <= count(&g, n));
    }
}
