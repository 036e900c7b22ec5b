mod common;

use common::*;
use dicrit::coloring::{
    clique_number, dichromatic_number, find_k_dicoloring, find_k_dicoloring_with, is_k_critical,
    is_valid_dicoloring, list_dicolorable, Feasibility,
};
use dicrit::digraph::Family;
use dicrit::{Digraph, ListAssignment};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn solver_matches_brute_force(d in digraph_strategy(6)) {
        prop_assert_eq!(dichromatic_number(&d).unwrap(), brute_chi(&d));
    }

    #[test]
    fn found_colorings_are_valid(d in digraph_strategy(7), k in 1usize..4) {
        if let Some(c) = find_k_dicoloring(&d, k).unwrap() {
            prop_assert!(c.num_colors() <= k);
            prop_assert!(valid_coloring(&d, c.colors()));
            prop_assert!(is_valid_dicoloring(&d, &c).unwrap());
        }
    }

    #[test]
    fn full_recheck_agrees(d in digraph_strategy(7), k in 1usize..4) {
        prop_assert_eq!(
            find_k_dicoloring_with(&d, k, Feasibility::Incremental).unwrap(),
            find_k_dicoloring_with(&d, k, Feasibility::FullRecheck).unwrap()
        );
    }

    #[test]
    fn arc_deletion_is_monotone(d in digraph_strategy(7), pick in any::<prop::sample::Index>()) {
        let arcs: Vec<_> = d.arcs().collect();
        prop_assume!(!arcs.is_empty());
        let (u, v) = arcs[pick.index(arcs.len())];
        let chi = dichromatic_number(&d).unwrap();
        let chi2 = dichromatic_number(&d.without_arc(u, v)).unwrap();
        prop_assert!(chi2 <= chi && chi <= chi2 + 1);
    }

    #[test]
    fn bidirected_graph_matches_graph_chromatic_number(
        n in 1usize..7,
        bits in prop::collection::vec(any::<bool>(), 15),
    ) {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .zip(bits)
            .filter(|(_, b)| *b)
            .map(|(e, _)| e)
            .collect();
        let d = Digraph::new(n, edges.iter().flat_map(|&(a, b)| [(a, b), (b, a)])).unwrap();
        prop_assert_eq!(dichromatic_number(&d).unwrap(), brute_graph_chi(n, &edges));
        prop_assert!(clique_number(&d).unwrap() <= dichromatic_number(&d).unwrap());
    }

    #[test]
    fn list_coloring_matches_brute_force(
        d in digraph_strategy(5),
        seeds in prop::collection::vec(prop::collection::vec(0usize..3, 1..3), 5),
    ) {
        let n = d.order();
        let lists = ListAssignment::new(seeds[..n].to_vec()).unwrap();
        let got = list_dicolorable(&d, &lists).unwrap();
        if let Some(c) = &got {
            prop_assert!(valid_coloring(&d, c.colors()));
            prop_assert!((0..n).all(|v| lists.list(v).contains(&c.color(v))));
        }
        // brute force over list choices
        let mut idx = vec![0usize; n];
        let brute = 'outer: loop {
            let colors: Vec<usize> = (0..n).map(|v| lists.list(v)[idx[v]]).collect();
            if valid_coloring(&d, &colors) {
                break true;
            }
            let mut i = 0;
            loop {
                if i == n {
                    break 'outer false;
                }
                idx[i] += 1;
                if idx[i] < lists.list(i).len() {
                    break;
                }
                idx[i] = 0;
                i += 1;
            }
        };
        prop_assert_eq!(got.is_some(), brute);
    }

    #[test]
    fn criticality_matches_definition(d in digraph_strategy(5), k in 2usize..4) {
        let chi = brute_chi(&d);
        let oracle = chi == k
            && d.order() > 0
            && (0..d.order()).all(|v| d.out_degree(v) + d.in_degree(v) > 0)
            && d.arcs().all(|(u, v)| brute_chi(&d.without_arc(u, v)) < k);
        prop_assert_eq!(is_k_critical(&d, k).unwrap(), oracle);
    }
}

#[test]
fn families() {
    for k in 1..=6 {
        assert_eq!(dichromatic_number(&Digraph::complete(k)).unwrap(), k);
    }
    for n in 2..=8 {
        assert_eq!(
            dichromatic_number(&Family::DirectedCycle(n).build().unwrap()).unwrap(),
            2
        );
    }
    assert_eq!(
        dichromatic_number(&Family::BidirectedCycle(7).build().unwrap()).unwrap(),
        3
    );
    assert_eq!(
        dichromatic_number(&Family::BidirectedCycle(6).build().unwrap()).unwrap(),
        2
    );
}

#[test]
fn size_limit() {
    assert!(dichromatic_number(&Digraph::empty(65)).is_err());
    assert_eq!(dichromatic_number(&Digraph::empty(64)).unwrap(), 1);
}
