mod common;

use common::*;
use dicrit::digraph::{canonical_form, canonical_labeling, find_isomorphism, is_isomorphic};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn canonical_form_ignores_labels(
        (d, perm) in digraph_strategy(8).prop_flat_map(|d| {
            let n = d.order();
            (Just(d), permutation_strategy(n))
        })
    ) {
        let e = d.relabel(&perm).unwrap();
        prop_assert_eq!(canonical_form(&d).unwrap(), canonical_form(&e).unwrap());
        let f = find_isomorphism(&d, &e).unwrap().expect("relabeling is isomorphic");
        prop_assert!(d.arcs().all(|(u, v)| e.has_arc(f[u], f[v])));
        prop_assert_eq!(d.arc_count(), e.arc_count());
    }

    #[test]
    fn canonical_labeling_reproduces_form(d in digraph_strategy(8)) {
        let (form, lab) = canonical_labeling(&d).unwrap();
        prop_assert_eq!(d.relabel(&lab).unwrap(), form.to_digraph());
    }

    #[test]
    fn iso_agrees_with_brute_force(
        (a, b) in digraph_strategy(5).prop_flat_map(|a| {
            let n = a.order();
            let near = (permutation_strategy(n), any::<prop::sample::Index>()).prop_map({
                let a = a.clone();
                move |(p, i)| {
                    // a relabeled copy with one ordered pair toggled (or not, when n < 2)
                    let e = a.relabel(&p).unwrap();
                    if n < 2 { return e; }
                    let pairs: Vec<_> = (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).filter(|(u, v)| u != v).collect();
                    let (u, v) = pairs[i.index(pairs.len())];
                    if i.index(3) == 0 { e } else if e.has_arc(u, v) { e.without_arc(u, v) } else { e.with_arc(u, v).unwrap() }
                }
            });
            (Just(a), near)
        })
    ) {
        let n = a.order();
        // all n! bijections
        let mut perm: Vec<usize> = (0..n).collect();
        let mut brute = false;
        loop {
            if a.arc_count() == b.arc_count() && a.arcs().all(|(u, v)| b.has_arc(perm[u], perm[v])) {
                brute = true;
                break;
            }
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else { break };
            let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
            perm.swap(i - 1, j);
            perm[i..].reverse();
        }
        prop_assert_eq!(is_isomorphic(&a, &b).unwrap(), brute);
        prop_assert_eq!(is_isomorphic(&b, &a).unwrap(), brute);
    }
}
