mod common;

use common::*;
use proptest::prelude::*;
use supereuler::invariants::{
    berge_tutte_deficiency, degree_params, edge_connectivity, girth, matching_number, Extended,
};
use supereuler::named::{complete_bipartite, cycle, petersen};
use supereuler::{Limits, MultiGraph};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn berge_tutte_identity(g in any_graph(10, 18)) {
        let c = matching_number(&g, &Limits::default()).unwrap();
        prop_assert_eq!(2 * c.matching_number + c.deficiency, g.order());
        prop_assert_eq!(c.matching.len(), c.matching_number);
        let mut used = vec![false; g.order()];
        for &(u, v) in &c.matching {
            prop_assert!(g.adjacent(u, v));
            prop_assert!(!std::mem::replace(&mut used[u as usize], true));
            prop_assert!(!std::mem::replace(&mut used[v as usize], true));
        }
        prop_assert_eq!(c.odd_components - c.separator.len(), c.deficiency);
        let (t, s, q) = berge_tutte_deficiency(&g, &Limits::default()).unwrap();
        prop_assert_eq!((t, s, q), (c.deficiency, c.separator.clone(), c.odd_components));
    }

    #[test]
    fn matching_number_matches_exhaustive_search(g in any_graph(8, 12)) {
        let c = matching_number(&g, &Limits::default()).unwrap();
        prop_assert_eq!(c.matching_number, brute_matching(&g));
    }

    #[test]
    fn edge_connectivity_matches_cut_enumeration(g in any_graph(7, 16)) {
        let expected = match brute_edge_connectivity(&g) {
            None => Extended::Infinite,
            Some(k) => Extended::Finite(k),
        };
        prop_assert_eq!(edge_connectivity(&g), expected);
    }

    #[test]
    fn sentinels_follow_their_definitions(g in any_graph(7, 14)) {
        let p = degree_params(&g, &[2, 3]).unwrap();
        let n = g.order();
        let d = distances(&g);
        let nonadjacent = (0..n).any(|u| (u + 1..n).any(|v| !g.adjacent(u as u32, v as u32)));
        let at_two = (0..n).any(|u| (u + 1..n).any(|v| d[u][v] == Some(2)));
        prop_assert_eq!(p.sigma2.is_finite(), nonadjacent);
        prop_assert_eq!(p.delta_f.is_finite(), at_two);
        prop_assert_eq!(p.sigma2_bar.is_finite(), g.size() > 0);
        prop_assert_eq!(p.sigma_t[&2], p.sigma2);
    }

    #[test]
    fn degree_profile_orderings(g in any_graph(8, 16)) {
        let p = degree_params(&g, &[2]).unwrap();
        if let Some(l) = p.delta_l.finite() {
            prop_assert!(p.delta <= l);
        }
        if let Some(s) = p.sigma2_bar.finite() {
            prop_assert!(s >= 2 * p.delta);
        }
        if let Some(s) = p.sigma2.finite() {
            prop_assert!(s >= 2 * p.delta);
        }
    }

    #[test]
    fn sigma2_and_delta_f_match_pair_scans(g in any_graph(7, 14)) {
        let p = degree_params(&g, &[]).unwrap();
        let n = g.order();
        let deg = g.degrees();
        let d = distances(&g);
        let pairs = || (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        let sigma2 = pairs()
            .filter(|&(u, v)| !g.adjacent(u as u32, v as u32))
            .map(|(u, v)| (deg[u] + deg[v]) as u64)
            .min();
        let delta_f = pairs()
            .filter(|&(u, v)| d[u][v] == Some(2))
            .map(|(u, v)| deg[u].max(deg[v]) as u64)
            .min();
        prop_assert_eq!(p.sigma2.finite(), sigma2);
        prop_assert_eq!(p.delta_f.finite(), delta_f);
    }
}

#[test]
fn regular_graphs_have_flat_profiles() {
    let cases: Vec<(MultiGraph, u64)> = vec![
        (petersen(), 3),
        (cycle(7).unwrap(), 2),
        (complete_bipartite(3, 3), 3),
        (complete_bipartite(4, 4), 4),
    ];
    for (g, k) in cases {
        let p = degree_params(&g, &[]).unwrap();
        let k_ext = Extended::Finite(k);
        assert_eq!(p.delta, k);
        assert_eq!((p.delta_l, p.delta_f), (k_ext, k_ext));
        assert_eq!((p.sigma2, p.sigma2_bar), (Extended::Finite(2 * k), Extended::Finite(2 * k)));
    }
}

#[test]
fn sigma_t_rejects_small_t() {
    assert!(degree_params(&petersen(), &[1]).is_err());
}

#[test]
fn girth_of_small_cycles() {
    for n in 3..9 {
        assert_eq!(girth(&cycle(n).unwrap()), Extended::Finite(n as u64));
    }
    let c2 = MultiGraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
    assert_eq!(girth(&c2), Extended::Finite(2));
}
