//! Exhaustive checks over every small bipartite graph and 0/1 pattern.

use konig::oracle::{self, enumerate_bipartite_graphs};
use konig::*;

fn all_graphs_up_to(max: usize) -> impl Iterator<Item = BipartiteGraph> {
    (0..=max)
        .flat_map(move |l| (0..=max).map(move |r| (l, r)))
        .flat_map(|(l, r)| enumerate_bipartite_graphs(l, r).unwrap())
}

#[test]
fn no_augmenting_path_means_maximum() {
    // Every maximal greedy matching for which the search finds nothing must
    // already be maximum; matchings that are not maximum must yield a path.
    for g in all_graphs_up_to(3) {
        let best = oracle::brute_force_max_matching(&g).unwrap();
        let mut m = Matching::empty(g.left_count(), g.right_count());
        for e in g.edges().collect::<Vec<_>>().into_iter().rev() {
            if m.left_mate(e.left).is_none() && m.right_mate(e.right).is_none() {
                m = Matching::from_pairs(g.left_count(), g.right_count(), m.pairs().chain([e])).unwrap();
            }
        }
        match find_augmenting_k_path(&g, &m) {
            None => assert_eq!(m.size(), best),
            Some(path) => {
                assert!(m.size() < best);
                path.check(&g, &m).unwrap();
            }
        }
    }
}

#[test]
fn konig_equality_on_all_graphs_up_to_three_by_three() {
    for g in all_graphs_up_to(3) {
        let best = oracle::brute_force_max_matching(&g).unwrap();
        let min_cover = oracle::brute_force_min_cover(&g).unwrap();
        assert_eq!(best, min_cover);
        for s in [Strategy::Simple, Strategy::Layered] {
            let cert = konig_certificate(&g, s);
            assert_eq!(cert.matching.size(), best);
            assert_eq!(cert.cover.size(), best);
            assert_eq!(verify_cover(&g, &cert.cover), Ok(()));
        }
    }
}

#[test]
fn line_cover_equality_on_all_three_by_four_patterns() {
    for g in enumerate_bipartite_graphs(3, 4).unwrap() {
        let p = SparsityPattern::new(3, 4, g.edges().map(|e| (e.left, e.right))).unwrap();
        let cert = line_certificate(&p, Strategy::Layered);
        assert_eq!(cert.cover.size(), oracle::brute_force_min_line_cover(&p).unwrap());
        assert_eq!(
            cert.transversal.size(),
            oracle::brute_force_max_transversal(&p).unwrap()
        );
        assert_eq!(verify_line_cover(&p, &cert.cover), Ok(()));
    }
}
