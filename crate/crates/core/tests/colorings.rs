mod common;

use common::*;
use ordered_ramsey::coloring::{bend_coloring, bipartite_coloring, star_coloring, ColoringError};
use ordered_ramsey::refute::{refute_forest, refute_pseudoforest, ForestCase, PseudoforestCase, RefuteError};
use ordered_ramsey::structure::{is_forest, is_pseudoforest};
use ordered_ramsey::{Color, EdgeColoring, OrderedGraph};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use Color::{Blue, Red};

fn g(s: &str) -> OrderedGraph {
    OrderedGraph::parse_inline(s).unwrap()
}

#[test]
fn star_coloring_examples() {
    assert_eq!(
        star_coloring(&OrderedGraph::right_star(2), 0).unwrap().colors(),
        &[Red, Red]
    );
    assert_eq!(
        star_coloring(&OrderedGraph::monotone_path(4), 0).unwrap().colors(),
        &[Red, Blue, Red]
    );
    assert_eq!(
        star_coloring(&OrderedGraph::complete(2), 5),
        Err(ColoringError::VertexOutOfRange(5))
    );
}

#[test]
fn star_coloring_roots_other_components_at_their_first_vertex() {
    let f = g("n=6;e=1-2,3-4,4-5,5-6");
    assert_eq!(star_coloring(&f, 1).unwrap().colors(), &[Red, Red, Blue, Red]);
}

#[test]
fn bipartite_coloring_examples() {
    let c = bipartite_coloring(&OrderedGraph::monotone_path(3), &[true, false, true]).unwrap();
    assert_eq!(c.colors(), &[Red, Blue]);
    let p4 = bipartite_coloring(&OrderedGraph::monotone_path(4), &[true, false, true, false]).unwrap();
    assert!(coloring_avoids(
        &p4,
        &OrderedGraph::monotone_path(3),
        &OrderedGraph::monotone_path(3)
    ));
    assert!(matches!(
        bipartite_coloring(&OrderedGraph::complete(2), &[true, true]),
        Err(ColoringError::ImproperPartition(0, 1))
    ));
}

#[test]
fn bend_coloring_examples() {
    assert_eq!(bend_coloring(&OrderedGraph::complete(2), 1).unwrap().colors(), &[Red]);
    assert_eq!(
        bend_coloring(&OrderedGraph::monotone_path(3), 0).unwrap().colors(),
        &[Blue, Blue]
    );
    // Centre 3 of the star 1-3, 2-3, 3-4, 3-5.
    let star = g("n=5;e=1-3,2-3,3-4,3-5");
    assert_eq!(bend_coloring(&star, 2).unwrap().colors(), &[Red, Red, Blue, Blue]);
    assert_eq!(
        bend_coloring(&OrderedGraph::complete(3), 0),
        Err(ColoringError::NotAForest)
    );
}

#[test]
fn coloring_text_round_trip() {
    let f = g("n=4;e=1-2,2-4,3-4");
    let c = EdgeColoring::new(f.clone(), vec![Red, Blue, Red]).unwrap();
    assert_eq!(c.to_text(), "1 2 R\n2 4 B\n3 4 R\n");
    assert_eq!(EdgeColoring::parse(&f, &c.to_text()).unwrap(), c);
    assert!(EdgeColoring::parse(&f, "1 2 R\n").is_err());
}

#[test]
fn forest_refuter_examples() {
    let (p3, p4) = (OrderedGraph::monotone_path(3), OrderedGraph::monotone_path(4));
    let c = refute_forest(&p4, &p3, &p3, ForestCase::BothMonotoneP3).unwrap();
    assert!(coloring_avoids(&c, &p3, &p3));
    let tree = g("n=7;e=1-4,2-4,3-4,4-6,5-6,6-7");
    let c = refute_forest(&tree, &p4, &p4, ForestCase::NonStarComponents).unwrap();
    assert!(coloring_avoids(&c, &p4, &p4));
    assert!(matches!(
        refute_forest(
            &p4,
            &OrderedGraph::monotone_matching(2),
            &p3,
            ForestCase::BothMonotoneP3
        ),
        Err(RefuteError::NotApplicable(3, _))
    ));
    assert_eq!(
        refute_forest(&OrderedGraph::complete(3), &p3, &p3, ForestCase::BothMonotoneP3),
        Err(RefuteError::NotAForest)
    );
}

#[test]
fn pseudoforest_refuter_examples() {
    let (k3, p3, p4) = (
        OrderedGraph::complete(3),
        OrderedGraph::monotone_path(3),
        OrderedGraph::monotone_path(4),
    );
    let c = refute_pseudoforest(&k3, &k3, &p3, PseudoforestCase::CycleVsNonMatching).unwrap();
    assert_eq!(c.colors().iter().filter(|&&x| x == Blue).count(), 1);
    assert!(coloring_avoids(&c, &k3, &p3));

    let cycle = g("n=5;e=1-2,1-5,2-3,3-4,4-5");
    let (s2, l2) = (OrderedGraph::right_star(2), OrderedGraph::left_star(2));
    let c = refute_pseudoforest(&cycle, &s2, &l2, PseudoforestCase::OppositeSides).unwrap();
    assert!(coloring_avoids(&c, &s2, &l2));

    let chord = g("n=5;e=1-2,2-3,3-4,4-5,2-4");
    let c = refute_pseudoforest(&chord, &p3, &p4, PseudoforestCase::MonotoneP3VsP4).unwrap();
    assert!(coloring_avoids(&c, &p3, &p4));
    assert_eq!(
        refute_pseudoforest(&OrderedGraph::complete(4), &p3, &p4, PseudoforestCase::MonotoneP3VsP4),
        Err(RefuteError::NotAPseudoforest)
    );
}

#[test]
fn bend_coloring_on_every_small_tree() {
    let p3 = OrderedGraph::monotone_path(3);
    for n in 2..=7 {
        for t in all_trees(n) {
            for root in 0..n {
                let c = bend_coloring(&t, root).unwrap();
                assert!(
                    !naive_contains(&class_matrix(&c, Red), &p3),
                    "{} root {root}",
                    t.to_inline()
                );
                assert!(one_sided_blue(&c), "{} root {root}", t.to_inline());
            }
        }
    }
}

fn class_matrix(c: &EdgeColoring, color: Color) -> Matrix {
    let mut m = Matrix::new(c.host().vertex_count());
    for (u, v) in class_edges(c, color) {
        m.set(u, v);
    }
    m
}

fn one_sided_blue(c: &EdgeColoring) -> bool {
    let n = c.host().vertex_count();
    let blue = class_edges(c, Blue);
    naive_components(n, &blue).iter().all(|comp| {
        let left = |v: usize| blue.iter().filter(|&&(_, b)| b == v).count();
        let right = |v: usize| blue.iter().filter(|&&(a, _)| a == v).count();
        comp.iter().all(|&v| left(v) <= 1) || comp.iter().all(|&v| right(v) <= 1)
    })
}

proptest! {
    #[test]
    fn star_coloring_gives_star_components(seed in any::<u64>(), n in 1usize..=12, root in 0usize..12) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = random_tree(&mut rng, n);
        let root = root % n;
        let c = star_coloring(&t, root).unwrap();
        prop_assert!(all_components_stars(n, &class_edges(&c, Red)));
        prop_assert!(all_components_stars(n, &class_edges(&c, Blue)));
        for (k, &(u, v)) in t.edges().iter().enumerate() {
            if u == root || v == root {
                prop_assert_eq!(c.color(k), Red);
            }
        }
    }

    #[test]
    fn bipartite_coloring_avoids_monotone_p3(f in arb_graph(10)) {
        prop_assume!(is_forest(&f));
        let c = bipartite_coloring(&f, &forest_bipartition(&f)).unwrap();
        prop_assert!(!has_monotone_p3(&class_edges(&c, Red)));
        prop_assert!(!has_monotone_p3(&class_edges(&c, Blue)));
    }

    #[test]
    fn bend_coloring_on_larger_trees(seed in any::<u64>(), n in 8usize..=10, root in 0usize..10) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = random_tree(&mut rng, n);
        let c = bend_coloring(&t, root % n).unwrap();
        prop_assert!(!has_monotone_p3(&class_edges(&c, Red)));
        prop_assert!(one_sided_blue(&c));
    }

    #[test]
    fn refuters_verify_on_random_pseudoforests(f in arb_graph(8)) {
        prop_assume!(is_pseudoforest(&f));
        let pairs = [("K3", "P3"), ("S2", "L2"), ("P3", "P4"), ("zigzag", "P3"), ("mixed3", "P3")];
        for (a, b) in pairs {
            let (h, h2) = (pattern(a), pattern(b));
            for case in PseudoforestCase::ALL {
                if let Ok(c) = refute_pseudoforest(&f, &h, &h2, case) {
                    prop_assert!(coloring_avoids(&c, &h, &h2));
                }
            }
        }
    }
}
