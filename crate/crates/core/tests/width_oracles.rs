mod common;

use common::*;
use constel_core::generators::{binary_tree, complete, complete_bipartite, wall, zigzag_graph};
use constel_core::width::{certify, elimination_width, layout_width, pathwidth_exact, treewidth_exact, Certificate};
use constel_core::Graph;
use proptest::prelude::*;

#[test]
fn named_graphs() {
    for n in 1..=8 {
        let r = treewidth_exact(&complete(n), 18).unwrap();
        assert_eq!(r.value, n - 1);
        assert!(certify(&complete(n), &r).unwrap());
    }
    let t = binary_tree(3);
    assert_eq!(treewidth_exact(&t, 18).unwrap().value, 1);
    assert_eq!(treewidth_exact(&complete_bipartite(3, 3), 18).unwrap().value, 3);
    assert_eq!(pathwidth_exact(&complete_bipartite(3, 3), 16).unwrap().value, 3);
    // cross-checked with a subset dynamic program
    assert_eq!(treewidth_exact(&wall(2), 18).unwrap().value, 3);
}

#[test]
fn small_constellations_against_oracle() {
    for n in 2..=4 {
        let c = zigzag_graph(n, 1);
        if c.host().n() <= 8 {
            assert_eq!(treewidth_exact(c.host(), 18).unwrap().value, treewidth_oracle(c.host()));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn treewidth_matches_permutation_oracle(g in random_graph()) {
        let r = treewidth_exact(&g, 18).unwrap();
        prop_assert_eq!(r.value, treewidth_oracle(&g));
        prop_assert!(certify(&g, &r).unwrap());
        if let Certificate::EliminationOrder(order) = &r.certificate {
            prop_assert_eq!(elimination_width(&g, order).unwrap(), elimination_width_oracle(&g, order));
        }
    }

    #[test]
    fn pathwidth_matches_permutation_oracle(g in random_graph()) {
        let r = pathwidth_exact(&g, 16).unwrap();
        prop_assert_eq!(r.value, pathwidth_oracle(&g));
        prop_assert!(certify(&g, &r).unwrap());
        if let Certificate::Layout(layout) = &r.certificate {
            prop_assert_eq!(layout_width(&g, layout).unwrap(), vertex_separation_oracle(&g, layout));
        }
        prop_assert!(treewidth_exact(&g, 18).unwrap().value <= r.value);
    }

    #[test]
    fn widths_of_any_order_bound_from_above(g in random_graph(), seed in any::<u64>()) {
        let mut order: Vec<usize> = (0..g.n()).collect();
        let mut s = seed | 1;
        for i in (1..order.len()).rev() {
            s ^= s << 13;
            s ^= s >> 7;
            s ^= s << 17;
            order.swap(i, (s % (i as u64 + 1)) as usize);
        }
        prop_assert!(treewidth_exact(&g, 18).unwrap().value <= elimination_width(&g, &order).unwrap());
        prop_assert!(pathwidth_exact(&g, 16).unwrap().value <= layout_width(&g, &order).unwrap());
    }
}

#[test]
fn empty_and_edgeless() {
    assert_eq!(treewidth_exact(&Graph::empty(0), 18).unwrap().value, 0);
    assert_eq!(treewidth_exact(&Graph::empty(5), 18).unwrap().value, 0);
    assert_eq!(pathwidth_exact(&Graph::empty(5), 16).unwrap().value, 0);
}
