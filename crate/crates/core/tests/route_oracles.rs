mod common;

use std::collections::BTreeSet;

use common::*;
use constel_core::constellation::{
    enumerate_routes, has_two_anticomplete_routes, is_aligned, is_interrupted, is_mixed, is_zigzagged, RouteTable,
};
use constel_core::generators::{aligned_constellation, nested_constellation, occultation, zigzag_graph};
use constel_core::{ApexOrder, OrderMode};
use proptest::prelude::*;

fn routes_match(c: &constel_core::Constellation) {
    let apex: Vec<usize> = c.apex().iter().collect();
    for &x in &apex {
        for &y in &apex {
            if x == y {
                continue;
            }
            let got: BTreeSet<_> = enumerate_routes(c, x, y)
                .unwrap()
                .iter()
                .map(|r| (r.path, r.start, r.end))
                .collect();
            assert_eq!(got, brute_routes(c, x, y), "routes {x} -> {y}");
        }
    }
}

#[test]
fn generated_families_match_route_oracle() {
    for n in 2..=6 {
        routes_match(&zigzag_graph(n, 2));
    }
    routes_match(&aligned_constellation(3, 2, 3));
    routes_match(&occultation(3, 2).0);
    routes_match(&nested_constellation(5, 2).0);
}

#[test]
fn route_table_hits_match() {
    let c = zigzag_graph(5, 1);
    let t = RouteTable::new(&c);
    let apex = t.apex().to_vec();
    for i in 0..apex.len() {
        for j in i + 1..apex.len() {
            for (k, r) in t.routes(i, j).iter().enumerate() {
                let rv = route_vertices(&c, apex[i], apex[j], (r.path, r.start, r.end));
                for (z, &zv) in apex.iter().enumerate() {
                    assert_eq!(t.hits(i, j, k, z), hits(&c, zv, &rv));
                }
            }
        }
    }
}

fn anticomplete_oracle(c: &constel_core::Constellation) -> bool {
    let apex: Vec<usize> = c.apex().iter().collect();
    let mut all = Vec::new();
    for (i, &x) in apex.iter().enumerate() {
        for &y in &apex[i + 1..] {
            for r in brute_routes(c, x, y) {
                all.push(route_vertices(c, x, y, r));
            }
        }
    }
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            let disjoint = all[i].iter().all(|v| !all[j].contains(v));
            let no_edge = all[i].iter().all(|&u| all[j].iter().all(|&w| !c.host().has_edge(u, w)));
            if disjoint && no_edge {
                return true;
            }
        }
    }
    false
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn random_routes_match_oracle(raw in raw_constellation(4, 3, 6)) {
        routes_match(&build(&raw));
    }

    #[test]
    fn anticomplete_pair_matches_oracle(raw in raw_constellation(4, 3, 6)) {
        let c = build(&raw);
        let found = has_two_anticomplete_routes(&c);
        prop_assert_eq!(found.is_some(), anticomplete_oracle(&c));
        if let Some((r1, r2)) = found {
            let a: Vec<usize> = r1.vertices(&c);
            let b: Vec<usize> = r2.vertices(&c);
            prop_assert!(a.iter().all(|&u| !b.contains(&u) && b.iter().all(|&w| !c.host().has_edge(u, w))));
        }
    }

    #[test]
    fn order_checks_match_definitions(raw in raw_constellation(4, 2, 5), qm in 0usize..2, q in 1usize..3, qp in 0usize..2) {
        let c = build(&raw);
        let apex: Vec<usize> = c.apex().iter().collect();
        let orders = permutations(&apex);
        for order in &orders {
            let mode = OrderMode::Given(ApexOrder::new(order.clone()));
            prop_assert_eq!(is_mixed(&c, qm, q, qp, &mode).unwrap().holds(), mixed_oracle(&c, qm, q, qp, order));
            prop_assert_eq!(is_zigzagged(&c, q, &mode).unwrap().holds(), mixed_oracle(&c, 0, q, 0, order));
            prop_assert_eq!(is_interrupted(&c, &mode).unwrap().holds(), interrupted_oracle(&c, order));
        }
        let any_zig = orders.iter().any(|o| mixed_oracle(&c, 0, q, 0, o));
        prop_assert_eq!(is_zigzagged(&c, q, &OrderMode::Search).unwrap().holds(), any_zig);
        let any_int = orders.iter().any(|o| interrupted_oracle(&c, o));
        let searched = is_interrupted(&c, &OrderMode::Search).unwrap();
        prop_assert_eq!(searched.holds(), any_int);
        if let Some(o) = searched.order() {
            prop_assert!(interrupted_oracle(&c, o.as_slice()));
        }
    }

    #[test]
    fn aligned_matches_traversal(raw in raw_constellation(4, 2, 6)) {
        let c = build(&raw);
        let apex: Vec<usize> = c.apex().iter().collect();
        for order in permutations(&apex) {
            // some labelling of each path puts every neighbor of s before every neighbor of s' when s < s'
            let expect = (0..c.l()).all(|p| {
                let path = &c.paths()[p];
                [false, true].iter().any(|&rev| {
                    let t = path.len();
                    let label = |pos: usize| if rev { t - 1 - pos } else { pos };
                    (0..t).all(|a| (0..t).all(|b| {
                        order.iter().enumerate().all(|(ra, &s1)| order[ra + 1..].iter().all(|&s2| {
                            !(c.host().has_edge(s1, path[a]) && c.host().has_edge(s2, path[b])) || label(a) < label(b)
                        }))
                    }))
                })
            });
            let mode = OrderMode::Given(ApexOrder::new(order.clone()));
            prop_assert_eq!(is_aligned(&c, &mode).unwrap().holds(), expect);
        }
    }
}
