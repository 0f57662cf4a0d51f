use constel_core::hypergraph::{dsw_bound_check, dsw_rhs, Hypergraph};
use constel_core::Budget;
use proptest::prelude::*;

fn masks(h: &Hypergraph) -> Vec<u64> {
    h.edges()
        .iter()
        .map(|e| e.iter().fold(0u64, |m, &v| m | 1 << v))
        .collect()
}

fn nu_oracle(h: &Hypergraph) -> usize {
    let m = masks(h);
    (0u32..1 << m.len())
        .filter(|&f| {
            let members: Vec<u64> = (0..m.len()).filter(|&i| f >> i & 1 == 1).map(|i| m[i]).collect();
            (0..members.len()).all(|i| (i + 1..members.len()).all(|j| members[i] & members[j] == 0))
        })
        .map(|f| f.count_ones() as usize)
        .max()
        .unwrap()
}

fn tau_oracle(h: &Hypergraph) -> usize {
    let m = masks(h);
    (0u64..1 << h.n())
        .filter(|&s| m.iter().all(|&e| e & s != 0))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

fn lambda_oracle(h: &Hypergraph) -> usize {
    let m = masks(h);
    (1u32..1 << m.len())
        .filter(|&f| {
            let idx: Vec<usize> = (0..m.len()).filter(|&i| f >> i & 1 == 1).collect();
            idx.iter().enumerate().all(|(a, &i)| {
                idx[a + 1..].iter().all(|&j| {
                    let others = idx
                        .iter()
                        .filter(|&&k| k != i && k != j)
                        .fold(0u64, |acc, &k| acc | m[k]);
                    m[i] & m[j] & !others != 0
                })
            })
        })
        .map(|f| f.count_ones() as usize)
        .max()
        .unwrap()
}

fn hypergraph() -> impl Strategy<Value = Hypergraph> {
    (1usize..=8).prop_flat_map(|n| {
        let edge = prop::collection::btree_set(0..n, 1..=n.min(4));
        prop::collection::vec(edge, 1..=8)
            .prop_map(move |es| Hypergraph::new(n, es.into_iter().map(|e| e.into_iter().collect()).collect()).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn parameters_match_subset_oracles(h in hypergraph()) {
        let mut b = Budget::default();
        let nu = h.nu(&mut b).unwrap();
        let tau = h.tau(&mut b).unwrap();
        let lambda = h.lambda(&mut b).unwrap();
        prop_assert_eq!(nu.size, nu_oracle(&h));
        prop_assert_eq!(tau.size, tau_oracle(&h));
        prop_assert_eq!(lambda.size, lambda_oracle(&h));
        // witnesses are genuine
        let m = masks(&h);
        let hit = tau.vertices.iter().fold(0u64, |acc, &v| acc | 1 << v);
        prop_assert!(m.iter().all(|&e| e & hit != 0));
        for (a, &i) in nu.edges.iter().enumerate() {
            for &j in &nu.edges[a + 1..] {
                prop_assert_eq!(m[i] & m[j], 0);
            }
        }
        prop_assert!(nu.size <= tau.size);
    }

    #[test]
    fn lambda_one_iff_pairwise_disjoint(h in hypergraph()) {
        let lambda = h.lambda(&mut Budget::default()).unwrap().size;
        prop_assert_eq!(lambda == 1, h.pairwise_disjoint());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dsw_inequality(h in hypergraph()) {
        let mut b = Budget::default();
        let a = h.nu(&mut b).unwrap().size;
        let ap = h.lambda(&mut b).unwrap().size;
        let check = dsw_bound_check(&h, a, ap, &mut b).unwrap();
        prop_assert!(check.holds);
        prop_assert_eq!(check.rhs, dsw_rhs(a, ap));
        prop_assert!(check.tau as u128 <= check.rhs);
    }
}
