use num_bigint::BigUint;
use proptest::prelude::*;

use turan_core::enumerate::{random_permutation, seeded_rng};
use turan_core::matching::{matching_number, matching_number_oracle, maximum_matching, tutte_berge_witness};
use turan_core::subgraph::{
    canonical_form, clique_vector, contains, count_cliques, count_copies, isomorphic, longest_path, longest_path_order,
};
use turan_core::{decode_graph6, encode_graph6, Graph};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let slots = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), slots).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trip(g in graph(70)) {
        let code = encode_graph6(&g);
        prop_assert_eq!(decode_graph6(&code).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels(g in graph(9), seed in any::<u64>()) {
        let perm = random_permutation(g.order(), &mut seeded_rng(seed));
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        prop_assert!(isomorphic(&g, &h).unwrap());
        prop_assert_eq!(canonical_form(&g).unwrap().to_graph().edge_count(), g.edge_count());
    }

    #[test]
    fn copies_and_containment_agree(g in graph(7)) {
        for h in [Graph::complete(3), Graph::path(4), Graph::cycle(4).unwrap(), Graph::path(3)] {
            prop_assert_eq!(contains(&g, &h), count_copies(&g, &h) > BigUint::from(0u32));
        }
        prop_assert_eq!(count_copies(&g, &Graph::complete(3)), count_cliques(&g, 3));
        prop_assert_eq!(count_copies(&g, &Graph::complete(2)), BigUint::from(g.edge_count()));
    }

    #[test]
    fn matching_agrees_with_oracle(g in graph(12)) {
        let nu = matching_number(&g);
        prop_assert_eq!(nu, matching_number_oracle(&g).unwrap());
        let m = maximum_matching(&g);
        prop_assert_eq!(m.len(), nu);
        let mut used = vec![false; g.order()];
        for &(u, v) in &m {
            prop_assert!(g.has_edge(u, v));
            prop_assert!(!used[u] && !used[v]);
            used[u] = true;
            used[v] = true;
        }
    }

    #[test]
    fn tutte_berge_certifies(g in graph(9)) {
        let w = tutte_berge_witness(&g).unwrap();
        prop_assert_eq!(w.value, matching_number(&g));
        let rest = g.remove_vertices(&w.barrier);
        let odd = rest.components().iter().filter(|c| c.len() % 2 == 1).count();
        prop_assert_eq!(2 * w.value, g.order() + w.barrier.len() - odd);
    }

    #[test]
    fn longest_path_is_a_path(g in graph(10)) {
        let p = longest_path(&g).unwrap();
        prop_assert_eq!(p.len(), longest_path_order(&g).unwrap());
        for w in p.windows(2) {
            prop_assert!(g.has_edge(w[0], w[1]));
        }
        if g.order() > 0 {
            prop_assert!(contains(&g, &Graph::path(p.len())));
            prop_assert!(!contains(&g, &Graph::path(p.len() + 1)));
        }
    }

    #[test]
    fn clique_vector_sums_over_components(a in graph(6), b in graph(6)) {
        let u = clique_vector(&a.disjoint_union(&b), 6);
        let (va, vb) = (clique_vector(&a, 6), clique_vector(&b, 6));
        for i in 1..=6 {
            prop_assert_eq!(u.get(i), va.get(i) + vb.get(i));
        }
    }
}

#[test]
fn graph6_known_codes() {
    assert_eq!(encode_graph6(&Graph::complete(4)), "C~");
    assert_eq!(encode_graph6(&Graph::empty(0)), "?");
    assert!(decode_graph6("C").is_err());
}
