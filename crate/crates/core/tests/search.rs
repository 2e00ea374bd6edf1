use num_bigint::BigUint;

use turan_core::enumerate::labeled_graphs;
use turan_core::matching::matching_number;
use turan_core::oracle::{count_admissible, ex_search, ex_search_with, is_admissible, ForbiddenSpec, SearchConfig};
use turan_core::subgraph::{contains, count_cliques, isomorphic};
use turan_core::{Error, Graph};

fn spec(f: Graph, s: Option<usize>) -> ForbiddenSpec {
    ForbiddenSpec::new(vec![f], s).unwrap()
}

/// Maximum and admissible count by filtering every labelled graph.
fn naive(n: usize, r: usize, spec: &ForbiddenSpec) -> (BigUint, u64) {
    let mut best = BigUint::from(0u32);
    let mut count = 0;
    for g in labeled_graphs(n) {
        let ok = spec.subgraphs().iter().all(|f| !contains(&g, f))
            && spec.matching_bound().is_none_or(|s| matching_number(&g) <= s);
        if ok {
            count += 1;
            best = best.max(count_cliques(&g, r));
        }
    }
    (best, count)
}

#[test]
fn search_matches_filtering() {
    let families = [Graph::complete(3), Graph::cycle(4).unwrap(), Graph::path(5), Graph::complete(1).join(&Graph::empty(3))];
    for f in families {
        for s in [None, Some(1), Some(2)] {
            let sp = spec(f.clone(), s);
            for n in 1..=6 {
                let (best, count) = naive(n, 2, &sp);
                let rec = ex_search(n, 2, &sp).unwrap();
                assert_eq!(rec.value, best, "n={n} s={s:?}");
                assert_eq!(count_admissible(n, &sp).unwrap(), BigUint::from(count));
            }
        }
    }
}

#[test]
fn monotone_in_n_and_s() {
    let k3 = Graph::complete(3);
    for r in [2, 3] {
        let f = if r == 2 { k3.clone() } else { Graph::complete(4) };
        for s in 1..=3 {
            let mut prev = BigUint::from(0u32);
            for n in 2..=7 {
                let v = ex_search(n, r, &spec(f.clone(), Some(s))).unwrap().value;
                assert!(v >= prev, "r={r} s={s} n={n}");
                if s > 1 {
                    assert!(v >= ex_search(n, r, &spec(f.clone(), Some(s - 1))).unwrap().value);
                }
                prev = v;
            }
        }
    }
}

#[test]
fn pruning_keeps_results() {
    let cases = [
        (Graph::complete(3), 2, Some(2)),
        (Graph::path(4), 3, Some(2)),
        (Graph::path(5), 2, Some(3)),
        (Graph::complete(4), 3, None),
    ];
    for (f, r, s) in cases {
        let sp = spec(f, s);
        for n in [6, 7] {
            let plain = ex_search_with(n, r, &sp, &SearchConfig::default()).unwrap();
            let pruned = ex_search_with(
                n,
                r,
                &sp,
                &SearchConfig {
                    bound_pruning: true,
                    ..Default::default()
                },
            )
            .unwrap();
            assert_eq!(plain.value, pruned.value);
            assert_eq!(plain.witnesses, pruned.witnesses);
        }
    }
}

#[test]
fn witnesses_are_admissible_and_distinct() {
    let sp = spec(Graph::path(4), Some(2));
    let rec = ex_search(7, 3, &sp).unwrap();
    assert!(!rec.witnesses.is_empty());
    for (i, w) in rec.witnesses.iter().enumerate() {
        assert!(is_admissible(w, &sp));
        assert_eq!(count_cliques(w, 3), rec.value);
        for other in &rec.witnesses[i + 1..] {
            assert!(!isomorphic(w, other).unwrap());
        }
    }
}

#[test]
fn record_json_round_trip() {
    let rec = ex_search(6, 2, &spec(Graph::complete(3), Some(2))).unwrap();
    let back = turan_core::oracle::ExtremalRecord::from_json(&rec.to_json()).unwrap();
    assert_eq!(back.comparable_json(), rec.comparable_json());
    assert_eq!(rec.value, BigUint::from(8u32));
}

#[test]
fn limits_are_reported() {
    let sp = spec(Graph::complete(3), None);
    assert!(matches!(ex_search(12, 2, &sp), Err(Error::SizeLimit { .. })));
    let k1 = ForbiddenSpec::new(vec![Graph::complete(1)], None).unwrap();
    assert!(ex_search(3, 2, &k1).is_err());
}
