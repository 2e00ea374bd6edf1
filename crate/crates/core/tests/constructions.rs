use num_bigint::BigUint;

use turan_core::constructions::{
    build_named, cliques_of_expr, named_floor, question11_values, theorem15_value, theorem16_value, NamedId,
};
use turan_core::oracle::{ex_search, ForbiddenSpec};
use turan_core::subgraph::count_cliques;
use turan_core::{build_graph, ConstructionExpr, Graph};

#[test]
fn named_counts_match_materialized() {
    for p in 2..=4 {
        for s in p..=p + 3 {
            for id in NamedId::ALL {
                let Ok(floor) = named_floor(id, p, s) else { continue };
                for n in [floor, floor + 7, 40] {
                    let Ok(e) = build_named(id, p, s, n) else { continue };
                    let g = build_graph(&e).unwrap();
                    assert_eq!(g.order(), n);
                    for r in 2..=p + 2 {
                        assert_eq!(cliques_of_expr(&e, r).unwrap(), count_cliques(&g, r), "{id} p={p} s={s} n={n} r={r}");
                    }
                }
            }
        }
    }
}

#[test]
fn example_construction() {
    let e = build_named(NamedId::G1, 3, 5, 20).unwrap();
    assert_eq!(cliques_of_expr(&e, 3).unwrap(), BigUint::from(23u32));
}

#[test]
fn formulas_bound_search_from_below() {
    // every construction is admissible, so the search can only beat it
    for (p, s, n) in [(2, 2, 7), (2, 2, 8), (2, 3, 8)] {
        let f = theorem15_value(p, s, 2, n).unwrap().value;
        let sp = ForbiddenSpec::with_matching(vec![Graph::path(2 * p)], s).unwrap();
        assert!(ex_search(n, 2, &sp).unwrap().value >= f);
    }
    let f = theorem16_value(2, 3, 2, 8).unwrap().value;
    let sp = ForbiddenSpec::with_matching(vec![Graph::path(5)], 3).unwrap();
    assert_eq!(ex_search(8, 2, &sp).unwrap().value, f);
}

#[test]
fn hub_pair_against_materialized() {
    let (left, right) = question11_values(2, 2, 3, 20).unwrap();
    let k3s = ConstructionExpr::cliques(2, 3);
    let l = ConstructionExpr::join([k3s.clone(), ConstructionExpr::Independent(14)]);
    let r = ConstructionExpr::join([ConstructionExpr::union([k3s, ConstructionExpr::Independent(1)]), ConstructionExpr::Independent(13)]);
    assert_eq!(left, count_cliques(&build_graph(&l).unwrap(), 3));
    assert_eq!(right, count_cliques(&build_graph(&r).unwrap(), 3));
}
