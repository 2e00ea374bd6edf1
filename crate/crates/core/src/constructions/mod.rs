//! Named extremal constructions, their parameters, closed-form counts, and
//! the hub graphs `D ∨ I_m`.

mod algebra;
mod formulas;
mod named;
mod params;

pub use algebra::{binomial, clique_vector_of_expr, cliques_of_expr, hub_expr};
pub use formulas::{
    alon_frankl_value, bipartite_bounds_formal, named_maximum, question11_values, theorem14_bounds, theorem15_value,
    theorem16_candidates, theorem16_value, turan_edges, BipartiteBounds, NamedMaximum,
};
pub use named::{build_named, expand_named, named_floor, NamedConstruction, NamedId};
pub use params::{derive_even_params, derive_odd_params, EvenPathParams, OddPathParams};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{ex_search_with, ForbiddenSpec, SearchConfig};
use crate::subgraph::{count_cliques, independent_deletion_family};

pub const DF_LIMIT: usize = 8;

/// A graph on `s` vertices with no member of `D(f)` and the most
/// `(r-1)`-cliques, choosing among those the one with the most `r`-cliques
/// (then the smallest canonical form).
pub fn d_f_extremal(s: usize, r: usize, f: &Graph) -> Result<Graph> {
    d_f_extremal_with(s, r, f, &SearchConfig::default())
}

pub fn d_f_extremal_with(s: usize, r: usize, f: &Graph, cfg: &SearchConfig) -> Result<Graph> {
    if s > DF_LIMIT {
        return Err(Error::SizeLimit {
            operation: "d_f_extremal",
            limit: DF_LIMIT,
            order: s,
        });
    }
    if r < 1 {
        return Err(Error::InvalidParams("r must be at least 1".into()));
    }
    let family = independent_deletion_family(f)?;
    if family.iter().any(|g| g.order() == 0) {
        return Err(Error::InvalidParams("D(F) contains the null graph, so every graph contains it".into()));
    }
    let rec = ex_search_with(s, r - 1, &ForbiddenSpec::new(family, None)?, cfg)?;
    // witnesses come sorted by canonical form, so the first maximum wins ties
    let mut best: Option<(Graph, _)> = None;
    for w in rec.witnesses {
        let c = count_cliques(&w, r);
        if best.as_ref().is_none_or(|(_, b)| c > *b) {
            best = Some((w, c));
        }
    }
    Ok(best.expect("a search record has at least one witness").0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subgraph::isomorphic;

    #[test]
    fn extremal_examples() {
        let f = Graph::path(4).join(&Graph::empty(2));
        let want = Graph::complete(3).disjoint_union(&Graph::empty(1));
        assert!(isomorphic(&d_f_extremal(4, 3, &f).unwrap(), &want).unwrap());
        let k4 = Graph::complete(4);
        assert!(isomorphic(&d_f_extremal(2, 3, &k4).unwrap(), &Graph::complete(2)).unwrap());
        assert!(isomorphic(&d_f_extremal(3, 3, &k4).unwrap(), &Graph::path(3)).unwrap());
        assert!(d_f_extremal(9, 3, &k4).is_err());
        assert!(d_f_extremal(3, 3, &Graph::empty(2)).is_err());
    }
}
