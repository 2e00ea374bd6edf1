//! Exhaustive computation of `ex(n, K_r, 𝔉)` with its extremal graphs.

mod record;
mod search;

pub use record::ExtremalRecord;
pub use search::{count_admissible, ex_search, ex_search_with, SearchConfig, COUNT_LIMIT, DEFAULT_MAX_ORDER};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::matching_number;
use crate::subgraph::contains;

/// Forbidden subgraphs (non-induced) plus an optional bound `ν <= s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ForbiddenSpec {
    subgraphs: Vec<Graph>,
    matching_bound: Option<usize>,
}

impl ForbiddenSpec {
    pub fn new(subgraphs: Vec<Graph>, matching_bound: Option<usize>) -> Result<Self> {
        if subgraphs.iter().any(|g| g.order() == 0) {
            return Err(Error::InvalidParams("forbidden graphs must have at least one vertex".into()));
        }
        Ok(ForbiddenSpec {
            subgraphs,
            matching_bound,
        })
    }

    /// Forbids `subgraphs` and `M_{s+1}`.
    pub fn with_matching(subgraphs: Vec<Graph>, s: usize) -> Result<Self> {
        Self::new(subgraphs, Some(s))
    }

    pub fn subgraphs(&self) -> &[Graph] {
        &self.subgraphs
    }

    pub fn matching_bound(&self) -> Option<usize> {
        self.matching_bound
    }
}

/// No forbidden subgraph and `ν(g) <= s` when a bound is set.
pub fn is_admissible(g: &Graph, spec: &ForbiddenSpec) -> bool {
    if let Some(s) = spec.matching_bound {
        if matching_number(g) > s {
            return false;
        }
    }
    !spec.subgraphs.iter().any(|h| contains(g, h))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn admissibility_examples() {
        let k3 = Graph::complete(3);
        let g = k3.disjoint_union(&k3).disjoint_union(&Graph::empty(2));
        let spec = ForbiddenSpec::with_matching(vec![Graph::path(4)], 2).unwrap();
        assert!(is_admissible(&g, &spec));
        let k4 = Graph::complete(4);
        assert!(!is_admissible(&k4, &ForbiddenSpec::new(vec![k4.clone()], None).unwrap()));
        let m3 = Graph::from_edges(6, [(0, 1), (2, 3), (4, 5)]).unwrap();
        assert!(!is_admissible(&m3, &ForbiddenSpec::new(vec![], Some(2)).unwrap()));
        assert!(ForbiddenSpec::new(vec![Graph::empty(0)], None).is_err());
    }
}
