use std::collections::BTreeSet;

use super::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DELETION_LIMIT: usize = 14;

/// `D(F)`: every `F - S` for `S` an independent set of `F` (the empty set
/// included), one canonical representative per isomorphism class, ordered by
/// canonical form.
pub fn independent_deletion_family(f: &Graph) -> Result<Vec<Graph>> {
    let n = f.order();
    if n > DELETION_LIMIT {
        return Err(Error::SizeLimit {
            operation: "independent_deletion_family",
            limit: DELETION_LIMIT,
            order: n,
        });
    }
    let rows = f.rows64();
    let mut forms: BTreeSet<CanonicalForm> = BTreeSet::new();
    for set in 0u64..(1 << n) {
        let independent = crate::graph::bits64(set).all(|v| rows[v] & set == 0);
        if !independent {
            continue;
        }
        let removed: Vec<usize> = crate::graph::bits64(set).collect();
        forms.insert(canonical_form(&f.remove_vertices(&removed))?);
    }
    Ok(forms.into_iter().map(|cf| cf.to_graph()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subgraph::canon::isomorphic;

    fn has(family: &[Graph], g: &Graph) -> bool {
        family.iter().any(|h| isomorphic(h, g).unwrap())
    }

    #[test]
    fn path_on_four_vertices() {
        let fam = independent_deletion_family(&Graph::path(4)).unwrap();
        assert_eq!(fam.len(), 5);
        let k2 = Graph::complete(2);
        for g in [Graph::path(4), Graph::path(3), k2.disjoint_union(&Graph::empty(1)), k2, Graph::empty(2)] {
            assert!(has(&fam, &g), "{g:?}");
        }
    }

    #[test]
    fn small_families() {
        let fam = independent_deletion_family(&Graph::complete(3)).unwrap();
        assert_eq!(fam.len(), 2);
        assert!(has(&fam, &Graph::complete(3)) && has(&fam, &Graph::complete(2)));

        let fam = independent_deletion_family(&Graph::empty(2)).unwrap();
        assert_eq!(fam.len(), 3);
        assert!(has(&fam, &Graph::empty(0)));
    }
}
