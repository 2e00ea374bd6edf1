//! Backtracking subgraph matcher (non-induced, injective).
//!
//! Pattern vertices are placed in a fixed order: each next vertex is the one
//! with the most already-placed neighbours, ties by degree. Host candidates
//! are the intersection of the rows of the images of placed neighbours.

use num_bigint::BigUint;

use super::cliques::full_set;
use crate::graph::{iter_bits, AdjView, Graph};

#[derive(Clone, Debug)]
pub(crate) struct Pattern {
    /// Pattern vertex at each position.
    order: Vec<usize>,
    /// For each position, the earlier positions adjacent to it.
    back: Vec<Vec<usize>>,
    degree: Vec<usize>,
}

impl Pattern {
    pub fn new(h: &Graph, prefix: &[usize]) -> Self {
        let n = h.order();
        let mut placed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for &v in prefix {
            placed[v] = true;
            order.push(v);
        }
        while order.len() < n {
            let next = (0..n)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| {
                    let links = order.iter().filter(|&&u| h.has_edge(u, v)).count();
                    (links, h.degree(v), std::cmp::Reverse(v))
                })
                .expect("unplaced vertex exists");
            placed[next] = true;
            order.push(next);
        }
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &v)| (0..i).filter(|&j| h.has_edge(order[j], v)).collect())
            .collect();
        let degree = order.iter().map(|&v| h.degree(v)).collect();
        Pattern { order, back, degree }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }
}

struct Search<'a> {
    host: AdjView<'a>,
    pat: &'a Pattern,
    assign: Vec<usize>,
    used: Vec<u64>,
    scratch: Vec<Vec<u64>>,
    all: Vec<u64>,
    found: u128,
    limit: u128,
}

impl Search<'_> {
    fn run(&mut self, pos: usize) {
        if pos == self.pat.len() {
            self.found += 1;
            return;
        }
        let mut cand = std::mem::take(&mut self.scratch[pos]);
        match self.pat.back[pos].split_first() {
            Some((&first, rest)) => {
                cand.copy_from_slice(self.host.row(self.assign[first]));
                for &j in rest {
                    for (c, &r) in cand.iter_mut().zip(self.host.row(self.assign[j])) {
                        *c &= r;
                    }
                }
            }
            None => cand.copy_from_slice(&self.all),
        }
        for (c, &u) in cand.iter_mut().zip(&self.used) {
            *c &= !u;
        }
        let need = self.pat.degree[pos];
        for x in iter_bits(&cand) {
            if self.host.degree(x) < need {
                continue;
            }
            self.assign[pos] = x;
            self.used[x / 64] |= 1 << (x % 64);
            self.run(pos + 1);
            self.used[x / 64] &= !(1 << (x % 64));
            if self.found >= self.limit {
                break;
            }
        }
        self.scratch[pos] = cand;
    }
}

/// Counts injective edge-preserving maps of `pat` into `host`, starting with
/// the first `seed.len()` positions fixed to `seed`; stops at `limit`.
pub(crate) fn embeddings(host: AdjView<'_>, pat: &Pattern, seed: &[usize], limit: u128) -> u128 {
    if pat.len() > host.n {
        return 0;
    }
    let mut s = Search {
        host,
        pat,
        assign: vec![0; pat.len()],
        used: vec![0; host.words],
        scratch: vec![vec![0; host.words]; pat.len()],
        all: full_set(host.n),
        found: 0,
        limit,
    };
    for (i, &x) in seed.iter().enumerate() {
        s.assign[i] = x;
        s.used[x / 64] |= 1 << (x % 64);
    }
    s.run(seed.len());
    s.found
}

/// `true` iff `g` has a (not necessarily induced) subgraph isomorphic to `h`.
pub fn contains(g: &Graph, h: &Graph) -> bool {
    if h.order() > g.order() || h.edge_count() > g.edge_count() {
        return false;
    }
    let pat = Pattern::new(h, &[]);
    embeddings(g.view(), &pat, &[], 1) > 0
}

/// Number of injective homomorphisms `h -> g`.
pub fn count_embeddings(g: &Graph, h: &Graph) -> u128 {
    let pat = Pattern::new(h, &[]);
    embeddings(g.view(), &pat, &[], u128::MAX)
}

/// `|Aut(h)|`.
pub fn automorphism_count(h: &Graph) -> u128 {
    // an injective edge-preserving self-map of a finite graph is an automorphism
    count_embeddings(h, h)
}

/// Number of (unlabeled) copies of `h` in `g`.
pub fn count_copies(g: &Graph, h: &Graph) -> BigUint {
    BigUint::from(count_embeddings(g, h) / automorphism_count(h))
}

/// A forbidden graph prepared for checks anchored at one host edge: any copy
/// created by adding edge `uv` must map some pattern edge onto `uv`.
#[derive(Clone, Debug)]
pub(crate) struct AnchoredPattern {
    order: usize,
    /// One pattern per pattern edge, its endpoints at the first two positions.
    per_edge: Vec<Pattern>,
}

impl AnchoredPattern {
    pub fn new(h: &Graph) -> Self {
        let per_edge = h.edges().into_iter().map(|(a, b)| Pattern::new(h, &[a, b])).collect();
        AnchoredPattern {
            order: h.order(),
            per_edge,
        }
    }

    /// Does `host` (which already contains edge `uv`) have a copy through `uv`?
    pub fn through_edge(&self, host: AdjView<'_>, u: usize, v: usize) -> bool {
        if self.order > host.n {
            return false;
        }
        self.per_edge
            .iter()
            .any(|p| embeddings(host, p, &[u, v], 1) > 0 || embeddings(host, p, &[v, u], 1) > 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, ConstructionExpr};

    fn k23() -> Graph {
        build_graph(&ConstructionExpr::Turan { parts: 2, order: 5 }).unwrap()
    }

    #[test]
    fn containment_examples() {
        assert!(contains(&Graph::complete(4), &Graph::path(4)));
        assert!(!contains(&Graph::complete(3), &Graph::path(4)));
        assert!(contains(&k23(), &Graph::path(5)));
        assert!(!contains(&k23(), &Graph::complete(3)));
        assert!(contains(&Graph::empty(3), &Graph::empty(2)));
        assert!(!contains(&Graph::empty(1), &Graph::empty(2)));
    }

    #[test]
    fn copy_counts() {
        assert_eq!(count_copies(&Graph::complete(4), &Graph::path(3)), BigUint::from(12u32));
        assert_eq!(count_copies(&Graph::complete(4), &Graph::complete(2)), BigUint::from(6u32));
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(count_copies(&c5, &c5), BigUint::from(1u32));
        assert_eq!(automorphism_count(&c5), 10);
        assert_eq!(count_copies(&Graph::complete(5), &Graph::cycle(4).unwrap()), BigUint::from(15u32));
    }

    #[test]
    fn anchored_detects_new_copies_only_through_edge() {
        // triangle 0-1-2 plus edge 3-4: a triangle passes through 0-1, none through 3-4
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        let tri = AnchoredPattern::new(&Graph::complete(3));
        assert!(tri.through_edge(g.view(), 0, 1));
        assert!(!tri.through_edge(g.view(), 3, 4));
    }
}
