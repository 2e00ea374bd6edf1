//! Canonical labelling for small graphs.
//!
//! Vertices are first split into cells by colour refinement (start from
//! degrees, repeatedly recolour by the multiset of neighbour colours); cells
//! are ordered by colour and occupy consecutive label blocks. The canonical
//! form is the lexicographically smallest edge bitstring, read in graph6
//! column order, over all labellings that respect the cell order. The search
//! fills one label at a time, keeps only candidates producing the smallest new
//! column, and skips a candidate that is a twin of one already tried at the
//! same level (swapping twins is an automorphism).

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const CANONICAL_LIMIT: usize = 16;

/// Order-then-code key; equal iff the graphs are isomorphic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm {
    n: usize,
    /// Edge bits in column order, first bit most significant.
    code: u128,
}

#[inline]
fn pairs(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn code(&self) -> u128 {
        self.code
    }

    /// The canonically labelled representative.
    pub fn to_graph(&self) -> Graph {
        let total = pairs(self.n);
        let mut g = Graph::empty(self.n);
        let mut k = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.code >> (total - 1 - k) & 1 == 1 {
                    g.set_edge(i, j);
                }
                k += 1;
            }
        }
        g
    }
}

/// Stable colour refinement; returns a colour per vertex, colours dense from 0.
fn refine(rows: &[u64]) -> Vec<usize> {
    let n = rows.len();
    let mut colors: Vec<usize> = rows.iter().map(|r| r.count_ones() as usize).collect();
    let mut classes = usize::MAX;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = crate::graph::bits64(rows[v]).map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        colors = sigs
            .iter()
            .map(|s| distinct.binary_search(s).expect("signature present"))
            .collect();
        if distinct.len() == classes {
            return colors;
        }
        classes = distinct.len();
    }
}

struct Canon<'a> {
    rows: &'a [u64],
    colors: Vec<usize>,
    /// Colour required at each label position.
    slot_color: Vec<usize>,
    placed: Vec<usize>,
    used: u64,
    total: usize,
    best: Option<u128>,
}

impl Canon<'_> {
    fn column(&self, v: usize) -> u128 {
        self.placed
            .iter()
            .fold(0u128, |acc, &u| (acc << 1) | u128::from(self.rows[u] >> v & 1))
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        self.rows[u] & !(1 << v) == self.rows[v] & !(1 << u)
    }

    fn search(&mut self, prefix: u128) {
        let k = self.placed.len();
        let n = self.colors.len();
        if k == n {
            if self.best.is_none_or(|b| prefix < b) {
                self.best = Some(prefix);
            }
            return;
        }
        let want = self.slot_color[k];
        let cands: Vec<(usize, u128)> = (0..n)
            .filter(|&v| self.used >> v & 1 == 0 && self.colors[v] == want)
            .map(|v| (v, self.column(v)))
            .collect();
        let Some(min_col) = cands.iter().map(|c| c.1).min() else {
            return;
        };
        let next = (prefix << k) | min_col;
        if let Some(best) = self.best {
            let shift = self.total - pairs(k + 1);
            if next.cmp(&(best >> shift)) == Ordering::Greater {
                return;
            }
        }
        let mut tried: Vec<usize> = Vec::new();
        for &(v, col) in &cands {
            if col != min_col || tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            tried.push(v);
            self.placed.push(v);
            self.used |= 1 << v;
            self.search(next);
            self.used &= !(1 << v);
            self.placed.pop();
        }
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.order();
    if n > CANONICAL_LIMIT {
        return Err(Error::SizeLimit {
            operation: "canonical_form",
            limit: CANONICAL_LIMIT,
            order: n,
        });
    }
    let rows = g.rows64();
    let colors = refine(&rows);
    let mut slot_color = colors.clone();
    slot_color.sort_unstable();
    let mut c = Canon {
        rows: &rows,
        colors,
        slot_color,
        placed: Vec::with_capacity(n),
        used: 0,
        total: pairs(n),
        best: None,
    };
    c.search(0);
    Ok(CanonicalForm {
        n,
        code: c.best.unwrap_or(0),
    })
}

pub fn isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let p = Graph::path(3);
        let q = Graph::from_edges(3, [(0, 2), (2, 1)]).unwrap();
        assert_eq!(canonical_form(&p).unwrap(), canonical_form(&q).unwrap());
        assert_ne!(canonical_form(&Graph::complete(3)).unwrap(), canonical_form(&p).unwrap());
        let k3 = Graph::complete(3);
        assert!(!isomorphic(&Graph::cycle(6).unwrap(), &k3.disjoint_union(&k3)).unwrap());
    }

    #[test]
    fn representative_is_isomorphic_and_fixed() {
        let g = Graph::from_edges(6, [(0, 5), (5, 3), (3, 1), (1, 4)]).unwrap();
        let cf = canonical_form(&g).unwrap();
        let rep = cf.to_graph();
        assert_eq!(rep.edge_count(), 4);
        assert_eq!(canonical_form(&rep).unwrap(), cf);
    }

    #[test]
    fn symmetric_graphs_at_the_limit() {
        for g in [Graph::empty(16), Graph::complete(16), Graph::cycle(16).unwrap()] {
            let cf = canonical_form(&g).unwrap();
            assert_eq!(cf.to_graph().edge_count(), g.edge_count());
        }
        assert!(canonical_form(&Graph::empty(17)).is_err());
    }
}
