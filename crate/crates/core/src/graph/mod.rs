//! Finite simple graphs stored as rows of adjacency bits.
//!
//! A [`Graph`] is an immutable value: every "modifying" method returns a new
//! graph. Row `v` holds the neighbourhood of `v` as a little-endian bitset over
//! vertex indices, `words_for(n)` machine words per row.

mod expr;
pub mod graph6;

pub use expr::{build_graph, build_graph_with_limit, ConstructionExpr, DEFAULT_MAX_ORDER};

use std::fmt;

use crate::error::{Error, Result};

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// Iterates the indices of set bits in a multi-word bitset.
pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * 64 + b)
            }
        })
    })
}

/// Iterates the set bits of a single word.
#[inline]
pub(crate) fn bits64(mut w: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if w == 0 {
            None
        } else {
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(b)
        }
    })
}

#[inline]
pub(crate) fn popcount(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

/// Borrowed adjacency rows; lets the small-graph search state share
/// algorithms with [`Graph`].
#[derive(Clone, Copy)]
pub(crate) struct AdjView<'a> {
    pub n: usize,
    pub words: usize,
    pub bits: &'a [u64],
}

impl<'a> AdjView<'a> {
    #[inline]
    pub fn row(&self, v: usize) -> &'a [u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        popcount(self.row(v))
    }
}

/// A finite simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// The edgeless graph `I_n`.
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Graph {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.set_edge(u, v);
            }
        }
        g
    }

    /// The path `P_n` with edges `i, i+1`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.set_edge(v - 1, v);
        }
        g
    }

    /// The cycle `C_n`; `n` must be at least 3.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidExpr(format!("cycle needs at least 3 vertices, got {n}")));
        }
        let mut g = Graph::path(n);
        g.set_edge(0, n - 1);
        Ok(g)
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, order: n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph on at most 64 vertices from single-word rows.
    /// Rows must be symmetric and loop-free.
    pub(crate) fn from_rows64(rows: &[u64]) -> Self {
        let n = rows.len();
        debug_assert!(n <= 64);
        let mut g = Graph::empty(n);
        if n > 0 {
            g.bits.copy_from_slice(rows);
        }
        debug_assert!(g.check_invariants());
        g
    }

    #[inline]
    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
    }

    #[inline]
    pub(crate) fn clear_edge(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / 64] &= !(1 << (v % 64));
        self.bits[v * self.words + u / 64] &= !(1 << (u % 64));
    }

    /// Copy of `self` with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        if u >= self.n || v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: u.max(v),
                order: self.n,
            });
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let mut g = self.clone();
        g.set_edge(u, v);
        Ok(g)
    }

    /// Copy of `self` with the edge `uv` removed (no-op when absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Self {
        let mut g = self.clone();
        if u < self.n && v < self.n && u != v {
            g.clear_edge(u, v);
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        popcount(&self.bits) / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Neighbourhood of `v` as a bitset row.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    /// All rows as single words; requires `n <= 64`.
    pub(crate) fn rows64(&self) -> Vec<u64> {
        debug_assert!(self.n <= 64);
        self.bits.clone()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        popcount(self.row(v))
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    /// Edges `(u, v)` with `u < v`, ordered by `(u, v)`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub(crate) fn view(&self) -> AdjView<'_> {
        AdjView {
            n: self.n,
            words: self.words,
            bits: &self.bits,
        }
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        g
    }

    /// `G - S`: deletes `removed` and relabels the survivors in increasing order.
    pub fn remove_vertices(&self, removed: &[usize]) -> Self {
        let mut keep = vec![true; self.n];
        for &v in removed {
            if v < self.n {
                keep[v] = false;
            }
        }
        let kept: Vec<usize> = (0..self.n).filter(|&v| keep[v]).collect();
        self.induced(&kept)
    }

    /// Relabels vertex `v` as `perm[v]`; `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n {
            return Err(Error::InvalidParams(format!(
                "permutation has length {}, graph has {} vertices",
                perm.len(),
                self.n
            )));
        }
        for &p in perm {
            if p >= self.n || seen[p] {
                return Err(Error::InvalidParams("not a permutation".into()));
            }
            seen[p] = true;
        }
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v]);
        }
        Ok(g)
    }

    /// Disjoint union; `other`'s vertices follow `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Self {
        let off = self.n;
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.set_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.set_edge(u + off, v + off);
        }
        g
    }

    /// Join: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Self {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.set_edge(u, self.n + v);
            }
        }
        g
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Checks symmetry, loop-freeness and that no bit lies beyond `n`.
    pub fn check_invariants(&self) -> bool {
        for u in 0..self.n {
            let row = self.row(u);
            for (wi, &w) in row.iter().enumerate() {
                let lo = wi * 64;
                if lo + 64 > self.n {
                    let valid = self.n - lo;
                    if valid < 64 && w >> valid != 0 {
                        return false;
                    }
                }
            }
            if self.has_edge(u, u) {
                return false;
            }
            for v in self.neighbors(u) {
                if !self.has_edge(v, u) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn components_of_disjoint_triangles() {
        let k3 = Graph::complete(3);
        let g = k3.disjoint_union(&k3).disjoint_union(&Graph::empty(1));
        assert_eq!(g.components(), vec![vec![0, 1, 2], vec![3, 4, 5], vec![6]]);
        assert_eq!(Graph::complete(5).components(), vec![vec![0, 1, 2, 3, 4]]);
        assert_eq!(Graph::empty(3).components(), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn join_edge_count() {
        let g = Graph::complete(3).join(&Graph::empty(2));
        assert_eq!(g.order(), 5);
        assert_eq!(g.edge_count(), 9);
        assert!(!g.has_edge(3, 4));
        assert!(g.check_invariants());
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edges(3, [(0, 3)]), Err(Error::VertexOutOfRange { vertex: 3, order: 3 }));
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn multiword_rows() {
        let g = Graph::complete(130);
        assert_eq!(g.edge_count(), 130 * 129 / 2);
        assert_eq!(g.degree(129), 129);
        assert!(g.check_invariants());
        let h = g.remove_vertices(&[0, 64, 128]);
        assert_eq!(h.order(), 127);
        assert_eq!(h.edge_count(), 127 * 126 / 2);
    }

    #[test]
    fn relabel_preserves_edges() {
        let p = Graph::path(3);
        let q = p.relabel(&[0, 2, 1]).unwrap();
        assert_eq!(q.edges(), vec![(0, 2), (1, 2)]);
        assert!(p.relabel(&[0, 0, 1]).is_err());
    }
}
