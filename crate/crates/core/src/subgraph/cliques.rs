//! Exact clique enumeration over bitset rows.

use num_bigint::BigUint;

use crate::graph::{iter_bits, popcount, AdjView, Graph};

/// Counts `(c_0, ..., c_rmax)` with `c_i` the number of `i`-cliques.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CliqueVector {
    counts: Vec<BigUint>,
}

impl CliqueVector {
    pub fn new(counts: Vec<BigUint>) -> Self {
        debug_assert!(!counts.is_empty());
        CliqueVector { counts }
    }

    pub fn rmax(&self) -> usize {
        self.counts.len() - 1
    }

    /// `c_i`, or zero past `rmax`.
    pub fn get(&self, i: usize) -> BigUint {
        self.counts.get(i).cloned().unwrap_or_default()
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn into_counts(self) -> Vec<BigUint> {
        self.counts
    }
}

/// Clears bits `0..=v` of `words`.
#[inline]
fn clear_upto(words: &mut [u64], v: usize) {
    let wi = v / 64;
    for w in &mut words[..wi] {
        *w = 0;
    }
    let b = v % 64;
    words[wi] &= if b == 63 { 0 } else { !0u64 << (b + 1) };
}

fn count_rec(g: AdjView<'_>, cand: &[u64], left: usize, scratch: &mut [Vec<u64>]) -> u128 {
    if left == 1 {
        return popcount(cand) as u128;
    }
    let Some((next, rest)) = scratch.split_first_mut() else {
        unreachable!("scratch sized to clique order");
    };
    let mut total = 0u128;
    for v in iter_bits(cand) {
        let row = g.row(v);
        for ((dst, &c), &r) in next.iter_mut().zip(cand).zip(row) {
            *dst = c & r;
        }
        clear_upto(next, v);
        if popcount(next) + 1 < left {
            continue;
        }
        total += count_rec(g, next, left - 1, rest);
    }
    total
}

pub(crate) fn count_cliques_view(g: AdjView<'_>, cand: &[u64], r: usize) -> u128 {
    match r {
        0 => 1,
        _ => {
            let mut scratch = vec![vec![0u64; g.words]; r];
            count_rec(g, cand, r, &mut scratch)
        }
    }
}

/// Number of `r`-cliques in `g` (`r = 0` counts the empty clique).
pub fn count_cliques(g: &Graph, r: usize) -> BigUint {
    let view = g.view();
    let all = full_set(g.order());
    BigUint::from(count_cliques_view(view, &all, r))
}

pub(crate) fn full_set(n: usize) -> Vec<u64> {
    let mut all = vec![!0u64; n.div_ceil(64)];
    if n % 64 != 0 {
        if let Some(last) = all.last_mut() {
            *last = (1u64 << (n % 64)) - 1;
        }
    }
    all
}

fn vector_rec(
    g: AdjView<'_>,
    cand: &[u64],
    size: usize,
    rmax: usize,
    counts: &mut [u128],
    scratch: &mut [Vec<u64>],
) {
    // `size` vertices chosen so far; every candidate extends to size + 1
    counts[size + 1] += popcount(cand) as u128;
    if size + 1 == rmax {
        return;
    }
    let Some((next, rest)) = scratch.split_first_mut() else {
        return;
    };
    for v in iter_bits(cand) {
        for ((dst, &c), &r) in next.iter_mut().zip(cand).zip(g.row(v)) {
            *dst = c & r;
        }
        clear_upto(next, v);
        if next.iter().any(|&w| w != 0) {
            vector_rec(g, next, size + 1, rmax, counts, rest);
        }
    }
}

/// All clique counts up to order `rmax` in one enumeration.
pub fn clique_vector(g: &Graph, rmax: usize) -> CliqueVector {
    let mut counts = vec![0u128; rmax + 1];
    counts[0] = 1;
    if rmax > 0 && g.order() > 0 {
        let view = g.view();
        let all = full_set(g.order());
        let mut scratch = vec![vec![0u64; view.words]; rmax];
        vector_rec(view, &all, 0, rmax, &mut counts, &mut scratch);
    }
    CliqueVector::new(counts.into_iter().map(BigUint::from).collect())
}

/// Number of `k`-cliques inside the vertex set `mask` of a graph on at most
/// 64 vertices given as single-word rows.
pub(crate) fn count_cliques_in_mask(rows: &[u64], mask: u64, k: usize) -> u64 {
    match k {
        0 => 1,
        1 => u64::from(mask.count_ones()),
        _ => {
            let mut total = 0;
            let mut rest = mask;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let next = rows[v] & rest;
                if next.count_ones() as usize + 1 >= k {
                    total += count_cliques_in_mask(rows, next, k - 1);
                }
            }
            total
        }
    }
}

/// Size of a largest clique.
pub fn clique_number(g: &Graph) -> usize {
    let v = clique_vector(g, g.order());
    v.counts().iter().rposition(|c| *c > BigUint::default()).unwrap_or(0)
}
