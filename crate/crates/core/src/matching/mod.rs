//! Maximum matching (blossom), a bitmask oracle, and Tutte–Berge witnesses.

mod blossom;

pub(crate) use blossom::{is_free, Blossom};

use std::cmp::Reverse;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits64, Graph};

pub const ORACLE_LIMIT: usize = 24;
pub const TUTTE_BERGE_LIMIT: usize = 12;

pub(crate) fn adjacency_lists(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.order()).map(|v| g.neighbors(v).collect()).collect()
}

pub(crate) fn adjacency_lists64(rows: &[u64]) -> Vec<Vec<usize>> {
    rows.iter().map(|&r| bits64(r).collect()).collect()
}

/// Edges of one maximum matching, each as `(u, v)` with `u < v`.
pub fn maximum_matching(g: &Graph) -> Vec<(usize, usize)> {
    let adj = adjacency_lists(g);
    let mut b = Blossom::new(&adj, blossom::greedy_mate(&adj));
    b.run();
    b.mate
        .iter()
        .enumerate()
        .filter(|&(v, &m)| !is_free(&b.mate, v) && v < m)
        .map(|(v, &m)| (v, m))
        .collect()
}

/// `ν(g)`.
pub fn matching_number(g: &Graph) -> usize {
    maximum_matching(g).len()
}

/// `ν` restricted to the vertex set `mask` of a graph with single-word rows.
pub(crate) fn matching_number_in_mask(rows: &[u64], mask: u64, memo: &mut [u8]) -> usize {
    if mask.count_ones() < 2 {
        return 0;
    }
    if let Some(&m) = memo.get(mask as usize) {
        if m != u8::MAX {
            return m as usize;
        }
    }
    let v = mask.trailing_zeros() as usize;
    let rest = mask & !(1 << v);
    let mut best = matching_number_in_mask(rows, rest, memo);
    for u in bits64(rows[v] & rest) {
        best = best.max(1 + matching_number_in_mask(rows, rest & !(1 << u), memo));
    }
    if let Some(slot) = memo.get_mut(mask as usize) {
        *slot = best as u8;
    }
    best
}

/// `ν(g)` by memoized recursion over vertex subsets; independent of the
/// blossom code and limited to 24 vertices.
pub fn matching_number_oracle(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n > ORACLE_LIMIT {
        return Err(Error::SizeLimit {
            operation: "matching_number_oracle",
            limit: ORACLE_LIMIT,
            order: n,
        });
    }
    let rows = g.rows64();
    let mut memo = vec![u8::MAX; 1 << n];
    let all = if n == 0 { 0 } else { (1u64 << n) - 1 };
    Ok(matching_number_in_mask(&rows, all, &mut memo))
}

/// A set `B` such that every component of `G - B` is odd, with
/// `value = |B| + Σ (|C_i| - 1) / 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TutteBergeWitness {
    pub barrier: Vec<usize>,
    pub value: usize,
}

/// Component sizes of `G[mask]`, or `None` if one is even.
fn odd_component_sizes(rows: &[u64], mask: u64) -> Option<Vec<usize>> {
    let mut left = mask;
    let mut sizes = Vec::new();
    while left != 0 {
        let start = left & left.wrapping_neg();
        let mut comp = start;
        let mut frontier = start;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = rows[v] & mask & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        let size = comp.count_ones() as usize;
        if size % 2 == 0 {
            return None;
        }
        sizes.push(size);
        left &= !comp;
    }
    Some(sizes)
}

/// Exhaustive search over `B ⊆ V` for the smallest value. Ties go to the
/// largest `B`, then the largest degree sum over `B`, then the
/// lexicographically smallest sorted vertex list.
pub fn tutte_berge_witness(g: &Graph) -> Result<TutteBergeWitness> {
    let n = g.order();
    if n > TUTTE_BERGE_LIMIT {
        return Err(Error::SizeLimit {
            operation: "tutte_berge_witness",
            limit: TUTTE_BERGE_LIMIT,
            order: n,
        });
    }
    let rows = g.rows64();
    let all = if n == 0 { 0 } else { (1u64 << n) - 1 };
    let mut best: Option<(usize, Reverse<usize>, Reverse<usize>, Vec<usize>)> = None;
    for b in 0..=all {
        let Some(sizes) = odd_component_sizes(&rows, all & !b) else {
            continue;
        };
        let value = b.count_ones() as usize + sizes.iter().map(|s| (s - 1) / 2).sum::<usize>();
        let degree_sum = bits64(b).map(|v| rows[v].count_ones() as usize).sum();
        let key = (
            value,
            Reverse(b.count_ones() as usize),
            Reverse(degree_sum),
            bits64(b).collect(),
        );
        if best.as_ref().is_none_or(|cur| key < *cur) {
            best = Some(key);
        }
    }
    // B = V always qualifies, so a witness exists
    let (value, _, _, barrier) = best.expect("B = V leaves no components");
    Ok(TutteBergeWitness { barrier, value })
}
