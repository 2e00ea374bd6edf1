//! Longest paths by dynamic programming over visited-vertex bitmasks.
//!
//! Before the DP, every class of pairwise non-adjacent vertices sharing one
//! neighbourhood `N` is cut down to `|N| + 1` representatives: consecutive
//! class members on a path are separated by a vertex of `N`, so no path uses
//! more than that many. This keeps hub-plus-independent-set constructions
//! small regardless of `n`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{bits64, Graph};

/// Largest component (after twin reduction) the DP accepts.
pub const LONGEST_PATH_LIMIT: usize = 24;

/// Vertices kept after the twin reduction, in increasing order.
fn twin_reduced(g: &Graph) -> Vec<usize> {
    let mut classes: HashMap<&[u64], Vec<usize>> = HashMap::new();
    for v in 0..g.order() {
        classes.entry(g.row(v)).or_default().push(v);
    }
    let mut keep = Vec::with_capacity(g.order());
    for (row, members) in classes {
        let cap = crate::graph::popcount(row) + 1;
        keep.extend(members.into_iter().take(cap));
    }
    keep.sort_unstable();
    keep
}

/// Longest path inside a connected graph on at most 24 vertices.
fn longest_in_small(rows: &[u64]) -> Vec<usize> {
    let m = rows.len();
    if m == 0 {
        return Vec::new();
    }
    let full = if m == 64 { !0 } else { (1u64 << m) - 1 };
    // ends[mask]: vertices v such that some path covers exactly `mask` and ends at v
    let mut ends = vec![0u32; 1 << m];
    for v in 0..m {
        ends[1 << v] = 1 << v;
    }
    let mut best = (1usize, 1u64);
    for mask in 1..(1usize << m) {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        let size = mask.count_ones() as usize;
        if size > best.0 {
            best = (size, mask as u64);
            if mask as u64 == full {
                break;
            }
        }
        for v in bits64(u64::from(e)) {
            for w in bits64(rows[v] & !(mask as u64)) {
                ends[mask | 1 << w] |= 1 << w;
            }
        }
    }
    let (_, mut mask) = best;
    let mut v = ends[mask as usize].trailing_zeros() as usize;
    let mut path = vec![v];
    while mask.count_ones() > 1 {
        mask &= !(1 << v);
        let prev = u64::from(ends[mask as usize]) & rows[v];
        v = prev.trailing_zeros() as usize;
        path.push(v);
    }
    path
}

/// A longest path of `g` as a vertex sequence.
pub fn longest_path(g: &Graph) -> Result<Vec<usize>> {
    let keep = twin_reduced(g);
    let reduced = g.induced(&keep);
    let mut best: Vec<usize> = Vec::new();
    for comp in reduced.components() {
        if comp.len() <= best.len() {
            continue;
        }
        if comp.len() > LONGEST_PATH_LIMIT {
            return Err(Error::SizeLimit {
                operation: "longest_path",
                limit: LONGEST_PATH_LIMIT,
                order: comp.len(),
            });
        }
        let sub = reduced.induced(&comp);
        let path = longest_in_small(&sub.rows64());
        if path.len() > best.len() {
            best = path.into_iter().map(|i| keep[comp[i]]).collect();
        }
    }
    Ok(best)
}

/// Number of vertices on a longest path; `g` is `P_k`-free iff this is `< k`.
pub fn longest_path_order(g: &Graph) -> Result<usize> {
    longest_path(g).map(|p| p.len())
}
