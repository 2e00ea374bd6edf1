//! Labeled graph enumeration and seeded random graphs for exhaustive and
//! sampled property checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// Pairs `(u, v)`, `u < v`, in lexicographic order.
pub fn edge_slots(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// All `2^C(n,2)` labeled graphs on `n <= 11` vertices; bit `i` of the
/// index selects slot `i` of [`edge_slots`].
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 11, "2^C(n,2) labeled graphs do not fit a u64 index for n > 11");
    let slots = edge_slots(n);
    (0u64..1 << slots.len()).map(move |mask| graph_from_mask(n, &slots, mask))
}

fn graph_from_mask(n: usize, slots: &[(usize, usize)], mask: u64) -> Graph {
    let mut rows = vec![0u64; n];
    let mut rest = mask;
    while rest != 0 {
        let (u, v) = slots[rest.trailing_zeros() as usize];
        rest &= rest - 1;
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
    }
    Graph::from_rows64(&rows)
}

/// `G(n, 1/2)`.
pub fn random_graph<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let pairs = edge_slots(n).into_iter().filter(|_| rng.gen_bool(0.5));
    Graph::from_edges(n, pairs).expect("slots are valid edges")
}

/// `G(n, p)`.
pub fn random_graph_with_density<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let pairs = edge_slots(n).into_iter().filter(|_| rng.gen_bool(p));
    Graph::from_edges(n, pairs).expect("slots are valid edges")
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly random permutation of `0..n`.
pub fn random_permutation<R: Rng>(n: usize, rng: &mut R) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}
