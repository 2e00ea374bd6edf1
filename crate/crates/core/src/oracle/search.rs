//! Include/exclude search over edge slots.
//!
//! Slots are the pairs `(u, v)`, `u < v`, in lexicographic order. Including
//! a slot re-checks only what the new edge can break: forbidden copies
//! through it, and whether it opens an augmenting path for the current
//! maximum matching. Both constraints survive edge deletion, so the include
//! branch can be dropped as soon as one fails.

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigUint;
use rayon::prelude::*;

use super::{is_admissible, ExtremalRecord, ForbiddenSpec};
use crate::error::{Error, Result};
use crate::graph::{AdjView, Graph};
use crate::matching::{adjacency_lists64, Blossom};
use crate::subgraph::matcher::AnchoredPattern;
use crate::subgraph::{canonical_form, count_cliques, count_cliques_in_mask, CanonicalForm, CANONICAL_LIMIT};

pub const DEFAULT_MAX_ORDER: usize = 9;
pub const COUNT_LIMIT: usize = 8;

const FREE: u8 = u8::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Largest `n` accepted; at most 16.
    pub max_order: usize,
    /// Threads running subtrees; 0 means one per available core.
    pub workers: usize,
    /// Slots decided before the tree is cut into independent tasks.
    pub split_depth: usize,
    /// Skip subtrees whose best completion cannot reach the best value
    /// found so far in the same task.
    pub bound_pruning: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_order: DEFAULT_MAX_ORDER,
            workers: 0,
            split_depth: 8,
            bound_pruning: false,
        }
    }
}

#[derive(Clone)]
struct State {
    rows: [u64; CANONICAL_LIMIT],
    mate: [u8; CANONICAL_LIMIT],
    nu: usize,
    value: u64,
}

struct Problem {
    n: usize,
    r: usize,
    slots: Vec<(usize, usize)>,
    patterns: Vec<AnchoredPattern>,
    bound: Option<usize>,
    pruning: bool,
}

#[derive(Default)]
struct Outcome {
    best: Option<u64>,
    forms: BTreeSet<CanonicalForm>,
    nodes: u64,
}

impl Outcome {
    fn offer(&mut self, value: u64, form: impl FnOnce() -> CanonicalForm) {
        match self.best {
            Some(b) if value < b => return,
            Some(b) if value == b => {}
            _ => {
                self.best = Some(value);
                self.forms.clear();
            }
        }
        self.forms.insert(form());
    }

    fn merge(&mut self, other: Outcome) {
        self.nodes += other.nodes;
        if let Some(v) = other.best {
            match self.best {
                Some(b) if v < b => {}
                Some(b) if v == b => self.forms.extend(other.forms),
                _ => {
                    self.best = Some(v);
                    self.forms = other.forms;
                }
            }
        }
    }
}

impl Problem {
    fn view<'a>(&self, rows: &'a [u64; CANONICAL_LIMIT]) -> AdjView<'a> {
        AdjView {
            n: self.n,
            words: 1,
            bits: &rows[..self.n],
        }
    }

    /// The state after adding slot `i`, or `None` if that breaks admissibility.
    fn include(&self, st: &State, i: usize) -> Option<State> {
        let (u, v) = self.slots[i];
        let mut next = st.clone();
        next.rows[u] |= 1 << v;
        next.rows[v] |= 1 << u;
        if self.patterns.iter().any(|p| p.through_edge(self.view(&next.rows), u, v)) {
            return None;
        }
        if let Some(s) = self.bound {
            if next.mate[u] == FREE && next.mate[v] == FREE {
                next.mate[u] = v as u8;
                next.mate[v] = u as u8;
                next.nu += 1;
            } else {
                let adj = adjacency_lists64(&next.rows[..self.n]);
                let mate = next.mate[..self.n]
                    .iter()
                    .map(|&m| if m == FREE { usize::MAX } else { m as usize })
                    .collect();
                let mut b = Blossom::new(&adj, mate);
                if b.augment_once() {
                    next.nu += 1;
                    for (dst, &m) in next.mate.iter_mut().zip(&b.mate) {
                        *dst = if m == usize::MAX { FREE } else { m as u8 };
                    }
                }
            }
            if next.nu > s {
                return None;
            }
        }
        if self.r >= 2 {
            let common = st.rows[u] & st.rows[v];
            next.value += count_cliques_in_mask(&next.rows[..self.n], common, self.r - 2);
        }
        Some(next)
    }

    fn hopeless(&self, st: &State, depth: usize, best: Option<u64>) -> bool {
        let Some(best) = best else { return false };
        if !self.pruning || self.r < 2 {
            return false;
        }
        let mut rows = st.rows;
        for &(u, v) in &self.slots[depth..] {
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        let all = (1u64 << self.n) - 1;
        count_cliques_in_mask(&rows[..self.n], all, self.r) < best
    }

    fn dfs(&self, st: &State, depth: usize, out: &mut Outcome) {
        out.nodes += 1;
        if self.hopeless(st, depth, out.best) {
            return;
        }
        if depth == self.slots.len() {
            out.offer(st.value, || {
                canonical_form(&Graph::from_rows64(&st.rows[..self.n])).expect("n within the canonical limit")
            });
            return;
        }
        if let Some(next) = self.include(st, depth) {
            self.dfs(&next, depth + 1, out);
        }
        self.dfs(st, depth + 1, out);
    }

    /// Decides the first `depth` slots, returning the admissible prefixes in
    /// traversal order.
    fn prefixes(&self, st: State, depth: usize, stop: usize, nodes: &mut u64, acc: &mut Vec<State>) {
        if depth == stop {
            acc.push(st);
            return;
        }
        *nodes += 1;
        if let Some(next) = self.include(&st, depth) {
            self.prefixes(next, depth + 1, stop, nodes, acc);
        }
        self.prefixes(st, depth + 1, stop, nodes, acc);
    }
}

fn slots(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn check_order(n: usize, limit: usize, operation: &'static str) -> Result<()> {
    if n > limit {
        return Err(Error::SizeLimit {
            operation,
            limit,
            order: n,
        });
    }
    Ok(())
}

fn problem(n: usize, r: usize, spec: &ForbiddenSpec, pruning: bool) -> Problem {
    Problem {
        n,
        r,
        slots: slots(n),
        patterns: spec
            .subgraphs()
            .iter()
            .filter(|h| h.edge_count() > 0)
            .map(AnchoredPattern::new)
            .collect(),
        bound: spec.matching_bound(),
        pruning,
    }
}

fn root(n: usize, r: usize) -> State {
    let base = count_cliques(&Graph::empty(n), r);
    State {
        rows: [0; CANONICAL_LIMIT],
        mate: [FREE; CANONICAL_LIMIT],
        nu: 0,
        value: u64::try_from(base).expect("C(n, r) with r <= 1 is small"),
    }
}

/// `ex(n, K_r, spec)` with the default configuration.
pub fn ex_search(n: usize, r: usize, spec: &ForbiddenSpec) -> Result<ExtremalRecord> {
    ex_search_with(n, r, spec, &SearchConfig::default())
}

pub fn ex_search_with(n: usize, r: usize, spec: &ForbiddenSpec, cfg: &SearchConfig) -> Result<ExtremalRecord> {
    check_order(n, cfg.max_order.min(CANONICAL_LIMIT), "ex_search")?;
    let started = Instant::now();
    if !is_admissible(&Graph::empty(n), spec) {
        return Err(Error::NoAdmissibleGraph(n));
    }
    let pb = problem(n, r, spec, cfg.bound_pruning);
    let stop = cfg.split_depth.min(pb.slots.len());
    let mut total = Outcome::default();
    let mut tasks = Vec::new();
    pb.prefixes(root(n, r), 0, stop, &mut total.nodes, &mut tasks);

    let run = || {
        tasks
            .par_iter()
            .map(|st| {
                let mut out = Outcome::default();
                pb.dfs(st, stop, &mut out);
                out
            })
            .collect::<Vec<_>>()
    };
    let outcomes = if cfg.workers == 1 {
        tasks
            .iter()
            .map(|st| {
                let mut out = Outcome::default();
                pb.dfs(st, stop, &mut out);
                out
            })
            .collect()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.workers)
            .build()
            .map_err(|e| Error::InvalidParams(format!("cannot start {} workers: {e}", cfg.workers)))?
            .install(run)
    };
    for out in outcomes {
        total.merge(out);
    }

    let value = total.best.expect("the empty graph is admissible");
    Ok(ExtremalRecord {
        n,
        r,
        spec: spec.clone(),
        value: BigUint::from(value),
        witnesses: total.forms.iter().map(CanonicalForm::to_graph).collect(),
        nodes_explored: total.nodes,
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}

/// Number of admissible labeled graphs on `n <= 8` vertices, counted by the
/// same pruned traversal the search uses.
pub fn count_admissible(n: usize, spec: &ForbiddenSpec) -> Result<BigUint> {
    check_order(n, COUNT_LIMIT, "count_admissible")?;
    if !is_admissible(&Graph::empty(n), spec) {
        return Ok(BigUint::from(0u32));
    }
    let pb = problem(n, 0, spec, false);
    fn walk(pb: &Problem, st: &State, depth: usize) -> u64 {
        if depth == pb.slots.len() {
            return 1;
        }
        let with = pb.include(st, depth).map_or(0, |next| walk(pb, &next, depth + 1));
        with + walk(pb, st, depth + 1)
    }
    Ok(BigUint::from(walk(&pb, &root(n, 0), 0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::bits64;
    use crate::subgraph::isomorphic;

    /// Filters every labeled graph on `n` vertices.
    fn naive_max(n: usize, r: usize, spec: &ForbiddenSpec) -> Option<u64> {
        let sl = slots(n);
        (0u64..1 << sl.len())
            .filter_map(|mask| {
                let g = Graph::from_edges(n, bits64(mask).map(|i| sl[i])).unwrap();
                is_admissible(&g, spec).then(|| u64::try_from(count_cliques(&g, r)).unwrap())
            })
            .max()
    }

    fn spec(fs: Vec<Graph>, s: Option<usize>) -> ForbiddenSpec {
        ForbiddenSpec::new(fs, s).unwrap()
    }

    #[test]
    fn search_examples() {
        let k3s2 = spec(vec![Graph::complete(3)], Some(2));
        let rec = ex_search(5, 2, &k3s2).unwrap();
        assert_eq!(rec.value, 6u32.into());
        let k23 = Graph::empty(2).join(&Graph::empty(3));
        assert!(rec.witnesses.iter().any(|w| isomorphic(w, &k23).unwrap()));

        let rec = ex_search(6, 2, &k3s2).unwrap();
        assert_eq!(rec.value, 8u32.into());
        let k24 = Graph::empty(2).join(&Graph::empty(4));
        assert!(rec.witnesses.iter().any(|w| isomorphic(w, &k24).unwrap()));

        let rec = ex_search(6, 3, &spec(vec![Graph::complete(4)], Some(2))).unwrap();
        assert_eq!(rec.value, 4u32.into());
        let book = Graph::complete(2).join(&Graph::empty(4));
        assert!(rec.witnesses.iter().any(|w| isomorphic(w, &book).unwrap()));
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_admissible(3, &spec(vec![Graph::complete(3)], None)).unwrap(), 7u32.into());
        assert_eq!(count_admissible(2, &spec(vec![], Some(0))).unwrap(), 1u32.into());
        assert_eq!(count_admissible(3, &spec(vec![], Some(1))).unwrap(), 8u32.into());
        assert!(count_admissible(9, &spec(vec![], None)).is_err());
    }

    #[test]
    fn tiny_orders() {
        let sp = spec(vec![Graph::complete(3)], Some(1));
        let rec = ex_search(0, 2, &sp).unwrap();
        assert_eq!(rec.value, 0u32.into());
        assert_eq!(rec.witnesses, vec![Graph::empty(0)]);
        assert_eq!(ex_search(0, 0, &sp).unwrap().value, 1u32.into());
        assert_eq!(ex_search(3, 1, &sp).unwrap().value, 3u32.into());
        assert!(ex_search(10, 2, &sp).is_err());
        assert!(matches!(
            ex_search(3, 2, &spec(vec![Graph::empty(2)], None)),
            Err(Error::NoAdmissibleGraph(3))
        ));
    }

    #[test]
    fn agrees_with_filtering_everything() {
        for f in [Graph::complete(3), Graph::path(4), Graph::path(5)] {
            for s in [1, 2] {
                let sp = spec(vec![f.clone()], Some(s));
                for n in 1..=5 {
                    for r in 2..=3 {
                        let got = ex_search(n, r, &sp).unwrap().value;
                        assert_eq!(got, naive_max(n, r, &sp).unwrap().into(), "n={n} r={r} s={s}");
                    }
                }
            }
        }
    }
}
