//! Exhaustive and sampled property checks behind the main arguments.

use std::time::Instant;

use num_bigint::BigUint;

use super::report::{CheckReport, CheckRow, Status};
use crate::constructions::binomial;
use crate::enumerate::{labeled_graphs, random_graph, seeded_rng};
use crate::error::{Error, Result};
use crate::graph::graph6::encode_graph6;
use crate::graph::{bits64, Graph};
use crate::matching::{matching_number, matching_number_in_mask, tutte_berge_witness};
use crate::subgraph::{longest_path, longest_path_order};

/// How far each family of the suite is pushed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaLimits {
    /// Connected graphs up to this order for the longest-path end bound.
    pub dirac_max_order: usize,
    /// `w, x, y, z` range for the binomial exchange inequality.
    pub exchange_bound: u64,
    pub exchange_max_r: u64,
    /// `m, n, r` range for Vandermonde's identity.
    pub vandermonde_bound: u64,
    /// Every labeled graph up to this order for the Tutte–Berge witness.
    pub tutte_berge_exhaustive: usize,
    /// Random graphs per order in `tutte_berge_sampled_orders`.
    pub tutte_berge_samples: usize,
    pub tutte_berge_sampled_orders: Vec<usize>,
    /// Every labeled graph up to this order for the two component surgeries.
    pub replacement_max_order: usize,
    pub seed: u64,
}

impl Default for LemmaLimits {
    fn default() -> Self {
        LemmaLimits {
            dirac_max_order: 7,
            exchange_bound: 20,
            exchange_max_r: 6,
            vandermonde_bound: 20,
            tutte_berge_exhaustive: 6,
            tutte_berge_samples: 10_000,
            tutte_berge_sampled_orders: vec![7, 8],
            replacement_max_order: 7,
            seed: 0x5eed,
        }
    }
}

pub const FAMILY_DIRAC: &str = "longest-path-ends";
pub const FAMILY_EXCHANGE: &str = "binomial-exchange";
pub const FAMILY_VANDERMONDE: &str = "vandermonde";
pub const FAMILY_TUTTE_BERGE: &str = "tutte-berge";
pub const FAMILY_CLIQUE_REPLACEMENT: &str = "component-to-clique";
pub const FAMILY_REWIRING: &str = "rewire-to-even-component";

/// Tally of one family: instances checked, the first violation if any.
struct Tally {
    family: &'static str,
    checked: u64,
    strict: u64,
    violations: u64,
    violation: Option<(String, Option<Graph>)>,
}

impl Tally {
    fn new(family: &'static str) -> Self {
        Tally {
            family,
            checked: 0,
            strict: 0,
            violations: 0,
            violation: None,
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> (String, Option<Graph>)) {
        self.checked += 1;
        if !ok {
            self.violations += 1;
            if self.violation.is_none() {
                self.violation = Some(describe());
            }
        }
    }

    fn into_row(self, rep: &mut CheckReport) {
        let observed = if self.strict > 0 {
            format!("{} checked ({} strict), {} violations", self.checked, self.strict, self.violations)
        } else {
            format!("{} checked, {} violations", self.checked, self.violations)
        };
        let status = if self.violation.is_some() {
            Status::Disagree
        } else {
            Status::Agree
        };
        rep.rows.push(CheckRow::new(self.family, "0 violations", observed, status));
        if let Some((what, graph)) = self.violation {
            rep.notes.push(format!("{}: {what}", self.family));
            if let Some(g) = graph {
                rep.witnesses.push(encode_graph6(&g));
            }
        }
    }
}

/// Components of the graph on `rows` as vertex masks.
fn component_masks(rows: &[u64]) -> Vec<u64> {
    let n = rows.len();
    let mut left = if n == 0 { 0 } else { (1u64 << n) - 1 };
    let mut out = Vec::new();
    while left != 0 {
        let mut comp = left & left.wrapping_neg();
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = rows[v] & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        out.push(comp);
        left &= !comp;
    }
    out
}

fn nu(rows: &[u64], mask: u64) -> usize {
    matching_number_in_mask(rows, mask, &mut [])
}

fn full(n: usize) -> u64 {
    if n == 0 {
        0
    } else {
        (1u64 << n) - 1
    }
}

/// A longest path of a connected graph with ends `u`, `v` has at least
/// `min{n, d(u) + d(v) + 1}` vertices.
fn dirac(limits: &LemmaLimits) -> Tally {
    let mut t = Tally::new(FAMILY_DIRAC);
    for n in 1..=limits.dirac_max_order {
        for g in labeled_graphs(n).filter(Graph::is_connected) {
            let path = longest_path(&g).expect("order within the path limit");
            let (u, v) = (path[0], path[path.len() - 1]);
            let bound = n.min(g.degree(u) + g.degree(v) + 1);
            t.record(path.len() >= bound, || {
                (format!("path of {} vertices, bound {bound}", path.len()), Some(g.clone()))
            });
        }
    }
    t
}

/// `C(x,r) + C(y,r) >= C(w,r) + C(z,r)` when `x + y = w + z`, `x >= w, z`,
/// `x >= r`; strict when `x > w` and `x > z`.
fn exchange(limits: &LemmaLimits) -> Tally {
    let mut t = Tally::new(FAMILY_EXCHANGE);
    let b = limits.exchange_bound;
    for r in 2..=limits.exchange_max_r {
        for x in r..=b {
            for w in 0..=x {
                for z in 0..=x {
                    if w + z < x || w + z - x > b {
                        continue;
                    }
                    let y = w + z - x;
                    let lhs = binomial(x, r) + binomial(y, r);
                    let rhs = binomial(w, r) + binomial(z, r);
                    let strict = x > w && x > z;
                    let ok = if strict { lhs > rhs } else { lhs >= rhs };
                    t.strict += u64::from(strict);
                    t.record(ok, || (format!("r={r} w={w} x={x} y={y} z={z}: {lhs} vs {rhs}"), None));
                }
            }
        }
    }
    t
}

/// `C(m+n, r) = Σ_i C(m, i) C(n, r-i)`.
fn vandermonde(limits: &LemmaLimits) -> Tally {
    let mut t = Tally::new(FAMILY_VANDERMONDE);
    let b = limits.vandermonde_bound;
    for m in 0..=b {
        for n in 0..=b {
            for r in 0..=b {
                let sum: BigUint = (0..=r).map(|i| binomial(m, i) * binomial(n, r - i)).sum();
                let lhs = binomial(m + n, r);
                t.record(lhs == sum, || (format!("m={m} n={n} r={r}: {lhs} vs {sum}"), None));
            }
        }
    }
    t
}

/// The witness leaves only odd components and its value equals `ν`.
fn tutte_berge_ok(g: &Graph) -> bool {
    let w = tutte_berge_witness(g).expect("order within the witness limit");
    let rest = g.remove_vertices(&w.barrier);
    let odd = rest.components().iter().all(|c| c.len() % 2 == 1);
    let sum: usize = rest.components().iter().map(|c| (c.len() - 1) / 2).sum();
    odd && w.value == w.barrier.len() + sum && w.value == matching_number(g)
}

fn tutte_berge(limits: &LemmaLimits) -> Tally {
    let mut t = Tally::new(FAMILY_TUTTE_BERGE);
    for n in 0..=limits.tutte_berge_exhaustive {
        for g in labeled_graphs(n) {
            t.record(tutte_berge_ok(&g), || ("witness fails".into(), Some(g.clone())));
        }
    }
    let mut rng = seeded_rng(limits.seed);
    for &n in &limits.tutte_berge_sampled_orders {
        for _ in 0..limits.tutte_berge_samples {
            let g = random_graph(n, &mut rng);
            t.record(tutte_berge_ok(&g), || ("witness fails".into(), Some(g.clone())));
        }
    }
    t
}

/// Replacing a component that has a spanning path by a clique of the same
/// order keeps `ν`.
fn clique_replacement(limits: &LemmaLimits) -> Tally {
    let mut t = Tally::new(FAMILY_CLIQUE_REPLACEMENT);
    for n in 1..=limits.replacement_max_order {
        for g in labeled_graphs(n) {
            let rows: Vec<u64> = (0..n).map(|v| g.row(v)[0]).collect();
            let before = nu(&rows, full(n));
            for comp in component_masks(&rows) {
                let size = comp.count_ones() as usize;
                let is_clique = bits64(comp).all(|v| rows[v] | (1 << v) == comp);
                if size < 2 || is_clique {
                    continue;
                }
                let members: Vec<usize> = bits64(comp).collect();
                if longest_path_order(&g.induced(&members)).expect("small component") != size {
                    continue;
                }
                let mut replaced = rows.clone();
                for v in bits64(comp) {
                    replaced[v] = comp & !(1 << v);
                }
                let after = nu(&replaced, full(n));
                t.record(after == before, || {
                    (format!("component {members:?}: nu {before} becomes {after}"), Some(g.clone()))
                });
            }
        }
    }
    t
}

/// With `C` an even component that has a perfect matching and `w` outside
/// it, moving all of `w`'s edges onto `C` does not raise `ν`.
fn rewiring(limits: &LemmaLimits) -> Tally {
    let mut t = Tally::new(FAMILY_REWIRING);
    for n in 1..=limits.replacement_max_order {
        for g in labeled_graphs(n) {
            let rows: Vec<u64> = (0..n).map(|v| g.row(v)[0]).collect();
            let before = nu(&rows, full(n));
            for comp in component_masks(&rows) {
                let size = comp.count_ones() as usize;
                if size % 2 == 1 || nu(&rows, comp) != size / 2 {
                    continue;
                }
                for w in bits64(full(n) & !comp) {
                    let mut next = rows.clone();
                    for x in bits64(rows[w]) {
                        next[x] &= !(1 << w);
                    }
                    next[w] = comp;
                    for x in bits64(comp) {
                        next[x] |= 1 << w;
                    }
                    let after = nu(&next, full(n));
                    t.record(after <= before, || {
                        (format!("w = {w}: nu {before} becomes {after}"), Some(g.clone()))
                    });
                }
            }
        }
    }
    t
}

pub const FAMILIES: [&str; 6] = [
    FAMILY_DIRAC,
    FAMILY_EXCHANGE,
    FAMILY_VANDERMONDE,
    FAMILY_TUTTE_BERGE,
    FAMILY_CLIQUE_REPLACEMENT,
    FAMILY_REWIRING,
];

fn family_check(name: &str) -> Option<fn(&LemmaLimits) -> Tally> {
    Some(match name {
        FAMILY_DIRAC => dirac,
        FAMILY_EXCHANGE => exchange,
        FAMILY_VANDERMONDE => vandermonde,
        FAMILY_TUTTE_BERGE => tutte_berge,
        FAMILY_CLIQUE_REPLACEMENT => clique_replacement,
        FAMILY_REWIRING => rewiring,
        _ => return None,
    })
}

/// Runs all six families; any violation makes the report `DISAGREE` and
/// records the instance.
pub fn check_lemma_suite(limits: &LemmaLimits) -> Result<CheckReport> {
    check_lemma_families(&FAMILIES, limits)
}

/// The suite restricted to the named families, one row each, run on
/// separate threads.
pub fn check_lemma_families(names: &[&str], limits: &LemmaLimits) -> Result<CheckReport> {
    let checks = names
        .iter()
        .map(|&name| family_check(name).ok_or_else(|| Error::InvalidParams(format!("unknown property family {name}"))))
        .collect::<Result<Vec<_>>>()?;
    let started = Instant::now();
    let mut rep = CheckReport::new("lemmas")
        .param("dirac_max_order", limits.dirac_max_order)
        .param("exchange_bound", limits.exchange_bound)
        .param("exchange_max_r", limits.exchange_max_r)
        .param("vandermonde_bound", limits.vandermonde_bound)
        .param("tutte_berge_exhaustive", limits.tutte_berge_exhaustive)
        .param("tutte_berge_samples", limits.tutte_berge_samples)
        .param("tutte_berge_sampled_orders", super::checks::list(&limits.tutte_berge_sampled_orders))
        .param("replacement_max_order", limits.replacement_max_order)
        .param("seed", limits.seed);
    let tallies = std::thread::scope(|scope| {
        let jobs: Vec<_> = checks
            .into_iter()
            .map(|f| scope.spawn(move || f(limits)))
            .collect();
        jobs.into_iter().map(|j| j.join().expect("family check panicked")).collect::<Vec<_>>()
    });
    for t in tallies {
        t.into_row(&mut rep);
    }
    rep.settle();
    rep.millis = Some(started.elapsed().as_millis() as u64);
    Ok(rep)
}
