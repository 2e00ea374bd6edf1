//! Informational checks: per-vertex clique counts of extremal graphs and
//! the shape of search witnesses.

use std::time::Instant;

use num_bigint::BigUint;

use super::checks::list;
use super::report::{CheckReport, CheckRow, Status};
use crate::error::{Error, Result};
use crate::graph::graph6::encode_graph6;
use crate::graph::{bits64, Graph};
use crate::oracle::{ex_search_with, ExtremalRecord, ForbiddenSpec, SearchConfig};
use crate::subgraph::{chromatic_number, count_cliques_in_mask};

/// For each extremal graph `D` of `ex(n, K_{r-1}, family)`, the fewest
/// `(r-1)`-cliques through a single vertex, next to `t^{r-2}` with `t` the
/// total order of the family. Never decides agreement.
pub fn check_prop_3_2(family: &[Graph], r: usize, ns: &[usize], cfg: &SearchConfig) -> Result<CheckReport> {
    let started = Instant::now();
    let mut rep = CheckReport::new("prop3.2")
        .param("family", family.iter().map(encode_graph6).collect::<Vec<_>>().join(","))
        .param("r", r)
        .param("n", list(ns));
    if r < 2 || family.is_empty() {
        return Err(Error::InvalidParams("needs r >= 2 and a nonempty family".into()));
    }
    let chis = family.iter().map(chromatic_number).collect::<Result<Vec<_>>>()?;
    if chis.iter().any(|&c| c != chis[0]) || chis[0] < r {
        return Err(Error::InvalidParams(format!(
            "needs equal chromatic numbers of at least r = {r}, have {chis:?}"
        )));
    }
    let t: usize = family.iter().map(Graph::order).sum();
    let threshold = BigUint::from(t).pow(r as u32 - 2);
    let spec = ForbiddenSpec::new(family.to_vec(), None)?;
    for &n in ns {
        let rec = ex_search_with(n, r - 1, &spec, cfg)?;
        let mins: Vec<String> = rec
            .witnesses
            .iter()
            .map(|d| min_vertex_cliques(d, r - 1).to_string())
            .collect();
        rep.rows.push(CheckRow::new(
            n,
            format!(">= {threshold}"),
            mins.join(","),
            Status::ReportOnly,
        ));
        rep.witnesses.extend(rec.witnesses.iter().map(encode_graph6));
    }
    rep.notes.push(format!(
        "t = {t}; observed lists, per extremal graph, the minimum over vertices of the K_{} count through that vertex",
        r - 1
    ));
    rep.settle();
    rep.millis = Some(started.elapsed().as_millis() as u64);
    Ok(rep)
}

/// `min_v N_v(K_k, d)`; zero for the null graph.
fn min_vertex_cliques(d: &Graph, k: usize) -> u64 {
    let rows: Vec<u64> = (0..d.order()).map(|v| d.row(v)[0]).collect();
    (0..d.order())
        .map(|v| count_cliques_in_mask(&rows, rows[v], k - 1))
        .min()
        .unwrap_or(0)
}

/// A set of exactly `s` vertices whose complement is independent.
pub fn independent_complement_set(g: &Graph, s: usize) -> Option<Vec<usize>> {
    let n = g.order();
    if s > n || n > 20 {
        return None;
    }
    let rows: Vec<u64> = (0..n).map(|v| g.row(v)[0]).collect();
    let all = if n == 0 { 0 } else { (1u64 << n) - 1 };
    (0u64..1 << n)
        .filter(|b| b.count_ones() as usize == s)
        .find(|&b| bits64(all & !b).all(|v| rows[v] & !b == 0))
        .map(|b| bits64(b).collect())
}

/// A partition `X ∪ Y ∪ Z` with `X` a `(p-1)`-clique, `Y` the vertices
/// outside `X` whose neighbourhood is exactly `X` (so independent), and
/// every vertex of `Z` of degree at least `p`. Among valid `X` the one with
/// the largest `Y` is returned (then the lexicographically first).
pub fn hub_partition(g: &Graph, p: usize) -> Option<(Vec<usize>, Vec<usize>, Vec<usize>)> {
    let n = g.order();
    if p == 0 || p - 1 > n || n > 20 {
        return None;
    }
    let rows: Vec<u64> = (0..n).map(|v| g.row(v)[0]).collect();
    let all = if n == 0 { 0 } else { (1u64 << n) - 1 };
    let mut best: Option<(u64, u64)> = None;
    for x in (0u64..1 << n).filter(|x| x.count_ones() as usize == p - 1) {
        if !bits64(x).all(|v| rows[v] & x == x & !(1 << v)) {
            continue;
        }
        let y = bits64(all & !x).filter(|&v| rows[v] == x).fold(0u64, |m, v| m | 1 << v);
        let z = all & !x & !y;
        if bits64(z).any(|v| (rows[v].count_ones() as usize) < p) {
            continue;
        }
        if best.is_none_or(|(_, by)| y.count_ones() > by.count_ones()) {
            best = Some((x, y));
        }
    }
    best.map(|(x, y)| {
        let z = all & !x & !y;
        (bits64(x).collect(), bits64(y).collect(), bits64(z).collect())
    })
}

/// Shape of each witness of a search: whether `s` vertices cover every
/// edge, and (given `p`) whether a hub partition exists.
pub fn inspect_structure(record: &ExtremalRecord, s: usize, p: Option<usize>) -> Result<CheckReport> {
    let started = Instant::now();
    let mut rep = CheckReport::new("inspect")
        .param("n", record.n)
        .param("r", record.r)
        .param("s", s);
    if let Some(p) = p {
        rep.params.insert("p".into(), p.to_string());
    }
    for (i, w) in record.witnesses.iter().enumerate() {
        let code = encode_graph6(w);
        let cover = match independent_complement_set(w, s) {
            Some(b) => format!("B = {b:?}"),
            None => "none".into(),
        };
        rep.rows.push(CheckRow::new(
            format!("{i}:cover"),
            format!("{s} vertices with independent complement"),
            cover,
            Status::ReportOnly,
        ));
        if let Some(p) = p {
            let part = match hub_partition(w, p) {
                Some((x, y, z)) => format!("X = {x:?}, Y = {y:?}, Z = {z:?}"),
                None => "none".into(),
            };
            rep.rows.push(CheckRow::new(
                format!("{i}:hub"),
                format!("X a K_{}, Y independent on X, Z degrees >= {p}", p - 1),
                part,
                Status::ReportOnly,
            ));
        }
        rep.witnesses.push(code);
    }
    rep.settle();
    rep.millis = Some(started.elapsed().as_millis() as u64);
    Ok(rep)
}
