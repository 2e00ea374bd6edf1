//! Closed-form values the search results are compared against.

use num_bigint::{BigInt, BigUint};

use super::algebra::{binomial, cliques_of_expr};
use super::named::{build_named, NamedId};
use super::params::derive_odd_params;
use crate::error::{Error, Result};
use crate::graph::ConstructionExpr;

/// Edges of the Turán graph `T_k(m)`.
pub fn turan_edges(k: usize, m: usize) -> BigUint {
    if k == 0 {
        return BigUint::from(0u32);
    }
    cliques_of_expr(&ConstructionExpr::Turan { parts: k, order: m }, 2).expect("k >= 1")
}

/// `max{e(T_k(2s+1)), e(T_{k-1}(s) ∨ I_{n-s})}`: the largest edge count of
/// a `K_{k+1}`-free graph on `n >= 2s+1` vertices with `ν <= s`.
pub fn alon_frankl_value(k: usize, s: usize, n: usize) -> Result<BigUint> {
    if k < 2 {
        return Err(Error::InvalidParams(format!("k must be at least 2, got {k}")));
    }
    if n < 2 * s + 1 {
        return Err(Error::InvalidParams(format!("needs n >= 2s + 1 = {}, got {n}", 2 * s + 1)));
    }
    let dense = turan_edges(k, 2 * s + 1);
    let hub = turan_edges(k - 1, s) + BigUint::from(s) * BigUint::from(n - s);
    Ok(dense.max(hub))
}

/// Lower and upper bound on `ex(n, K_r, {F, M_{s+1}})` for bipartite `F`
/// with colour classes `p <= q`, before checking that `n` is large enough.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteBounds {
    pub t: BigInt,
    pub lower: BigInt,
    pub upper: BigInt,
}

/// `t = C(2s,p)(q-1) + 2s + 1 - p`, lower `C(p-1,r) + C(p-1,r-1)(n-p+1)`,
/// upper `C(t+p-1,r) + C(p-1,r-1)(n-t-p+1)`. Valid for any `1 <= p <= s`;
/// terms may go negative when `n <= t + p - 1`.
pub fn bipartite_bounds_formal(p: usize, q: usize, s: usize, r: usize, n: usize) -> Result<BipartiteBounds> {
    if p == 0 || q < p {
        return Err(Error::InvalidParams(format!("needs 1 <= p <= q, got p = {p}, q = {q}")));
    }
    if p > s {
        return Err(Error::InvalidParams(format!("needs p <= s, got p = {p}, s = {s}")));
    }
    let big = |x: BigUint| BigInt::from(x);
    let t = big(binomial(2 * s as u64, p as u64)) * (q as i64 - 1) + BigInt::from(2 * s + 1) - BigInt::from(p);
    let hub_r = big(binomial(p as u64 - 1, r as u64));
    let hub_r1 = big(r.checked_sub(1).map_or(BigUint::from(0u32), |r1| binomial(p as u64 - 1, r1 as u64)));
    let n = BigInt::from(n);
    let p_big = BigInt::from(p);
    let lower = &hub_r + &hub_r1 * (&n - &p_big + 1);
    let top = BigUint::try_from(&t + &p_big - 1).expect("t + p - 1 >= 0 since q >= 1");
    let top = u64::try_from(&top).map_err(|_| Error::InvalidParams("t is too large".into()))?;
    let upper = big(binomial(top, r as u64)) + &hub_r1 * (&n - &t - &p_big + 1);
    Ok(BipartiteBounds { t, lower, upper })
}

/// The bounds when they apply: `2 <= p <= s` and `n > t + p - 1`.
pub fn theorem14_bounds(p: usize, q: usize, s: usize, r: usize, n: usize) -> Result<(BigUint, BigUint)> {
    if p < 2 {
        return Err(Error::InvalidParams(format!("p must be at least 2, got {p}")));
    }
    let b = bipartite_bounds_formal(p, q, s, r, n)?;
    if BigInt::from(n) <= &b.t + BigInt::from(p) - 1 {
        return Err(Error::InvalidParams(format!("needs n > t + p - 1 = {}, got {n}", &b.t + p - 1)));
    }
    let lower = b.lower.try_into().expect("nonnegative");
    let upper = b.upper.try_into().expect("nonnegative");
    Ok((lower, upper))
}

/// The two sides of the question's counterexample with `s = k(2p-1) + 1`:
/// `N(K_r, kK_{2p-1} ∨ I_{n-s+1})` and `N(K_r, (kK_{2p-1} ∪ K_1) ∨ I_{n-s})`.
pub fn question11_values(p: usize, k: usize, r: usize, n: usize) -> Result<(BigUint, BigUint)> {
    if p < 1 || k < 1 {
        return Err(Error::InvalidParams("needs p >= 1 and k >= 1".into()));
    }
    let s = k * (2 * p - 1) + 1;
    if n < s {
        return Err(Error::InvalidParams(format!("needs n >= s = {s}, got {n}")));
    }
    let cliques = ConstructionExpr::cliques(k, 2 * p - 1);
    let left = ConstructionExpr::join([cliques.clone(), ConstructionExpr::Independent(n - s + 1)]);
    let right = ConstructionExpr::join([
        ConstructionExpr::union([cliques, ConstructionExpr::Clique(1)]),
        ConstructionExpr::Independent(n - s),
    ]);
    Ok((cliques_of_expr(&left, r)?, cliques_of_expr(&right, r)?))
}

/// `N(K_r, ·)` of each listed construction defined at `(p, s, n)`, and
/// their maximum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedMaximum {
    pub value: BigUint,
    pub best: NamedId,
    pub candidates: Vec<(NamedId, BigUint)>,
}

pub fn named_maximum(ids: &[NamedId], p: usize, s: usize, r: usize, n: usize) -> Result<NamedMaximum> {
    let mut candidates = Vec::new();
    let mut first_err = None;
    for &id in ids {
        match build_named(id, p, s, n) {
            Ok(e) => candidates.push((id, cliques_of_expr(&e, r)?)),
            Err(e @ Error::NotApplicable { .. }) => {
                first_err.get_or_insert(e);
            }
            Err(e) => return Err(e),
        }
    }
    let Some((best, value)) = candidates
        .iter()
        .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
        .cloned()
    else {
        return Err(first_err.unwrap_or_else(|| Error::InvalidParams("no constructions listed".into())));
    };
    Ok(NamedMaximum { value, best, candidates })
}

/// `max{N(K_r, G1), N(K_r, G2)}` for `P_{2p}`-free graphs with `ν <= s`.
pub fn theorem15_value(p: usize, s: usize, r: usize, n: usize) -> Result<NamedMaximum> {
    named_maximum(&[NamedId::G1, NamedId::G2], p, s, r, n)
}

/// Constructions competing for `P_{2p+1}`-free graphs, by `d = s-p+1 mod p`.
pub fn theorem16_candidates(p: usize, s: usize) -> Result<Vec<NamedId>> {
    let d = derive_odd_params(p, s)?.d;
    Ok(if d == 0 {
        vec![NamedId::G3, NamedId::G4]
    } else if d + 2 <= p {
        vec![NamedId::G3, NamedId::G4, NamedId::G5, NamedId::G6]
    } else {
        vec![NamedId::G3, NamedId::G4, NamedId::G6]
    })
}

pub fn theorem16_value(p: usize, s: usize, r: usize, n: usize) -> Result<NamedMaximum> {
    named_maximum(&theorem16_candidates(p, s)?, p, s, r, n)
}
