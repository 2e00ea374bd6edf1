//! Clique vectors of expressions without materializing them.
//!
//! Disjoint union adds vectors entrywise (the empty clique counted once);
//! join convolves them, since a clique of a join is a clique of each side
//! glued together.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::named::expand_named;
use crate::error::Result;
use crate::graph::{ConstructionExpr, Graph};
use crate::subgraph::{clique_vector, CliqueVector};

/// `C(n, k)` exactly; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

fn unit(rmax: usize) -> Vec<BigUint> {
    let mut v = vec![BigUint::zero(); rmax + 1];
    v[0] = BigUint::one();
    v
}

fn independent(m: usize, rmax: usize) -> Vec<BigUint> {
    let mut v = unit(rmax);
    if rmax >= 1 {
        v[1] = m.into();
    }
    v
}

/// Elementary symmetric polynomials of the part sizes.
fn complete_multipartite(parts: &[usize], rmax: usize) -> Vec<BigUint> {
    parts.iter().fold(unit(rmax), |acc, &size| convolve(&acc, &independent(size, rmax)))
}

fn convolve(a: &[BigUint], b: &[BigUint]) -> Vec<BigUint> {
    let rmax = a.len() - 1;
    let mut out = vec![BigUint::zero(); rmax + 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(rmax + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

fn eval(expr: &ConstructionExpr, rmax: usize) -> Result<Vec<BigUint>> {
    Ok(match expr {
        ConstructionExpr::Clique(m) => (0..=rmax).map(|i| binomial(*m as u64, i as u64)).collect(),
        ConstructionExpr::Independent(m) => independent(*m, rmax),
        ConstructionExpr::Path(m) => {
            let mut v = independent(*m, rmax);
            if rmax >= 2 {
                v[2] = m.saturating_sub(1).into();
            }
            v
        }
        ConstructionExpr::Cycle(m) => {
            expr.order()?;
            if *m == 3 {
                return eval(&ConstructionExpr::Clique(3), rmax);
            }
            let mut v = independent(*m, rmax);
            if rmax >= 2 {
                v[2] = (*m).into();
            }
            v
        }
        ConstructionExpr::Turan { parts, order } => {
            expr.order()?;
            complete_multipartite(&ConstructionExpr::turan_parts(*parts, *order), rmax)
        }
        ConstructionExpr::Union(xs) => {
            let mut acc = unit(rmax);
            for x in xs {
                for (a, c) in acc.iter_mut().zip(eval(x, rmax)?).skip(1) {
                    *a += c;
                }
            }
            acc
        }
        ConstructionExpr::Join(xs) => {
            let mut acc = unit(rmax);
            for x in xs {
                acc = convolve(&acc, &eval(x, rmax)?);
            }
            acc
        }
        ConstructionExpr::Named(named) => eval(&expand_named(named)?, rmax)?,
        ConstructionExpr::Explicit(g) => clique_vector(g, rmax).into_counts(),
    })
}

/// `(N(K_0), ..., N(K_rmax))` of the graph `expr` describes.
pub fn clique_vector_of_expr(expr: &ConstructionExpr, rmax: usize) -> Result<CliqueVector> {
    eval(expr, rmax).map(CliqueVector::new)
}

/// `N(K_r, ·)` of an expression.
pub fn cliques_of_expr(expr: &ConstructionExpr, r: usize) -> Result<BigUint> {
    Ok(clique_vector_of_expr(expr, r)?.get(r))
}

/// `D ∨ I_m` with `D` kept as an explicit leaf.
pub fn hub_expr(d: &Graph, m: usize) -> ConstructionExpr {
    ConstructionExpr::join([ConstructionExpr::Explicit(d.clone()), ConstructionExpr::Independent(m)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, ConstructionExpr::*};

    fn v(xs: &[u64]) -> Vec<BigUint> {
        xs.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn algebra_examples() {
        let j = ConstructionExpr::join([Clique(3), Independent(2)]);
        assert_eq!(clique_vector_of_expr(&j, 3).unwrap().counts(), v(&[1, 5, 9, 7]).as_slice());
        let u = ConstructionExpr::union([Clique(3), Clique(3)]);
        assert_eq!(clique_vector_of_expr(&u, 3).unwrap().counts(), v(&[1, 6, 6, 2]).as_slice());
        for m in 0..8u64 {
            for k in 0..6u64 {
                for r in 1..6u64 {
                    let e = ConstructionExpr::join([Clique(m as usize), Independent(k as usize)]);
                    let want = binomial(m, r) + binomial(m, r - 1) * k;
                    assert_eq!(cliques_of_expr(&e, r as usize).unwrap(), want);
                }
            }
        }
    }

    #[test]
    fn hub_examples() {
        let k3k1 = Graph::complete(3).disjoint_union(&Graph::empty(1));
        assert_eq!(cliques_of_expr(&hub_expr(&k3k1, 6), 3).unwrap(), 19u32.into());
        assert_eq!(cliques_of_expr(&hub_expr(&Graph::complete(2), 4), 3).unwrap(), 4u32.into());
        let e = hub_expr(&Graph::empty(0), 5);
        assert_eq!(build_graph(&e).unwrap(), Graph::empty(5));
        assert_eq!(cliques_of_expr(&e, 3).unwrap(), 0u32.into());
    }

    #[test]
    fn leaves_match_direct_counts() {
        let leaves = [
            Path(0),
            Path(1),
            Path(6),
            Cycle(3),
            Cycle(7),
            Turan { parts: 3, order: 8 },
            Turan { parts: 1, order: 4 },
            ConstructionExpr::union([]),
            ConstructionExpr::join([]),
        ];
        for e in leaves {
            let g = build_graph(&e).unwrap();
            assert_eq!(clique_vector_of_expr(&e, 5).unwrap(), clique_vector(&g, 5), "{e:?}");
        }
    }

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(5, 7), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
        assert_eq!(binomial(60, 30).to_string(), "118264581564861424");
    }
}
