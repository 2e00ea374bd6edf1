//! The six named extremal constructions.
//!
//! Each one is a hub `K_{p-1} ∨ I_m` (for `G6`, `K_{p-1} ∨ (K_2 ∪ I_m)`)
//! next to disjoint cliques; `m` is whatever is left of `n`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::params::{derive_even_params, derive_odd_params};
use crate::error::{Error, Result};
use crate::graph::ConstructionExpr::{self, Clique, Independent};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum NamedId {
    G1,
    G2,
    G3,
    G4,
    G5,
    G6,
}

impl NamedId {
    pub const ALL: [NamedId; 6] = [
        NamedId::G1,
        NamedId::G2,
        NamedId::G3,
        NamedId::G4,
        NamedId::G5,
        NamedId::G6,
    ];

    /// `true` for the `P_{2p}`-free pair, `false` for the `P_{2p+1}`-free four.
    pub fn is_even_path(self) -> bool {
        matches!(self, NamedId::G1 | NamedId::G2)
    }
}

impl fmt::Display for NamedId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for NamedId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "G1" => Ok(NamedId::G1),
            "G2" => Ok(NamedId::G2),
            "G3" => Ok(NamedId::G3),
            "G4" => Ok(NamedId::G4),
            "G5" => Ok(NamedId::G5),
            "G6" => Ok(NamedId::G6),
            other => Err(Error::InvalidExpr(format!("unknown construction {other}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NamedConstruction {
    pub id: NamedId,
    pub p: usize,
    pub s: usize,
    pub n: usize,
}

/// The layout of a construction apart from its order: hub clique size,
/// whether the hub's other side carries a `K_2`, the fixed cliques, and the
/// number of vertices outside the independent part.
struct Shape {
    hub: usize,
    with_edge: bool,
    cliques: Vec<(usize, usize)>,
    fixed: usize,
}

fn not_applicable(id: NamedId, reason: String) -> Error {
    Error::NotApplicable {
        id: id.to_string(),
        reason,
    }
}

fn shape(id: NamedId, p: usize, s: usize) -> Result<Shape> {
    let hub = p - 1;
    let mut with_edge = false;
    let cliques = match id {
        NamedId::G1 | NamedId::G2 => {
            let e = derive_even_params(p, s)?;
            let mut cl = vec![(e.a, 2 * p - 1)];
            if id == NamedId::G2 {
                // kept even when b = 0 (an isolated K_1)
                cl.push((1, 2 * e.b + 1));
            }
            cl
        }
        NamedId::G3 => {
            let o = derive_odd_params(p, s)?;
            // for t = 0 the trailing K_1 keeps the order at n
            vec![(o.q, 2 * p - 1), (1, 2 * o.t + 1)]
        }
        NamedId::G4 => {
            let o = derive_odd_params(p, s)?;
            if o.d == 0 {
                vec![(o.c, 2 * p)]
            } else {
                vec![(o.c, 2 * p), (1, 2 * o.d + 1)]
            }
        }
        NamedId::G5 => {
            let o = derive_odd_params(p, s)?;
            if o.d < 1 || o.d + 2 > p {
                return Err(not_applicable(id, format!("needs 1 <= d <= p - 2, have d = {}", o.d)));
            }
            if o.c + o.d + 1 < p {
                return Err(not_applicable(
                    id,
                    format!("needs c + d + 1 - p >= 0, have c = {}, d = {}", o.c, o.d),
                ));
            }
            vec![(o.c + o.d + 1 - p, 2 * p), (p - o.d, 2 * p - 1)]
        }
        NamedId::G6 => {
            let o = derive_odd_params(p, s)?;
            if o.d < 1 {
                return Err(not_applicable(id, "needs 1 <= d <= p - 1, have d = 0".into()));
            }
            with_edge = true;
            vec![(o.c, 2 * p)]
        }
    };
    let fixed = hub + usize::from(with_edge) * 2 + cliques.iter().map(|(k, m)| k * m).sum::<usize>();
    Ok(Shape {
        hub,
        with_edge,
        cliques,
        fixed,
    })
}

/// Smallest `n` for which the construction is defined.
pub fn named_floor(id: NamedId, p: usize, s: usize) -> Result<usize> {
    shape(id, p, s).map(|sh| sh.fixed)
}

/// Expression for a named construction on exactly `n` vertices.
pub fn build_named(id: NamedId, p: usize, s: usize, n: usize) -> Result<ConstructionExpr> {
    let sh = shape(id, p, s)?;
    if n < sh.fixed {
        return Err(not_applicable(
            id,
            format!("needs n >= {} for p = {p}, s = {s}, got n = {n}", sh.fixed),
        ));
    }
    let free = n - sh.fixed;
    let other_side = if sh.with_edge {
        ConstructionExpr::union([Clique(2), Independent(free)])
    } else {
        Independent(free)
    };
    let mut parts = vec![ConstructionExpr::join([Clique(sh.hub), other_side])];
    for (copies, m) in sh.cliques {
        parts.extend(std::iter::repeat_n(Clique(m), copies));
    }
    Ok(ConstructionExpr::Union(parts))
}

pub fn expand_named(named: &NamedConstruction) -> Result<ConstructionExpr> {
    build_named(named.id, named.p, named.s, named.n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;
    use crate::matching::matching_number;
    use crate::subgraph::count_cliques;

    #[test]
    fn g1_g2_example() {
        let g1 = build_named(NamedId::G1, 3, 5, 20).unwrap();
        assert_eq!(
            g1,
            ConstructionExpr::Union(vec![ConstructionExpr::join([Clique(2), Independent(13)]), Clique(5)])
        );
        let g = build_graph(&g1).unwrap();
        assert_eq!(count_cliques(&g, 3), 23u32.into());

        let g2 = build_named(NamedId::G2, 3, 5, 20).unwrap();
        assert_eq!(
            g2,
            ConstructionExpr::Union(vec![
                ConstructionExpr::join([Clique(2), Independent(10)]),
                Clique(5),
                Clique(3)
            ])
        );
        assert_eq!(count_cliques(&build_graph(&g2).unwrap(), 3), 21u32.into());
    }

    #[test]
    fn g6_example() {
        let g = build_graph(&build_named(NamedId::G6, 2, 4, 20).unwrap()).unwrap();
        assert_eq!(g.order(), 20);
        assert_eq!(matching_number(&g), 4);
        assert_eq!(g.edge_count(), 22);
    }

    #[test]
    fn every_construction_has_order_n() {
        for p in 2..=5 {
            for s in p..=p + 6 {
                for id in NamedId::ALL {
                    let Ok(floor) = named_floor(id, p, s) else { continue };
                    for n in [floor, floor + 7] {
                        let e = build_named(id, p, s, n).unwrap();
                        assert_eq!(e.order().unwrap(), n as u128, "{id} p={p} s={s} n={n}");
                    }
                    assert!(build_named(id, p, s, floor.wrapping_sub(1)).is_err() || floor == 0);
                }
            }
        }
    }

    #[test]
    fn applicability() {
        // p = 2, s = 3: d = 0, so neither G5 nor G6
        assert!(build_named(NamedId::G5, 2, 3, 30).is_err());
        assert!(build_named(NamedId::G6, 2, 3, 30).is_err());
        // p = 2: d <= p - 2 = 0 rules out G5 always
        assert!(build_named(NamedId::G5, 2, 4, 30).is_err());
        assert!(build_named(NamedId::G6, 2, 4, 30).is_ok());
        assert!(build_named(NamedId::G1, 1, 4, 30).is_err());
    }
}
