use super::Graph;
use crate::constructions::{expand_named, NamedConstruction};
use crate::error::{Error, Result};

/// Default cap on the order of a materialized expression.
pub const DEFAULT_MAX_ORDER: usize = 10_000;

/// An algebraic description of a graph.
///
/// Materialization lays sub-expressions out left to right, each occupying a
/// contiguous block of vertex labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructionExpr {
    Clique(usize),
    Independent(usize),
    Path(usize),
    Cycle(usize),
    /// Balanced complete `parts`-partite graph on `order` vertices.
    Turan { parts: usize, order: usize },
    Union(Vec<ConstructionExpr>),
    Join(Vec<ConstructionExpr>),
    Named(NamedConstruction),
    /// A concrete graph used as a leaf.
    Explicit(Graph),
}

impl ConstructionExpr {
    pub fn union<I: IntoIterator<Item = ConstructionExpr>>(parts: I) -> Self {
        ConstructionExpr::Union(parts.into_iter().collect())
    }

    pub fn join<I: IntoIterator<Item = ConstructionExpr>>(parts: I) -> Self {
        ConstructionExpr::Join(parts.into_iter().collect())
    }

    /// `copies` disjoint copies of `K_m`.
    pub fn cliques(copies: usize, m: usize) -> Self {
        ConstructionExpr::Union(vec![ConstructionExpr::Clique(m); copies])
    }

    /// Total vertex count, without materializing.
    pub fn order(&self) -> Result<u128> {
        Ok(match self {
            ConstructionExpr::Clique(m)
            | ConstructionExpr::Independent(m)
            | ConstructionExpr::Path(m) => *m as u128,
            ConstructionExpr::Cycle(m) => {
                if *m < 3 {
                    return Err(Error::InvalidExpr(format!("cycle needs at least 3 vertices, got {m}")));
                }
                *m as u128
            }
            ConstructionExpr::Turan { parts, order } => {
                if *parts == 0 {
                    return Err(Error::InvalidExpr("Turán graph needs at least one part".into()));
                }
                *order as u128
            }
            ConstructionExpr::Union(xs) | ConstructionExpr::Join(xs) => {
                let mut total = 0u128;
                for x in xs {
                    total = total
                        .checked_add(x.order()?)
                        .ok_or_else(|| Error::InvalidExpr("vertex count overflow".into()))?;
                }
                total
            }
            ConstructionExpr::Named(named) => expand_named(named)?.order()?,
            ConstructionExpr::Explicit(g) => g.order() as u128,
        })
    }

    /// Part sizes of `T_parts(order)`, larger parts first.
    pub(crate) fn turan_parts(parts: usize, order: usize) -> Vec<usize> {
        (0..parts)
            .map(|i| order / parts + usize::from(i < order % parts))
            .collect()
    }
}

/// Materializes `expr` with the default order cap.
pub fn build_graph(expr: &ConstructionExpr) -> Result<Graph> {
    build_graph_with_limit(expr, DEFAULT_MAX_ORDER)
}

pub fn build_graph_with_limit(expr: &ConstructionExpr, limit: usize) -> Result<Graph> {
    let requested = expr.order()?;
    if requested > limit as u128 {
        return Err(Error::SizeOverflow { requested, limit });
    }
    let mut g = Graph::empty(requested as usize);
    place(expr, 0, &mut g)?;
    Ok(g)
}

/// Writes `expr` into `g` on vertices `offset..offset + |expr|`; returns its order.
fn place(expr: &ConstructionExpr, offset: usize, g: &mut Graph) -> Result<usize> {
    let size = match expr {
        ConstructionExpr::Clique(m) => {
            for u in 0..*m {
                for v in u + 1..*m {
                    g.set_edge(offset + u, offset + v);
                }
            }
            *m
        }
        ConstructionExpr::Independent(m) => *m,
        ConstructionExpr::Path(m) => {
            for v in 1..*m {
                g.set_edge(offset + v - 1, offset + v);
            }
            *m
        }
        ConstructionExpr::Cycle(m) => {
            for v in 1..*m {
                g.set_edge(offset + v - 1, offset + v);
            }
            g.set_edge(offset, offset + m - 1);
            *m
        }
        ConstructionExpr::Turan { parts, order } => {
            let sizes = ConstructionExpr::turan_parts(*parts, *order);
            let mut starts = Vec::with_capacity(sizes.len());
            let mut acc = 0;
            for s in &sizes {
                starts.push(acc);
                acc += s;
            }
            for (a, (&sa, &za)) in starts.iter().zip(&sizes).enumerate() {
                for (&sb, &zb) in starts.iter().zip(&sizes).skip(a + 1) {
                    for u in sa..sa + za {
                        for v in sb..sb + zb {
                            g.set_edge(offset + u, offset + v);
                        }
                    }
                }
            }
            *order
        }
        ConstructionExpr::Union(xs) => {
            let mut at = offset;
            for x in xs {
                at += place(x, at, g)?;
            }
            at - offset
        }
        ConstructionExpr::Join(xs) => {
            let mut blocks = Vec::with_capacity(xs.len());
            let mut at = offset;
            for x in xs {
                let len = place(x, at, g)?;
                blocks.push((at, len));
                at += len;
            }
            for (i, &(sa, la)) in blocks.iter().enumerate() {
                for &(sb, lb) in &blocks[i + 1..] {
                    for u in sa..sa + la {
                        for v in sb..sb + lb {
                            g.set_edge(u, v);
                        }
                    }
                }
            }
            at - offset
        }
        ConstructionExpr::Named(named) => place(&expand_named(named)?, offset, g)?,
        ConstructionExpr::Explicit(h) => {
            for (u, v) in h.edges() {
                g.set_edge(offset + u, offset + v);
            }
            h.order()
        }
    };
    Ok(size)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ConstructionExpr::*;

    #[test]
    fn join_of_clique_and_independent() {
        let g = build_graph(&ConstructionExpr::join([Clique(3), Independent(2)])).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.edge_count(), 9);
        assert!(!g.has_edge(3, 4));
    }

    #[test]
    fn leaves() {
        let g = build_graph(&ConstructionExpr::union([Independent(4)])).unwrap();
        assert_eq!((g.order(), g.edge_count()), (4, 0));
        let t = build_graph(&Turan { parts: 2, order: 5 }).unwrap();
        assert_eq!(t.edge_count(), 6);
        assert_eq!(t.min_degree(), Some(2));
        assert_eq!(build_graph(&Cycle(5)).unwrap().edge_count(), 5);
        assert!(build_graph(&Cycle(2)).is_err());
        assert!(build_graph(&Turan { parts: 0, order: 3 }).is_err());
    }

    #[test]
    fn layout_is_left_to_right() {
        let g = build_graph(&ConstructionExpr::union([Clique(2), Independent(1), Clique(2)])).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (3, 4)]);
    }

    #[test]
    fn size_cap() {
        let e = ConstructionExpr::union([Independent(6_000), Independent(6_000)]);
        assert_eq!(
            build_graph(&e),
            Err(Error::SizeOverflow {
                requested: 12_000,
                limit: DEFAULT_MAX_ORDER
            })
        );
        assert_eq!(build_graph_with_limit(&e, 12_000).unwrap().order(), 12_000);
    }
}
