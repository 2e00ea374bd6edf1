use super::cliques::clique_number;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const CHROMATIC_LIMIT: usize = 16;

fn colorable(rows: &[u64], order: &[usize], k: usize, colors: &mut [usize], pos: usize) -> bool {
    if pos == order.len() {
        return true;
    }
    let v = order[pos];
    let mut forbidden = 0u32;
    for u in order[..pos].iter().copied() {
        if rows[v] >> u & 1 == 1 {
            forbidden |= 1 << colors[u];
        }
    }
    // colours are introduced in order, so a fresh colour is only tried once
    let used = order[..pos].iter().map(|&u| colors[u] + 1).max().unwrap_or(0);
    for c in 0..k.min(used + 1) {
        if forbidden >> c & 1 == 0 {
            colors[v] = c;
            if colorable(rows, order, k, colors, pos + 1) {
                return true;
            }
        }
    }
    false
}

/// Exact chromatic number by backtracking, starting from the clique number.
pub fn chromatic_number(f: &Graph) -> Result<usize> {
    let n = f.order();
    if n > CHROMATIC_LIMIT {
        return Err(Error::SizeLimit {
            operation: "chromatic_number",
            limit: CHROMATIC_LIMIT,
            order: n,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let rows = f.rows64();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(f.degree(v)));
    let mut colors = vec![0; n];
    let mut k = clique_number(f).max(1);
    while !colorable(&rows, &order, k, &mut colors, 0) {
        k += 1;
    }
    Ok(k)
}

/// Colour-class sizes `(a, b)` of the bipartition of each component.
fn component_sides(f: &Graph) -> Result<Vec<(usize, usize)>> {
    let mut side = vec![usize::MAX; f.order()];
    let mut out = Vec::new();
    for comp in f.components() {
        let root = comp[0];
        side[root] = 0;
        let mut stack = vec![root];
        let mut counts = [0usize; 2];
        while let Some(u) = stack.pop() {
            counts[side[u]] += 1;
            for w in f.neighbors(u) {
                if side[w] == usize::MAX {
                    side[w] = 1 - side[u];
                    stack.push(w);
                } else if side[w] == side[u] {
                    return Err(Error::NotBipartite);
                }
            }
        }
        out.push((counts[0], counts[1]));
    }
    Ok(out)
}

/// `p(F)`: the smallest possible colour class over proper two-colourings.
pub fn min_color_class(f: &Graph) -> Result<usize> {
    let sides = component_sides(f)?;
    let n = f.order();
    // reachable[x]: some choice of side per component puts x vertices in class one
    let mut reachable = vec![false; n + 1];
    reachable[0] = true;
    for (a, b) in sides {
        let mut next = vec![false; n + 1];
        for (x, _) in reachable.iter().enumerate().filter(|(_, &r)| r) {
            next[x + a] = true;
            next[x + b] = true;
        }
        reachable = next;
    }
    Ok((0..=n)
        .filter(|&x| reachable[x])
        .map(|x| x.min(n - x))
        .min()
        .unwrap_or(0))
}

/// `(p, q)` with `q = |F| - p`.
pub fn color_class_split(f: &Graph) -> Result<(usize, usize)> {
    let p = min_color_class(f)?;
    Ok((p, f.order() - p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, ConstructionExpr::*};

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&Graph::cycle(5).unwrap()).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::complete(4)).unwrap(), 4);
        let g = build_graph(&crate::graph::ConstructionExpr::join([Path(4), Independent(2)])).unwrap();
        assert_eq!(chromatic_number(&g).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::empty(3)).unwrap(), 1);
        assert_eq!(chromatic_number(&Graph::empty(0)).unwrap(), 0);
        assert!(chromatic_number(&Graph::empty(17)).is_err());
    }

    #[test]
    fn petersen_is_three_chromatic() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let g = Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap();
        assert_eq!(chromatic_number(&g).unwrap(), 3);
    }

    #[test]
    fn color_class_examples() {
        assert_eq!(min_color_class(&Graph::path(4)).unwrap(), 2);
        let star = build_graph(&crate::graph::ConstructionExpr::join([Independent(1), Independent(3)])).unwrap();
        assert_eq!(min_color_class(&star).unwrap(), 1);
        assert_eq!(min_color_class(&star.disjoint_union(&star)).unwrap(), 2);
        assert_eq!(color_class_split(&Graph::cycle(4).unwrap()).unwrap(), (2, 2));
        assert_eq!(min_color_class(&Graph::complete(3)), Err(Error::NotBipartite));
    }
}
