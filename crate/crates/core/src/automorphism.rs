//! Graph automorphism counting and isomorphism search.
//!
//! Both use joint colour refinement on the pair of graphs followed by
//! individualisation and backtracking. The automorphism group order is the
//! product of orbit sizes along the point-stabiliser chain of the vertex order.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::SimplicialGraph;
use crate::Limits;

/// Order of the automorphism group of `g`.
pub fn automorphism_count(g: &SimplicialGraph, limits: &Limits) -> Result<u128> {
    check_cap(g, limits)?;
    let n = g.vertex_count();
    let mut fixed: Vec<(usize, usize)> = Vec::new();
    let mut order: u128 = 1;
    for v in 0..n {
        let colours = refine(g, g, &fixed);
        if colours.is_none() {
            break;
        }
        let colours = colours.expect("checked");
        // Once every colour class is a singleton the stabiliser is trivial.
        if is_discrete(&colours, n) {
            break;
        }
        let mut orbit = 0u128;
        for w in 0..n {
            if colours[n + w] != colours[v] {
                continue;
            }
            let mut trial = fixed.clone();
            trial.push((v, w));
            if w == v || search(g, g, &mut trial).is_some() {
                orbit += 1;
            }
        }
        order *= orbit;
        fixed.push((v, v));
    }
    Ok(order)
}

/// A bijection `m` (indexed by vertices of `g1`) with `{m(u), m(v)}` an edge
/// of `g2` exactly when `{u, v}` is an edge of `g1`.
pub fn find_isomorphism(
    g1: &SimplicialGraph,
    g2: &SimplicialGraph,
    limits: &Limits,
) -> Result<Option<Vec<usize>>> {
    check_cap(g1, limits)?;
    check_cap(g2, limits)?;
    if g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return Ok(None);
    }
    Ok(search(g1, g2, &mut Vec::new()))
}

pub fn is_isomorphism(g1: &SimplicialGraph, g2: &SimplicialGraph, m: &[usize]) -> bool {
    let n = g1.vertex_count();
    if m.len() != n || g2.vertex_count() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &x in m {
        if x >= n || std::mem::replace(&mut seen[x], true) {
            return false;
        }
    }
    (0..n).all(|u| (0..n).all(|v| g1.adjacent(u, v) == g2.adjacent(m[u], m[v])))
}

fn check_cap(g: &SimplicialGraph, limits: &Limits) -> Result<()> {
    if g.vertex_count() > limits.automorphism_vertices {
        return Err(Error::CapExceeded {
            what: "automorphism search vertices",
            limit: limits.automorphism_vertices,
            actual: g.vertex_count(),
        });
    }
    Ok(())
}

fn is_discrete(colours: &[usize], n: usize) -> bool {
    count_classes(&colours[..n]) == n
}

/// Extends the pinned pairs to a full isomorphism, or returns `None`.
fn search(
    g1: &SimplicialGraph,
    g2: &SimplicialGraph,
    pinned: &mut Vec<(usize, usize)>,
) -> Option<Vec<usize>> {
    let n = g1.vertex_count();
    let colours = refine(g1, g2, pinned)?;
    // Pick the first vertex of g1 in a non-singleton class.
    let mut class_size = BTreeMap::<usize, usize>::new();
    for &c in &colours[..n] {
        *class_size.entry(c).or_default() += 1;
    }
    let Some(v) = (0..n).find(|&v| class_size[&colours[v]] > 1) else {
        let mut m = vec![0; n];
        for v in 0..n {
            m[v] = (0..n).find(|&w| colours[n + w] == colours[v])?;
        }
        return is_isomorphism(g1, g2, &m).then_some(m);
    };
    for w in 0..n {
        if colours[n + w] != colours[v] {
            continue;
        }
        pinned.push((v, w));
        let found = search(g1, g2, pinned);
        pinned.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Joint colour refinement on the disjoint union of `g1` and `g2` (indices
/// of `g2` shifted by `n`). Pinned pairs receive matching unique colours.
/// Returns `None` when the colour class sizes differ between the two sides.
fn refine(
    g1: &SimplicialGraph,
    g2: &SimplicialGraph,
    pinned: &[(usize, usize)],
) -> Option<Vec<usize>> {
    let n = g1.vertex_count();
    let neighbours = |x: usize| -> Vec<usize> {
        if x < n {
            g1.link(x).to_vec()
        } else {
            g2.link(x - n).iter().map(|y| y + n).collect()
        }
    };
    let adj: Vec<Vec<usize>> = (0..2 * n).map(neighbours).collect();
    let mut colours = vec![0usize; 2 * n];
    for (k, &(a, b)) in pinned.iter().enumerate() {
        colours[a] = k + 1;
        colours[n + b] = k + 1;
    }
    let mut classes = count_classes(&colours);
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..2 * n)
            .map(|x| {
                let mut nc: Vec<usize> = adj[x].iter().map(|&y| colours[y]).collect();
                nc.sort_unstable();
                (colours[x], nc)
            })
            .collect();
        // Sorted signatures give colour ids that agree on both sides.
        let distinct: BTreeSet<&(usize, Vec<usize>)> = signatures.iter().collect();
        let rank: BTreeMap<_, usize> = distinct
            .into_iter()
            .enumerate()
            .map(|(i, k)| (k, i))
            .collect();
        colours = signatures.iter().map(|s| rank[&s]).collect();
        if !balanced(&colours, n) {
            return None;
        }
        let now = count_classes(&colours);
        if now == classes {
            return Some(colours);
        }
        classes = now;
    }
}

fn count_classes(colours: &[usize]) -> usize {
    let mut c = colours.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn balanced(colours: &[usize], n: usize) -> bool {
    let mut left = BTreeMap::<usize, isize>::new();
    for &c in &colours[..n] {
        *left.entry(c).or_default() += 1;
    }
    for &c in &colours[n..] {
        *left.entry(c).or_default() -= 1;
    }
    left.values().all(|&d| d == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::CombineMode;

    fn cycle(n: usize) -> SimplicialGraph {
        let labels = (0..n).map(|i| format!("c{i}")).collect();
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        SimplicialGraph::from_index_edges(labels, &edges)
    }

    fn path(n: usize) -> SimplicialGraph {
        let labels = (0..n).map(|i| format!("p{i}")).collect();
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        SimplicialGraph::from_index_edges(labels, &edges)
    }

    fn complete(n: usize) -> SimplicialGraph {
        let labels = (0..n).map(|i| format!("k{i}")).collect();
        let edges: Vec<_> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        SimplicialGraph::from_index_edges(labels, &edges)
    }

    #[test]
    fn small_counts() {
        let l = Limits::default();
        assert_eq!(automorphism_count(&cycle(4), &l).unwrap(), 8);
        assert_eq!(automorphism_count(&cycle(7), &l).unwrap(), 14);
        assert_eq!(automorphism_count(&path(5), &l).unwrap(), 2);
        assert_eq!(automorphism_count(&complete(5), &l).unwrap(), 120);
        let kk = complete(3).combine(&complete(3), CombineMode::DisjointUnion);
        assert_eq!(automorphism_count(&kk, &l).unwrap(), 72);
        let empty = SimplicialGraph::build(Vec::<&str>::new(), Vec::<(&str, &str)>::new()).unwrap();
        assert_eq!(automorphism_count(&empty, &l).unwrap(), 1);
    }

    #[test]
    fn petersen_has_120() {
        let outer: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let inner: Vec<_> = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5)).collect();
        let spokes: Vec<_> = (0..5).map(|i| (i, i + 5)).collect();
        let edges: Vec<_> = outer.into_iter().chain(inner).chain(spokes).collect();
        let g =
            SimplicialGraph::from_index_edges((0..10).map(|i| format!("p{i}")).collect(), &edges);
        assert_eq!(automorphism_count(&g, &Limits::default()).unwrap(), 120);
    }

    #[test]
    fn isomorphism_search() {
        let l = Limits::default();
        let c4 = cycle(4);
        let relabelled = SimplicialGraph::build(
            ["d", "b", "a", "c"],
            [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")],
        )
        .unwrap();
        let m = find_isomorphism(&c4, &relabelled, &l).unwrap().unwrap();
        assert!(is_isomorphism(&c4, &relabelled, &m));
        assert!(find_isomorphism(&c4, &path(4), &l).unwrap().is_none());
        let c6 = cycle(6);
        let two_triangles = complete(3).combine(&complete(3), CombineMode::DisjointUnion);
        assert!(find_isomorphism(&c6, &two_triangles, &l).unwrap().is_none());
    }

    #[test]
    fn cap_is_enforced() {
        let l = Limits {
            automorphism_vertices: 3,
            ..Limits::default()
        };
        let err = automorphism_count(&cycle(4), &l).unwrap_err();
        assert!(err.is_cap());
    }
}
