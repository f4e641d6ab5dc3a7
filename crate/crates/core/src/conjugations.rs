//! Partial conjugations, separating intersections of links (SILs) and the
//! support graphs Δ_v.

use crate::graph::{SimplicialGraph, VertexSet};

/// Conjugation of the component `component` of Γ∖st(actor) by `actor`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialConjugation {
    pub actor: usize,
    pub component: VertexSet,
    /// True when `component` is all of Γ∖st(actor).
    pub inner: bool,
}

/// One entry per vertex `v` and component of Γ∖st(v), in vertex order then
/// component order.
pub fn partial_conjugations(g: &SimplicialGraph) -> Vec<PartialConjugation> {
    (0..g.vertex_count())
        .flat_map(|v| {
            let comps = g.star_complement_components(v);
            let inner = comps.len() == 1;
            comps.into_iter().map(move |component| PartialConjugation {
                actor: v,
                component,
                inner,
            })
        })
        .collect()
}

pub fn has_non_inner_pc(g: &SimplicialGraph) -> bool {
    (0..g.vertex_count()).any(|v| g.star_complement_components(v).len() >= 2)
}

/// Unordered non-adjacent pairs `(u, v)`, `u < v`, for which some component of
/// Γ∖(lk(u) ∩ lk(v)) contains neither `u` nor `v`.
pub fn sil_pairs(g: &SimplicialGraph) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if g.adjacent(u, v) {
                continue;
            }
            let rest = g.vertices().difference(&g.link(u).intersection(g.link(v)));
            if g.components(&rest)
                .iter()
                .any(|c| !c.contains(u) && !c.contains(v))
            {
                out.push((u, v));
            }
        }
    }
    out
}

pub fn is_sil(g: &SimplicialGraph, u: usize, v: usize) -> bool {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    sil_pairs(g).contains(&(a, b))
}

/// The support graph Δ_v: nodes are the components of Γ∖st(v).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportGraph {
    pub base: usize,
    pub components: Vec<VertexSet>,
    /// Undirected edges between component indices, `(i, j)` with `i < j`.
    pub edges: Vec<(usize, usize)>,
}

impl SupportGraph {
    pub fn new(g: &SimplicialGraph, v: usize) -> Self {
        let components = g.star_complement_components(v);
        let k = components.len();
        // `joins[a][b]`: some w in component a has component b as a component
        // of Γ∖st(w) too.
        let joins = |a: usize, b: usize| {
            components[a].iter().any(|w| {
                g.star_complement_components(w)
                    .iter()
                    .any(|c| *c == components[b])
            })
        };
        let mut edges = Vec::new();
        for a in 0..k {
            for b in a + 1..k {
                if joins(a, b) || joins(b, a) {
                    edges.push((a, b));
                }
            }
        }
        Self {
            base: v,
            components,
            edges,
        }
    }

    pub fn is_forest(&self) -> bool {
        self.node_components().len() + self.edges.len() == self.components.len()
    }

    /// Connected components of Δ_v as lists of node indices, ordered by
    /// smallest node.
    pub fn node_components(&self) -> Vec<Vec<usize>> {
        let k = self.components.len();
        let mut parent: Vec<usize> = (0..k).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut root_slot = vec![usize::MAX; k];
        for x in 0..k {
            let r = find(&mut parent, x);
            if root_slot[r] == usize::MAX {
                root_slot[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[root_slot[r]].push(x);
        }
        groups
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SupportSummary {
    pub all_forests: bool,
    pub max_components: usize,
}

pub fn support_graphs(g: &SimplicialGraph) -> (Vec<SupportGraph>, SupportSummary) {
    let graphs: Vec<SupportGraph> = (0..g.vertex_count())
        .map(|v| SupportGraph::new(g, v))
        .collect();
    let summary = SupportSummary {
        all_forests: graphs.iter().all(SupportGraph::is_forest),
        max_components: graphs.iter().map(|d| d.components.len()).max().unwrap_or(0),
    };
    (graphs, summary)
}

pub fn max_components(g: &SimplicialGraph) -> usize {
    (0..g.vertex_count())
        .map(|v| g.star_complement_components(v).len())
        .max()
        .unwrap_or(0)
}
