//! The graphs Θ with PSA(A_Γ) ≅ A_Θ (when Γ has no SILs) and PSO(A_Γ) ≅ A_Θ
//! (when every support graph is a forest).

use crate::conjugations::{self, partial_conjugations, SupportGraph};
use crate::graph::{SimplicialGraph, VertexSet};
use crate::words::{self, AutSpec};

/// What a vertex of Θ stands for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ThetaVertex {
    /// A partial conjugation, by index into `partial_conjugations(Γ)`.
    Conjugation(usize),
    /// `v_e^u` for an edge `e = {K, L}` of Δ_u.
    SupportEdge {
        base: usize,
        edge: (VertexSet, VertexSet),
    },
    /// `v_C^u` for a non-distinguished component of Δ_u, listed by its nodes.
    SupportComponent { base: usize, nodes: Vec<VertexSet> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaResult {
    pub theta: SimplicialGraph,
    pub vertex_meaning: Vec<ThetaVertex>,
    pub applicable: bool,
    pub reason: Option<String>,
}

impl ThetaResult {
    fn inapplicable(reason: &str) -> Self {
        Self {
            theta: SimplicialGraph::from_index_edges(Vec::new(), &[]),
            vertex_meaning: Vec::new(),
            applicable: false,
            reason: Some(reason.to_string()),
        }
    }
}

fn set_label(g: &SimplicialGraph, s: &VertexSet) -> String {
    g.labels_of(s).join(",")
}

pub fn psa_theta(g: &SimplicialGraph) -> ThetaResult {
    if !conjugations::sil_pairs(g).is_empty() {
        return ThetaResult::inapplicable("NoSILViolated");
    }
    let pcs = partial_conjugations(g);
    let auts: Vec<_> = pcs
        .iter()
        .map(|p| {
            words::std_aut(
                g,
                &AutSpec::PartialConjugation {
                    v: p.actor,
                    component: p.component.clone(),
                },
            )
            .expect("listed partial conjugations are admissible")
        })
        .collect();
    let mut edges = Vec::new();
    for i in 0..auts.len() {
        for j in i + 1..auts.len() {
            if words::auts_commute(g, &auts[i], &auts[j]) {
                edges.push((i, j));
            }
        }
    }
    let labels = pcs
        .iter()
        .map(|p| format!("pi[{};{}]", g.label(p.actor), set_label(g, &p.component)))
        .collect();
    ThetaResult {
        theta: SimplicialGraph::from_index_edges(labels, &edges),
        vertex_meaning: (0..pcs.len()).map(ThetaVertex::Conjugation).collect(),
        applicable: true,
        reason: None,
    }
}

/// For each vertex `u`, the index (into `node_components()` of Δ_u) of the
/// default distinguished component: the one containing the smallest vertex of Γ.
pub fn default_distinguished(supports: &[SupportGraph]) -> Vec<usize> {
    supports
        .iter()
        .map(|d| {
            let groups = d.node_components();
            (0..groups.len())
                .min_by_key(|&k| {
                    groups[k]
                        .iter()
                        .filter_map(|&node| d.components[node].first())
                        .min()
                })
                .unwrap_or(0)
        })
        .collect()
}

/// Number of distinguished-component choices at each vertex.
pub fn distinguished_choice_counts(g: &SimplicialGraph) -> Vec<usize> {
    conjugations::support_graphs(g)
        .0
        .iter()
        .map(|d| d.node_components().len().max(1))
        .collect()
}

pub fn pso_theta(g: &SimplicialGraph, choice: Option<&[usize]>) -> ThetaResult {
    let (supports, summary) = conjugations::support_graphs(g);
    if !summary.all_forests {
        return ThetaResult::inapplicable("SupportGraphNotForest");
    }
    let default = default_distinguished(&supports);
    let choice = choice.unwrap_or(&default);
    let sils = conjugations::sil_pairs(g);
    let is_sil = |a: usize, b: usize| sils.contains(&(a.min(b), a.max(b)));

    let mut meaning = Vec::new();
    let mut labels = Vec::new();
    for d in &supports {
        let u = d.base;
        for &(a, b) in &d.edges {
            labels.push(format!(
                "e[{};{}|{}]",
                g.label(u),
                set_label(g, &d.components[a]),
                set_label(g, &d.components[b])
            ));
            meaning.push(ThetaVertex::SupportEdge {
                base: u,
                edge: (d.components[a].clone(), d.components[b].clone()),
            });
        }
    }
    for d in &supports {
        let u = d.base;
        for (k, group) in d.node_components().into_iter().enumerate() {
            if k == choice[u] {
                continue;
            }
            let nodes: Vec<VertexSet> = group.iter().map(|&x| d.components[x].clone()).collect();
            let joined: Vec<String> = nodes.iter().map(|s| set_label(g, s)).collect();
            labels.push(format!("c[{};{}]", g.label(u), joined.join("|")));
            meaning.push(ThetaVertex::SupportComponent { base: u, nodes });
        }
    }

    // Non-adjacency clause for two edge vertices v_e^u and v_f^w.
    let excluded = |u: usize, e: &(VertexSet, VertexSet), w: usize, f: &(VertexSet, VertexSet)| {
        if u == w || !is_sil(u, w) {
            return false;
        }
        let orient =
            |x: &(VertexSet, VertexSet)| [(x.0.clone(), x.1.clone()), (x.1.clone(), x.0.clone())];
        orient(e).iter().any(|(l, m)| {
            orient(f)
                .iter()
                .any(|(l2, n)| l == l2 && m.contains(w) && n.contains(u))
        })
    };
    let mut edges = Vec::new();
    for i in 0..meaning.len() {
        for j in i + 1..meaning.len() {
            let adjacent = match (&meaning[i], &meaning[j]) {
                (
                    ThetaVertex::SupportEdge { base: u, edge: e },
                    ThetaVertex::SupportEdge { base: w, edge: f },
                ) => !excluded(*u, e, *w, f),
                _ => true,
            };
            if adjacent {
                edges.push((i, j));
            }
        }
    }
    ThetaResult {
        theta: SimplicialGraph::from_index_edges(labels, &edges),
        vertex_meaning: meaning,
        applicable: true,
        reason: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automorphism::find_isomorphism;
    use crate::{catalog, Limits};

    #[test]
    fn psa_of_connected_complements_is_gamma() {
        let g = catalog::cycle(5);
        let t = psa_theta(&g);
        assert!(t.applicable);
        assert!(find_isomorphism(&t.theta, &g, &Limits::default())
            .unwrap()
            .is_some());
        assert!(!psa_theta(&catalog::star(3)).applicable);
        let k = psa_theta(&catalog::complete(4));
        assert!(k.applicable && k.theta.is_empty());
    }

    #[test]
    fn pso_named_examples() {
        let l = Limits::default();
        let a = pso_theta(&catalog::get("example_5_3a", &[]).unwrap(), None);
        assert!(a.applicable);
        assert!(find_isomorphism(&a.theta, &catalog::cycle(4), &l)
            .unwrap()
            .is_some());
        let w = pso_theta(&catalog::get("wiedmer_9", &[]).unwrap(), None);
        assert!(w.applicable);
        assert_eq!((w.theta.vertex_count(), w.theta.edge_count()), (2, 0));
        assert!(pso_theta(&catalog::cycle(6), None).theta.is_empty());
    }
}
