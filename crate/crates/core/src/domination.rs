//! The domination preorder `u ≤ v ⇔ lk(u) ⊆ st(v)`, its equivalence classes,
//! the transvection graph Λ_Γ on those classes, and properties (A), (P1.n), (P2).

use std::collections::BTreeSet;

use crate::graph::{SimplicialGraph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationStructure {
    leq: Vec<Vec<bool>>,
    classes: Vec<VertexSet>,
    class_of: Vec<usize>,
    lambda_edges: Vec<(usize, usize)>,
}

/// Which of (A), (P1.n) and (P2) hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub property_a: bool,
    /// The equivalence classes with exactly two elements; (P1.n) holds with
    /// `n = p1_classes.len()`.
    pub p1_classes: Vec<(usize, usize)>,
    /// Pairs `(u, v)` of singleton classes with `u ≤ v` and nothing strictly
    /// between them.
    pub p2_witnesses: Vec<(usize, usize)>,
}

impl PropertyReport {
    pub fn p1_count(&self) -> usize {
        self.p1_classes.len()
    }

    pub fn p2(&self) -> bool {
        !self.p2_witnesses.is_empty()
    }
}

impl DominationStructure {
    pub fn new(g: &SimplicialGraph) -> Self {
        let n = g.vertex_count();
        let stars: Vec<VertexSet> = (0..n).map(|v| g.star(v)).collect();
        let leq: Vec<Vec<bool>> = (0..n)
            .map(|u| (0..n).map(|v| g.link(u).is_subset(&stars[v])).collect())
            .collect();

        // Equivalence classes, each labelled by its smallest vertex.
        let mut class_rep = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for u in 0..n {
            if class_rep[u] != usize::MAX {
                continue;
            }
            reps.push(u);
            for v in u..n {
                if leq[u][v] && leq[v][u] {
                    class_rep[v] = u;
                }
            }
        }

        // Linear extension: dominated classes first, ties by smallest vertex.
        let mut placed = BTreeSet::new();
        let mut order = Vec::new();
        while order.len() < reps.len() {
            let next = reps
                .iter()
                .copied()
                .find(|&r| {
                    !placed.contains(&r)
                        && reps
                            .iter()
                            .all(|&s| s == r || placed.contains(&s) || !leq[s][r] || leq[r][s])
                })
                .expect("domination is a preorder, so some class is minimal");
            placed.insert(next);
            order.push(next);
        }

        let mut class_of = vec![0; n];
        let classes: Vec<VertexSet> = order
            .iter()
            .enumerate()
            .map(|(i, &r)| {
                let members: VertexSet = (0..n).filter(|&v| class_rep[v] == r).collect();
                for v in members.iter() {
                    class_of[v] = i;
                }
                members
            })
            .collect();

        let mut lambda_edges = Vec::new();
        for (i, ci) in classes.iter().enumerate() {
            for (j, cj) in classes.iter().enumerate() {
                let edge = if i == j {
                    ci.len() >= 2
                } else {
                    leq[ci.first().unwrap()][cj.first().unwrap()]
                };
                if edge {
                    lambda_edges.push((i, j));
                }
            }
        }

        Self {
            leq,
            classes,
            class_of,
            lambda_edges,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.leq.len()
    }

    pub fn leq(&self, u: usize, v: usize) -> bool {
        self.leq[u][v]
    }

    /// `u ≤ v` and not `v ≤ u`.
    pub fn strictly_below(&self, u: usize, v: usize) -> bool {
        self.leq[u][v] && !self.leq[v][u]
    }

    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(VertexSet::len).collect()
    }

    /// Directed edges of Λ_Γ between class indices, loops included.
    pub fn lambda_edges(&self) -> &[(usize, usize)] {
        &self.lambda_edges
    }

    pub fn lambda_non_loop_edges(&self) -> Vec<(usize, usize)> {
        self.lambda_edges
            .iter()
            .copied()
            .filter(|(i, j)| i != j)
            .collect()
    }

    pub fn lambda_loops(&self) -> Vec<usize> {
        self.lambda_edges
            .iter()
            .filter(|(i, j)| i == j)
            .map(|&(i, _)| i)
            .collect()
    }

    /// All pairs `(w, v)` with `w ≠ v` and `w ≤ v`, i.e. the admissible
    /// transvections `w ↦ wv`, in lexicographic order.
    pub fn transvections(&self) -> Vec<(usize, usize)> {
        let n = self.vertex_count();
        (0..n)
            .flat_map(|w| (0..n).map(move |v| (w, v)))
            .filter(|&(w, v)| w != v && self.leq[w][v])
            .collect()
    }

    pub fn is_transvection_free(&self) -> bool {
        self.classes.iter().all(|c| c.len() == 1) && self.lambda_non_loop_edges().is_empty()
    }

    pub fn properties(&self) -> PropertyReport {
        let n = self.vertex_count();
        let between = |u: usize, v: usize| {
            (0..n).any(|w| w != u && w != v && self.leq[u][w] && self.leq[w][v])
        };
        let property_a = (0..n).all(|u| (0..n).all(|v| u == v || !self.leq[u][v] || between(u, v)));
        let p1_classes = self
            .classes
            .iter()
            .filter(|c| c.len() == 2)
            .map(|c| {
                let m = c.to_vec();
                (m[0], m[1])
            })
            .collect();
        let singleton = |v: usize| self.classes[self.class_of[v]].len() == 1;
        let p2_witnesses = (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter(|&(u, v)| {
                u != v && singleton(u) && singleton(v) && self.leq[u][v] && !between(u, v)
            })
            .collect();
        PropertyReport {
            property_a,
            p1_classes,
            p2_witnesses,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn get(name: &str) -> SimplicialGraph {
        catalog::get(name, &[]).unwrap()
    }

    #[test]
    fn complete_graph_is_one_class() {
        let ds = DominationStructure::new(&catalog::complete(4));
        assert_eq!(ds.class_sizes(), [4]);
        assert_eq!(ds.lambda_edges(), [(0, 0)]);
        assert_eq!(ds.transvections().len(), 12);
        let single = DominationStructure::new(&catalog::complete(1));
        assert!(single.lambda_edges().is_empty());
    }

    #[test]
    fn first_example_has_one_pair() {
        let g = get("example_5_1");
        let ds = DominationStructure::new(&g);
        let v3 = g.vertex("v3").unwrap();
        let v4 = g.vertex("v4").unwrap();
        assert_eq!(ds.transvections(), [(v3, v4), (v4, v3)]);
        let mut sizes = ds.class_sizes();
        sizes.sort_unstable();
        assert_eq!(sizes, [1, 1, 1, 1, 2]);
        assert!(ds.lambda_non_loop_edges().is_empty());
        assert_eq!(ds.lambda_loops().len(), 1);
    }

    #[test]
    fn k2_transvections() {
        let ds = DominationStructure::new(&catalog::complete(2));
        assert_eq!(ds.transvections(), [(0, 1), (1, 0)]);
    }

    #[test]
    fn properties_of_named_graphs() {
        let b = DominationStructure::new(&get("example_5_3b")).properties();
        assert!(!b.p2());
        assert_eq!(b.p1_count(), 1);
        let c = DominationStructure::new(&get("example_5_3c"));
        assert!(c.properties().p2());
        // x8 lies below both x1 and the class {x6, x7}.
        assert_eq!(c.lambda_non_loop_edges().len(), 2);
        assert_eq!(c.lambda_loops().len(), 2);
        let k3 = DominationStructure::new(&catalog::complete(3)).properties();
        assert!(k3.property_a && !k3.p2() && k3.p1_count() == 0);
    }

    #[test]
    fn class_order_respects_domination() {
        let g = catalog::star(3);
        let ds = DominationStructure::new(&g);
        for u in 0..g.vertex_count() {
            for v in 0..g.vertex_count() {
                if ds.leq(u, v) {
                    assert!(ds.class_of(u) <= ds.class_of(v));
                }
            }
        }
        // Leaves are dominated by the hub, so the hub class comes last.
        let hub = g.vertex("c").unwrap();
        assert_eq!(ds.class_of(hub), ds.classes().len() - 1);
    }
}
