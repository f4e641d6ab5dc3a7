//! Finite simplicial graphs and the local operators (links, stars, induced
//! components, joins) that every analysis in this crate reads.
//!
//! Vertices are identified internally by their index in input order; labels
//! are opaque strings used only for I/O and reports.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A subset of the vertices of some parent graph, stored as a bitset over
/// vertex indices.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn full(n: usize) -> Self {
        (0..n).collect()
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = Self::new();
        s.insert(v);
        s
    }

    pub fn insert(&mut self, v: usize) {
        let (w, b) = (v / 64, v % 64);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1 << b;
    }

    pub fn remove(&mut self, v: usize) {
        let (w, b) = (v / 64, v % 64);
        if let Some(word) = self.words.get_mut(w) {
            *word &= !(1 << b);
        }
        self.trim();
    }

    pub fn contains(&self, v: usize) -> bool {
        self.words
            .get(v / 64)
            .is_some_and(|word| word & (1 << (v % 64)) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * 64 + b)
            })
        })
    }

    pub fn union(&self, other: &Self) -> Self {
        let n = self.words.len().max(other.words.len());
        let words = (0..n)
            .map(|i| self.word(i) | other.word(i))
            .collect::<Vec<_>>();
        Self::from_words(words)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let n = self.words.len().min(other.words.len());
        Self::from_words((0..n).map(|i| self.word(i) & other.word(i)).collect())
    }

    pub fn difference(&self, other: &Self) -> Self {
        Self::from_words(
            (0..self.words.len())
                .map(|i| self.word(i) & !other.word(i))
                .collect(),
        )
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        (0..self.words.len()).all(|i| self.word(i) & !other.word(i) == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.intersection(other).is_empty()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn word(&self, i: usize) -> u64 {
        self.words.get(i).copied().unwrap_or(0)
    }

    fn from_words(words: Vec<u64>) -> Self {
        let mut s = Self { words };
        s.trim();
        s
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Self::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// How [`SimplicialGraph::combine`] glues two graphs together.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombineMode {
    Join,
    DisjointUnion,
}

/// A finite graph without loops or multiple edges.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialGraph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    neighbours: Vec<VertexSet>,
}

impl fmt::Debug for SimplicialGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialGraph")
            .field("vertices", &self.labels)
            .field("edges", &self.edge_labels())
            .finish()
    }
}

impl SimplicialGraph {
    /// Validates a vertex list and an edge list and builds the graph.
    pub fn build<V, E, S>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        E: IntoIterator<Item = (S, S)>,
        S: AsRef<str>,
    {
        let mut labels = Vec::new();
        let mut index = HashMap::new();
        for v in vertices {
            let v = v.as_ref().to_string();
            if index.insert(v.clone(), labels.len()).is_some() {
                return Err(Error::DuplicateVertex(v));
            }
            labels.push(v);
        }
        let mut neighbours = vec![VertexSet::new(); labels.len()];
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let i = *index
                .get(a)
                .ok_or_else(|| Error::UnknownEndpoint(a.to_string()))?;
            let j = *index
                .get(b)
                .ok_or_else(|| Error::UnknownEndpoint(b.to_string()))?;
            if i == j {
                return Err(Error::LoopEdge(a.to_string()));
            }
            if neighbours[i].contains(j) {
                return Err(Error::DuplicateEdge(a.to_string(), b.to_string()));
            }
            neighbours[i].insert(j);
            neighbours[j].insert(i);
        }
        Ok(Self {
            labels,
            index,
            neighbours,
        })
    }

    /// Builds a graph from index pairs; panics on invalid input, so it is
    /// reserved for internal constructions that are valid by design.
    pub(crate) fn from_index_edges(labels: Vec<String>, edges: &[(usize, usize)]) -> Self {
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect::<HashMap<_, _>>();
        assert_eq!(index.len(), labels.len(), "duplicate labels");
        let mut neighbours = vec![VertexSet::new(); labels.len()];
        for &(i, j) in edges {
            assert_ne!(i, j);
            neighbours[i].insert(j);
            neighbours[j].insert(i);
        }
        Self {
            labels,
            index,
            neighbours,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.neighbours.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.neighbours[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbours[v].len()
    }

    /// Neighbours of `v`.
    pub fn link(&self, v: usize) -> &VertexSet {
        &self.neighbours[v]
    }

    /// Neighbours of `v` together with `v`.
    pub fn star(&self, v: usize) -> VertexSet {
        let mut s = self.neighbours[v].clone();
        s.insert(v);
        s
    }

    /// Edges as index pairs `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.vertex_count())
            .flat_map(|i| {
                self.neighbours[i]
                    .iter()
                    .filter(move |&j| j > i)
                    .map(move |j| (i, j))
            })
            .collect()
    }

    pub fn edge_labels(&self) -> Vec<(String, String)> {
        self.edges()
            .into_iter()
            .map(|(i, j)| (self.labels[i].clone(), self.labels[j].clone()))
            .collect()
    }

    pub fn labels_of(&self, set: &VertexSet) -> Vec<String> {
        set.iter().map(|v| self.labels[v].clone()).collect()
    }

    /// Label-based link and star of a vertex.
    pub fn link_star(&self, label: &str) -> Result<(VertexSet, VertexSet)> {
        let v = self.vertex(label)?;
        Ok((self.link(v).clone(), self.star(v)))
    }

    /// Connected components of the subgraph induced on `subset`, ordered by
    /// their smallest vertex.
    pub fn components(&self, subset: &VertexSet) -> Vec<VertexSet> {
        let mut remaining = subset.clone();
        let mut out = Vec::new();
        while let Some(start) = remaining.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = vec![start];
            while let Some(u) = frontier.pop() {
                for w in self.neighbours[u].intersection(subset).iter() {
                    if !comp.contains(w) {
                        comp.insert(w);
                        frontier.push(w);
                    }
                }
            }
            remaining = remaining.difference(&comp);
            out.push(comp);
        }
        out
    }

    /// Components of an arbitrary subset given by labels.
    pub fn connected_components(&self, subset: &[&str]) -> Result<Vec<VertexSet>> {
        let set = subset
            .iter()
            .map(|l| self.vertex(l))
            .collect::<Result<VertexSet>>()?;
        Ok(self.components(&set))
    }

    /// Components of Γ minus the star of `v`.
    pub fn star_complement_components(&self, v: usize) -> Vec<VertexSet> {
        self.components(&self.vertices().difference(&self.star(v)))
    }

    pub fn is_connected(&self) -> bool {
        self.components(&self.vertices()).len() <= 1
    }

    /// Vertices whose star is the whole graph.
    pub fn centre_vertices(&self) -> VertexSet {
        let n = self.vertex_count();
        (0..n).filter(|&v| self.degree(v) + 1 == n).collect()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        (0..n).all(|v| self.degree(v) + 1 == n)
    }

    /// Clique sizes, in component order, when the graph is a disjoint union
    /// of complete graphs; `None` otherwise.
    pub fn disjoint_clique_sizes(&self) -> Option<Vec<usize>> {
        let comps = self.components(&self.vertices());
        comps
            .iter()
            .map(|c| {
                let k = c.len();
                c.iter().all(|v| self.degree(v) + 1 == k).then_some(k)
            })
            .collect()
    }

    /// The subgraph induced on `subset`, keeping the parent's vertex order.
    pub fn induced(&self, subset: &VertexSet) -> SimplicialGraph {
        let keep = subset.to_vec();
        let pos = keep
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i))
            .collect::<HashMap<_, _>>();
        let edges = self
            .edges()
            .into_iter()
            .filter_map(|(a, b)| Some((*pos.get(&a)?, *pos.get(&b)?)))
            .collect::<Vec<_>>();
        SimplicialGraph::from_index_edges(
            keep.iter().map(|&v| self.labels[v].clone()).collect(),
            &edges,
        )
    }

    /// Join or disjoint union. When the label sets collide, the left labels are
    /// prefixed with `1.` and the right ones with `2.`.
    pub fn combine(&self, other: &SimplicialGraph, mode: CombineMode) -> SimplicialGraph {
        let collide = other.labels.iter().any(|l| self.index.contains_key(l));
        let rename = |prefix: &str, l: &String| {
            if collide {
                format!("{prefix}{l}")
            } else {
                l.clone()
            }
        };
        let n1 = self.vertex_count();
        let labels = self
            .labels
            .iter()
            .map(|l| rename("1.", l))
            .chain(other.labels.iter().map(|l| rename("2.", l)))
            .collect::<Vec<_>>();
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(a, b)| (a + n1, b + n1)));
        if mode == CombineMode::Join {
            for i in 0..n1 {
                for j in 0..other.vertex_count() {
                    edges.push((i, n1 + j));
                }
            }
        }
        SimplicialGraph::from_index_edges(labels, &edges)
    }

    /// Relabels vertices in order, keeping the adjacency.
    pub fn relabel(&self, labels: Vec<String>) -> Result<SimplicialGraph> {
        if labels.len() != self.vertex_count() {
            return Err(Error::BadParams(format!(
                "expected {} labels, got {}",
                self.vertex_count(),
                labels.len()
            )));
        }
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.clone()) {
                return Err(Error::DuplicateVertex(l.clone()));
            }
        }
        Ok(SimplicialGraph::from_index_edges(labels, &self.edges()))
    }

    pub fn to_json_value(&self) -> GraphJson {
        GraphJson {
            vertices: self.labels.clone(),
            edges: self
                .edge_labels()
                .into_iter()
                .map(|(a, b)| [a, b])
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("graph JSON serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: GraphJson = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        raw.into_graph()
    }
}

/// The on-disk graph format: `{"vertices": [...], "edges": [[u, v], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

impl GraphJson {
    pub fn into_graph(self) -> Result<SimplicialGraph> {
        let edges = self
            .edges
            .iter()
            .map(|[a, b]| (a.as_str(), b.as_str()))
            .collect::<Vec<_>>();
        SimplicialGraph::build(self.vertices.iter().map(String::as_str), edges)
    }
}
