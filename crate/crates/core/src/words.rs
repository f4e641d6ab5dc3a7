//! Words in A_Γ, a canonical normal form, and automorphisms given by the
//! images of the standard generators.
//!
//! The normal form first cancels every pair `x^ε … x^-ε` whose intermediate
//! letters all commute with `x`, until none is left; such reduced words are
//! unique up to swapping adjacent commuting letters. The lexicographically
//! least member of that class is then extracted greedily.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{SimplicialGraph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub vertex: usize,
    /// `1` or `-1`.
    pub exp: i8,
}

impl Letter {
    pub fn new(vertex: usize, exp: i8) -> Self {
        debug_assert!(exp == 1 || exp == -1);
        Self { vertex, exp }
    }

    pub fn inverse(self) -> Self {
        Self::new(self.vertex, -self.exp)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RaagWord(pub Vec<Letter>);

impl RaagWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn generator(v: usize) -> Self {
        Self(vec![Letter::new(v, 1)])
    }

    pub fn from_pairs(pairs: &[(usize, i8)]) -> Self {
        Self(pairs.iter().map(|&(v, e)| Letter::new(v, e)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn inverse(&self) -> Self {
        Self(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn concat(&self, other: &Self) -> Self {
        Self(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn render(&self, g: &SimplicialGraph) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|l| {
                if l.exp == 1 {
                    g.label(l.vertex).to_string()
                } else {
                    format!("{}^-1", g.label(l.vertex))
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for RaagWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|l| format!("{}{}", l.vertex, if l.exp == 1 { "" } else { "'" }))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

fn commute(g: &SimplicialGraph, a: usize, b: usize) -> bool {
    a == b || g.adjacent(a, b)
}

/// Canonical representative of the element of A_Γ spelled by `word`.
pub fn normal_form(g: &SimplicialGraph, word: &RaagWord) -> RaagWord {
    let mut w = word.0.clone();
    'outer: loop {
        for i in 0..w.len() {
            let x = w[i];
            for j in i + 1..w.len() {
                if w[j] == x.inverse() {
                    w.remove(j);
                    w.remove(i);
                    continue 'outer;
                }
                if !commute(g, w[j].vertex, x.vertex) {
                    break;
                }
            }
        }
        break;
    }

    let mut out = Vec::with_capacity(w.len());
    while !w.is_empty() {
        let mut best: Option<usize> = None;
        for i in 0..w.len() {
            let movable =
                w[..i].iter().all(|l| commute(g, l.vertex, w[i].vertex)) && !w[..i].contains(&w[i]);
            if movable && best.is_none_or(|b| w[i] < w[b]) {
                best = Some(i);
            }
        }
        out.push(w.remove(best.expect("the first letter is always movable")));
    }
    RaagWord(out)
}

pub fn words_equal(g: &SimplicialGraph, a: &RaagWord, b: &RaagWord) -> bool {
    normal_form(g, a) == normal_form(g, b)
}

/// The standard generators of Aut(A_Γ).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AutSpec {
    Inversion(usize),
    /// `Transvection { w, v }`: `w ↦ wv`, requires `w ≤ v`.
    Transvection {
        w: usize,
        v: usize,
    },
    /// `u ↦ v u v⁻¹` for `u` in the component.
    PartialConjugation {
        v: usize,
        component: VertexSet,
    },
    /// A permutation of the vertices preserving adjacency.
    GraphSymmetry(Vec<usize>),
}

/// An endomorphism of A_Γ given by the (normal-form) images of the generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RaagAutomorphism {
    images: Vec<RaagWord>,
}

impl RaagAutomorphism {
    pub fn identity(g: &SimplicialGraph) -> Self {
        Self {
            images: (0..g.vertex_count()).map(RaagWord::generator).collect(),
        }
    }

    pub fn from_images(g: &SimplicialGraph, images: Vec<RaagWord>) -> Self {
        assert_eq!(images.len(), g.vertex_count());
        Self {
            images: images.iter().map(|w| normal_form(g, w)).collect(),
        }
    }

    pub fn image(&self, v: usize) -> &RaagWord {
        &self.images[v]
    }

    pub fn images(&self) -> &[RaagWord] {
        &self.images
    }

    /// Image of an arbitrary word, in normal form.
    pub fn apply(&self, g: &SimplicialGraph, word: &RaagWord) -> RaagWord {
        let mut out = Vec::new();
        for l in &word.0 {
            let img = &self.images[l.vertex];
            if l.exp == 1 {
                out.extend_from_slice(&img.0);
            } else {
                out.extend(img.inverse().0);
            }
        }
        normal_form(g, &RaagWord(out))
    }
}

pub fn std_aut(g: &SimplicialGraph, spec: &AutSpec) -> Result<RaagAutomorphism> {
    let n = g.vertex_count();
    let check = |v: usize| {
        if v < n {
            Ok(())
        } else {
            Err(Error::InadmissibleSpec(format!(
                "vertex index {v} out of range"
            )))
        }
    };
    let mut images: Vec<RaagWord> = (0..n).map(RaagWord::generator).collect();
    match spec {
        AutSpec::Inversion(v) => {
            check(*v)?;
            images[*v] = RaagWord::from_pairs(&[(*v, -1)]);
        }
        AutSpec::Transvection { w, v } => {
            check(*w)?;
            check(*v)?;
            if w == v || !g.link(*w).is_subset(&g.star(*v)) {
                return Err(Error::InadmissibleSpec(format!(
                    "{} is not dominated by {}",
                    g.label(*w),
                    g.label(*v)
                )));
            }
            images[*w] = RaagWord::from_pairs(&[(*w, 1), (*v, 1)]);
        }
        AutSpec::PartialConjugation { v, component } => {
            check(*v)?;
            if !g.star_complement_components(*v).contains(component) {
                return Err(Error::InadmissibleSpec(format!(
                    "{:?} is not a component of the complement of st({})",
                    g.labels_of(component),
                    g.label(*v)
                )));
            }
            for u in component.iter() {
                images[u] = RaagWord::from_pairs(&[(*v, 1), (u, 1), (*v, -1)]);
            }
        }
        AutSpec::GraphSymmetry(perm) => {
            let is_perm = perm.len() == n && {
                let mut seen = vec![false; n];
                perm.iter()
                    .all(|&p| p < n && !std::mem::replace(&mut seen[p], true))
            };
            if !is_perm || !crate::automorphism::is_isomorphism(g, g, perm) {
                return Err(Error::InadmissibleSpec(
                    "permutation is not a graph automorphism".into(),
                ));
            }
            for (u, &p) in perm.iter().enumerate() {
                images[u] = RaagWord::generator(p);
            }
        }
    }
    Ok(RaagAutomorphism { images })
}

/// Two-sided inverse of a standard generator, as another composite of
/// standard generators.
pub fn std_inverse(g: &SimplicialGraph, spec: &AutSpec) -> Result<RaagAutomorphism> {
    let f = std_aut(g, spec)?;
    Ok(match spec {
        AutSpec::Inversion(_) => f,
        AutSpec::Transvection { v, .. } | AutSpec::PartialConjugation { v, .. } => {
            let iota = std_aut(g, &AutSpec::Inversion(*v))?;
            aut_compose(g, &iota, &aut_compose(g, &f, &iota))
        }
        AutSpec::GraphSymmetry(perm) => {
            let mut inv = vec![0; perm.len()];
            for (u, &p) in perm.iter().enumerate() {
                inv[p] = u;
            }
            std_aut(g, &AutSpec::GraphSymmetry(inv))?
        }
    })
}

/// `f ∘ h`: apply `h` first, then `f`.
pub fn aut_compose(
    g: &SimplicialGraph,
    f: &RaagAutomorphism,
    h: &RaagAutomorphism,
) -> RaagAutomorphism {
    RaagAutomorphism {
        images: h.images.iter().map(|w| f.apply(g, w)).collect(),
    }
}

pub fn aut_equal(g: &SimplicialGraph, f: &RaagAutomorphism, h: &RaagAutomorphism) -> bool {
    f.images
        .iter()
        .zip(&h.images)
        .all(|(a, b)| words_equal(g, a, b))
}

pub fn auts_commute(g: &SimplicialGraph, f: &RaagAutomorphism, h: &RaagAutomorphism) -> bool {
    aut_equal(g, &aut_compose(g, f, h), &aut_compose(g, h, f))
}
