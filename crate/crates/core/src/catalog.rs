//! Named graphs and parametric families.

use crate::error::{Error, Result};
use crate::graph::{CombineMode, SimplicialGraph};

/// A named catalog graph together with the parameters used to build it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub params: Vec<(String, usize)>,
    pub description: &'static str,
    pub graph: SimplicialGraph,
}

impl CatalogEntry {
    /// `name` with its parameters, e.g. `sphere_gamma_n2`; used for file names.
    pub fn slug(&self) -> String {
        let mut s = self.name.clone();
        for (k, v) in &self.params {
            s.push_str(&format!("_{k}{v}"));
        }
        s
    }
}

const FIXED: &[&str] = &[
    "example_5_1",
    "wiedmer_9",
    "example_5_3a",
    "example_5_3b",
    "example_5_3c",
    "example_5_3d",
];

const FAMILIES: &[(&str, &[&str])] = &[
    ("k", &["n"]),
    ("c", &["n"]),
    ("path", &["n"]),
    ("star", &["n"]),
    ("points", &["n"]),
    ("disjoint_cliques", &["n", "m"]),
    ("sphere_gamma", &["n"]),
];

pub fn names() -> Vec<&'static str> {
    FIXED
        .iter()
        .copied()
        .chain(FAMILIES.iter().map(|(n, _)| *n))
        .collect()
}

/// Parameter names a family expects; empty for fixed graphs.
pub fn param_names(name: &str) -> Result<&'static [&'static str]> {
    if FIXED.contains(&name) {
        return Ok(&[]);
    }
    FAMILIES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, p)| *p)
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}

pub fn get(name: &str, params: &[(&str, usize)]) -> Result<SimplicialGraph> {
    let expected = param_names(name)?;
    for (k, _) in params {
        if !expected.contains(k) {
            return Err(Error::BadParams(format!(
                "`{name}` takes no parameter `{k}`"
            )));
        }
    }
    let param = |k: &str| {
        params
            .iter()
            .find(|(p, _)| *p == k)
            .map(|(_, v)| *v)
            .ok_or_else(|| Error::BadParams(format!("`{name}` needs parameter `{k}`")))
    };
    let at_least = |k: &str, min: usize| {
        let v = param(k)?;
        if v < min {
            return Err(Error::BadParams(format!(
                "`{name}` needs {k} >= {min}, got {v}"
            )));
        }
        Ok(v)
    };
    Ok(match name {
        "example_5_1" => numbered(
            "v",
            6,
            &[
                (3, 4),
                (1, 3),
                (1, 4),
                (1, 2),
                (2, 6),
                (5, 6),
                (4, 5),
                (3, 5),
            ],
        ),
        "wiedmer_9" => numbered(
            "u",
            9,
            &[
                (1, 2),
                (1, 4),
                (1, 5),
                (1, 6),
                (2, 4),
                (2, 6),
                (2, 7),
                (2, 8),
                (3, 4),
                (3, 6),
                (3, 7),
                (3, 8),
                (3, 9),
                (4, 7),
                (5, 6),
                (5, 7),
                (5, 9),
                (8, 9),
            ],
        ),
        "example_5_3a" => numbered(
            "w",
            8,
            &[
                (1, 2),
                (1, 8),
                (2, 3),
                (2, 6),
                (3, 4),
                (3, 7),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 8),
            ],
        ),
        "example_5_3b" => numbered("x", 9, EXAMPLE_5_3B),
        "example_5_3c" => {
            let mut edges = EXAMPLE_5_3B.to_vec();
            edges.extend([(1, 6), (1, 7)]);
            numbered("x", 9, &edges)
        }
        "example_5_3d" => numbered(
            "y",
            7,
            &[
                (1, 2),
                (1, 3),
                (2, 3),
                (1, 4),
                (1, 5),
                (1, 6),
                (4, 5),
                (2, 7),
                (3, 7),
            ],
        ),
        "k" => complete(at_least("n", 1)?),
        "c" => cycle(at_least("n", 3)?),
        "path" => path(at_least("n", 1)?),
        "star" => star(at_least("n", 1)?),
        "points" => points(at_least("n", 1)?),
        "disjoint_cliques" => disjoint_cliques(&[at_least("n", 1)?, at_least("m", 1)?]),
        "sphere_gamma" => sphere_gamma(param("n")?)?,
        _ => unreachable!("names are checked above"),
    })
}

const EXAMPLE_5_3B: &[(usize, usize)] = &[
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 8),
    (2, 3),
    (2, 4),
    (2, 5),
    (3, 4),
    (3, 5),
    (4, 5),
    (5, 9),
    (6, 7),
    (6, 8),
    (6, 9),
    (7, 8),
    (7, 9),
];

/// Vertices `{prefix}1..{prefix}n` with 1-based edges.
fn numbered(prefix: &str, n: usize, edges: &[(usize, usize)]) -> SimplicialGraph {
    let labels = (1..=n).map(|i| format!("{prefix}{i}")).collect();
    let edges: Vec<_> = edges.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
    SimplicialGraph::from_index_edges(labels, &edges)
}

pub fn complete(n: usize) -> SimplicialGraph {
    let edges: Vec<_> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    numbered("k", n, &edges)
}

pub fn cycle(n: usize) -> SimplicialGraph {
    assert!(n >= 3);
    let edges: Vec<_> = (1..=n).map(|i| (i, i % n + 1)).collect();
    numbered("c", n, &edges)
}

pub fn path(n: usize) -> SimplicialGraph {
    let edges: Vec<_> = (2..=n).map(|i| (i - 1, i)).collect();
    numbered("p", n, &edges)
}

/// Hub `c` joined to leaves `x1..xn`.
pub fn star(n: usize) -> SimplicialGraph {
    let labels = std::iter::once("c".to_string())
        .chain((1..=n).map(|i| format!("x{i}")))
        .collect();
    let edges: Vec<_> = (1..=n).map(|i| (0, i)).collect();
    SimplicialGraph::from_index_edges(labels, &edges)
}

/// `n` isolated vertices, the defining graph of the free group of rank `n`.
pub fn points(n: usize) -> SimplicialGraph {
    numbered("a", n, &[])
}

/// Disjoint union of complete graphs of the given sizes; the vertices of the
/// `i`-th clique are `q{i}_1, q{i}_2, …`.
pub fn disjoint_cliques(sizes: &[usize]) -> SimplicialGraph {
    let mut labels = Vec::new();
    let mut edges = Vec::new();
    for (c, &k) in sizes.iter().enumerate() {
        let base = labels.len();
        labels.extend((1..=k).map(|j| format!("q{}_{j}", c + 1)));
        edges.extend((0..k).flat_map(|a| (a + 1..k).map(move |b| (base + a, base + b))));
    }
    SimplicialGraph::from_index_edges(labels, &edges)
}

/// The 1-skeleton of the barycentric subdivision of the boundary of the
/// `(n+1)`-dimensional cross-polytope, whose flag complex is an `n`-sphere.
///
/// Vertices are the faces of the cross-polytope, written as sign vectors over
/// `n + 1` coordinates (`+`, `-`, or `0` for "not in the face"), e.g. `s+0-`.
/// Two faces are adjacent when one properly contains the other.
pub fn sphere_gamma(n: usize) -> Result<SimplicialGraph> {
    if !(1..=3).contains(&n) {
        return Err(Error::BadParams(format!(
            "sphere_gamma needs 1 <= n <= 3, got {n}"
        )));
    }
    let m = n + 1;
    let mut faces: Vec<Vec<i8>> = (0..3usize.pow(m as u32))
        .map(|mut code| {
            (0..m)
                .map(|_| {
                    let digit = code % 3;
                    code /= 3;
                    [0, 1, -1][digit]
                })
                .collect::<Vec<i8>>()
        })
        .filter(|f| f.iter().any(|&x| x != 0))
        .collect();
    let label = |f: &[i8]| -> String {
        std::iter::once('s')
            .chain(f.iter().map(|&x| match x {
                1 => '+',
                -1 => '-',
                _ => '0',
            }))
            .collect()
    };
    faces.sort_by_key(|f| (f.iter().filter(|&&x| x != 0).count(), label(f)));
    let contains = |big: &[i8], small: &[i8]| {
        big != small && small.iter().zip(big).all(|(&s, &b)| s == 0 || s == b)
    };
    let mut edges = Vec::new();
    for i in 0..faces.len() {
        for j in i + 1..faces.len() {
            if contains(&faces[i], &faces[j]) || contains(&faces[j], &faces[i]) {
                edges.push((i, j));
            }
        }
    }
    Ok(SimplicialGraph::from_index_edges(
        faces.iter().map(|f| label(f)).collect(),
        &edges,
    ))
}

/// Every fixed graph plus a spread of small family members; the full catalog
/// run iterates over these.
pub fn entries() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    let mut add = |name: &str, params: &[(&str, usize)], description: &'static str| {
        out.push(CatalogEntry {
            name: name.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            description,
            graph: get(name, params).expect("catalog entries are valid"),
        });
    };
    add(
        "example_5_1",
        &[],
        "six vertices, one two-element domination class",
    );
    add(
        "wiedmer_9",
        &[],
        "nine vertices, transvection-free, no graph symmetries",
    );
    add("example_5_3a", &[], "eight-cycle with chords");
    add(
        "example_5_3b",
        &[],
        "nine vertices, no non-inner partial conjugations",
    );
    add("example_5_3c", &[], "example_5_3b with two extra edges");
    add("example_5_3d", &[], "seven vertices with a leaf");
    for n in 1..=4 {
        add("k", &[("n", n)], "complete graph");
    }
    for n in [4, 5, 6] {
        add("c", &[("n", n)], "cycle");
    }
    for n in [3, 4] {
        add("path", &[("n", n)], "path");
    }
    for n in [2, 3] {
        add("star", &[("n", n)], "star");
    }
    for n in [2, 3] {
        add("points", &[("n", n)], "edgeless graph");
    }
    for (n, m) in [(1, 1), (1, 2), (2, 2), (2, 3)] {
        add(
            "disjoint_cliques",
            &[("n", n), ("m", m)],
            "two disjoint cliques",
        );
    }
    for n in [1, 2] {
        add("sphere_gamma", &[("n", n)], "flag sphere with finite Out");
    }
    out
}

/// Joins of `k` copies of the edgeless graph on two vertices (the defining
/// graph of `F_2^k`).
pub fn free_power(k: usize) -> SimplicialGraph {
    let two = points(2);
    let mut g = two.clone();
    for _ in 1..k {
        g = g.combine(&two, CombineMode::Join);
    }
    g
}
