//! Brute-force oracles for the test suites. Each one recomputes its answer
//! from the definitions without going through the production algorithms.

#![allow(dead_code)]

pub mod checks;

use std::collections::{BTreeSet, HashSet, VecDeque};

use num_rational::BigRational;
use num_traits::{One, Zero};
use raag_core::words::Letter;
use raag_core::{Error, RaagWord, SimplicialGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult<T> {
    pub value: T,
    pub method: &'static str,
}

fn cap(what: &'static str, limit: usize, actual: usize) -> Result<(), Error> {
    if actual > limit {
        return Err(Error::CapExceeded {
            what,
            limit,
            actual,
        });
    }
    Ok(())
}

/// Seeded Erdős–Rényi graph on `n` vertices labelled `g0..`.
pub fn random_graph(seed: u64, n: usize, p: f64) -> SimplicialGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let labels: Vec<String> = (0..n).map(|i| format!("g{i}")).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((labels[i].clone(), labels[j].clone()));
            }
        }
    }
    SimplicialGraph::build(labels.clone(), edges).expect("valid random graph")
}

pub fn random_word(rng: &mut ChaCha8Rng, n: usize, len: usize) -> RaagWord {
    RaagWord(
        (0..len)
            .map(|_| Letter::new(rng.gen_range(0..n), if rng.gen_bool(0.5) { 1 } else { -1 }))
            .collect(),
    )
}

pub fn adjacency(g: &SimplicialGraph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut a = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

/// `u ≤ v` straight from link and star sets.
pub fn domination_oracle(g: &SimplicialGraph) -> Vec<Vec<bool>> {
    let a = adjacency(g);
    let n = a.len();
    (0..n)
        .map(|u| {
            (0..n)
                .map(|v| (0..n).all(|x| !a[u][x] || x == v || a[v][x]))
                .collect()
        })
        .collect()
}

/// Number of vertex permutations preserving adjacency.
pub fn automorphism_oracle(g: &SimplicialGraph) -> Result<OracleResult<u128>, Error> {
    let a = adjacency(g);
    let n = a.len();
    cap("oracle permutation vertices", 8, n)?;
    fn go(a: &[Vec<bool>], perm: &mut Vec<usize>, used: &mut [bool], count: &mut u128) {
        let k = perm.len();
        if k == a.len() {
            *count += 1;
            return;
        }
        for x in 0..a.len() {
            if used[x] {
                continue;
            }
            if (0..k).all(|i| a[i][k] == a[perm[i]][x]) {
                used[x] = true;
                perm.push(x);
                go(a, perm, used, count);
                perm.pop();
                used[x] = false;
            }
        }
    }
    let mut count = 0;
    go(&a, &mut Vec::new(), &mut vec![false; n], &mut count);
    Ok(OracleResult {
        value: count,
        method: "all_permutations",
    })
}

/// Every clique, as sorted vertex lists, grouped by dimension.
pub fn cliques_oracle(g: &SimplicialGraph) -> Vec<Vec<Vec<usize>>> {
    let a = adjacency(g);
    let n = a.len();
    assert!(
        n <= 16,
        "oracle clique enumeration is exhaustive over subsets"
    );
    let mut by_dim: Vec<Vec<Vec<usize>>> = Vec::new();
    for mask in 1u32..(1 << n) {
        let s: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if s.iter().all(|&x| s.iter().all(|&y| x == y || a[x][y])) {
            let d = s.len() - 1;
            if by_dim.len() <= d {
                by_dim.resize(d + 1, Vec::new());
            }
            by_dim[d].push(s);
        }
    }
    for layer in &mut by_dim {
        layer.sort();
    }
    by_dim
}

fn rational_rank(mut m: Vec<Vec<BigRational>>) -> usize {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = &m[i][c] / &m[r][c];
                for j in 0..cols {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        r += 1;
    }
    r
}

/// Reduced rational Betti numbers of the flag complex by dense elimination.
pub fn homology_oracle(g: &SimplicialGraph) -> Result<OracleResult<Vec<usize>>, Error> {
    cap("oracle homology vertices", 14, g.vertex_count())?;
    let cl = cliques_oracle(g);
    if cl.is_empty() {
        return Ok(OracleResult {
            value: vec![],
            method: "dense_rational_elimination",
        });
    }
    // ranks[d] = rank of ∂_d : C_d → C_{d-1}, with C_{-1} = ℚ.
    let mut ranks = Vec::new();
    for d in 0..cl.len() {
        let faces: Vec<Vec<usize>> = if d == 0 {
            vec![vec![]]
        } else {
            cl[d - 1].clone()
        };
        let m: Vec<Vec<BigRational>> = cl[d]
            .iter()
            .map(|s| {
                faces
                    .iter()
                    .map(|f| {
                        if d == 0 {
                            return BigRational::one();
                        }
                        match (0..s.len()).find(|&k| {
                            let mut t = s.clone();
                            t.remove(k);
                            &t == f
                        }) {
                            Some(k) if k % 2 == 0 => BigRational::one(),
                            Some(_) => -BigRational::one(),
                            None => BigRational::zero(),
                        }
                    })
                    .collect()
            })
            .collect();
        ranks.push(rational_rank(m));
    }
    ranks.push(0);
    let value = (0..cl.len())
        .map(|d| cl[d].len() - ranks[d] - ranks[d + 1])
        .collect();
    Ok(OracleResult {
        value,
        method: "dense_rational_elimination",
    })
}

fn commutes(a: &[Vec<bool>], x: Letter, y: Letter) -> bool {
    x.vertex == y.vertex || a[x.vertex][y.vertex]
}

/// Every word reachable from `w` by swapping adjacent commuting letters and
/// deleting adjacent inverse pairs.
fn reduction_closure(a: &[Vec<bool>], w: &[Letter]) -> HashSet<Vec<Letter>> {
    let mut seen: HashSet<Vec<Letter>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.to_vec());
    queue.push_back(w.to_vec());
    while let Some(cur) = queue.pop_front() {
        for i in 0..cur.len().saturating_sub(1) {
            let (x, y) = (cur[i], cur[i + 1]);
            let mut next = Vec::new();
            if x.vertex == y.vertex && x.exp == -y.exp {
                next.push([&cur[..i], &cur[i + 2..]].concat());
            } else if commutes(a, x, y) {
                let mut s = cur.clone();
                s.swap(i, i + 1);
                next.push(s);
            }
            for s in next {
                if seen.insert(s.clone()) {
                    queue.push_back(s);
                }
            }
        }
    }
    seen
}

/// Equality in A_Γ: the shortest words reachable from each side by relator
/// moves must overlap.
pub fn word_equality_oracle(
    g: &SimplicialGraph,
    w1: &RaagWord,
    w2: &RaagWord,
) -> Result<OracleResult<bool>, Error> {
    cap("oracle word vertices", 5, g.vertex_count())?;
    cap("oracle word length", 8, w1.len().max(w2.len()))?;
    let a = adjacency(g);
    let shortest = |w: &RaagWord| {
        let c = reduction_closure(&a, &w.0);
        let m = c.iter().map(Vec::len).min().unwrap_or(0);
        c.into_iter()
            .filter(|s| s.len() == m)
            .collect::<HashSet<_>>()
    };
    let (s1, s2) = (shortest(w1), shortest(w2));
    Ok(OracleResult {
        value: !s1.is_disjoint(&s2),
        method: "breadth_first_relator_closure",
    })
}

/// Partial conjugations recomputed from scratch: `(actor, component)` for
/// every vertex whose star complement has at least one component.
pub fn conjugations_oracle(g: &SimplicialGraph) -> Vec<(usize, BTreeSet<usize>)> {
    let a = adjacency(g);
    let n = a.len();
    let mut out = Vec::new();
    for v in 0..n {
        let rest: BTreeSet<usize> = (0..n).filter(|&x| x != v && !a[v][x]).collect();
        let mut left = rest.clone();
        let mut comps = Vec::new();
        while let Some(&s) = left.iter().next() {
            let mut comp = BTreeSet::from([s]);
            let mut stack = vec![s];
            left.remove(&s);
            while let Some(x) = stack.pop() {
                let nb: Vec<usize> = left.iter().copied().filter(|&y| a[x][y]).collect();
                for y in nb {
                    left.remove(&y);
                    comp.insert(y);
                    stack.push(y);
                }
            }
            comps.push(comp);
        }
        comps.sort_by_key(|c| *c.iter().next().unwrap());
        out.extend(comps.into_iter().map(|c| (v, c)));
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleKind {
    PSet,
    DeltaPSet,
}

fn literal_set_check(
    pcs: &[(usize, BTreeSet<usize>)],
    n: usize,
    t: &[usize],
    kind: OracleKind,
) -> bool {
    let mut count = vec![0; n];
    for &i in t {
        count[pcs[i].0] += 1;
    }
    let counts_ok = match kind {
        OracleKind::PSet => count.iter().all(|&c| c <= 1),
        OracleKind::DeltaPSet => count.iter().all(|&c| c == 0 || c == 2),
    };
    if !counts_ok || t.len() < 2 {
        return false;
    }
    // Every bipartition into two nonempty sides, first element fixed in S1.
    for mask in 0u32..(1 << (t.len() - 1)) {
        let side = |k: usize| k > 0 && mask >> (k - 1) & 1 == 1;
        if !(1..t.len()).any(side) {
            continue;
        }
        let ok = (0..t.len()).all(|x| {
            (0..t.len()).all(|y| {
                if side(x) || !side(y) {
                    return true;
                }
                let (v, k) = (&pcs[t[x]].0, &pcs[t[x]].1);
                let (w, l) = (&pcs[t[y]].0, &pcs[t[y]].1);
                match kind {
                    OracleKind::PSet => l.contains(v) && k.contains(w),
                    OracleKind::DeltaPSet => l.contains(v) || k.contains(w) || l == k,
                }
            })
        });
        if ok {
            return true;
        }
    }
    false
}

/// Whether `s` (indices into [`conjugations_oracle`]) is itself a p-set or
/// δ-p-set, checked over every bipartition.
pub fn set_oracle(g: &SimplicialGraph, s: &[usize], kind: OracleKind) -> bool {
    let pcs = conjugations_oracle(g);
    literal_set_check(&pcs, g.vertex_count(), s, kind)
}

/// Whether some superset of `s` is a p-set or δ-p-set.
pub fn pset_oracle(
    g: &SimplicialGraph,
    s: &[usize],
    kind: OracleKind,
) -> Result<OracleResult<bool>, Error> {
    let pcs = conjugations_oracle(g);
    cap("oracle conjugations", 12, pcs.len())?;
    let m = pcs.len();
    let base: u32 = s.iter().map(|&i| 1u32 << i).sum();
    let value = (0u32..(1 << m)).filter(|t| t & base == base).any(|t| {
        let t: Vec<usize> = (0..m).filter(|&i| t >> i & 1 == 1).collect();
        literal_set_check(&pcs, g.vertex_count(), &t, kind)
    });
    Ok(OracleResult {
        value,
        method: "all_supersets_all_bipartitions",
    })
}
