//! Flag complexes, their reduced homology, and the ℓ²-Betti numbers of A_Γ
//! read off from it.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::SimplicialGraph;
use crate::linalg::{self, SparseMatrix};
use crate::Limits;

/// The clique complex: `simplices[d]` lists the `(d+1)`-cliques as sorted
/// vertex tuples in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagComplex {
    pub simplices: Vec<Vec<Vec<usize>>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomologyMode {
    Rational,
    Integral,
}

/// Reduced Betti numbers `β̄_0..β̄_top`, plus torsion coefficients per degree
/// in integral mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiVector {
    pub ranks: Vec<usize>,
    pub torsion: Option<Vec<Vec<BigInt>>>,
}

impl BettiVector {
    /// Whether reduced homology vanishes in every degree `≤ d` (over ℤ when
    /// torsion is known).
    pub fn acyclic_through(&self, d: usize) -> bool {
        (0..=d.min(self.ranks.len().saturating_sub(1)))
            .all(|i| self.ranks[i] == 0 && self.torsion.as_ref().is_none_or(|t| t[i].is_empty()))
    }
}

impl FlagComplex {
    pub fn new(g: &SimplicialGraph, limits: &Limits) -> Result<Self> {
        let mut simplices: Vec<Vec<Vec<usize>>> = Vec::new();
        let mut total = 0usize;
        let mut stack: Vec<usize> = Vec::new();
        for v in 0..g.vertex_count() {
            let cand: Vec<usize> = g.link(v).iter().filter(|&w| w > v).collect();
            stack.push(v);
            extend(g, &mut stack, &cand, &mut simplices, &mut total, limits)?;
            stack.pop();
        }
        Ok(Self { simplices })
    }

    /// Dimension of the top simplex; `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.simplices.len().checked_sub(1)
    }

    pub fn counts(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    pub fn total(&self) -> usize {
        self.counts().iter().sum()
    }

    /// The map C_d → C_{d−1} as a matrix with one row per d-simplex and one
    /// column per (d−1)-simplex. `d = 0` gives the augmentation C_0 → ℤ.
    pub fn boundary(&self, d: usize) -> SparseMatrix {
        let rows = self.simplices.get(d).map_or(0, Vec::len);
        if d == 0 {
            let mut m = SparseMatrix::zeros(rows, 1);
            for i in 0..rows {
                m.push(i, 0, BigInt::from(1));
            }
            return m;
        }
        let faces = &self.simplices[d - 1];
        let index: HashMap<&[usize], usize> = faces
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_slice(), i))
            .collect();
        let mut m = SparseMatrix::zeros(rows, faces.len());
        for (i, s) in self.simplices[d].iter().enumerate() {
            let mut row: Vec<(usize, BigInt)> = (0..s.len())
                .map(|k| {
                    let face: Vec<usize> = s
                        .iter()
                        .enumerate()
                        .filter(|&(p, _)| p != k)
                        .map(|(_, &x)| x)
                        .collect();
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    (index[face.as_slice()], BigInt::from(sign))
                })
                .collect();
            row.sort_by_key(|(j, _)| *j);
            m.rows[i] = row;
        }
        m
    }

    pub fn reduced_homology(&self, mode: HomologyMode) -> BettiVector {
        let top = self.simplices.len();
        let ranks_of: Vec<usize>;
        let mut torsion = None;
        match mode {
            HomologyMode::Rational => {
                ranks_of = (0..top).map(|d| linalg::rank(&self.boundary(d))).collect();
            }
            HomologyMode::Integral => {
                let snfs: Vec<_> = (0..top)
                    .map(|d| linalg::smith_normal_form(&self.boundary(d)))
                    .collect();
                ranks_of = snfs.iter().map(|s| s.rank).collect();
                torsion = Some(
                    (0..top)
                        .map(|d| snfs.get(d + 1).map_or_else(Vec::new, |s| s.torsion()))
                        .collect(),
                );
            }
        }
        let ranks = (0..top)
            .map(|d| {
                let next = ranks_of.get(d + 1).copied().unwrap_or(0);
                self.simplices[d].len() - ranks_of[d] - next
            })
            .collect();
        BettiVector { ranks, torsion }
    }

    /// `Σ (−1)^d |simplices_d|`.
    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .enumerate()
            .map(|(d, s)| {
                if d % 2 == 0 {
                    s.len() as i64
                } else {
                    -(s.len() as i64)
                }
            })
            .sum()
    }
}

fn extend(
    g: &SimplicialGraph,
    stack: &mut Vec<usize>,
    cand: &[usize],
    out: &mut Vec<Vec<Vec<usize>>>,
    total: &mut usize,
    limits: &Limits,
) -> Result<()> {
    *total += 1;
    if *total > limits.simplices {
        return Err(Error::CapExceeded {
            what: "flag complex simplices",
            limit: limits.simplices,
            actual: *total,
        });
    }
    let d = stack.len() - 1;
    if out.len() <= d {
        out.push(Vec::new());
    }
    out[d].push(stack.clone());
    for (i, &w) in cand.iter().enumerate() {
        let next: Vec<usize> = cand[i + 1..]
            .iter()
            .copied()
            .filter(|&x| g.adjacent(w, x))
            .collect();
        stack.push(w);
        extend(g, stack, &next, out, total, limits)?;
        stack.pop();
    }
    Ok(())
}

pub fn flag_complex(g: &SimplicialGraph, limits: &Limits) -> Result<FlagComplex> {
    FlagComplex::new(g, limits)
}

pub fn reduced_homology(
    g: &SimplicialGraph,
    mode: HomologyMode,
    limits: &Limits,
) -> Result<BettiVector> {
    Ok(FlagComplex::new(g, limits)?.reduced_homology(mode))
}

/// `β^{(2)}_0 = 0` and `β^{(2)}_{i+1} = β̄_i` of the flag complex.
pub fn l2_betti_raag(g: &SimplicialGraph, limits: &Limits) -> Result<Vec<BigRational>> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let b = reduced_homology(g, HomologyMode::Rational, limits)?;
    let mut out = vec![BigRational::zero()];
    out.extend(b.ranks.iter().map(|&r| BigRational::from_integer(r.into())));
    Ok(out)
}

/// ℓ²-Betti numbers of a direct product from those of the factors.
pub fn kunneth(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Finiteness properties of the Bestvina–Brady kernel of A_Γ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BbReport {
    /// False when Γ is empty or disconnected.
    pub applicable: bool,
    /// Largest `n` with the kernel of type FP_n; `None` when it is FP_n for
    /// every `n` or when not applicable.
    pub fp_level: Option<usize>,
    pub fp: bool,
}

pub fn bb_finiteness(g: &SimplicialGraph, limits: &Limits) -> Result<BbReport> {
    if g.is_empty() || !g.is_connected() {
        return Ok(BbReport {
            applicable: false,
            fp_level: None,
            fp: false,
        });
    }
    let b = reduced_homology(g, HomologyMode::Integral, limits)?;
    let torsion = b.torsion.as_ref().expect("integral mode");
    let first = (0..b.ranks.len()).find(|&i| b.ranks[i] != 0 || !torsion[i].is_empty());
    Ok(BbReport {
        applicable: true,
        fp_level: first,
        fp: first.is_none(),
    })
}
