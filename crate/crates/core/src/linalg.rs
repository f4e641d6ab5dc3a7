//! Exact integer linear algebra on sparse matrices: rank over ℚ by
//! fraction-free elimination and the Smith normal form over ℤ.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A row as `(column, value)` pairs sorted by column, with no zero values.
pub type SparseRow = Vec<(usize, BigInt)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    pub nrows: usize,
    pub ncols: usize,
    pub rows: Vec<SparseRow>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self {
            nrows,
            ncols,
            rows: vec![Vec::new(); nrows],
        }
    }

    pub fn from_dense(dense: &[Vec<i64>]) -> Self {
        let ncols = dense.first().map_or(0, Vec::len);
        let rows = dense
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, &x)| x != 0)
                    .map(|(j, &x)| (j, BigInt::from(x)))
                    .collect()
            })
            .collect();
        Self {
            nrows: dense.len(),
            ncols,
            rows,
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        self.rows
            .iter()
            .map(|r| {
                let mut d = vec![BigInt::zero(); self.ncols];
                for (j, x) in r {
                    d[*j] = x.clone();
                }
                d
            })
            .collect()
    }

    /// Sets an entry; entries must be pushed in increasing column order per row.
    pub fn push(&mut self, i: usize, j: usize, x: BigInt) {
        if !x.is_zero() {
            debug_assert!(self.rows[i].last().is_none_or(|(c, _)| *c < j));
            self.rows[i].push((j, x));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.ncols, self.nrows);
        for (i, r) in self.rows.iter().enumerate() {
            for (j, x) in r {
                t.rows[*j].push((i, x.clone()));
            }
        }
        t
    }

    /// `self · other`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.ncols, other.nrows);
        let mut out = Self::zeros(self.nrows, other.ncols);
        for (i, r) in self.rows.iter().enumerate() {
            let mut acc: HashMap<usize, BigInt> = HashMap::new();
            for (k, a) in r {
                for (j, b) in &other.rows[*k] {
                    *acc.entry(*j).or_default() += a * b;
                }
            }
            let mut row: SparseRow = acc.into_iter().filter(|(_, x)| !x.is_zero()).collect();
            row.sort_by_key(|(j, _)| *j);
            out.rows[i] = row;
        }
        out
    }
}

/// `ca·a + cb·b`.
fn combine(a: &SparseRow, ca: &BigInt, b: &SparseRow, cb: &BigInt) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        let (col, val) = if take_a {
            i += 1;
            (a[i - 1].0, ca * &a[i - 1].1)
        } else if take_b {
            j += 1;
            (b[j - 1].0, cb * &b[j - 1].1)
        } else {
            i += 1;
            j += 1;
            (a[i - 1].0, ca * &a[i - 1].1 + cb * &b[j - 1].1)
        };
        if !val.is_zero() {
            out.push((col, val));
        }
    }
    out
}

fn remove_content(row: &mut SparseRow) {
    let mut g = BigInt::zero();
    for (_, x) in row.iter() {
        g = g.gcd(x);
        if g.is_one() {
            return;
        }
    }
    if !g.is_zero() && !g.is_one() {
        for (_, x) in row.iter_mut() {
            *x /= &g;
        }
    }
}

/// Rank over ℚ. Rows are reduced against pivots keyed by their leading
/// column; each reduction is fraction-free and followed by content removal.
pub fn rank(m: &SparseMatrix) -> usize {
    let mut pivots: HashMap<usize, SparseRow> = HashMap::new();
    // Short rows first keeps fill-in down.
    let mut order: Vec<&SparseRow> = m.rows.iter().filter(|r| !r.is_empty()).collect();
    order.sort_by_key(|r| r.len());
    for row in order {
        let mut r = row.clone();
        remove_content(&mut r);
        while let Some((lead, lv)) = r.first().cloned() {
            let Some(p) = pivots.get(&lead) else {
                break;
            };
            let pv = &p[0].1;
            let g = pv.gcd(&lv);
            r = combine(&r, &(pv / &g), p, &-(&lv / &g));
            remove_content(&mut r);
        }
        if let Some((lead, _)) = r.first() {
            pivots.insert(*lead, r);
        }
    }
    pivots.len()
}

/// Smith normal form summary: rank and the nonzero invariant factors
/// `d_1 | d_2 | …` (all positive).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Snf {
    pub rank: usize,
    pub factors: Vec<BigInt>,
}

impl Snf {
    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.factors
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect()
    }
}

pub fn smith_normal_form(m: &SparseMatrix) -> Snf {
    // Phase 1: eliminate unit pivots sparsely. A unit pivot contributes an
    // invariant factor 1 and its row and column can be dropped once the
    // column is cleared elsewhere.
    let mut rows: Vec<SparseRow> = m.rows.clone();
    let mut alive: BTreeSet<usize> = (0..rows.len()).filter(|&i| !rows[i].is_empty()).collect();
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m.ncols];
    for &i in &alive {
        for (j, _) in &rows[i] {
            col_rows[*j].insert(i);
        }
    }
    let mut units = 0usize;
    loop {
        let found = alive.iter().find_map(|&i| {
            rows[i]
                .iter()
                .filter(|(_, x)| x.abs().is_one())
                .min_by_key(|(j, _)| col_rows[*j].len())
                .map(|(j, x)| (i, *j, x.clone()))
        });
        let Some((i, j, u)) = found else {
            break;
        };
        let pivot_row = rows[i].clone();
        let others: Vec<usize> = col_rows[j].iter().copied().filter(|&k| k != i).collect();
        for k in others {
            let a = rows[k]
                .iter()
                .find(|(c, _)| *c == j)
                .map(|(_, x)| x.clone())
                .expect("column index is consistent");
            let new = combine(&rows[k], &BigInt::one(), &pivot_row, &-(a * &u));
            for (c, _) in &rows[k] {
                col_rows[*c].remove(&k);
            }
            for (c, _) in &new {
                col_rows[*c].insert(k);
            }
            rows[k] = new;
            if rows[k].is_empty() {
                alive.remove(&k);
            }
        }
        for (c, _) in &pivot_row {
            col_rows[*c].remove(&i);
        }
        alive.remove(&i);
        rows[i].clear();
        units += 1;
    }

    // Phase 2: dense SNF on whatever is left.
    let cols: Vec<usize> = (0..m.ncols).filter(|&j| !col_rows[j].is_empty()).collect();
    let col_pos: HashMap<usize, usize> = cols.iter().enumerate().map(|(p, &j)| (j, p)).collect();
    let mut dense: Vec<Vec<BigInt>> = alive
        .iter()
        .map(|&i| {
            let mut d = vec![BigInt::zero(); cols.len()];
            for (j, x) in &rows[i] {
                d[col_pos[j]] = x.clone();
            }
            d
        })
        .collect();
    let mut factors = vec![BigInt::one(); units];
    factors.extend(dense_snf(&mut dense));
    factors.sort();
    Snf {
        rank: factors.len(),
        factors,
    }
}

/// In-place Smith normal form of a dense matrix; returns the nonzero
/// diagonal entries (absolute values).
pub fn dense_snf(a: &mut [Vec<BigInt>]) -> Vec<BigInt> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    for t in 0..m.min(n) {
        // Smallest nonzero entry in the trailing block becomes the pivot.
        let Some((pi, pj)) = smallest_entry(a, t) else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&a[t][t]);
                    let pivot_row = a[t].clone();
                    for (x, p) in a[i].iter_mut().zip(&pivot_row).skip(t) {
                        *x -= &q * p;
                    }
                    dirty |= !a[i][t].is_zero();
                }
            }
            for j in t + 1..n {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&a[t][t]);
                    for row in a.iter_mut().skip(t) {
                        let p = row[t].clone();
                        row[j] -= &q * p;
                    }
                    dirty |= !a[t][j].is_zero();
                }
            }
            if dirty {
                // A smaller remainder appeared in the pivot row or column.
                let (bi, bj) = (t..m)
                    .map(|i| (i, t))
                    .chain((t..n).map(|j| (t, j)))
                    .filter(|&(i, j)| !a[i][j].is_zero())
                    .min_by_key(|&(i, j)| a[i][j].abs())
                    .expect("pivot is nonzero");
                a.swap(t, bi);
                for row in a.iter_mut() {
                    row.swap(t, bj);
                }
                continue;
            }
            // Enforce divisibility of the trailing block by the pivot.
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !(&a[i][j] % &a[t][t]).is_zero()));
            match bad {
                Some(i) => {
                    let src = a[i].clone();
                    for (x, s) in a[t].iter_mut().zip(&src) {
                        *x += s;
                    }
                }
                None => break,
            }
        }
        out.push(a[t][t].abs());
    }
    out
}

fn smallest_entry(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn snf(d: &[Vec<i64>]) -> (usize, Vec<i64>) {
        let s = smith_normal_form(&SparseMatrix::from_dense(d));
        let f = s
            .factors
            .iter()
            .map(|x| i64::try_from(x.clone()).unwrap())
            .collect();
        (s.rank, f)
    }

    #[test]
    fn snf_examples() {
        assert_eq!(
            snf(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]),
            (3, vec![1, 1, 1])
        );
        assert_eq!(snf(&[vec![2, 4], vec![6, 8]]), (2, vec![2, 4]));
        assert_eq!(snf(&[vec![0, 0], vec![0, 0]]), (0, vec![]));
        assert_eq!(snf(&[vec![2, 0], vec![0, 3]]), (2, vec![1, 6]));
        assert_eq!(snf(&[vec![4, 0], vec![0, 6]]), (2, vec![2, 12]));
    }

    #[test]
    fn rank_examples() {
        let m = SparseMatrix::from_dense(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(rank(&m), 2);
        let m = SparseMatrix::from_dense(&[vec![2, 4], vec![6, 8]]);
        assert_eq!(rank(&m), 2);
        assert_eq!(rank(&SparseMatrix::zeros(3, 3)), 0);
        assert_eq!(rank(&SparseMatrix::zeros(0, 0)), 0);
    }

    #[test]
    fn transpose_and_product() {
        let m = SparseMatrix::from_dense(&[vec![1, -1, 0], vec![0, 1, -1]]);
        let p = m.mul(&m.transpose());
        assert_eq!(
            p.to_dense(),
            vec![
                vec![BigInt::from(2), BigInt::from(-1)],
                vec![BigInt::from(-1), BigInt::from(2)]
            ]
        );
    }
}
