//! Exact linear algebra over the rationals.

use std::collections::BTreeMap;

use crate::scalar::Scalar;

pub type Matrix = Vec<Vec<Scalar>>;

/// Row-reduces a copy; returns the reduced matrix and pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].recip().expect("pivot nonzero");
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for k in 0..cols {
                    let d = &f * &a[r][k];
                    a[i][k] -= &d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).1.len()
}

pub fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return None;
    }
    let aug: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }));
            row
        })
        .collect();
    let (red, piv) = rref(&aug);
    if piv.len() < n || piv[n - 1] >= n {
        return None;
    }
    Some(red.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_vec(m: &Matrix, v: &[Scalar]) -> Vec<Scalar> {
    m.iter().map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

/// Incremental echelon basis of sparse vectors keyed by `K`.
#[derive(Clone, Debug)]
pub struct SparseEchelon<K: Ord + Clone> {
    /// pivot key → normalized row with coefficient 1 at the pivot
    rows: BTreeMap<K, BTreeMap<K, Scalar>>,
}

impl<K: Ord + Clone> Default for SparseEchelon<K> {
    fn default() -> Self {
        SparseEchelon { rows: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> SparseEchelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis.
    pub fn reduce(&self, v: &BTreeMap<K, Scalar>) -> BTreeMap<K, Scalar> {
        let mut v: BTreeMap<K, Scalar> = v.iter().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k.clone(), c.clone())).collect();
        loop {
            let hit = v.iter().find(|(k, _)| self.rows.contains_key(*k)).map(|(k, c)| (k.clone(), c.clone()));
            let Some((k, c)) = hit else { return v };
            for (j, d) in &self.rows[&k] {
                let e = v.entry(j.clone()).or_default();
                *e -= &(&c * d);
                if e.is_zero() {
                    v.remove(j);
                }
            }
        }
    }

    /// Adds `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: &BTreeMap<K, Scalar>) -> bool {
        let r = self.reduce(v);
        let Some((k, c)) = r.iter().next().map(|(k, c)| (k.clone(), c.clone())) else { return false };
        let inv = c.recip().expect("nonzero");
        let row: BTreeMap<K, Scalar> = r.into_iter().map(|(j, d)| (j, &d * &inv)).collect();
        // keep rows fully reduced against the new pivot
        for other in self.rows.values_mut() {
            if let Some(f) = other.get(&k).cloned() {
                for (j, d) in &row {
                    let e = other.entry(j.clone()).or_default();
                    *e -= &(&f * d);
                }
                other.retain(|_, x| !x.is_zero());
            }
        }
        self.rows.insert(k, row);
        true
    }

    pub fn contains(&self, v: &BTreeMap<K, Scalar>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Reduced basis rows; their span is the span of everything inserted.
    pub fn rows(&self) -> impl Iterator<Item = &BTreeMap<K, Scalar>> {
        self.rows.values()
    }
}

/// Coefficients `x` with `v = Σ x_k cols[k]`, if any; `cols` need not be independent.
pub fn solve_sparse<K: Ord + Clone>(cols: &[BTreeMap<K, Scalar>], v: &BTreeMap<K, Scalar>) -> Option<Vec<Scalar>> {
    let mut keys: Vec<K> = cols.iter().flat_map(|c| c.keys().cloned()).chain(v.keys().cloned()).collect();
    keys.sort();
    keys.dedup();
    let n = cols.len();
    let m: Matrix = keys
        .iter()
        .map(|k| {
            let mut row: Vec<Scalar> = cols.iter().map(|c| c.get(k).cloned().unwrap_or_default()).collect();
            row.push(v.get(k).cloned().unwrap_or_default());
            row
        })
        .collect();
    let (red, piv) = rref(&m);
    if piv.last() == Some(&n) {
        return None;
    }
    let mut x = vec![Scalar::zero(); n];
    for (r, &c) in piv.iter().enumerate() {
        x[c] = red[r][n].clone();
    }
    Some(x)
}
