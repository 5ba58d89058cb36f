//! Symmetric generalized Cartan matrices.

use serde::{Deserialize, Serialize};

use crate::algebra::{BorcherdsCartanMatrix, RootVector};
use crate::error::{Error, Result};

/// Coefficients of a root in the simple roots, in label order.
pub type Coeffs = Vec<i64>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gcm {
    labels: Vec<String>,
    a: Vec<Vec<i64>>,
}

impl Gcm {
    pub fn new(labels: Vec<String>, a: Vec<Vec<i64>>) -> Result<Self> {
        let n = labels.len();
        if a.len() != n || a.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidGcm(format!("matrix is not {n}×{n}")));
        }
        for i in 0..n {
            if a[i][i] != 2 {
                return Err(Error::InvalidGcm(format!("a[{0}][{0}] = {1}", labels[i], a[i][i])));
            }
            for j in 0..n {
                if i != j && a[i][j] > 0 {
                    return Err(Error::InvalidGcm(format!("a[{}][{}] = {} > 0", labels[i], labels[j], a[i][j])));
                }
                if a[i][j] != a[j][i] {
                    return Err(Error::InvalidGcm(format!("not symmetric at ({}, {})", labels[i], labels[j])));
                }
            }
        }
        for (p, l) in labels.iter().enumerate() {
            if labels[..p].contains(l) {
                return Err(Error::InvalidGcm(format!("label `{l}` repeated")));
            }
        }
        Ok(Gcm { labels, a })
    }

    pub fn from_rows(labels: &[&str], rows: &[&[i64]]) -> Result<Self> {
        Gcm::new(labels.iter().map(|s| s.to_string()).collect(), rows.iter().map(|r| r.to_vec()).collect())
    }

    /// Matrix of a simply-laced Dynkin diagram given by its edges.
    pub fn from_edges(labels: &[&str], edges: &[(&str, &str)]) -> Result<Self> {
        let n = labels.len();
        let mut a = vec![vec![0; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (x, y) in edges {
            let p = labels.iter().position(|l| l == x).ok_or_else(|| Error::InvalidGcm(format!("unknown node `{x}`")))?;
            let q = labels.iter().position(|l| l == y).ok_or_else(|| Error::InvalidGcm(format!("unknown node `{y}`")))?;
            a[p][q] = -1;
            a[q][p] = -1;
        }
        Gcm::new(labels.iter().map(|s| s.to_string()).collect(), a)
    }

    pub fn sl2(label: &str) -> Self {
        Gcm { labels: vec![label.to_string()], a: vec![vec![2]] }
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.a[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.a
    }

    pub fn position(&self, label: &str) -> Result<usize> {
        self.labels.iter().position(|l| l == label).ok_or_else(|| Error::OutOfWindow(label.to_string()))
    }

    pub fn pair(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut s = 0;
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                s += a * b * self.a[i][j];
            }
        }
        s
    }

    /// `(β, α_i)`, which is also `⟨β, α_i^∨⟩` since `a_ii = 2`.
    pub fn pair_simple(&self, x: &[i64], i: usize) -> i64 {
        x.iter().enumerate().map(|(j, &c)| c * self.a[j][i]).sum()
    }

    pub fn reflect(&self, i: usize, x: &[i64]) -> Coeffs {
        let c = self.pair_simple(x, i);
        let mut y = x.to_vec();
        y[i] -= c;
        y
    }

    pub fn simple(&self, i: usize) -> Coeffs {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        v
    }

    pub fn to_root(&self, x: &[i64]) -> RootVector {
        RootVector::from_pairs(self.labels.iter().map(|s| s.as_str()).zip(x.iter().copied()))
    }

    pub fn from_root(&self, r: &RootVector) -> Result<Coeffs> {
        let mut v = vec![0; self.rank()];
        for (k, &c) in r.coords() {
            v[self.position(k)?] = c;
        }
        Ok(v)
    }

    pub fn to_bcm(&self) -> BorcherdsCartanMatrix {
        let labels: Vec<&str> = self.labels.iter().map(|s| s.as_str()).collect();
        let rows: Vec<&[i64]> = self.a.iter().map(|r| r.as_slice()).collect();
        BorcherdsCartanMatrix::from_ints(&labels, &rows)
    }
}

pub fn height(x: &[i64]) -> i64 {
    x.iter().sum()
}

/// All nonzero nonnegative coefficient vectors of height at most `h`, by height.
pub fn positive_lattice(rank: usize, h: usize) -> Vec<Coeffs> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; rank];
    fn rec(i: usize, left: usize, cur: &mut Vec<i64>, out: &mut Vec<Coeffs>) {
        if i == cur.len() {
            if cur.iter().any(|&c| c != 0) {
                out.push(cur.clone());
            }
            return;
        }
        for c in 0..=left {
            cur[i] = c as i64;
            rec(i + 1, left - c, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, h, &mut cur, &mut out);
    out.sort_by(|x, y| height(x).cmp(&height(y)).then_with(|| y.cmp(x)));
    out
}
