//! Root lattice vectors and Borcherds Cartan matrices.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Finitely supported integer combination of simple roots, keyed by index label.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootVector(BTreeMap<String, i64>);

impl RootVector {
    pub fn zero() -> Self {
        RootVector::default()
    }

    pub fn simple(index: &str) -> Self {
        RootVector::from_pairs([(index, 1)])
    }

    pub fn from_pairs<'a>(pairs: impl IntoIterator<Item = (&'a str, i64)>) -> Self {
        let mut r = RootVector::zero();
        for (k, v) in pairs {
            r.add_coord(k, v);
        }
        r
    }

    pub fn add_coord(&mut self, index: &str, v: i64) {
        let e = self.0.entry(index.to_string()).or_insert(0);
        *e += v;
        if *e == 0 {
            self.0.remove(index);
        }
    }

    pub fn coord(&self, index: &str) -> i64 {
        self.0.get(index).copied().unwrap_or(0)
    }

    pub fn coords(&self) -> &BTreeMap<String, i64> {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return RootVector::zero();
        }
        RootVector(self.0.iter().map(|(i, v)| (i.clone(), v * k)).collect())
    }

    pub fn height(&self) -> i64 {
        self.0.values().sum()
    }
}

impl Add for &RootVector {
    type Output = RootVector;
    fn add(self, o: &RootVector) -> RootVector {
        let mut r = self.clone();
        for (k, v) in &o.0 {
            r.add_coord(k, *v);
        }
        r
    }
}

impl Sub for &RootVector {
    type Output = RootVector;
    fn sub(self, o: &RootVector) -> RootVector {
        self + &(-o)
    }
}

impl Neg for &RootVector {
    type Output = RootVector;
    fn neg(self) -> RootVector {
        self.scale(-1)
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &v) in &self.0 {
            let sign = if v < 0 { "-" } else if first { "" } else { "+" };
            if !first {
                write!(f, " ")?;
            }
            let mag = v.abs();
            if mag == 1 {
                write!(f, "{sign}α[{k}]")?;
            } else {
                write!(f, "{sign}{mag}α[{k}]")?;
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Symmetric real matrix indexed by simple-root labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BorcherdsCartanMatrix {
    pub indices: Vec<String>,
    pub entries: Vec<Vec<Scalar>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BcmCondition {
    /// symmetric
    B1,
    /// nonpositive off-diagonal
    B2,
    /// 2a_ij/a_ii integral when a_ii > 0
    B3,
    /// distinct imaginary indices pair strictly negatively
    ImaginaryOrthogonality,
    Shape,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BcmViolation {
    pub condition: BcmCondition,
    pub i: String,
    pub j: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BcmReport {
    pub violations: Vec<BcmViolation>,
}

impl BcmReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl BorcherdsCartanMatrix {
    pub fn new(indices: Vec<String>, entries: Vec<Vec<Scalar>>) -> Self {
        BorcherdsCartanMatrix { indices, entries }
    }

    pub fn from_ints(indices: &[&str], rows: &[&[i64]]) -> Self {
        BorcherdsCartanMatrix {
            indices: indices.iter().map(|s| s.to_string()).collect(),
            entries: rows.iter().map(|r| r.iter().map(|&a| Scalar::int(a)).collect()).collect(),
        }
    }

    pub fn position(&self, index: &str) -> Option<usize> {
        self.indices.iter().position(|s| s == index)
    }

    pub fn entry(&self, i: &str, j: &str) -> Result<&Scalar> {
        let p = self.position(i).ok_or_else(|| Error::OutOfWindow(i.to_string()))?;
        let q = self.position(j).ok_or_else(|| Error::OutOfWindow(j.to_string()))?;
        Ok(&self.entries[p][q])
    }

    /// Indices with positive diagonal entry.
    pub fn real_indices(&self) -> Vec<String> {
        self.indices
            .iter()
            .enumerate()
            .filter(|(p, _)| self.entries[*p][*p] > Scalar::zero())
            .map(|(_, s)| s.clone())
            .collect()
    }

    pub fn validate(&self) -> BcmReport {
        let n = self.indices.len();
        let mut v = Vec::new();
        let mut push = |condition, p: usize, q: usize| {
            v.push(BcmViolation {
                condition,
                i: self.indices[p].clone(),
                j: self.indices[q].clone(),
            })
        };
        if self.entries.len() != n || self.entries.iter().any(|r| r.len() != n) {
            if n > 0 {
                push(BcmCondition::Shape, 0, 0);
            }
            return BcmReport { violations: v };
        }
        let zero = Scalar::zero();
        for p in 0..n {
            for q in 0..n {
                let a = &self.entries[p][q];
                if p < q && *a != self.entries[q][p] {
                    push(BcmCondition::B1, p, q);
                }
                if p != q && *a > zero {
                    push(BcmCondition::B2, p, q);
                }
                let d = &self.entries[p][p];
                if p != q && *d > zero && !(&(&Scalar::int(2) * a) / d).is_integer() {
                    push(BcmCondition::B3, p, q);
                }
                if p < q && *d <= zero && self.entries[q][q] <= zero && *a >= zero {
                    push(BcmCondition::ImaginaryOrthogonality, p, q);
                }
            }
        }
        BcmReport { violations: v }
    }

    /// Bilinear extension of `(α_i, α_j) = a_ij`.
    pub fn pairing(&self, a: &RootVector, b: &RootVector) -> Result<Scalar> {
        let mut acc = Scalar::zero();
        for (i, &x) in a.coords() {
            for (j, &y) in b.coords() {
                acc += &(self.entry(i, j)? * &Scalar::int(x * y));
            }
        }
        Ok(acc)
    }
}
