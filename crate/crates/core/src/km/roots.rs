//! Real roots by reflection and multiplicities by the Peterson recursion.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use super::gcm::{height, positive_lattice, Coeffs, Gcm};
use crate::algebra::RootVector;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Positive real roots up to a height bound, each with the reflection that reached it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealRoots {
    pub bound: usize,
    /// root → `(i, parent)` with `root = r_i(parent)`; simple roots have no parent.
    pub parents: BTreeMap<Coeffs, Option<(usize, Coeffs)>>,
}

impl RealRoots {
    pub fn contains(&self, x: &[i64]) -> bool {
        self.parents.contains_key(x)
    }

    /// Whether `x` is a real root, positive or negative.
    pub fn is_real(&self, x: &[i64]) -> bool {
        let neg: Coeffs = x.iter().map(|c| -c).collect();
        self.contains(x) || self.contains(&neg)
    }

    pub fn roots(&self) -> impl Iterator<Item = &Coeffs> {
        self.parents.keys()
    }

    pub fn len(&self) -> usize {
        self.parents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parents.is_empty()
    }
}

/// Positive real roots of height at most `h`: every non-simple one is `r_i` of a lower one.
pub fn real_roots(a: &Gcm, h: usize) -> RealRoots {
    let mut parents = BTreeMap::new();
    let mut queue = VecDeque::new();
    for i in 0..a.rank() {
        parents.insert(a.simple(i), None);
        queue.push_back(a.simple(i));
    }
    while let Some(x) = queue.pop_front() {
        for i in 0..a.rank() {
            let y = a.reflect(i, &x);
            if height(&y) > height(&x) && height(&y) <= h as i64 && !parents.contains_key(&y) {
                parents.insert(y.clone(), Some((i, x.clone())));
                queue.push_back(y);
            }
        }
    }
    RealRoots { bound: h, parents }
}

pub fn real_roots_vec(a: &Gcm, h: usize) -> Vec<RootVector> {
    real_roots(a, h).roots().map(|x| a.to_root(x)).collect()
}

/// Multiplicities of all positive roots up to a height bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootDatum {
    pub bound: usize,
    pub roots: Vec<RootEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootEntry {
    pub root: RootVector,
    pub real: bool,
    pub mult: u64,
}

impl RootDatum {
    pub fn mult(&self, r: &RootVector) -> u64 {
        self.roots.iter().find(|e| &e.root == r).map_or(0, |e| e.mult)
    }
}

/// Solves `(β, β − 2ρ) c_β = Σ_{β′+β″=β} (β′, β″) c_β′ c_β″` with
/// `c_β = Σ_{n | β} mult(β/n)/n`.
pub fn peterson_mult(a: &Gcm, h: usize) -> Result<RootDatum> {
    let lattice = positive_lattice(a.rank(), h);
    let mut c: BTreeMap<Coeffs, Scalar> = BTreeMap::new();
    let mut mult: BTreeMap<Coeffs, Scalar> = BTreeMap::new();
    for beta in &lattice {
        let ht = height(beta);
        let lhs = Scalar::int(a.pair(beta, beta) - 2 * ht);
        let mut rhs = Scalar::zero();
        for (b1, c1) in &c {
            if height(b1) >= ht {
                continue;
            }
            let b2: Coeffs = beta.iter().zip(b1).map(|(x, y)| x - y).collect();
            if b2.iter().any(|&v| v < 0) {
                continue;
            }
            if let Some(c2) = c.get(&b2) {
                rhs += &(&(c1 * c2) * &Scalar::int(a.pair(b1, &b2)));
            }
        }
        // contribution of proper divisors: Σ_{n>1, n | β} mult(β/n)/n
        let g = beta.iter().fold(0i64, |g, &x| num_integer::gcd(g, x));
        let mut divisors = Scalar::zero();
        for n in 2..=g {
            if g % n == 0 {
                let sub: Coeffs = beta.iter().map(|x| x / n).collect();
                if let Some(ms) = mult.get(&sub) {
                    divisors += &(ms * &Scalar::ratio(1, n));
                }
            }
        }
        let (cb, m) = if ht == 1 {
            (Scalar::one(), Scalar::one())
        } else if lhs.is_zero() {
            // (β, β) = 2 ht(β) > 2 rules out real and imaginary roots alike
            if !rhs.is_zero() {
                return Err(Error::PetersonDegenerate(a.to_root(beta).to_string()));
            }
            (divisors, Scalar::zero())
        } else {
            let cb = &rhs / &lhs;
            let m = &cb - &divisors;
            (cb, m)
        };
        if !m.is_integer() || m.is_negative() {
            return Err(Error::PetersonDegenerate(format!("{} has multiplicity {m}", a.to_root(beta))));
        }
        if !cb.is_zero() {
            c.insert(beta.clone(), cb);
        }
        if !m.is_zero() {
            mult.insert(beta.clone(), m);
        }
    }
    let real = real_roots(a, h);
    let mut roots: Vec<RootEntry> = mult
        .iter()
        .map(|(b, m)| RootEntry {
            root: a.to_root(b),
            real: real.contains(b),
            mult: m.to_i64().expect("small multiplicity") as u64,
        })
        .collect();
    roots.sort_by(|x, y| x.root.height().cmp(&y.root.height()).then_with(|| x.root.cmp(&y.root)));
    for r in roots.iter().filter(|r| r.real) {
        if r.mult != 1 {
            return Err(Error::PetersonDegenerate(format!("real root {} has multiplicity {}", r.root, r.mult)));
        }
    }
    Ok(RootDatum { bound: h, roots })
}
