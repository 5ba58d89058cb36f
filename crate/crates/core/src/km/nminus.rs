//! n⁻ of a Kac–Moody algebra as the free Lie algebra on the f_i modulo the
//! ideal generated by the Serre elements, graded by root.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::gcm::{height, positive_lattice, Coeffs, Gcm};
use super::roots::{peterson_mult, RootDatum};
use crate::algebra::{GenId, RootVector, Word};
use crate::error::{Error, Result};
use crate::lie::{bracket_expansion, lyndon_words_over, LyndonWord};
use crate::linalg::{solve_sparse, SparseEchelon};
use crate::scalar::Scalar;

pub type WordVec = BTreeMap<Word, Scalar>;

/// `[f_i, v]` in the free associative algebra on the letters `f_i` (letter `i` = `f_i`).
pub fn ad_f(i: usize, v: &WordVec) -> WordVec {
    let mut out = WordVec::new();
    let l = Word::letter(i as GenId);
    for (w, c) in v {
        for (u, s) in [(l.concat(w), c.clone()), (w.concat(&l), -c)] {
            let e = out.entry(u.clone()).or_default();
            *e += &s;
            if e.is_zero() {
                out.remove(&u);
            }
        }
    }
    out
}

pub fn bracket_vec(w: &Word) -> WordVec {
    let lw = LyndonWord::new(w.clone()).expect("Lyndon basis word");
    bracket_expansion(&lw).iter().map(|(u, c)| (u.clone(), Scalar::int(*c))).collect()
}

/// `(ad f_i)^k f_j`.
pub fn ad_power(i: usize, k: usize, j: usize) -> WordVec {
    let mut v: WordVec = BTreeMap::from([(Word::letter(j as GenId), Scalar::one())]);
    for _ in 0..k {
        v = ad_f(i, &v);
    }
    v
}

fn content(w: &Word, rank: usize) -> Coeffs {
    let mut c = vec![0; rank];
    for &g in w.letters() {
        c[g as usize] += 1;
    }
    c
}

#[derive(Clone, Debug)]
struct Space {
    ideal: SparseEchelon<Word>,
    /// Lyndon words whose brackets form a basis of the quotient.
    basis: Vec<Word>,
}

/// Truncated presentation of n⁻ up to a height bound.
#[derive(Clone, Debug)]
pub struct NminusPresentation {
    gcm: Gcm,
    bound: usize,
    spaces: BTreeMap<Coeffs, Space>,
    /// `(i, β)` → matrix with one row per basis vector of `β`, giving
    /// `[f_i, b]` in the basis at `β + α_i`.
    ad: BTreeMap<(usize, Coeffs), Vec<Vec<Scalar>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NminusSummary {
    pub bound: usize,
    pub spaces: Vec<SpaceSummary>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceSummary {
    /// The root space is `−root`.
    pub root: RootVector,
    pub dim: usize,
    pub basis: Vec<Vec<String>>,
}

/// Quotient dimensions only, without the Peterson comparison.
pub fn serre_quotient_raw(a: &Gcm, h: usize) -> Result<NminusPresentation> {
    let r = a.rank();
    let letters: Vec<GenId> = (0..r as GenId).collect();
    let mut lyndon: BTreeMap<Coeffs, Vec<Word>> = BTreeMap::new();
    for n in 1..=h {
        for w in lyndon_words_over(&letters, n) {
            lyndon.entry(content(&w, r)).or_default().push(w);
        }
    }
    let mut serre: BTreeMap<Coeffs, Vec<WordVec>> = BTreeMap::new();
    for i in 0..r {
        for j in 0..r {
            if i == j {
                continue;
            }
            let k = (1 - a.entry(i, j)) as usize;
            if k + 1 > h {
                continue;
            }
            let mut beta = a.simple(j);
            beta[i] += k as i64;
            serre.entry(beta).or_default().push(ad_power(i, k, j));
        }
    }
    let mut spaces: BTreeMap<Coeffs, Space> = BTreeMap::new();
    for beta in positive_lattice(r, h) {
        let mut ideal = SparseEchelon::new();
        for s in serre.get(&beta).into_iter().flatten() {
            ideal.insert(s);
        }
        for i in 0..r {
            if beta[i] == 0 {
                continue;
            }
            let mut lower = beta.clone();
            lower[i] -= 1;
            if let Some(sp) = spaces.get(&lower) {
                let rows: Vec<WordVec> = sp.ideal.rows().cloned().collect();
                for row in rows {
                    ideal.insert(&ad_f(i, &row));
                }
            }
        }
        let mut all = ideal.clone();
        let mut basis = Vec::new();
        for w in lyndon.get(&beta).into_iter().flatten() {
            if all.insert(&bracket_vec(w)) {
                basis.push(w.clone());
            }
        }
        spaces.insert(beta, Space { ideal, basis });
    }
    let mut ad = BTreeMap::new();
    for (beta, sp) in &spaces {
        for i in 0..r {
            let mut up = beta.clone();
            up[i] += 1;
            let Some(target) = spaces.get(&up) else { continue };
            let cols: Vec<WordVec> = target
                .basis
                .iter()
                .map(|w| target.ideal.reduce(&bracket_vec(w)))
                .collect();
            let mut m = Vec::new();
            for b in &sp.basis {
                let v = target.ideal.reduce(&ad_f(i, &bracket_vec(b)));
                let x = solve_sparse(&cols, &v).ok_or_else(|| {
                    Error::InconsistentModule(format!("[f_{}, {:?}] not in the quotient basis", a.labels()[i], b))
                })?;
                m.push(x);
            }
            ad.insert((i, beta.clone()), m);
        }
    }
    Ok(NminusPresentation { gcm: a.clone(), bound: h, spaces, ad })
}

/// Serre quotient, checked root by root against the Peterson multiplicities.
pub fn serre_quotient_nminus(a: &Gcm, h: usize) -> Result<NminusPresentation> {
    let p = serre_quotient_raw(a, h)?;
    let datum = peterson_mult(a, h)?;
    p.check_against(&datum)?;
    Ok(p)
}

impl NminusPresentation {
    pub fn gcm(&self) -> &Gcm {
        &self.gcm
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Dimension of the root space `−β`, for `β` given in positive coordinates.
    pub fn dim(&self, beta: &[i64]) -> usize {
        self.spaces.get(beta).map_or(0, |s| s.basis.len())
    }

    pub fn dims(&self) -> BTreeMap<Coeffs, usize> {
        self.spaces.iter().filter(|(_, s)| !s.basis.is_empty()).map(|(b, s)| (b.clone(), s.basis.len())).collect()
    }

    pub fn basis(&self, beta: &[i64]) -> &[Word] {
        self.spaces.get(beta).map_or(&[], |s| s.basis.as_slice())
    }

    /// Matrix of `ad f_i` from `−β` to `−β − α_i`, rows indexed by the source basis.
    pub fn ad_matrix(&self, i: usize, beta: &[i64]) -> Option<&Vec<Vec<Scalar>>> {
        self.ad.get(&(i, beta.to_vec()))
    }

    /// Whether a homogeneous Lie element of the free algebra vanishes in n⁻.
    pub fn is_zero(&self, v: &WordVec) -> Result<bool> {
        let Some((w, _)) = v.iter().next() else { return Ok(true) };
        let beta = content(w, self.gcm.rank());
        if height(&beta) as usize > self.bound {
            return Err(Error::WindowTooSmall(format!("height {} beyond bound {}", height(&beta), self.bound)));
        }
        Ok(self.spaces[&beta].ideal.contains(v))
    }

    pub fn check_against(&self, datum: &RootDatum) -> Result<()> {
        for (beta, sp) in &self.spaces {
            let root = self.gcm.to_root(beta);
            let m = datum.mult(&root);
            if sp.basis.len() as u64 != m {
                return Err(Error::DimensionMismatch {
                    root: root.to_string(),
                    serre: sp.basis.len().to_string(),
                    peterson: m.to_string(),
                });
            }
        }
        Ok(())
    }

    pub fn summary(&self) -> NminusSummary {
        let labels = self.gcm.labels();
        NminusSummary {
            bound: self.bound,
            spaces: self
                .spaces
                .iter()
                .filter(|(_, s)| !s.basis.is_empty())
                .map(|(b, s)| SpaceSummary {
                    root: self.gcm.to_root(b),
                    dim: s.basis.len(),
                    basis: s
                        .basis
                        .iter()
                        .map(|w| w.letters().iter().map(|&g| format!("f_{{{}}}", labels[g as usize])).collect())
                        .collect(),
                })
                .collect(),
        }
    }
}
