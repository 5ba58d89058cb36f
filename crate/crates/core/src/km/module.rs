//! Truncated integrable irreducible highest-weight modules, cut out of the
//! span of f-words by the radical of the contravariant form.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::gcm::{height, Coeffs, Gcm};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::scalar::Scalar;

/// `f_{w[0]} f_{w[1]} ⋯ f_{w[k−1]} · v_λ`, letters are simple-root positions.
pub type FWord = Vec<usize>;

pub type SparseVec = Vec<(usize, Scalar)>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleVector {
    /// Weight is `λ − Σ beta_i α_i`.
    pub beta: Coeffs,
    pub word: FWord,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrreducibleModuleTruncation {
    pub gcm: Gcm,
    pub lambda: Vec<i64>,
    pub depth: usize,
    pub vectors: Vec<ModuleVector>,
    /// `e[i][v]`: image of basis vector `v` under `e_i`.
    pub e: Vec<Vec<SparseVec>>,
    /// `f[i][v]`; `None` when `v` sits at the top depth.
    pub f: Vec<Vec<Option<SparseVec>>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegrabilityReport {
    pub checked: usize,
    pub undecided: usize,
    pub failures: Vec<String>,
}

struct Gram<'a> {
    a: &'a Gcm,
    lambda: &'a [i64],
    memo: HashMap<(FWord, FWord), Scalar>,
}

impl Gram<'_> {
    /// `e_i · w` as a combination of shorter words.
    fn raise(&self, i: usize, w: &[usize]) -> Vec<(FWord, i64)> {
        let mut out = Vec::new();
        let mut tail = 0i64;
        for p in (0..w.len()).rev() {
            if w[p] == i {
                let c = self.lambda[i] - tail;
                if c != 0 {
                    let mut u = w.to_vec();
                    u.remove(p);
                    out.push((u, c));
                }
            }
            tail += self.a.entry(i, w[p]);
        }
        out
    }

    /// `⟨f_i x, y⟩ = ⟨x, e_i y⟩`, `⟨v_λ, v_λ⟩ = 1`.
    fn form(&mut self, x: &[usize], y: &[usize]) -> Scalar {
        if x.len() != y.len() {
            return Scalar::zero();
        }
        if x.is_empty() {
            return Scalar::one();
        }
        let key = (x.to_vec(), y.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut acc = Scalar::zero();
        for (u, c) in self.raise(x[0], y) {
            acc += &(&self.form(&x[1..], &u) * &Scalar::int(c));
        }
        self.memo.insert(key, acc.clone());
        acc
    }
}

fn content(w: &[usize], rank: usize) -> Coeffs {
    let mut c = vec![0; rank];
    for &i in w {
        c[i] += 1;
    }
    c
}

struct WeightSpace {
    /// Global indices of the basis vectors.
    members: Vec<usize>,
    words: Vec<FWord>,
    inv: Matrix,
}

/// Builds `L(λ)` through depth `d`; `lambda[i] = λ(h_i)` must be nonnegative.
pub fn build_irreducible(a: &Gcm, lambda: &[i64], d: usize) -> Result<IrreducibleModuleTruncation> {
    let r = a.rank();
    if lambda.len() != r {
        return Err(Error::InconsistentModule(format!("{} weight values for rank {r}", lambda.len())));
    }
    if lambda.iter().any(|&l| l < 0) {
        return Err(Error::InconsistentModule("highest weight is not dominant".into()));
    }
    let mut gram = Gram { a, lambda, memo: HashMap::new() };
    let mut vectors = vec![ModuleVector { beta: vec![0; r], word: Vec::new() }];
    let mut spaces: BTreeMap<Coeffs, WeightSpace> = BTreeMap::new();
    spaces.insert(vec![0; r], WeightSpace { members: vec![0], words: vec![Vec::new()], inv: vec![vec![Scalar::one()]] });
    let mut layer: Vec<usize> = vec![0];
    for _ in 1..=d {
        let mut cands: BTreeMap<Coeffs, Vec<FWord>> = BTreeMap::new();
        for &v in &layer {
            for i in 0..r {
                let mut w = vec![i];
                w.extend(vectors[v].word.iter().copied());
                cands.entry(content(&w, r)).or_default().push(w);
            }
        }
        let mut next = Vec::new();
        for (beta, words) in cands {
            let g: Matrix = words.iter().map(|x| words.iter().map(|y| gram.form(x, y)).collect()).collect();
            let (_, piv) = linalg::rref(&g);
            if piv.is_empty() {
                continue;
            }
            let chosen: Vec<FWord> = piv.iter().map(|&p| words[p].clone()).collect();
            let gbb: Matrix = piv.iter().map(|&p| piv.iter().map(|&q| g[p][q].clone()).collect()).collect();
            let inv = linalg::inverse(&gbb)
                .ok_or_else(|| Error::InconsistentModule(format!("singular Gram block at {}", a.to_root(&beta))))?;
            let mut members = Vec::new();
            for w in &chosen {
                members.push(vectors.len());
                next.push(vectors.len());
                vectors.push(ModuleVector { beta: beta.clone(), word: w.clone() });
            }
            spaces.insert(beta, WeightSpace { members, words: chosen, inv });
        }
        layer = next;
    }
    // coordinates of an arbitrary word in the chosen basis of its weight space
    let coords = |w: &[usize], gram: &mut Gram| -> SparseVec {
        let beta = content(w, r);
        let Some(sp) = spaces.get(&beta) else { return Vec::new() };
        let pairings: Vec<Scalar> = sp.words.iter().map(|b| gram.form(b, w)).collect();
        linalg::mat_vec(&sp.inv, &pairings)
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (sp.members[k], c))
            .collect()
    };
    let mut e = vec![Vec::with_capacity(vectors.len()); r];
    let mut f = vec![Vec::with_capacity(vectors.len()); r];
    for v in &vectors {
        for i in 0..r {
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (u, c) in gram.raise(i, &v.word) {
                for (k, x) in coords(&u, &mut gram) {
                    *acc.entry(k).or_default() += &(&x * &Scalar::int(c));
                }
            }
            e[i].push(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect());
            if v.word.len() == d {
                f[i].push(None);
            } else {
                let mut w = vec![i];
                w.extend(v.word.iter().copied());
                f[i].push(Some(coords(&w, &mut gram)));
            }
        }
    }
    Ok(IrreducibleModuleTruncation { gcm: a.clone(), lambda: lambda.to_vec(), depth: d, vectors, e, f })
}

fn apply(m: &[Option<SparseVec>], x: &BTreeMap<usize, Scalar>) -> Option<BTreeMap<usize, Scalar>> {
    let mut out: BTreeMap<usize, Scalar> = BTreeMap::new();
    for (v, c) in x {
        for (u, d) in m[*v].as_ref()? {
            *out.entry(*u).or_default() += &(c * d);
        }
    }
    out.retain(|_, c| !c.is_zero());
    Some(out)
}

impl IrreducibleModuleTruncation {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// `μ(h_i)` for the weight of vector `v`.
    pub fn weight(&self, v: usize, i: usize) -> i64 {
        self.lambda[i] - self.gcm.pair_simple(&self.vectors[v].beta, i)
    }

    pub fn weight_dims(&self) -> BTreeMap<Coeffs, usize> {
        let mut m = BTreeMap::new();
        for v in &self.vectors {
            *m.entry(v.beta.clone()).or_insert(0) += 1;
        }
        m
    }

    pub fn depth_dims(&self) -> Vec<usize> {
        let mut out = vec![0; self.depth + 1];
        for v in &self.vectors {
            out[height(&v.beta) as usize] += 1;
        }
        out
    }

    /// `e_i^{p+1} x = 0` forces `f_i^{μ(h_i)+p+1} x = 0`; checked wherever the
    /// f-ladder stays inside the window.
    pub fn check_integrability(&self) -> IntegrabilityReport {
        let mut rep = IntegrabilityReport::default();
        let e: Vec<Vec<Option<SparseVec>>> =
            self.e.iter().map(|row| row.iter().map(|v| Some(v.clone())).collect()).collect();
        for v in 0..self.len() {
            for i in 0..self.gcm.rank() {
                let start = BTreeMap::from([(v, Scalar::one())]);
                let mut p = 0i64;
                let mut x = start.clone();
                loop {
                    x = apply(&e[i], &x).expect("e never leaves the window");
                    if x.is_empty() {
                        break;
                    }
                    p += 1;
                }
                let mu = self.weight(v, i);
                if mu + p < 0 {
                    rep.failures.push(format!("vector {v}: weight {mu} below its e_{i} string"));
                    continue;
                }
                let mut y = start;
                let mut decided = true;
                for _ in 0..(mu + p + 1) {
                    match apply(&self.f[i], &y) {
                        Some(z) => y = z,
                        None => {
                            decided = false;
                            break;
                        }
                    }
                    if y.is_empty() {
                        break;
                    }
                }
                if !decided {
                    rep.undecided += 1;
                } else if !y.is_empty() {
                    rep.failures.push(format!("f_{i} ladder from vector {v} does not terminate"));
                } else {
                    rep.checked += 1;
                }
            }
        }
        rep
    }

    /// `[e_i, f_j] = δ_ij h_i` on every vector where both sides stay in the window.
    pub fn check_relations(&self) -> Result<()> {
        for v in 0..self.len() {
            let x = BTreeMap::from([(v, Scalar::one())]);
            for i in 0..self.gcm.rank() {
                for j in 0..self.gcm.rank() {
                    let ei: Vec<Option<SparseVec>> = self.e[i].iter().map(|s| Some(s.clone())).collect();
                    let (Some(fx), Some(ex)) = (apply(&self.f[j], &x), apply(&ei, &x)) else { continue };
                    let Some(fex) = apply(&self.f[j], &ex) else { continue };
                    let efx = apply(&ei, &fx).expect("e stays in the window");
                    let mut diff = efx;
                    for (k, c) in fex {
                        *diff.entry(k).or_default() -= &c;
                    }
                    if i == j {
                        *diff.entry(v).or_default() -= &Scalar::int(self.weight(v, i));
                    }
                    diff.retain(|_, c| !c.is_zero());
                    if !diff.is_empty() {
                        return Err(Error::InconsistentModule(format!("[e_{i}, f_{j}] fails on vector {v}")));
                    }
                }
            }
        }
        Ok(())
    }
}
