//! Truncated Lie series in Lyndon-bracket coordinates.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::lyndon::{bracket_expansion, LyndonWord};
use crate::algebra::poly::same_alphabet;
use crate::algebra::{Alphabet, GenId, NcPolynomial, RootVector, Word};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// `Σ c_w b(w)` over Lyndon words `w` of length 1..=N.
#[derive(Clone)]
pub struct LieSeries {
    alphabet: Arc<Alphabet>,
    coords: BTreeMap<Word, Scalar>,
    truncation: usize,
}

impl LieSeries {
    pub fn zero(alphabet: &Arc<Alphabet>, truncation: usize) -> Self {
        LieSeries { alphabet: alphabet.clone(), coords: BTreeMap::new(), truncation }
    }

    pub fn generator(alphabet: &Arc<Alphabet>, g: GenId, c: Scalar, truncation: usize) -> Result<Self> {
        Self::from_coords(alphabet, [(Word::letter(g), c)], truncation)
    }

    pub fn from_coords(
        alphabet: &Arc<Alphabet>,
        coords: impl IntoIterator<Item = (Word, Scalar)>,
        truncation: usize,
    ) -> Result<Self> {
        let mut s = Self::zero(alphabet, truncation);
        for (w, c) in coords {
            LyndonWord::new(w.clone()).ok_or_else(|| Error::Schema(format!("{:?} is not a Lyndon word", w)))?;
            for &g in w.letters() {
                alphabet.get(g)?;
            }
            s.add_coord(w, &c);
        }
        Ok(s)
    }

    fn add_coord(&mut self, w: Word, c: &Scalar) {
        if c.is_zero() || w.len() > self.truncation {
            return;
        }
        let e = self.coords.entry(w.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.coords.remove(&w);
        }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// Coordinates in (length, lex) order.
    pub fn coords(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.coords.iter()
    }

    pub fn coord(&self, w: &Word) -> Scalar {
        self.coords.get(w).cloned().unwrap_or_default()
    }

    pub fn component(&self, n: usize) -> LieSeries {
        LieSeries {
            alphabet: self.alphabet.clone(),
            coords: self.coords.iter().filter(|(w, _)| w.len() == n).map(|(w, c)| (w.clone(), c.clone())).collect(),
            truncation: self.truncation,
        }
    }

    pub fn truncate(&self, m: usize) -> LieSeries {
        let m = m.min(self.truncation);
        LieSeries {
            alphabet: self.alphabet.clone(),
            coords: self.coords.iter().filter(|(w, _)| w.len() <= m).map(|(w, c)| (w.clone(), c.clone())).collect(),
            truncation: m,
        }
    }

    fn check(&self, o: &LieSeries) -> Result<()> {
        if same_alphabet(&self.alphabet, &o.alphabet) {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }

    pub fn add(&self, o: &LieSeries) -> Result<LieSeries> {
        self.check(o)?;
        let mut r = self.truncate(o.truncation);
        for (w, c) in &o.coords {
            r.add_coord(w.clone(), c);
        }
        Ok(r)
    }

    pub fn sub(&self, o: &LieSeries) -> Result<LieSeries> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> LieSeries {
        self.scale(&Scalar::int(-1))
    }

    pub fn scale(&self, c: &Scalar) -> LieSeries {
        let mut r = Self::zero(&self.alphabet, self.truncation);
        if !c.is_zero() {
            r.coords = self.coords.iter().map(|(w, x)| (w.clone(), x * c)).collect();
        }
        r
    }

    /// Expansion in the free associative algebra.
    pub fn to_polynomial(&self) -> NcPolynomial {
        let mut p = NcPolynomial::zero(&self.alphabet, self.truncation);
        for (w, c) in &self.coords {
            let lw = LyndonWord::new(w.clone()).expect("stored coordinates are Lyndon");
            for (u, k) in bracket_expansion(&lw).iter() {
                p.add_term(u.clone(), &(c * &Scalar::int(*k)));
            }
        }
        p
    }

    /// Inverse of `to_polynomial`: peels off the smallest word of each degree,
    /// which must be Lyndon whenever the input is a Lie element.
    pub fn from_lie_polynomial(p: &NcPolynomial) -> Result<LieSeries> {
        if !p.constant_term().is_zero() {
            return Err(Error::NotLie { degree: 0 });
        }
        let mut by_deg: BTreeMap<usize, BTreeMap<Word, Scalar>> = BTreeMap::new();
        for (w, c) in p.terms() {
            by_deg.entry(w.len()).or_default().insert(w.clone(), c.clone());
        }
        let mut out = Self::zero(p.alphabet(), p.truncation());
        for (n, mut rest) in by_deg {
            while let Some((w, c)) = rest.pop_first() {
                let lw = LyndonWord::new(w.clone()).ok_or(Error::NotLie { degree: n })?;
                for (u, k) in bracket_expansion(&lw).iter().skip(1) {
                    let e = rest.entry(u.clone()).or_default();
                    *e -= &(&c * &Scalar::int(*k));
                    if e.is_zero() {
                        rest.remove(u);
                    }
                }
                out.coords.insert(w, c);
            }
        }
        Ok(out)
    }

    /// Lie bracket, truncated at the smaller bound.
    pub fn bracket(&self, o: &LieSeries) -> Result<LieSeries> {
        self.check(o)?;
        let n = self.truncation.min(o.truncation);
        let p = self.to_polynomial().commutator(&o.to_polynomial(), n)?;
        Self::from_lie_polynomial(&p)
    }

    /// Root-lattice degrees of the words carrying nonzero coordinates.
    pub fn support_roots(&self) -> Result<BTreeSet<RootVector>> {
        self.coords.keys().map(|w| self.alphabet.word_degree(w)).collect()
    }

    pub fn to_json(&self) -> LieJson {
        let mut degrees: BTreeMap<usize, Vec<LieTermJson>> = BTreeMap::new();
        for (w, c) in &self.coords {
            degrees
                .entry(w.len())
                .or_default()
                .push(LieTermJson { lyndon: w.letters().to_vec(), coeff: c.clone() });
        }
        LieJson { degrees, truncation: self.truncation }
    }

    pub fn from_json(alphabet: &Arc<Alphabet>, j: &LieJson) -> Result<Self> {
        let mut s = Self::zero(alphabet, j.truncation);
        for (n, terms) in &j.degrees {
            for t in terms {
                let w = Word::from_slice(&t.lyndon);
                if w.len() != *n || *n == 0 || *n > j.truncation {
                    return Err(Error::Schema(format!("word {:?} filed under degree {n}", t.lyndon)));
                }
                if t.coeff.is_zero() || s.coords.contains_key(&w) {
                    return Err(Error::Schema(format!("zero or duplicate coordinate for {:?}", t.lyndon)));
                }
                LyndonWord::new(w.clone()).ok_or_else(|| Error::Schema(format!("{:?} is not Lyndon", t.lyndon)))?;
                for &g in w.letters() {
                    alphabet.get(g)?;
                }
                s.coords.insert(w, t.coeff.clone());
            }
        }
        Ok(s)
    }
}

impl PartialEq for LieSeries {
    fn eq(&self, o: &Self) -> bool {
        self.truncation == o.truncation && same_alphabet(&self.alphabet, &o.alphabet) && self.coords == o.coords
    }
}

impl fmt::Debug for LieSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|(w, c)| format!("{c}·b{:?}", w)).collect();
        write!(f, "LieSeries[{}] (N={})", parts.join(" + "), self.truncation)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LieTermJson {
    pub lyndon: Vec<GenId>,
    pub coeff: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieJson {
    pub degrees: BTreeMap<usize, Vec<LieTermJson>>,
    pub truncation: usize,
}
