//! Truncated noncommutative polynomials over an alphabet.

use std::fmt;
use std::sync::Arc;

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use super::alphabet::{Alphabet, GenId, Word};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub(crate) fn same_alphabet(a: &Arc<Alphabet>, b: &Arc<Alphabet>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Sparse linear combination of words of length at most `truncation`.
#[derive(Clone)]
pub struct NcPolynomial {
    alphabet: Arc<Alphabet>,
    terms: FxHashMap<Word, Scalar>,
    truncation: usize,
}

impl NcPolynomial {
    pub fn zero(alphabet: &Arc<Alphabet>, truncation: usize) -> Self {
        NcPolynomial { alphabet: alphabet.clone(), terms: FxHashMap::default(), truncation }
    }

    pub fn one(alphabet: &Arc<Alphabet>, truncation: usize) -> Self {
        Self::monomial(alphabet, Word::empty(), Scalar::one(), truncation)
    }

    pub fn monomial(alphabet: &Arc<Alphabet>, w: Word, c: Scalar, truncation: usize) -> Self {
        let mut p = Self::zero(alphabet, truncation);
        p.add_term(w, &c);
        p
    }

    pub fn generator(alphabet: &Arc<Alphabet>, g: GenId, truncation: usize) -> Result<Self> {
        alphabet.get(g)?;
        Ok(Self::monomial(alphabet, Word::letter(g), Scalar::one(), truncation))
    }

    /// Degree-one combination `Σ c_g g`.
    pub fn linear(alphabet: &Arc<Alphabet>, combo: &[(GenId, Scalar)], truncation: usize) -> Result<Self> {
        let mut p = Self::zero(alphabet, truncation);
        for (g, c) in combo {
            alphabet.get(*g)?;
            p.add_term(Word::letter(*g), c);
        }
        Ok(p)
    }

    pub fn from_terms(
        alphabet: &Arc<Alphabet>,
        terms: impl IntoIterator<Item = (Word, Scalar)>,
        truncation: usize,
    ) -> Result<Self> {
        let mut p = Self::zero(alphabet, truncation);
        for (w, c) in terms {
            for &g in w.letters() {
                alphabet.get(g)?;
            }
            p.add_term(w, &c);
        }
        Ok(p)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    /// Terms in (length, lex) order.
    pub fn sorted_terms(&self) -> Vec<(&Word, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeff(&Word::empty())
    }

    /// Longest word length; undefined for zero.
    pub fn degree(&self) -> Result<usize> {
        self.terms.keys().map(|w| w.len()).max().ok_or(Error::ZeroDegree)
    }

    /// Lowest word length; undefined for zero.
    pub fn low_degree(&self) -> Result<usize> {
        self.terms.keys().map(|w| w.len()).min().ok_or(Error::ZeroDegree)
    }

    /// Adds `c·w` in place, dropping words beyond the truncation.
    pub fn add_term(&mut self, w: Word, c: &Scalar) {
        if c.is_zero() || w.len() > self.truncation {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(w) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
        }
    }

    fn check(&self, o: &NcPolynomial) -> Result<()> {
        if same_alphabet(&self.alphabet, &o.alphabet) {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }

    pub fn add(&self, o: &NcPolynomial) -> Result<NcPolynomial> {
        self.check(o)?;
        let n = self.truncation.min(o.truncation);
        let mut r = self.truncate(n);
        for (w, c) in &o.terms {
            r.add_term(w.clone(), c);
        }
        Ok(r)
    }

    pub fn sub(&self, o: &NcPolynomial) -> Result<NcPolynomial> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> NcPolynomial {
        self.scale(&Scalar::int(-1))
    }

    pub fn scale(&self, c: &Scalar) -> NcPolynomial {
        let mut r = Self::zero(&self.alphabet, self.truncation);
        if c.is_zero() {
            return r;
        }
        r.terms = self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect();
        r
    }

    /// Truncated product; the result keeps words of length ≤ min(n, self.N, o.N).
    pub fn mul(&self, o: &NcPolynomial, n: usize) -> Result<NcPolynomial> {
        self.check(o)?;
        let n = n.min(self.truncation).min(o.truncation);
        let mut by_len: Vec<Vec<(&Word, &Scalar)>> = vec![Vec::new(); n + 1];
        for (w, c) in &o.terms {
            if w.len() <= n {
                by_len[w.len()].push((w, c));
            }
        }
        let mut r = Self::zero(&self.alphabet, n);
        for (w1, c1) in &self.terms {
            if w1.len() > n {
                continue;
            }
            for bucket in &by_len[..=n - w1.len()] {
                for (w2, c2) in bucket {
                    r.add_term(w1.concat(w2), &(c1 * *c2));
                }
            }
        }
        Ok(r)
    }

    /// Commutator `pq − qp` truncated at `n`.
    pub fn commutator(&self, o: &NcPolynomial, n: usize) -> Result<NcPolynomial> {
        self.mul(o, n)?.sub(&o.mul(self, n)?)
    }

    /// Drops words longer than `m` (never raises the bound).
    pub fn truncate(&self, m: usize) -> NcPolynomial {
        let m = m.min(self.truncation);
        NcPolynomial {
            alphabet: self.alphabet.clone(),
            terms: self.terms.iter().filter(|(w, _)| w.len() <= m).map(|(w, c)| (w.clone(), c.clone())).collect(),
            truncation: m,
        }
    }

    /// Same terms with a different bound; words beyond it are dropped.
    pub fn with_truncation(&self, m: usize) -> NcPolynomial {
        NcPolynomial {
            alphabet: self.alphabet.clone(),
            terms: self.terms.iter().filter(|(w, _)| w.len() <= m).map(|(w, c)| (w.clone(), c.clone())).collect(),
            truncation: m,
        }
    }

    pub fn homogeneous(&self, k: usize) -> NcPolynomial {
        NcPolynomial {
            alphabet: self.alphabet.clone(),
            terms: self.terms.iter().filter(|(w, _)| w.len() == k).map(|(w, c)| (w.clone(), c.clone())).collect(),
            truncation: self.truncation,
        }
    }

    /// Linear map on words, applied term by term.
    pub fn map_words(&self, mut f: impl FnMut(&Word, &Scalar, &mut NcPolynomial) -> Result<()>) -> Result<NcPolynomial> {
        let mut r = Self::zero(&self.alphabet, self.truncation);
        for (w, c) in self.sorted_terms() {
            f(w, c, &mut r)?;
        }
        Ok(r)
    }

    /// Algebra morphism sending generator `g` to `images[g]`.
    pub fn substitute(&self, images: &[NcPolynomial]) -> Result<NcPolynomial> {
        let n = self.truncation;
        let one = Self::one(&self.alphabet, n);
        let mut r = Self::zero(&self.alphabet, n);
        for (w, c) in self.sorted_terms() {
            let mut acc = one.clone();
            for &g in w.letters() {
                let img = images.get(g as usize).ok_or(Error::UnknownGeneratorId(g))?;
                acc = acc.mul(img, n)?;
            }
            r = r.add(&acc.scale(c))?;
        }
        Ok(r)
    }

    /// Text rendering such as `3/2·x·y − y·x`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (w, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    out.push('−');
                }
            } else {
                out.push_str(if neg { " − " } else { " + " });
            }
            let body: Vec<String> = w
                .letters()
                .iter()
                .map(|g| self.alphabet.get(*g).map(|s| s.label.clone()).unwrap_or_else(|_| format!("#{g}")))
                .collect();
            if w.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&body.join("·"));
            } else {
                out.push_str(&format!("{mag}·{}", body.join("·")));
            }
        }
        out
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|(w, c)| TermJson { word: w.letters().to_vec(), coeff: c.clone() })
                .collect(),
            truncation: self.truncation,
        }
    }

    pub fn from_json(alphabet: &Arc<Alphabet>, j: &PolyJson) -> Result<Self> {
        let mut p = Self::zero(alphabet, j.truncation);
        for t in &j.terms {
            let w = Word::from_slice(&t.word);
            for &g in w.letters() {
                alphabet.get(g)?;
            }
            if t.coeff.is_zero() {
                return Err(Error::Schema(format!("zero coefficient stored for word {:?}", t.word)));
            }
            if w.len() > j.truncation {
                return Err(Error::Schema(format!("word {:?} exceeds truncation {}", t.word, j.truncation)));
            }
            if p.terms.contains_key(&w) {
                return Err(Error::Schema(format!("duplicate word {:?}", t.word)));
            }
            p.terms.insert(w, t.coeff.clone());
        }
        Ok(p)
    }
}

impl PartialEq for NcPolynomial {
    fn eq(&self, o: &Self) -> bool {
        self.truncation == o.truncation && same_alphabet(&self.alphabet, &o.alphabet) && self.terms == o.terms
    }
}

impl fmt::Debug for NcPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (N={})", self.render(), self.truncation)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub word: Vec<GenId>,
    pub coeff: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyJson {
    pub terms: Vec<TermJson>,
    pub truncation: usize,
}
