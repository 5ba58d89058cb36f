//! Graded generator alphabets and words.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use super::root::RootVector;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub type GenId = u32;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSymbol {
    pub id: GenId,
    pub label: String,
    pub degree: RootVector,
    /// Eigenvalue of each Cartan generator of g_J, keyed by its label.
    pub weights: BTreeMap<String, Scalar>,
}

/// Generators in declaration order; the id of a symbol is its position.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Alphabet {
    symbols: Vec<GeneratorSymbol>,
}

impl Alphabet {
    pub fn new(symbols: Vec<GeneratorSymbol>) -> Result<Self> {
        for (p, s) in symbols.iter().enumerate() {
            if s.id as usize != p {
                return Err(Error::Schema(format!(
                    "generator `{}` has id {} at position {p}",
                    s.label, s.id
                )));
            }
        }
        Ok(Alphabet { symbols })
    }

    /// Plain alphabet of ungraded letters, handy for free Lie computations.
    pub fn plain(labels: &[&str]) -> Self {
        Alphabet {
            symbols: labels
                .iter()
                .enumerate()
                .map(|(p, l)| GeneratorSymbol {
                    id: p as GenId,
                    label: l.to_string(),
                    degree: RootVector::simple(l),
                    weights: BTreeMap::new(),
                })
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[GeneratorSymbol] {
        &self.symbols
    }

    pub fn get(&self, id: GenId) -> Result<&GeneratorSymbol> {
        self.symbols.get(id as usize).ok_or(Error::UnknownGeneratorId(id))
    }

    pub fn by_label(&self, label: &str) -> Option<&GeneratorSymbol> {
        self.symbols.iter().find(|s| s.label == label)
    }

    pub fn ids(&self) -> impl Iterator<Item = GenId> {
        0..self.symbols.len() as GenId
    }

    pub fn word_degree(&self, w: &Word) -> Result<RootVector> {
        let mut d = RootVector::zero();
        for &g in w.letters() {
            d = &d + &self.get(g)?.degree;
        }
        Ok(d)
    }

    /// Total weight of a word for the Cartan generator `h` (absent entries count 0).
    pub fn word_weight(&self, w: &Word, h: &str) -> Result<Scalar> {
        let mut acc = Scalar::zero();
        for &g in w.letters() {
            if let Some(x) = self.get(g)?.weights.get(h) {
                acc += x;
            }
        }
        Ok(acc)
    }
}

/// Sequence of generator ids; ordered by length first, then lexicographically.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(SmallVec<[GenId; 8]>);

impl Word {
    pub fn empty() -> Self {
        Word(SmallVec::new())
    }

    pub fn letter(g: GenId) -> Self {
        let mut v = SmallVec::new();
        v.push(g);
        Word(v)
    }

    pub fn from_slice(s: &[GenId]) -> Self {
        Word(SmallVec::from_slice(s))
    }

    pub fn letters(&self) -> &[GenId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, o: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        Word(v)
    }

    pub fn push(&mut self, g: GenId) {
        self.0.push(g);
    }

    /// Same word with position `p` replaced by `g`.
    pub fn replaced(&self, p: usize, g: GenId) -> Word {
        let mut v = self.0.clone();
        v[p] = g;
        Word(v)
    }
}

impl Ord for Word {
    fn cmp(&self, o: &Self) -> Ordering {
        self.0.len().cmp(&o.0.len()).then_with(|| self.0.as_slice().cmp(o.0.as_slice()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}
