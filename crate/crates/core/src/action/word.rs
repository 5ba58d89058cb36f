//! Words in elementary automorphisms representing elements of G_J.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::derive::{exp_derivation, torus_apply};
use super::table::{GeneratorActionTable, RowKind};
use crate::algebra::{Alphabet, GenId, NcPolynomial};
use crate::error::{Error, Result};
use crate::lie::LieSeries;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum KmLetter {
    Exp { gen: String, u: Scalar },
    Torus { h: String, s: Scalar },
}

impl KmLetter {
    pub fn exp(gen: &str, u: Scalar) -> Self {
        KmLetter::Exp { gen: gen.to_string(), u }
    }

    pub fn torus(h: &str, s: Scalar) -> Self {
        KmLetter::Torus { h: h.to_string(), s }
    }

    pub fn inverse(&self) -> Result<KmLetter> {
        Ok(match self {
            KmLetter::Exp { gen, u } => KmLetter::Exp { gen: gen.clone(), u: -u },
            KmLetter::Torus { h, s } => KmLetter::Torus { h: h.clone(), s: s.recip().ok_or(Error::ZeroTorusParameter)? },
        })
    }

    pub fn apply(&self, table: &GeneratorActionTable, p: &NcPolynomial) -> Result<NcPolynomial> {
        match self {
            KmLetter::Exp { gen, u } => exp_derivation(table, gen, u, p),
            KmLetter::Torus { h, s } => {
                let row = table.row(h)?;
                if row.kind != RowKind::H {
                    return Err(Error::UnknownGenerator(h.clone()));
                }
                torus_apply(h, s, p)
            }
        }
    }
}

/// Finite product of letters; acts on the left, rightmost letter first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct KmWord {
    pub letters: Vec<KmLetter>,
}

/// Outcome of comparing two words generator by generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowComparison {
    pub equal: bool,
    pub checked: usize,
    /// Generators whose images leave the window for one of the words.
    pub undecided: usize,
    pub witness: Option<String>,
}

impl KmWord {
    pub fn identity() -> Self {
        KmWord::default()
    }

    pub fn new(letters: Vec<KmLetter>) -> Self {
        KmWord { letters }
    }

    pub fn letter(l: KmLetter) -> Self {
        KmWord { letters: vec![l] }
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, o: &KmWord) -> KmWord {
        let mut v = self.letters.clone();
        v.extend(o.letters.iter().cloned());
        KmWord { letters: v }
    }

    pub fn inverse(&self) -> Result<KmWord> {
        Ok(KmWord { letters: self.letters.iter().rev().map(|l| l.inverse()).collect::<Result<_>>()? })
    }

    /// Merges adjacent letters of one generator and drops trivial ones.
    pub fn reduce(&self) -> KmWord {
        let mut out: Vec<KmLetter> = Vec::new();
        for l in &self.letters {
            let merged = match (out.last(), l) {
                (Some(KmLetter::Exp { gen: a, u }), KmLetter::Exp { gen: b, u: v }) if a == b => {
                    Some(KmLetter::Exp { gen: a.clone(), u: u + v })
                }
                (Some(KmLetter::Torus { h: a, s }), KmLetter::Torus { h: b, s: t }) if a == b => {
                    Some(KmLetter::Torus { h: a.clone(), s: s * t })
                }
                _ => None,
            };
            match merged {
                Some(m) => {
                    out.pop();
                    if !is_trivial(&m) {
                        out.push(m);
                    }
                }
                None => {
                    if !is_trivial(l) {
                        out.push(l.clone());
                    }
                }
            }
        }
        KmWord { letters: out }
    }

    pub fn apply(&self, table: &GeneratorActionTable, p: &NcPolynomial) -> Result<NcPolynomial> {
        let mut q = p.clone();
        for l in self.letters.iter().rev() {
            q = l.apply(table, &q)?;
        }
        Ok(q)
    }

    /// Image of a single generator.
    pub fn apply_generator(&self, table: &GeneratorActionTable, alphabet: &Arc<Alphabet>, g: GenId) -> Result<NcPolynomial> {
        self.apply(table, &NcPolynomial::generator(alphabet, g, 1)?)
    }

    /// Compares actions on every generator of the window.
    pub fn compare(&self, o: &KmWord, table: &GeneratorActionTable, alphabet: &Arc<Alphabet>) -> Result<WindowComparison> {
        let (a, b) = (self.reduce(), o.reduce());
        if a == b {
            return Ok(WindowComparison { equal: true, checked: alphabet.len(), undecided: 0, witness: None });
        }
        let mut cmp = WindowComparison { equal: true, checked: 0, undecided: 0, witness: None };
        for g in alphabet.ids() {
            match (a.apply_generator(table, alphabet, g), b.apply_generator(table, alphabet, g)) {
                (Ok(x), Ok(y)) => {
                    cmp.checked += 1;
                    if x != y && cmp.witness.is_none() {
                        cmp.equal = false;
                        cmp.witness = Some(format!("{}: {} vs {}", alphabet.get(g)?.label, x.render(), y.render()));
                    }
                }
                (Err(Error::WindowExceeded { .. }), _) | (_, Err(Error::WindowExceeded { .. })) => cmp.undecided += 1,
                (Err(e), _) | (_, Err(e)) => return Err(e),
            }
        }
        Ok(cmp)
    }
}

fn is_trivial(l: &KmLetter) -> bool {
    match l {
        KmLetter::Exp { u, .. } => u.is_zero(),
        KmLetter::Torus { s, .. } => s.is_one(),
    }
}

/// `Ad(g) L`; the image of a Lie series under an automorphism is again Lie.
pub fn ad_group(table: &GeneratorActionTable, g: &KmWord, l: &LieSeries) -> Result<LieSeries> {
    if g.is_empty() || l.is_zero() {
        return Ok(l.clone());
    }
    let p = g.apply(table, &l.to_polynomial())?;
    LieSeries::from_lie_polynomial(&p).map_err(|e| match e {
        Error::NotLie { degree } => {
            Error::InvalidActionTable(format!("automorphism produced a non-Lie component in degree {degree}"))
        }
        e => e,
    })
}
