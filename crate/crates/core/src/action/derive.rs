//! Derivations, their exponentials and torus elements acting on A(S′).

use serde::{Deserialize, Serialize};

use super::table::{check_alphabet, GeneratorActionTable, RowKind};
use crate::algebra::NcPolynomial;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Leibniz extension of the row `x` to words.
pub fn derive(table: &GeneratorActionTable, x: &str, p: &NcPolynomial) -> Result<NcPolynomial> {
    check_alphabet(table, p)?;
    let row = table.row(x)?;
    let alphabet = p.alphabet().clone();
    p.map_words(|w, c, out| {
        for (i, &g) in w.letters().iter().enumerate() {
            let img = row.image(g).ok_or_else(|| Error::WindowExceeded {
                row: x.to_string(),
                generator: alphabet.get(g).map(|s| s.label.clone()).unwrap_or_default(),
            })?;
            for (t, d) in img {
                out.add_term(w.replaced(i, *t), &(c * d));
            }
        }
        Ok(())
    })
}

/// `Σ_k (u x)^k ∘ p / k!` for an `e` or `f` row.
pub fn exp_derivation(table: &GeneratorActionTable, x: &str, u: &Scalar, p: &NcPolynomial) -> Result<NcPolynomial> {
    check_alphabet(table, p)?;
    let row = table.row(x)?;
    if row.kind == RowKind::H {
        return Err(Error::InvalidActionTable(format!("`{x}` is Cartan; use the torus form")));
    }
    if u.is_zero() || p.is_zero() {
        return Ok(p.clone());
    }
    // Per-word ladder bound: Σ (ladder(s) − 1) over the letters.
    let mut bound = 0usize;
    for (w, _) in p.terms() {
        let mut b = 0usize;
        for &g in w.letters() {
            if let Some(l) = row.ladders[g as usize] {
                b += l.saturating_sub(1);
            } else {
                b = usize::MAX;
                break;
            }
        }
        bound = bound.max(b);
    }
    let mut out = p.clone();
    let mut term = p.clone();
    let mut k = 0usize;
    loop {
        k += 1;
        term = derive(table, x, &term)?.scale(&(u * &Scalar::ratio(1, k as i64)));
        if term.is_zero() {
            return Ok(out);
        }
        if k > bound {
            return Err(Error::InvalidActionTable(format!("`{x}` exceeded its ladder bound {bound}")));
        }
        out = out.add(&term)?;
    }
}

/// Scales each word of `h`-weight μ by `s^μ`.
pub fn torus_apply(h: &str, s: &Scalar, p: &NcPolynomial) -> Result<NcPolynomial> {
    if s.is_zero() {
        return Err(Error::ZeroTorusParameter);
    }
    if s.is_one() {
        return Ok(p.clone());
    }
    let alphabet = p.alphabet().clone();
    p.map_words(|w, c, out| {
        let mu = alphabet.word_weight(w, h)?;
        let e = mu.to_i64().ok_or_else(|| Error::IrrationalPower { h: h.to_string(), weight: mu.to_string() })?;
        out.add_term(w.clone(), &(c * &s.pow(e).expect("nonzero base")));
        Ok(())
    })
}

/// Element of U(g_J) as a combination of monomials `x1 x2 … xk` in row labels.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct UEnvElement {
    pub terms: Vec<(Scalar, Vec<String>)>,
}

impl UEnvElement {
    pub fn monomial(c: Scalar, labels: &[&str]) -> Self {
        UEnvElement { terms: vec![(c, labels.iter().map(|s| s.to_string()).collect())] }
    }

    pub fn plus(mut self, c: Scalar, labels: &[&str]) -> Self {
        self.terms.push((c, labels.iter().map(|s| s.to_string()).collect()));
        self
    }

    /// Each monomial acts rightmost factor first.
    pub fn apply(&self, table: &GeneratorActionTable, p: &NcPolynomial) -> Result<NcPolynomial> {
        let mut out = NcPolynomial::zero(p.alphabet(), p.truncation());
        for (c, labels) in &self.terms {
            let mut q = p.clone();
            for x in labels.iter().rev() {
                q = derive(table, x, &q)?;
            }
            out = out.add(&q.scale(c))?;
        }
        Ok(out)
    }
}
