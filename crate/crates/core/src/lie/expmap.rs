//! Exponential, logarithm and BCH between Lie series and the Magnus algebra.

use super::dsw::first_non_lie_degree;
use super::series::LieSeries;
use crate::algebra::NcPolynomial;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// `Σ_{k ≤ N} P^k / k!` for a polynomial without constant term.
pub(crate) fn exp_poly(p: &NcPolynomial, n: usize) -> NcPolynomial {
    let p = p.truncate(n);
    let mut out = NcPolynomial::one(p.alphabet(), p.truncation());
    let mut term = out.clone();
    for k in 1..=p.truncation() {
        term = term.mul(&p, n).expect("same alphabet").scale(&Scalar::ratio(1, k as i64));
        if term.is_zero() {
            break;
        }
        out = out.add(&term).expect("same alphabet");
    }
    out
}

/// `Σ (−1)^{k+1} (u − 1)^k / k`; the constant term must be 1.
pub(crate) fn log_poly(u: &NcPolynomial, n: usize) -> Result<NcPolynomial> {
    let c = u.constant_term();
    if !c.is_one() {
        return Err(Error::ConstantTerm(c.to_string(), "1".into()));
    }
    let u = u.truncate(n);
    let n = u.truncation();
    let w = u.sub(&NcPolynomial::one(u.alphabet(), n))?;
    let mut out = NcPolynomial::zero(u.alphabet(), n);
    let mut pw = w.clone();
    for k in 1..=n {
        if pw.is_zero() {
            break;
        }
        let sign = if k % 2 == 1 { 1 } else { -1 };
        out = out.add(&pw.scale(&Scalar::ratio(sign, k as i64)))?;
        pw = pw.mul(&w, n)?;
    }
    Ok(out)
}

pub fn exp(l: &LieSeries, n: usize) -> NcPolynomial {
    exp_poly(&l.to_polynomial(), n)
}

/// Logarithm in Lyndon coordinates; rejects series outside the Magnus group.
pub fn log(u: &NcPolynomial, n: usize) -> Result<LieSeries> {
    let p = log_poly(u, n)?;
    if let Some(degree) = first_non_lie_degree(&p) {
        return Err(Error::NotLie { degree });
    }
    LieSeries::from_lie_polynomial(&p)
}

/// `log(exp(a)·exp(b))` truncated at `min(N, a.N, b.N)`.
pub fn bch(a: &LieSeries, b: &LieSeries, n: usize) -> Result<LieSeries> {
    if !std::sync::Arc::ptr_eq(a.alphabet(), b.alphabet()) && a.alphabet() != b.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let n = n.min(a.truncation()).min(b.truncation());
    if a.is_zero() {
        return Ok(b.truncate(n));
    }
    if b.is_zero() {
        return Ok(a.truncate(n));
    }
    let prod = exp(a, n).mul(&exp(b, n), n)?;
    LieSeries::from_lie_polynomial(&log_poly(&prod, n)?)
}
