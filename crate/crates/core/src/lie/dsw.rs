//! Dynkin–Specht–Wever projection and the Lie membership test.

use crate::algebra::{NcPolynomial, Word};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Left-normed bracket `[..[[x1,x2],x3],..,xn]` as signed words.
fn left_normed(w: &Word) -> Vec<(Word, i64)> {
    let l = w.letters();
    let mut cur: Vec<(Word, i64)> = vec![(Word::letter(l[0]), 1)];
    for &x in &l[1..] {
        let xw = Word::letter(x);
        let mut next = Vec::with_capacity(cur.len() * 2);
        for (u, c) in &cur {
            next.push((u.concat(&xw), *c));
            next.push((xw.concat(u), -c));
        }
        cur = next;
    }
    cur
}

pub fn dsw_project(p: &NcPolynomial) -> Result<NcPolynomial> {
    if !p.constant_term().is_zero() {
        return Err(Error::DswConstantTerm);
    }
    let mut r = NcPolynomial::zero(p.alphabet(), p.truncation());
    for (w, c) in p.terms() {
        for (u, s) in left_normed(w) {
            r.add_term(u, &(c * &Scalar::int(s)));
        }
    }
    Ok(r)
}

/// First degree where `p` fails to be Lie, if any.
pub fn first_non_lie_degree(p: &NcPolynomial) -> Option<usize> {
    if !p.constant_term().is_zero() {
        return Some(0);
    }
    let top = p.degree().unwrap_or(0);
    (1..=top).find(|&n| {
        let pn = p.homogeneous(n);
        let proj = dsw_project(&pn).expect("homogeneous part has no constant term");
        proj != pn.scale(&Scalar::int(n as i64))
    })
}

pub fn is_lie(p: &NcPolynomial) -> bool {
    first_non_lie_degree(p).is_none()
}
