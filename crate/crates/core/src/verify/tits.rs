//! Tits relations R1, R2, R4–R7 for a rank-2 real part.

use std::sync::Arc;

use rand::seq::SliceRandom;

use super::{compare_action, not_applicable, CheckLine, Sampler};
use crate::action::{GeneratorActionTable, KmWord};
use crate::algebra::Alphabet;
use crate::error::{Error, Result};
use crate::km::{is_prenilpotent, real_roots, Coeffs, Gcm, Tits};
use crate::models::ModelSpec;
use crate::scalar::Scalar;

/// One factor `χ_γ(C u^m v^n)` of a commutator, `γ = mα + nβ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FittedRoot {
    pub m: i64,
    pub n: i64,
    pub root: Coeffs,
    pub c: Scalar,
    /// No window generator is moved by `χ_γ` in degree `γ`, so `c` was set to 0.
    pub unseen: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutatorFit {
    pub alpha: Coeffs,
    pub beta: Coeffs,
    pub factors: Vec<FittedRoot>,
}

impl CommutatorFit {
    pub fn product(&self, tits: &Tits, u: &Scalar, v: &Scalar) -> Result<KmWord> {
        let mut w = KmWord::identity();
        for f in &self.factors {
            let coeff = &(&f.c * &u.pow(f.m).expect("positive power")) * &v.pow(f.n).expect("positive power");
            w = w.concat(&tits.chi(&f.root, &coeff)?);
        }
        Ok(w)
    }
}

fn commutator(x: &KmWord, y: &KmWord) -> Result<KmWord> {
    Ok(x.concat(y).concat(&x.inverse()?).concat(&y.inverse()?))
}

fn combine(alpha: &[i64], beta: &[i64], m: i64, n: i64) -> Coeffs {
    alpha.iter().zip(beta).map(|(a, b)| m * a + n * b).collect()
}

/// Fits the constants of `[χ_α(1), χ_β(1)] = Π χ_γ(C_γ)` over real `γ = mα + nβ`,
/// ordered by `m + n` then `m`, reading each `C_γ` off the degree-`γ` shift of the
/// residual after removing the factors already fitted.
pub fn fit_commutator(
    tits: &Tits,
    table: &GeneratorActionTable,
    alphabet: &Arc<Alphabet>,
    alpha: &[i64],
    beta: &[i64],
) -> Result<CommutatorFit> {
    let bound = tits.real.bound as i64;
    let mut roots = Vec::new();
    for m in 1..=bound {
        for n in 1..=bound {
            let g = combine(alpha, beta, m, n);
            if tits.real.is_real(&g) {
                roots.push((m, n, g));
            }
        }
    }
    roots.sort_by_key(|(m, n, _)| (m + n, *m));
    let one = Scalar::one();
    let k = commutator(&tits.chi(alpha, &one)?, &tits.chi(beta, &one)?)?;
    let mut prefix = KmWord::identity();
    let mut factors = Vec::new();
    for (m, n, g) in roots {
        let residual = prefix.inverse()?.concat(&k);
        let reference = tits.chi(&g, &one)?;
        let shift = tits.gcm.to_root(&g);
        let mut c = None;
        for x in alphabet.ids() {
            let (r, f) = match (residual.apply_generator(table, alphabet, x), reference.apply_generator(table, alphabet, x)) {
                (Ok(r), Ok(f)) => (r, f),
                (Err(Error::WindowExceeded { .. }), _) | (_, Err(Error::WindowExceeded { .. })) => continue,
                (Err(e), _) | (_, Err(e)) => return Err(e),
            };
            let target = &alphabet.get(x)?.degree + &shift;
            for (w, fc) in f.terms() {
                if alphabet.word_degree(w)? == target && !fc.is_zero() {
                    c = Some(&r.coeff(w) / fc);
                    break;
                }
            }
            if c.is_some() {
                break;
            }
        }
        let unseen = c.is_none();
        let c = c.unwrap_or_else(Scalar::zero);
        prefix = prefix.concat(&tits.chi(&g, &c)?);
        factors.push(FittedRoot { m, n, root: g, c, unseen });
    }
    Ok(CommutatorFit { alpha: alpha.to_vec(), beta: beta.to_vec(), factors })
}

fn signed_roots(gcm: &Gcm, h: usize) -> Vec<Coeffs> {
    let rr = real_roots(gcm, h);
    let mut out: Vec<Coeffs> = rr.roots().cloned().collect();
    out.extend(rr.roots().map(|r| r.iter().map(|c| -c).collect::<Coeffs>()));
    out
}

pub(super) fn relations(spec: &ModelSpec, s: &mut Sampler, trials: usize) -> Result<Vec<CheckLine>> {
    let gcm = &spec.gcm;
    if gcm.rank() != 2 {
        return Err(not_applicable("tits", spec));
    }
    let h = spec.caps.height.unwrap_or(4);
    let real = real_roots(gcm, 4 * h);
    let tits = Tits { gcm, real: &real };
    let roots = signed_roots(gcm, h);
    let (table, alph) = (&spec.table, &spec.alphabet);
    let cmp = |a: &KmWord, b: &KmWord| compare_action(a, b, table, alph);
    let mut r1 = CheckLine::new("R1");
    let mut r4 = CheckLine::new("R4");
    let mut r5 = CheckLine::new("R5");
    let mut r6 = CheckLine::new("R6");
    let mut r7 = CheckLine::new("R7");
    for t in 0..trials {
        let a = roots.choose(s.rng()).expect("real roots exist").clone();
        let (u, v) = (s.nonzero(), s.nonzero());
        let (sp, tp) = (s.torus_parameter(), s.torus_parameter());
        let ctx = format!("trial {t}, α = {}, u={u} v={v} s={sp} t={tp}", gcm.to_root(&a));
        r1.record(&cmp(&tits.chi(&a, &u)?.concat(&tits.chi(&a, &v)?), &tits.chi(&a, &(&u + &v))?)?, &ctx);
        for i in 0..2 {
            let hi = tits.h(i, &sp)?;
            let p = gcm.pair_simple(&a, i);
            let scaled = &v * &sp.pow(p).ok_or(Error::ZeroTorusParameter)?;
            r4.record(&cmp(&hi.concat(&tits.chi(&a, &v)?).concat(&hi.inverse()?), &tits.chi(&a, &scaled)?)?, &ctx);
            r6.record(&cmp(&tits.h(i, &(&sp * &tp))?, &tits.h(i, &sp)?.concat(&tits.h(i, &tp)?))?, &ctx);
            for j in 0..2 {
                let hj = tits.h(j, &tp)?;
                r7.record(&cmp(&commutator(&hi, &hj)?, &KmWord::identity())?, &ctx);
                let wi = tits.w_tilde(i, &Scalar::one())?;
                let hjs = tits.h(j, &sp)?;
                let e = sp.pow(-gcm.entry(j, i)).ok_or(Error::ZeroTorusParameter)?;
                r5.record(&cmp(&wi.concat(&hjs).concat(&wi.inverse()?), &hjs.concat(&tits.h(i, &e)?))?, &ctx);
            }
        }
    }
    let mut r2 = CheckLine::new("R2");
    let mut integral = CheckLine::new("R2-integer-constants");
    let mut certified = 0;
    for (p, a) in roots.iter().enumerate() {
        for b in &roots[p + 1..] {
            if !is_prenilpotent(gcm, &real, a, b)? {
                continue;
            }
            certified += 1;
            let fit = fit_commutator(&tits, table, alph, a, b)?;
            let ctx = format!("α = {}, β = {}", gcm.to_root(a), gcm.to_root(b));
            let bad: Vec<String> =
                fit.factors.iter().filter(|f| !f.c.is_integer()).map(|f| format!("C at {} is {}", gcm.to_root(&f.root), f.c)).collect();
            integral.check(bad.is_empty(), || format!("{ctx}: {}", bad.join(", ")));
            for _ in 0..2 {
                let (u, v) = (s.nonzero(), s.nonzero());
                let lhs = commutator(&tits.chi(a, &u)?, &tits.chi(b, &v)?)?;
                r2.record(&cmp(&lhs, &fit.product(&tits, &u, &v)?)?, &format!("{ctx}, u={u} v={v}"));
            }
        }
    }
    let mut pairs = CheckLine::new("R2-certified-pairs");
    pairs.checked = certified;
    Ok(vec![r1, r2, integral, pairs, r4, r5, r6, r7])
}
