//! Model consistency, Monster root-set containment and derivation transfer.

use super::{not_applicable, CheckLine, Sampler};
use crate::action::{check_commutation, derive, e_label, f_label, h_label, KmLetter, KmWord, UEnvElement};
use crate::algebra::{GenId, NcPolynomial};
use crate::error::{Error, Result};
use crate::lie::{bch, LieSeries};
use crate::models::{monster_label, monster_root_sets, ModelKind, ModelSpec};
use crate::scalar::Scalar;

/// Steps until repeated application of `row` kills `p`; `None` if the window is left.
fn ladder(spec: &ModelSpec, row: &str, p: &NcPolynomial) -> Result<Option<i64>> {
    let mut q = p.clone();
    for k in 0..=64 {
        if q.is_zero() {
            return Ok(Some(k));
        }
        q = match derive(&spec.table, row, &q) {
            Ok(r) => r,
            Err(Error::WindowExceeded { .. }) => return Ok(None),
            Err(e) => return Err(e),
        };
    }
    Ok(None)
}

pub(super) fn model(spec: &ModelSpec) -> Result<Vec<CheckLine>> {
    let rep = spec.check()?;
    let mut bcm = CheckLine::new("bcm-conditions");
    bcm.check(rep.bcm.passed(), || format!("{:?}", rep.bcm));
    let mut comm = CheckLine::new("commutation");
    comm.checked += rep.commutation.checked;
    comm.undecided += rep.commutation.skipped;
    for f in &rep.commutation.failures {
        comm.check(false, || f.clone());
    }
    let mut grading = CheckLine::new("grading");
    grading.check(rep.grading.is_empty(), || rep.grading.join("; "));
    // f-ladder = μ + e-ladder for every weight vector of an integrable module
    let mut ladders = CheckLine::new("ladders");
    for i in spec.real_indices() {
        for g in spec.alphabet.ids() {
            let sym = spec.alphabet.get(g)?;
            let p = NcPolynomial::generator(&spec.alphabet, g, 1)?;
            let mu = sym.weights.get(&h_label(i)).cloned().unwrap_or_default();
            match (ladder(spec, &e_label(i), &p)?, ladder(spec, &f_label(i), &p)?) {
                (Some(le), Some(lf)) => {
                    let ok = mu.to_i64().is_some_and(|m| lf == m + le);
                    ladders.check(ok, || format!("{} under {i}: e {} f {} weight {mu}", sym.label, le - 1, lf - 1));
                }
                _ => ladders.undecided += 1,
            }
        }
    }
    Ok(vec![bcm, comm, grading, ladders])
}

/// `(ℓ, j, k, generator)` for every Monster generator `f_{ℓ,jk}`.
fn monster_generators(spec: &ModelSpec) -> Result<Vec<(usize, usize, usize, GenId)>> {
    let mut out = Vec::new();
    for b in &spec.blocks {
        let inner = b.index.trim_start_matches('(').trim_end_matches(')');
        let (j, k) = inner
            .split_once(',')
            .and_then(|(j, k)| Some((j.parse().ok()?, k.parse().ok()?)))
            .ok_or_else(|| Error::Schema(format!("block index {} is not (j,k)", b.index)))?;
        for (l, &g) in b.generators.iter().enumerate() {
            out.push((l, j, k, g));
        }
    }
    Ok(out)
}

/// Support of `Ad(exp(u x)) v f − v f`, or with `bch` of `log(exp(Ad(exp(u x)) v f) exp(−v f))`,
/// against `R′` for `x = e₋₁` and `S′` for `x = f₋₁`, under both readings of ℕ.
pub(super) fn root_sets(spec: &ModelSpec, s: &mut Sampler, trials: usize, bch_form: bool) -> Result<Vec<CheckLine>> {
    let suite = if bch_form { "root-sets-bch" } else { "root-sets" };
    if !matches!(spec.kind, ModelKind::Monster) {
        return Err(not_applicable(suite, spec));
    }
    let real = &spec.gcm.labels()[0];
    let n = spec.caps.truncation;
    let gens = monster_generators(spec)?;
    let mut lines = Vec::new();
    for (row, name) in [(e_label(real), "r-prime"), (f_label(real), "s-prime")] {
        let mut with_zero = CheckLine::new(&format!("{name}[a,b>=0]"));
        let mut without_zero = CheckLine::new(&format!("{name}[a,b>=1]"));
        for _ in 0..trials {
            let (u, v) = (s.nonzero(), s.nonzero());
            let g = KmWord::letter(KmLetter::exp(&row, u.clone()));
            for &(l, j, k, x) in &gens {
                let f = LieSeries::generator(&spec.alphabet, x, v.clone(), n)?;
                let moved = match crate::action::ad_group(&spec.table, &g, &f) {
                    Ok(m) => m,
                    Err(Error::WindowExceeded { .. }) => {
                        with_zero.undecided += 1;
                        without_zero.undecided += 1;
                        continue;
                    }
                    Err(e) => return Err(e),
                };
                let diff = if bch_form { bch(&moved, &f.neg(), n)? } else { moved.sub(&f)? };
                let support = diff.support_roots()?;
                for (line, zero) in [(&mut with_zero, true), (&mut without_zero, false)] {
                    let sets = monster_root_sets(l, j, k, n * (j + 1), n, zero);
                    let allowed = if name == "r-prime" { &sets.r_prime } else { &sets.s_prime };
                    let outside: Vec<String> = support.iter().filter(|r| !allowed.contains(r)).map(|r| r.to_string()).collect();
                    line.check(outside.is_empty(), || {
                        format!("{} with u={u} v={v}: {}", monster_label(l, j, k), outside.join(", "))
                    });
                }
            }
        }
        lines.push(with_zero);
        lines.push(without_zero);
    }
    Ok(lines)
}

/// `x = f² + fe − fh` sends `f_{0,jk}` to `f_{2,jk} − λ f_{1,jk}` with `λ = j − 1` the
/// `h`-weight of `f_{0,jk}`; commutation identities are checked on the whole window.
pub(super) fn derivation_transfer(spec: &ModelSpec, s: &mut Sampler) -> Result<Vec<CheckLine>> {
    if !matches!(spec.kind, ModelKind::Monster) {
        return Err(not_applicable("derivation-transfer", spec));
    }
    let real = spec.gcm.labels()[0].clone();
    let (e, f, h) = (e_label(&real), f_label(&real), h_label(&real));
    let x = UEnvElement::monomial(Scalar::one(), &[&f, &f])
        .plus(Scalar::one(), &[&f, &e])
        .plus(-Scalar::one(), &[&f, &h]);
    let mut worked = CheckLine::new("worked-example");
    let mut weights = CheckLine::new("highest-weights");
    let alph = &spec.alphabet;
    let lookup = |l: usize, j: usize, k: usize| alph.by_label(&monster_label(l, j, k)).map(|s| s.id);
    for b in &spec.blocks {
        let Some(&b1) = b.generators.first() else { continue };
        let j = b.dim;
        let sym = alph.get(b1)?;
        let lambda = sym.weights.get(&h).cloned().unwrap_or_default();
        weights.check(lambda == Scalar::int(j as i64 - 1), || format!("{} has weight {lambda}", sym.label));
        let got = x.apply(&spec.table, &NcPolynomial::generator(alph, b1, 1)?)?;
        let mut want = NcPolynomial::zero(alph, 1);
        for (l, c) in [(2, Scalar::one()), (1, -&lambda)] {
            if let Some(&g) = b.generators.get(l) {
                want = want.add(&NcPolynomial::linear(alph, &[(g, c)], 1)?)?;
            }
        }
        worked.check(got == want, || format!("{}: {} vs {}", sym.label, got.render(), want.render()));
    }
    if let (Some(b1), Some(b2), Some(b3)) = (lookup(0, 3, 1), lookup(1, 3, 1), lookup(2, 3, 1)) {
        let got = x.apply(&spec.table, &NcPolynomial::generator(alph, b1, 1)?)?;
        let want = NcPolynomial::linear(alph, &[(b3, Scalar::one()), (b2, Scalar::int(-2))], 1)?;
        worked.check(got == want, || format!("b1: {} vs b3 − 2b2", got.render()));
    } else {
        worked.check(false, || "the window lacks the block j = 3, k = 1".into());
    }
    let rep = check_commutation(&spec.table, alph, &spec.gcm.to_bcm())?;
    let mut comm = CheckLine::new("commutation");
    comm.checked += rep.checked;
    comm.undecided += rep.skipped;
    for w in &rep.failures {
        comm.check(false, || w.clone());
    }
    // derivations obey the Leibniz rule on products of window generators
    let mut leibniz = CheckLine::new("leibniz");
    let ids: Vec<GenId> = alph.ids().collect();
    for _ in 0..20 {
        let p = random_poly(s, spec, &ids)?;
        let q = random_poly(s, spec, &ids)?;
        for row in [&e, &f, &h] {
            let lhs = derive(&spec.table, row, &p.mul(&q, 2)?)?;
            let rhs = derive(&spec.table, row, &p)?.mul(&q, 2)?.add(&p.mul(&derive(&spec.table, row, &q)?, 2)?)?;
            leibniz.check(lhs == rhs, || format!("{row} on ({})({})", p.render(), q.render()));
        }
    }
    Ok(vec![worked, weights, comm, leibniz])
}

fn random_poly(s: &mut Sampler, spec: &ModelSpec, ids: &[GenId]) -> Result<NcPolynomial> {
    use rand::seq::SliceRandom;
    let combo: Vec<(GenId, Scalar)> = (0..2).map(|_| (*ids.choose(s.rng()).expect("nonempty"), s.nonzero())).collect();
    NcPolynomial::linear(&spec.alphabet, &combo, 2)
}
