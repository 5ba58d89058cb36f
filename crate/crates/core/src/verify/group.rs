//! Group axioms, the automorphism property, normality and basis independence.

use super::{compare_action, record_elements, CheckLine, Sampler};
use crate::action::LinearImage;
use crate::error::{Error, Result};
use crate::magnus::MagnusElement;
use crate::models::ModelSpec;
use crate::scalar::Scalar;
use crate::semidirect::{BasisChange, GroupElement};

struct AxiomSample {
    a: GroupElement,
    b: GroupElement,
    ab_c: GroupElement,
    a_bc: GroupElement,
    ea: GroupElement,
    ae: GroupElement,
    a_inv_a: GroupElement,
    inv_a_a: GroupElement,
    ab: GroupElement,
}

pub(super) fn axioms(spec: &ModelSpec, s: &mut Sampler, samples: usize) -> Result<Vec<CheckLine>> {
    let g = spec.group()?;
    let e = g.identity();
    let mut assoc = CheckLine::new("associativity");
    let mut left_id = CheckLine::new("left-identity");
    let mut right_id = CheckLine::new("right-identity");
    let mut right_inv = CheckLine::new("right-inverse");
    let mut left_inv = CheckLine::new("left-inverse");
    let mut quotient = CheckLine::new("quotient-homomorphism");
    let mut json = CheckLine::new("json-round-trip");
    for t in 0..samples {
        let x = s.retry(|s| {
            let a = s.element(&g)?;
            let b = s.element(&g)?;
            let c = s.element(&g)?;
            let ab = g.mul(&a, &b)?;
            let ai = g.inv(&a)?;
            Ok(AxiomSample {
                ab_c: g.mul(&ab, &c)?,
                a_bc: g.mul(&a, &g.mul(&b, &c)?)?,
                ea: g.mul(&e, &a)?,
                ae: g.mul(&a, &e)?,
                a_inv_a: g.mul(&a, &ai)?,
                inv_a_a: g.mul(&ai, &a)?,
                ab,
                a,
                b,
            })
        })?;
        let ctx = format!("sample {t}");
        record_elements(&mut assoc, &g, &x.ab_c, &x.a_bc, &ctx)?;
        record_elements(&mut left_id, &g, &x.ea, &x.a, &ctx)?;
        record_elements(&mut right_id, &g, &x.ae, &x.a, &ctx)?;
        record_elements(&mut right_inv, &g, &x.a_inv_a, &e, &ctx)?;
        record_elements(&mut left_inv, &g, &x.inv_a_a, &e, &ctx)?;
        let prod = g.quotient(&x.a).concat(&g.quotient(&x.b));
        quotient.record(&compare_action(&g.quotient(&x.ab), &prod, g.table(), g.alphabet())?, &ctx);
        for el in [&x.a, &x.ab] {
            let j = g.to_json(el);
            let text = serde_json::to_string(&j).map_err(|e| Error::Schema(e.to_string()))?;
            let back: crate::semidirect::GroupElementJson =
                serde_json::from_str(&text).map_err(|e| Error::Schema(e.to_string()))?;
            let el2 = g.from_json(&back)?;
            json.check(back == j && &el2 == el, || format!("{ctx}: {text}"));
        }
    }
    Ok(vec![assoc, left_id, right_id, right_inv, left_inv, quotient, json])
}

pub(super) fn automorphism(spec: &ModelSpec, s: &mut Sampler, samples: usize) -> Result<Vec<CheckLine>> {
    let g = spec.group()?;
    let (alph, n) = (g.alphabet().clone(), g.truncation());
    let mut bracket = CheckLine::new("bracket");
    let mut compose = CheckLine::new("composition");
    let mut linear = CheckLine::new("linearity");
    for t in 0..samples {
        let (lhs, rhs, c1, c2, l1, l2) = s.retry(|s| {
            let w1 = s.km_word(g.table(), 3);
            let w2 = s.km_word(g.table(), 3);
            let a = s.lie(&alph, n, 2)?;
            let b = s.lie(&alph, n, 2)?;
            let c = s.nonzero();
            let lhs = g.ad(&w1, &a.bracket(&b)?)?;
            let rhs = g.ad(&w1, &a)?.bracket(&g.ad(&w1, &b)?)?;
            let c1 = g.ad(&w1.concat(&w2), &a)?;
            let c2 = g.ad(&w1, &g.ad(&w2, &a)?)?;
            let l1 = g.ad(&w1, &a.add(&b.scale(&c))?)?;
            let l2 = g.ad(&w1, &a)?.add(&g.ad(&w1, &b)?.scale(&c))?;
            Ok((lhs, rhs, c1, c2, l1, l2))
        })?;
        let ctx = format!("sample {t}");
        bracket.check(lhs == rhs, || format!("{ctx}: {} vs {}", lhs.to_polynomial().render(), rhs.to_polynomial().render()));
        compose.check(c1 == c2, || format!("{ctx}: {} vs {}", c1.to_polynomial().render(), c2.to_polynomial().render()));
        linear.check(l1 == l2, || format!("{ctx}: {} vs {}", l1.to_polynomial().render(), l2.to_polynomial().render()));
    }
    Ok(vec![bracket, compose, linear])
}

pub(super) fn normality(spec: &ModelSpec, s: &mut Sampler, samples: usize) -> Result<Vec<CheckLine>> {
    let g = spec.group()?;
    let (alph, n) = (g.alphabet().clone(), g.truncation());
    let mut stays = CheckLine::new("stays-in-normal-subgroup");
    let mut direct = CheckLine::new("matches-direct-formula");
    for t in 0..samples {
        let (got, want) = s.retry(|s| {
            let a = s.element(&g)?;
            let m = MagnusElement::from_log(s.lie(&alph, n, 2)?);
            let want = a.n.mul(&MagnusElement::from_log(g.ad(&a.g, m.log())?))?.mul(&a.n.inv())?;
            let got = match g.conjugate(&a, &m) {
                Ok(c) => Ok(c),
                Err(Error::NormalityViolation(w)) => Err(w),
                Err(e) => return Err(e),
            };
            Ok((got, want))
        })?;
        let ctx = format!("sample {t}");
        match got {
            Ok(c) => {
                stays.check(true, String::new);
                direct.check(c == want, || format!("{ctx}: {}", c.log().to_polynomial().render()));
            }
            Err(w) => stays.check(false, || format!("{ctx}: {w}")),
        }
    }
    Ok(vec![stays, direct])
}

fn scaled(spec: &ModelSpec, factor: impl Fn(usize) -> Scalar) -> Vec<LinearImage> {
    let mut rho: Vec<LinearImage> = spec.alphabet.ids().map(|g| vec![(g, Scalar::one())]).collect();
    for (b, block) in spec.blocks.iter().enumerate() {
        for &g in &block.generators {
            rho[g as usize] = vec![(g, factor(b))];
        }
    }
    rho
}

/// Candidate equivariant basis changes; the optional ones are kept only when accepted.
fn candidate_changes(spec: &ModelSpec) -> (Vec<(String, Vec<LinearImage>)>, Vec<(String, Vec<LinearImage>)>) {
    let required = vec![
        ("scale-first-block".to_string(), scaled(spec, |b| if b == 0 { Scalar::int(3) } else { Scalar::one() })),
        ("scale-all".to_string(), scaled(spec, |_| Scalar::ratio(-1, 2))),
        ("scale-blocks".to_string(), scaled(spec, |b| Scalar::int(b as i64 + 2))),
    ];
    let mut optional = Vec::new();
    for (p, a) in spec.blocks.iter().enumerate() {
        for b in &spec.blocks[p + 1..] {
            if a.dim != b.dim {
                continue;
            }
            let mut swap: Vec<LinearImage> = spec.alphabet.ids().map(|g| vec![(g, Scalar::one())]).collect();
            let mut mix = swap.clone();
            for (&x, &y) in a.generators.iter().zip(&b.generators) {
                swap[x as usize] = vec![(y, Scalar::one())];
                swap[y as usize] = vec![(x, Scalar::one())];
                mix[x as usize] = vec![(x, Scalar::one()), (y, Scalar::int(2))];
            }
            optional.push((format!("permute {} {}", a.index, b.index), swap));
            optional.push((format!("mix {} {}", a.index, b.index), mix));
        }
    }
    (required, optional)
}

pub(super) fn basis_change(spec: &ModelSpec, s: &mut Sampler, pairs: usize) -> Result<Vec<CheckLine>> {
    let g = spec.group()?;
    let (required, optional) = candidate_changes(spec);
    let mut changes: Vec<(String, BasisChange)> = Vec::new();
    let mut lines = Vec::new();
    for (name, rho) in required {
        match g.change_basis(&rho) {
            Ok(c) => changes.push((name, c)),
            Err(e) => {
                let mut l = CheckLine::new(&name);
                l.check(false, || e.to_string());
                lines.push(l);
            }
        }
    }
    let mut found_permute = false;
    for (name, rho) in optional {
        let kind = name.split(' ').next().unwrap_or_default();
        if kind == "permute" && found_permute {
            continue;
        }
        match g.change_basis(&rho) {
            Ok(c) => {
                if kind == "mix" {
                    changes.push(("mix".into(), c));
                    break;
                }
                found_permute = true;
                changes.push(("permute".into(), c));
            }
            Err(Error::NotEquivariant { .. }) | Err(Error::NotInvertible) => {}
            Err(e) => return Err(e),
        }
    }
    let mut count = CheckLine::new("at-least-three-changes");
    count.check(changes.len() >= 3, || format!("{} changes accepted", changes.len()));
    lines.push(count);
    for (name, psi) in &changes {
        let mut hom = CheckLine::new(&format!("homomorphism {name}"));
        let mut inv = CheckLine::new(&format!("inverse {name}"));
        for t in 0..pairs {
            let (lhs, rhs, i1, i2) = s.retry(|s| {
                let a = s.element(&g)?;
                let b = s.element(&g)?;
                let (pa, pb) = (psi.apply(&a)?, psi.apply(&b)?);
                Ok((psi.apply(&g.mul(&a, &b)?)?, g.mul(&pa, &pb)?, psi.apply(&g.inv(&a)?)?, g.inv(&pa)?))
            })?;
            let ctx = format!("pair {t}");
            record_elements(&mut hom, &g, &lhs, &rhs, &ctx)?;
            record_elements(&mut inv, &g, &i1, &i2, &ctx)?;
        }
        lines.push(hom);
        lines.push(inv);
    }
    Ok(lines)
}
