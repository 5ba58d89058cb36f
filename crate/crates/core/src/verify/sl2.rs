//! The nine SL₂ relations among `exp(u e)`, `exp(u f)` and the torus.

use super::{compare_action, not_applicable, CheckLine, Sampler};
use crate::action::{e_label, f_label, h_label, KmLetter, KmWord};
use crate::error::{Error, Result};
use crate::models::ModelSpec;
use crate::scalar::Scalar;

struct Sl2 {
    e: String,
    f: String,
    h: String,
}

impl Sl2 {
    fn e(&self, u: Scalar) -> KmWord {
        KmWord::letter(KmLetter::exp(&self.e, u))
    }

    fn f(&self, u: Scalar) -> KmWord {
        KmWord::letter(KmLetter::exp(&self.f, u))
    }

    fn t(&self, s: Scalar) -> KmWord {
        KmWord::letter(KmLetter::torus(&self.h, s))
    }

    fn w(&self) -> KmWord {
        self.e(Scalar::one()).concat(&self.f(-Scalar::one())).concat(&self.e(Scalar::one()))
    }

    fn conj(&self, x: &KmWord, y: &KmWord) -> Result<KmWord> {
        Ok(x.concat(y).concat(&x.inverse()?))
    }
}

/// `as_printed` uses the literal right-hand sides of relations 4–6; otherwise the
/// forms that hold in SL₂ with `exp((log s)h)` acting by `s^μ` on weight `μ`.
pub(super) fn relations(spec: &ModelSpec, s: &mut Sampler, trials: usize, as_printed: bool) -> Result<Vec<CheckLine>> {
    let suite = if as_printed { "sl2-relations-as-printed" } else { "sl2-relations" };
    if spec.gcm.rank() != 1 {
        return Err(not_applicable(suite, spec));
    }
    let i = &spec.gcm.labels()[0];
    let g = Sl2 { e: e_label(i), f: f_label(i), h: h_label(i) };
    let mut lines: Vec<CheckLine> = (1..=9).map(|k| CheckLine::new(&format!("rel{k}"))).collect();
    for trial in 0..trials {
        let (u, v) = (s.nonzero(), s.nonzero());
        let (sp, t) = (s.torus_parameter(), s.torus_parameter());
        let (si, ti) = (sp.recip().ok_or(Error::ZeroTorusParameter)?, t.recip().ok_or(Error::ZeroTorusParameter)?);
        let w = g.w();
        let pairs = [
            (g.e(u.clone()).concat(&g.e(v.clone())), g.e(&u + &v)),
            (g.f(u.clone()).concat(&g.f(v.clone())), g.f(&u + &v)),
            (g.t(sp.clone()).concat(&g.t(t.clone())), g.t(&sp * &t)),
            (
                g.f(-&t).concat(&g.e(sp.clone())).concat(&g.f(t.clone())),
                if as_printed {
                    g.e(-&ti).concat(&g.f(-(&(&t * &t) * &sp))).concat(&g.e(-&t))
                } else {
                    g.e(-&ti).concat(&g.f(-(&(&t * &t) * &sp))).concat(&g.e(ti.clone()))
                },
            ),
            (
                g.conj(&g.t(sp.clone()), &g.e(u.clone()))?,
                g.e(if as_printed { &sp * &u } else { &(&sp * &sp) * &u }),
            ),
            (
                g.conj(&g.t(sp.clone()), &g.f(u.clone()))?,
                g.f(if as_printed { &si * &u } else { &(&si * &si) * &u }),
            ),
            (g.conj(&w, &g.e(u.clone()))?, g.f(-&u)),
            (g.conj(&w, &g.f(u.clone()))?, g.e(-&u)),
            (g.conj(&w, &g.t(sp.clone()))?, g.t(si.clone())),
        ];
        for (line, (lhs, rhs)) in lines.iter_mut().zip(pairs) {
            let cmp = compare_action(&lhs, &rhs, &spec.table, &spec.alphabet)?;
            line.record(&cmp, &format!("u={u} v={v} s={sp} t={t} (trial {trial})"));
        }
    }
    Ok(lines)
}
