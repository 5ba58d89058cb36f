//! The semidirect product G(S′) ⋊ G_J.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::action::table::LinearImage;
use crate::action::{ad_group, GeneratorActionTable, KmWord, WindowComparison};
use crate::algebra::{Alphabet, NcPolynomial};
use crate::error::{Error, Result};
use crate::lie::{bch, LieSeries};
use crate::linalg;
use crate::magnus::{MagnusElement, MagnusJson};
use crate::scalar::Scalar;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq)]
pub struct GroupElement {
    pub n: MagnusElement,
    pub g: KmWord,
    pub model: String,
}

/// Context shared by the elements of one group: model, alphabet, action and truncation.
#[derive(Clone, Debug)]
pub struct SemidirectGroup {
    model: String,
    alphabet: Arc<Alphabet>,
    table: Arc<GeneratorActionTable>,
    truncation: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupComparison {
    pub magnus_equal: bool,
    pub km: WindowComparison,
}

impl GroupComparison {
    pub fn equal(&self) -> bool {
        self.magnus_equal && self.km.equal
    }
}

impl SemidirectGroup {
    pub fn new(model: &str, alphabet: Arc<Alphabet>, table: Arc<GeneratorActionTable>, truncation: usize) -> Result<Self> {
        if table.generators() != alphabet.len() {
            return Err(Error::AlphabetMismatch);
        }
        Ok(SemidirectGroup { model: model.to_string(), alphabet, table, truncation })
    }

    pub fn model(&self) -> &str {
        &self.model
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn table(&self) -> &Arc<GeneratorActionTable> {
        &self.table
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            n: MagnusElement::identity(&self.alphabet, self.truncation),
            g: KmWord::identity(),
            model: self.model.clone(),
        }
    }

    pub fn element(&self, log: LieSeries, g: KmWord) -> Result<GroupElement> {
        if log.truncation() != self.truncation {
            return Err(Error::Schema(format!("truncation {} in a group at {}", log.truncation(), self.truncation)));
        }
        if !Arc::ptr_eq(log.alphabet(), &self.alphabet) && **log.alphabet() != *self.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        Ok(GroupElement { n: MagnusElement::from_log(log), g, model: self.model.clone() })
    }

    pub fn from_magnus(&self, n: MagnusElement) -> Result<GroupElement> {
        self.element(n.log().clone(), KmWord::identity())
    }

    pub fn from_km(&self, g: KmWord) -> GroupElement {
        GroupElement { g, ..self.identity() }
    }

    fn check(&self, a: &GroupElement) -> Result<()> {
        if a.model != self.model {
            return Err(Error::ModelMismatch(a.model.clone(), self.model.clone()));
        }
        if a.n.truncation() != self.truncation {
            return Err(Error::Schema(format!("truncation {} in a group at {}", a.n.truncation(), self.truncation)));
        }
        Ok(())
    }

    pub fn ad(&self, g: &KmWord, l: &LieSeries) -> Result<LieSeries> {
        ad_group(&self.table, g, l)
    }

    /// `(n1·exp(Ad(g1) log n2), g1 g2)`.
    pub fn mul(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        self.check(b)?;
        let moved = self.ad(&a.g, b.n.log())?;
        let n = MagnusElement::from_log(bch(a.n.log(), &moved, self.truncation)?);
        Ok(GroupElement { n, g: a.g.concat(&b.g), model: self.model.clone() })
    }

    /// `(exp(Ad(g⁻¹)(−log n)), g⁻¹)`.
    pub fn inv(&self, a: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        let gi = a.g.inverse()?;
        let n = MagnusElement::from_log(self.ad(&gi, &a.n.log().neg())?);
        Ok(GroupElement { n, g: gi, model: self.model.clone() })
    }

    pub fn compare(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupComparison> {
        self.check(a)?;
        self.check(b)?;
        Ok(GroupComparison {
            magnus_equal: a.n == b.n,
            km: a.g.compare(&b.g, &self.table, &self.alphabet)?,
        })
    }

    /// G(S′)-part of `a·(m,1)·a⁻¹`; its G_J-part must act trivially.
    pub fn conjugate(&self, a: &GroupElement, m: &MagnusElement) -> Result<MagnusElement> {
        let c = self.mul(&self.mul(a, &self.from_magnus(m.clone())?)?, &self.inv(a)?)?;
        let cmp = c.g.compare(&KmWord::identity(), &self.table, &self.alphabet)?;
        if !cmp.equal {
            return Err(Error::NormalityViolation(cmp.witness.unwrap_or_default()));
        }
        Ok(c.n)
    }

    /// Projection onto G_J.
    pub fn quotient(&self, a: &GroupElement) -> KmWord {
        a.g.clone()
    }

    /// Isomorphism induced by an equivariant change of basis of span(S′).
    pub fn change_basis(&self, rho: &[LinearImage]) -> Result<BasisChange> {
        let n = self.alphabet.len();
        if rho.len() != n {
            return Err(Error::Schema(format!("basis change has {} rows for {n} generators", rho.len())));
        }
        let mut m = vec![vec![Scalar::zero(); n]; n];
        for (s, img) in rho.iter().enumerate() {
            for (t, c) in img {
                self.alphabet.get(*t)?;
                m[s][*t as usize] += c;
            }
        }
        if linalg::inverse(&m).is_none() {
            return Err(Error::NotInvertible);
        }
        let images: Vec<NcPolynomial> =
            rho.iter().map(|img| NcPolynomial::linear(&self.alphabet, img, 1)).collect::<Result<_>>()?;
        let apply_rho = |p: &NcPolynomial| -> Result<NcPolynomial> { p.with_truncation(1).substitute(&images) };
        for row in self.table.rows() {
            for s in self.alphabet.ids() {
                let lhs = self.table.apply_to_generator(&self.alphabet, &row.label, s).and_then(|p| apply_rho(&p));
                let rhs = crate::action::derive(&self.table, &row.label, &images[s as usize]);
                let ok = match (lhs, rhs) {
                    (Ok(x), Ok(y)) => x == y,
                    (Err(Error::WindowExceeded { .. }), Err(Error::WindowExceeded { .. })) => true,
                    (Err(Error::WindowExceeded { .. }), Ok(_)) | (Ok(_), Err(Error::WindowExceeded { .. })) => false,
                    (Err(e), _) | (_, Err(e)) => return Err(e),
                };
                if !ok {
                    return Err(Error::NotEquivariant {
                        row: row.label.clone(),
                        generator: self.alphabet.get(s)?.label.clone(),
                    });
                }
            }
        }
        Ok(BasisChange { images, group: self.clone() })
    }

    pub fn to_json(&self, a: &GroupElement) -> GroupElementJson {
        GroupElementJson {
            schema_version: SCHEMA_VERSION,
            n: a.n.to_json(),
            g: a.g.clone(),
            model: a.model.clone(),
            truncation: a.n.truncation(),
        }
    }

    pub fn from_json(&self, j: &GroupElementJson) -> Result<GroupElement> {
        if j.schema_version != SCHEMA_VERSION {
            return Err(Error::Schema(format!("unsupported schema_version {}", j.schema_version)));
        }
        if j.model != self.model {
            return Err(Error::ModelMismatch(j.model.clone(), self.model.clone()));
        }
        let n = MagnusElement::from_json(&self.alphabet, &j.n)?;
        if n.truncation() != j.truncation || j.truncation != self.truncation {
            return Err(Error::Schema(format!("truncation {} does not match the group's {}", j.truncation, self.truncation)));
        }
        for l in &j.g.letters {
            let label = match l {
                crate::action::KmLetter::Exp { gen, .. } => gen,
                crate::action::KmLetter::Torus { h, s } => {
                    if s.is_zero() {
                        return Err(Error::ZeroTorusParameter);
                    }
                    h
                }
            };
            self.table.row(label)?;
        }
        Ok(GroupElement { n, g: j.g.clone(), model: j.model.clone() })
    }
}

/// Ψ(n, g) = (Φ(n), g) with Φ the algebra map extending ρ.
#[derive(Clone, Debug)]
pub struct BasisChange {
    images: Vec<NcPolynomial>,
    group: SemidirectGroup,
}

impl BasisChange {
    pub fn map_lie(&self, l: &LieSeries) -> Result<LieSeries> {
        let p = l.to_polynomial().substitute(&self.images.iter().map(|i| i.with_truncation(l.truncation())).collect::<Vec<_>>())?;
        LieSeries::from_lie_polynomial(&p)
    }

    pub fn apply(&self, a: &GroupElement) -> Result<GroupElement> {
        let log = self.map_lie(a.n.log())?;
        self.group.element(log, a.g.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupElementJson {
    pub schema_version: u32,
    pub n: MagnusJson,
    pub g: KmWord,
    pub model: String,
    pub truncation: usize,
}
