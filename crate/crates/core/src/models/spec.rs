//! Declarative descriptions of the built-in algebras.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::borcherds::CoefficientTable;
use crate::action::{check_commutation, e_label, f_label, h_label, ActionTableJson, CommutationReport};
use crate::action::{GeneratorActionTable, LinearImage, RowKind};
use crate::algebra::{Alphabet, BcmReport, BorcherdsCartanMatrix, GenId, GeneratorSymbol, RootVector};
use crate::error::{Error, Result};
use crate::km::Gcm;
use crate::scalar::Scalar;
use crate::semidirect::{SemidirectGroup, SCHEMA_VERSION};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "lowercase")]
pub enum ModelKind {
    Monster,
    Fricke { n: u32, table: CoefficientTable },
    H3,
    E10 { kmax: usize },
    Gnome { lmax: usize, nmax: usize },
}

/// Materialization limits. Unused fields stay `None` for a given model.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Caps {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_block: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kcap: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub height: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub depth: Option<usize>,
    pub truncation: usize,
}

impl Caps {
    pub fn monster() -> Self {
        Caps { max_block: Some(3), kcap: Some(2), truncation: 4, ..Caps::default() }
    }

    pub fn h3() -> Self {
        Caps { height: Some(4), depth: Some(3), truncation: 4, ..Caps::default() }
    }

    pub fn e10() -> Self {
        Caps { height: Some(3), depth: Some(2), truncation: 4, ..Caps::default() }
    }

    pub fn gnome() -> Self {
        Caps { kcap: Some(2), truncation: 4, ..Caps::default() }
    }

    pub(crate) fn need(&self, field: &str, v: Option<usize>) -> Result<usize> {
        match v {
            Some(x) if x >= 1 => Ok(x),
            Some(_) => Err(Error::InvalidCaps(format!("{field} must be at least 1"))),
            None => Err(Error::InvalidCaps(format!("{field} is required"))),
        }
    }

    pub(crate) fn check_truncation(&self) -> Result<()> {
        if self.truncation == 0 {
            return Err(Error::InvalidCaps("truncation must be at least 1".into()));
        }
        Ok(())
    }
}

/// One imaginary simple root of the window and the generators it spans.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub index: String,
    pub dim: usize,
    /// Number of simple roots sharing this root-lattice image, before capping.
    pub multiplicity: String,
    pub generators: Vec<GenId>,
}

#[derive(Clone, Debug)]
pub struct ModelSpec {
    pub id: String,
    pub kind: ModelKind,
    pub caps: Caps,
    /// Real part of the Borcherds matrix.
    pub gcm: Gcm,
    /// Materialized Borcherds matrix window, real indices first.
    pub bcm: BorcherdsCartanMatrix,
    pub blocks: Vec<Block>,
    pub provenance: BTreeMap<String, String>,
    pub alphabet: Arc<Alphabet>,
    pub table: Arc<GeneratorActionTable>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelReport {
    pub bcm: BcmReport,
    pub commutation: CommutationReport,
    /// Generators whose degree is not in `−Q₊` or whose weights disagree with the form.
    pub grading: Vec<String>,
}

impl ModelReport {
    pub fn passed(&self) -> bool {
        self.bcm.passed() && self.commutation.passed() && self.grading.is_empty()
    }
}

impl ModelSpec {
    pub fn group(&self) -> Result<SemidirectGroup> {
        SemidirectGroup::new(&self.id, self.alphabet.clone(), self.table.clone(), self.caps.truncation)
    }

    pub fn real_indices(&self) -> &[String] {
        self.gcm.labels()
    }

    pub fn generator(&self, label: &str) -> Result<GenId> {
        self.alphabet.by_label(label).map(|s| s.id).ok_or_else(|| Error::UnknownGenerator(label.to_string()))
    }

    pub fn check(&self) -> Result<ModelReport> {
        let commutation = check_commutation(&self.table, &self.alphabet, &self.gcm.to_bcm())?;
        let mut grading = Vec::new();
        for s in self.alphabet.symbols() {
            let c = s.degree.coords();
            if c.is_empty() || c.values().any(|&x| x > 0) {
                grading.push(format!("{} has degree {} outside −Q₊", s.label, s.degree));
            }
            for i in self.gcm.labels() {
                let want = self.bcm.pairing(&s.degree, &RootVector::simple(i))?;
                if s.weights.get(&h_label(i)).cloned().unwrap_or_default() != want {
                    grading.push(format!("{} has the wrong {} weight", s.label, h_label(i)));
                }
            }
        }
        Ok(ModelReport { bcm: self.bcm.validate(), commutation, grading })
    }

    pub fn to_json(&self) -> ModelSpecJson {
        ModelSpecJson {
            schema_version: SCHEMA_VERSION,
            id: self.id.clone(),
            kind: self.kind.clone(),
            caps: self.caps.clone(),
            gcm: self.gcm.clone(),
            bcm: self.bcm.clone(),
            blocks: self.blocks.clone(),
            provenance: self.provenance.clone(),
            alphabet: (*self.alphabet).clone(),
            table: self.table.to_json(&self.alphabet),
        }
    }

    pub fn from_json(j: &ModelSpecJson) -> Result<Self> {
        if j.schema_version != SCHEMA_VERSION {
            return Err(Error::Schema(format!("unsupported schema_version {}", j.schema_version)));
        }
        let alphabet = Arc::new(Alphabet::new(j.alphabet.symbols().to_vec())?);
        let table = Arc::new(GeneratorActionTable::from_json(&alphabet, &j.table)?);
        let gcm = Gcm::new(j.gcm.labels().to_vec(), j.gcm.rows().to_vec())?;
        Ok(ModelSpec {
            id: j.id.clone(),
            kind: j.kind.clone(),
            caps: j.caps.clone(),
            gcm,
            bcm: j.bcm.clone(),
            blocks: j.blocks.clone(),
            provenance: j.provenance.clone(),
            alphabet,
            table,
        })
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("model specs serialize")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let j: ModelSpecJson = serde_json::from_str(s).map_err(|e| Error::Schema(e.to_string()))?;
        Self::from_json(&j)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelSpecJson {
    pub schema_version: u32,
    pub id: String,
    pub kind: ModelKind,
    pub caps: Caps,
    pub gcm: Gcm,
    pub bcm: BorcherdsCartanMatrix,
    pub blocks: Vec<Block>,
    pub provenance: BTreeMap<String, String>,
    pub alphabet: Alphabet,
    pub table: ActionTableJson,
}

/// Generators with their degree, and `e/f` images per real index; `h` rows are
/// derived from the weights.
pub(crate) struct Draft {
    pub gcm: Gcm,
    pub bcm: BorcherdsCartanMatrix,
    pub symbols: Vec<(String, RootVector)>,
    /// `(real index, kind)` → images, one per generator.
    pub images: BTreeMap<(usize, RowKind), Vec<Option<LinearImage>>>,
}

impl Draft {
    pub fn new(gcm: Gcm, bcm: BorcherdsCartanMatrix) -> Self {
        Draft { gcm, bcm, symbols: Vec::new(), images: BTreeMap::new() }
    }

    pub fn push(&mut self, label: String, degree: RootVector) -> GenId {
        self.symbols.push((label, degree));
        (self.symbols.len() - 1) as GenId
    }

    pub fn set(&mut self, i: usize, kind: RowKind, g: GenId, img: Option<LinearImage>) {
        let n = self.symbols.len();
        let row = self.images.entry((i, kind)).or_default();
        row.resize(n, Some(Vec::new()));
        row[g as usize] = img;
    }

    pub fn finish(self) -> Result<(Arc<Alphabet>, Arc<GeneratorActionTable>)> {
        let n = self.symbols.len();
        let mut symbols = Vec::with_capacity(n);
        for (p, (label, degree)) in self.symbols.iter().enumerate() {
            let mut weights = BTreeMap::new();
            for i in self.gcm.labels() {
                weights.insert(h_label(i), self.bcm.pairing(degree, &RootVector::simple(i))?);
            }
            symbols.push(GeneratorSymbol { id: p as GenId, label: label.clone(), degree: degree.clone(), weights });
        }
        let alphabet = Alphabet::new(symbols)?;
        let mut rows = Vec::new();
        for (i, l) in self.gcm.labels().iter().enumerate() {
            for (kind, label, root) in [
                (RowKind::E, e_label(l), RootVector::simple(l)),
                (RowKind::F, f_label(l), -&RootVector::simple(l)),
            ] {
                let mut images = self.images.get(&(i, kind)).cloned().unwrap_or_default();
                images.resize(n, Some(Vec::new()));
                rows.push((label, kind, l.clone(), root, images));
            }
            let h = h_label(l);
            let images = alphabet
                .symbols()
                .iter()
                .map(|s| {
                    let w = s.weights[&h].clone();
                    Some(if w.is_zero() { Vec::new() } else { vec![(s.id, w)] })
                })
                .collect();
            rows.push((h, RowKind::H, l.clone(), RootVector::zero(), images));
        }
        let table = GeneratorActionTable::new(&alphabet, rows)?;
        Ok((Arc::new(alphabet), Arc::new(table)))
    }
}

/// Standard sl₂ string of highest weight `m` on generators `g[0..=m]`:
/// `f: g_ℓ ↦ g_{ℓ+1}`, `e: g_ℓ ↦ ℓ(m−ℓ+1) g_{ℓ−1}`.
pub(crate) fn sl2_string(d: &mut Draft, i: usize, g: &[GenId]) {
    let m = g.len() as i64 - 1;
    for (l, &x) in g.iter().enumerate() {
        let lf = l as i64;
        let f = g.get(l + 1).map(|&y| vec![(y, Scalar::one())]).unwrap_or_default();
        let e = if l == 0 { Vec::new() } else { vec![(g[l - 1], Scalar::int(lf * (m - lf + 1)))] };
        d.set(i, RowKind::F, x, Some(f));
        d.set(i, RowKind::E, x, Some(e));
    }
}

pub(crate) fn provenance(model: &str, caps: &Caps) -> BTreeMap<String, String> {
    let mut p = BTreeMap::from([
        ("builder".to_string(), format!("{} {}", env!("CARGO_PKG_NAME"), env!("CARGO_PKG_VERSION"))),
        ("model".to_string(), model.to_string()),
        ("truncation".to_string(), caps.truncation.to_string()),
    ]);
    for (k, v) in [("max_block", caps.max_block), ("kcap", caps.kcap), ("height", caps.height), ("depth", caps.depth)] {
        if let Some(v) = v {
            p.insert(k.to_string(), v.to_string());
        }
    }
    p
}
