//! Tables of g_J acting on the generators of S′.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{Alphabet, GenId, NcPolynomial, PolyJson, RootVector};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Degree-one image `Σ c_t t` of a generator.
pub type LinearImage = Vec<(GenId, Scalar)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RowKind {
    E,
    F,
    H,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionRow {
    pub label: String,
    pub kind: RowKind,
    /// Simple-root index of g_J the row belongs to.
    pub index: String,
    /// Degree shift of the row.
    pub root: RootVector,
    /// `None` marks images that fall outside the materialized window.
    pub images: Vec<Option<LinearImage>>,
    /// Smallest `m` with `x^m ∘ s = 0`, when the ladder stays in the window.
    pub ladders: Vec<Option<usize>>,
}

impl ActionRow {
    pub fn image(&self, g: GenId) -> Option<&LinearImage> {
        self.images.get(g as usize).and_then(|i| i.as_ref())
    }
}

const LADDER_LIMIT: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorActionTable {
    rows: Vec<ActionRow>,
    by_label: HashMap<String, usize>,
    generators: usize,
}

pub fn e_label(i: &str) -> String {
    format!("e_{{{i}}}")
}
pub fn f_label(i: &str) -> String {
    format!("f_{{{i}}}")
}
pub fn h_label(i: &str) -> String {
    format!("h_{{{i}}}")
}

impl GeneratorActionTable {
    /// Builds the table and precomputes ladder lengths; rows given without ladders.
    pub fn new(alphabet: &Alphabet, rows: Vec<(String, RowKind, String, RootVector, Vec<Option<LinearImage>>)>) -> Result<Self> {
        let n = alphabet.len();
        let mut out = Vec::new();
        let mut by_label = HashMap::new();
        for (label, kind, index, root, images) in rows {
            if images.len() != n {
                return Err(Error::InvalidActionTable(format!("row `{label}` has {} entries for {n} generators", images.len())));
            }
            for img in images.iter().flatten() {
                for (g, _) in img {
                    alphabet.get(*g)?;
                }
            }
            if by_label.insert(label.clone(), out.len()).is_some() {
                return Err(Error::InvalidActionTable(format!("duplicate row `{label}`")));
            }
            out.push(ActionRow { label, kind, index, root, images, ladders: vec![None; n] });
        }
        let mut t = GeneratorActionTable { rows: out, by_label, generators: n };
        for r in 0..t.rows.len() {
            if t.rows[r].kind == RowKind::H {
                continue;
            }
            let ladders = (0..n as GenId).map(|g| t.ladder(r, g)).collect::<Result<Vec<_>>>()?;
            t.rows[r].ladders = ladders;
        }
        Ok(t)
    }

    fn ladder(&self, r: usize, g: GenId) -> Result<Option<usize>> {
        let row = &self.rows[r];
        let mut cur: BTreeMap<GenId, Scalar> = BTreeMap::from([(g, Scalar::one())]);
        for m in 0..LADDER_LIMIT {
            if cur.is_empty() {
                return Ok(Some(m));
            }
            let mut next: BTreeMap<GenId, Scalar> = BTreeMap::new();
            for (t, c) in &cur {
                let Some(img) = row.image(*t) else { return Ok(None) };
                for (u, d) in img {
                    let e = next.entry(*u).or_default();
                    *e += &(c * d);
                }
            }
            next.retain(|_, c| !c.is_zero());
            cur = next;
        }
        Err(Error::InvalidActionTable(format!(
            "row `{}` is not nilpotent on generator {g} within {LADDER_LIMIT} steps",
            row.label
        )))
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn rows(&self) -> &[ActionRow] {
        &self.rows
    }

    pub fn row(&self, label: &str) -> Result<&ActionRow> {
        self.by_label.get(label).map(|&r| &self.rows[r]).ok_or_else(|| Error::UnknownGenerator(label.to_string()))
    }

    pub fn has_row(&self, label: &str) -> bool {
        self.by_label.contains_key(label)
    }

    /// `x ∘ s` as a degree-one polynomial.
    pub fn apply_to_generator(&self, alphabet: &Arc<Alphabet>, label: &str, g: GenId) -> Result<NcPolynomial> {
        let row = self.row(label)?;
        let img = row.image(g).ok_or_else(|| Error::WindowExceeded {
            row: label.to_string(),
            generator: alphabet.get(g).map(|s| s.label.clone()).unwrap_or_default(),
        })?;
        NcPolynomial::linear(alphabet, img, 1)
    }

    pub fn to_json(&self, alphabet: &Arc<Alphabet>) -> ActionTableJson {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let entries = r
                    .images
                    .iter()
                    .enumerate()
                    .map(|(g, img)| EntryJson {
                        generator: g as GenId,
                        image: img.as_ref().map(|i| {
                            NcPolynomial::linear(alphabet, i, 1).expect("validated image").to_json()
                        }),
                    })
                    .collect();
                (r.label.clone(), RowJson { kind: r.kind, index: r.index.clone(), root: r.root.clone(), entries })
            })
            .collect();
        ActionTableJson { order: self.rows.iter().map(|r| r.label.clone()).collect(), rows }
    }

    pub fn from_json(alphabet: &Arc<Alphabet>, j: &ActionTableJson) -> Result<Self> {
        let mut rows = Vec::new();
        for label in &j.order {
            let r = j.rows.get(label).ok_or_else(|| Error::Schema(format!("row `{label}` listed but missing")))?;
            let mut images = vec![None; alphabet.len()];
            let mut seen = vec![false; alphabet.len()];
            for e in &r.entries {
                alphabet.get(e.generator)?;
                if std::mem::replace(&mut seen[e.generator as usize], true) {
                    return Err(Error::Schema(format!("row `{label}` repeats generator {}", e.generator)));
                }
                images[e.generator as usize] = match &e.image {
                    None => None,
                    Some(pj) => {
                        let p = NcPolynomial::from_json(alphabet, pj)?;
                        let mut lin = Vec::new();
                        for (w, c) in p.sorted_terms() {
                            if w.len() != 1 {
                                return Err(Error::Schema(format!("row `{label}` image is not degree one")));
                            }
                            lin.push((w.letters()[0], c.clone()));
                        }
                        Some(lin)
                    }
                };
            }
            if seen.iter().any(|s| !s) {
                return Err(Error::Schema(format!("row `{label}` does not cover every generator")));
            }
            rows.push((label.clone(), r.kind, r.index.clone(), r.root.clone(), images));
        }
        if j.rows.len() != j.order.len() {
            return Err(Error::Schema("row order does not list every row".into()));
        }
        Self::new(alphabet, rows)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub generator: GenId,
    pub image: Option<PolyJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowJson {
    pub kind: RowKind,
    pub index: String,
    pub root: RootVector,
    pub entries: Vec<EntryJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionTableJson {
    pub order: Vec<String>,
    pub rows: BTreeMap<String, RowJson>,
}

/// Words of `p` checked against the alphabet the table was built for.
pub(crate) fn check_alphabet(table: &GeneratorActionTable, p: &NcPolynomial) -> Result<()> {
    if p.alphabet().len() != table.generators() {
        return Err(Error::AlphabetMismatch);
    }
    Ok(())
}

