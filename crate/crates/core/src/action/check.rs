//! Consistency of an action table with the defining relations of g_J.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::derive::derive;
use super::table::{e_label, f_label, h_label, GeneratorActionTable, RowKind};
use crate::algebra::{Alphabet, BorcherdsCartanMatrix, GenId, NcPolynomial};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommutationReport {
    pub checked: usize,
    /// Identities not evaluable because an intermediate image leaves the window.
    pub skipped: usize,
    pub failures: Vec<String>,
}

impl CommutationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Applies a product of rows, rightmost first; `None` if the window is left.
fn chain(table: &GeneratorActionTable, labels: &[&str], p: &NcPolynomial) -> Result<Option<NcPolynomial>> {
    let mut q = p.clone();
    for x in labels.iter().rev() {
        match derive(table, x, &q) {
            Ok(r) => q = r,
            Err(Error::WindowExceeded { .. }) => return Ok(None),
            Err(e) => return Err(e),
        }
    }
    Ok(Some(q))
}

fn record(
    rep: &mut CommutationReport,
    what: &str,
    alphabet: &Alphabet,
    g: GenId,
    terms: Vec<(Scalar, Option<NcPolynomial>)>,
) -> Result<()> {
    let mut acc: Option<NcPolynomial> = None;
    for (c, p) in terms {
        let Some(p) = p else {
            rep.skipped += 1;
            return Ok(());
        };
        let t = p.scale(&c);
        acc = Some(match acc {
            None => t,
            Some(a) => a.add(&t)?,
        });
    }
    rep.checked += 1;
    if let Some(a) = acc {
        if !a.is_zero() {
            rep.failures.push(format!("{what} on {}: {}", alphabet.get(g)?.label, a.render()));
        }
    }
    Ok(())
}

/// Checks `[e_i,f_j] = δ_ij h_i`, `[h_i,e_j] = a_ij e_j`, `[h_i,f_j] = −a_ij f_j`,
/// the Serre relations where evaluable, homogeneity, and that `h` rows agree with
/// the alphabet weights.
pub fn check_commutation(
    table: &GeneratorActionTable,
    alphabet: &Arc<Alphabet>,
    cartan: &BorcherdsCartanMatrix,
) -> Result<CommutationReport> {
    let mut rep = CommutationReport::default();
    let idx: Vec<String> = cartan.indices.clone();
    for row in table.rows() {
        for g in alphabet.ids() {
            let Some(img) = row.image(g) else { continue };
            let want = &alphabet.get(g)?.degree + &row.root;
            for (t, _) in img {
                if alphabet.get(*t)?.degree != want {
                    rep.failures.push(format!("`{}` on {} is not homogeneous", row.label, alphabet.get(g)?.label));
                }
            }
            if row.kind == RowKind::H {
                let w = alphabet.get(g)?.weights.get(&row.label).cloned().unwrap_or_default();
                let diag = img.len() <= 1 && img.iter().all(|(t, c)| *t == g && *c == w) && (!img.is_empty() || w.is_zero());
                if !diag {
                    rep.failures.push(format!("`{}` is not the weight on {}", row.label, alphabet.get(g)?.label));
                }
            }
        }
    }
    for g in alphabet.ids() {
        let s = NcPolynomial::generator(alphabet, g, 1)?;
        for i in &idx {
            for j in &idx {
                let (ei, fj, hi) = (e_label(i), f_label(j), h_label(i));
                let (ej, fj2) = (e_label(j), f_label(j));
                let a = cartan.entry(i, j)?.clone();
                let one = Scalar::one();
                let mone = Scalar::int(-1);
                let mut terms = vec![
                    (one.clone(), chain(table, &[&ei, &fj], &s)?),
                    (mone.clone(), chain(table, &[&fj, &ei], &s)?),
                ];
                if i == j {
                    terms.push((mone.clone(), chain(table, &[&hi], &s)?));
                }
                record(&mut rep, &format!("[{ei},{fj}]"), alphabet, g, terms)?;
                record(
                    &mut rep,
                    &format!("[{hi},{ej}]"),
                    alphabet,
                    g,
                    vec![
                        (one.clone(), chain(table, &[&hi, &ej], &s)?),
                        (mone.clone(), chain(table, &[&ej, &hi], &s)?),
                        (-&a, chain(table, &[&ej], &s)?),
                    ],
                )?;
                record(
                    &mut rep,
                    &format!("[{hi},{fj2}]"),
                    alphabet,
                    g,
                    vec![
                        (one.clone(), chain(table, &[&hi, &fj2], &s)?),
                        (mone.clone(), chain(table, &[&fj2, &hi], &s)?),
                        (a.clone(), chain(table, &[&fj2], &s)?),
                    ],
                )?;
                if i != j {
                    let two = Scalar::int(2);
                    let n = (&(&(-&a) * &two) / cartan.entry(i, i)?).to_i64().unwrap_or(0) + 1;
                    for (x, y) in [(&ei, &ej), (&f_label(i), &fj2)] {
                        let mut terms = Vec::new();
                        for k in 0..=n {
                            let mut labels: Vec<&str> = vec![x.as_str(); (n - k) as usize];
                            labels.push(y.as_str());
                            labels.extend(std::iter::repeat_n(x.as_str(), k as usize));
                            let sign = if k % 2 == 0 { 1 } else { -1 };
                            terms.push((Scalar::int(sign * binom(n, k)), chain(table, &labels, &s)?));
                        }
                        record(&mut rep, &format!("Serre ({x},{y})"), alphabet, g, terms)?;
                    }
                }
            }
        }
    }
    Ok(rep)
}

fn binom(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, t| acc * (n - t) / (t + 1))
}
