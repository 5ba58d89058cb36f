//! Models whose real part is a rank ≥ 2 Kac–Moody algebra: H(3) and E10.

use crate::action::RowKind;
use crate::algebra::{BorcherdsCartanMatrix, GenId, RootVector};
use crate::error::{Error, Result};
use crate::km::{build_irreducible, Gcm, IrreducibleModuleTruncation};
use crate::scalar::Scalar;

use super::spec::{provenance, Block, Caps, Draft, ModelKind, ModelSpec};

pub const H3_IMAGINARY: &str = "3";

pub fn h3_gcm() -> Gcm {
    Gcm::from_rows(&["1", "2"], &[&[2, -3], &[-3, 2]]).expect("valid matrix")
}

pub fn e10_labels() -> Vec<String> {
    (-1..=8).map(|i: i64| i.to_string()).collect()
}

pub fn e10_gcm() -> Gcm {
    let labels = e10_labels();
    let l: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
    let edges = [("7", "6"), ("6", "5"), ("5", "4"), ("4", "3"), ("3", "2"), ("2", "1"), ("1", "0"), ("0", "-1"), ("8", "5")];
    Gcm::from_edges(&l, &edges).expect("valid diagram")
}

/// Null root of the affine E9 inside E10, in the coordinates of [`e10_labels`].
pub fn e10_delta() -> Vec<i64> {
    vec![0, 1, 2, 3, 4, 5, 6, 4, 2, 3]
}

pub fn lambda_index(k: usize) -> String {
    format!("λ{k}")
}

/// Label of the generator `f_{i₁}⋯f_{i_r}·f_m` of the module generated by `f_m`.
pub fn module_label(index: &str, word: &[usize], labels: &[String]) -> String {
    let w: Vec<&str> = word.iter().map(|&i| labels[i].as_str()).collect();
    format!("f[{index}|{}]", w.join(","))
}

/// Adds the module `U(n⁻)·f_m` as a block of generators with degrees `−α_m − β`.
fn add_module(d: &mut Draft, index: &str, m: &IrreducibleModuleTruncation) -> Block {
    let labels = d.gcm.labels().to_vec();
    let base = d.symbols.len() as GenId;
    let mut gens = Vec::new();
    for v in &m.vectors {
        let mut deg = -&RootVector::simple(index);
        for (i, &c) in v.beta.iter().enumerate() {
            deg.add_coord(&labels[i], -c);
        }
        gens.push(d.push(module_label(index, &v.word, &labels), deg));
    }
    let shift = |sv: &[(usize, Scalar)]| sv.iter().map(|(u, c)| (base + *u as GenId, c.clone())).collect::<Vec<_>>();
    for i in 0..labels.len() {
        for (v, &g) in gens.iter().enumerate() {
            d.set(i, RowKind::E, g, Some(shift(&m.e[i][v])));
            d.set(i, RowKind::F, g, m.f[i][v].as_deref().map(shift));
        }
    }
    Block { index: index.to_string(), dim: gens.len(), multiplicity: "1".into(), generators: gens }
}

/// `λ(h_i) = −a_{i,m}` for the adjoined imaginary index `m`.
fn highest_weight(gcm: &Gcm, bcm: &BorcherdsCartanMatrix, index: &str) -> Result<Vec<i64>> {
    gcm.labels()
        .iter()
        .map(|i| {
            let a = bcm.entry(i, index)?;
            (-a).to_i64().ok_or_else(|| Error::InconsistentModule(format!("a[{i}][{index}] is not an integer")))
        })
        .collect()
}

pub(crate) fn extend(gcm: &Gcm, extra: &[(String, Vec<i64>, Vec<i64>)]) -> BorcherdsCartanMatrix {
    // extra: (label, column against the real indices, row against the other extras)
    let r = gcm.rank();
    let mut idx: Vec<String> = gcm.labels().to_vec();
    idx.extend(extra.iter().map(|e| e.0.clone()));
    let n = idx.len();
    let mut a = vec![vec![Scalar::zero(); n]; n];
    for i in 0..r {
        for j in 0..r {
            a[i][j] = Scalar::int(gcm.entry(i, j));
        }
    }
    for (p, (_, col, row)) in extra.iter().enumerate() {
        for i in 0..r {
            a[i][r + p] = Scalar::int(col[i]);
            a[r + p][i] = Scalar::int(col[i]);
        }
        for q in 0..extra.len() {
            a[r + p][r + q] = Scalar::int(row[q]);
        }
    }
    BorcherdsCartanMatrix::new(idx, a)
}

pub fn h3_bcm() -> BorcherdsCartanMatrix {
    extend(&h3_gcm(), &[(H3_IMAGINARY.to_string(), vec![-1, -1], vec![-2])])
}

/// Real part `gcm`, imaginary indices `indices` of `bcm`, each generating a
/// depth-`d` truncated irreducible module.
pub(crate) fn build_from_modules(
    id: &str,
    kind: ModelKind,
    caps: Caps,
    gcm: Gcm,
    bcm: BorcherdsCartanMatrix,
    indices: &[String],
) -> Result<ModelSpec> {
    caps.check_truncation()?;
    let depth = caps.need("depth", caps.depth)?;
    caps.need("height", caps.height)?;
    let mut d = Draft::new(gcm.clone(), bcm.clone());
    let mut blocks = Vec::new();
    let mut p = provenance(id, &caps);
    for index in indices {
        let lambda = highest_weight(&gcm, &bcm, index)?;
        let module = build_irreducible(&gcm, &lambda, depth)?;
        blocks.push(add_module(&mut d, index, &module));
        p.insert(format!("highest_weight[{index}]"), format!("{lambda:?}"));
    }
    let (alphabet, table) = d.finish()?;
    Ok(ModelSpec { id: id.to_string(), kind, caps, gcm, bcm, blocks, provenance: p, alphabet, table })
}

/// H(3) with one imaginary simple root `α₃`; `V′` is the depth-`d` truncation of
/// the irreducible module of highest weight `(1, 1)`.
pub fn build_h3(caps: Caps) -> Result<ModelSpec> {
    build_from_modules("h3", ModelKind::H3, caps, h3_gcm(), h3_bcm(), &[H3_IMAGINARY.to_string()])
}

/// `(α_i, λ_k)` for `λ_k = α₋₁ + (2+k)δ`.
pub fn e10_lambda_column(k: usize) -> Vec<i64> {
    let gcm = e10_gcm();
    let mut lam = e10_delta().iter().map(|x| x * (2 + k as i64)).collect::<Vec<_>>();
    lam[0] += 1;
    (0..gcm.rank()).map(|i| gcm.pair_simple(&lam, i)).collect()
}

pub fn e10_bcm(kmax: usize) -> BorcherdsCartanMatrix {
    let gcm = e10_gcm();
    let extra: Vec<_> = (0..=kmax)
        .map(|k| (lambda_index(k), e10_lambda_column(k), (0..=kmax).map(|q| -2 - (k + q) as i64).collect()))
        .collect();
    extend(&gcm, &extra)
}

/// E10 with imaginary simple roots `λ_0, …, λ_kmax`.
pub fn build_e10(kmax: usize, caps: Caps) -> Result<ModelSpec> {
    let indices: Vec<String> = (0..=kmax).map(lambda_index).collect();
    let mut spec = build_from_modules("e10", ModelKind::E10 { kmax }, caps, e10_gcm(), e10_bcm(kmax), &indices)?;
    spec.provenance.insert("kmax".into(), kmax.to_string());
    Ok(spec)
}
