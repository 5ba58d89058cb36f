//! The Monster Lie algebra and Fricke-type algebras: one real simple root `α₋₁`
//! and imaginary simple roots `α_{jk}` sized by q-series coefficients.

use std::collections::{BTreeMap, BTreeSet};
use std::io::Read;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::qseries::j_coefficients;
use super::spec::{provenance, sl2_string, Block, Caps, Draft, ModelKind, ModelSpec};
use crate::algebra::{BorcherdsCartanMatrix, RootVector};
use crate::error::{Error, Result};
use crate::km::Gcm;
use crate::scalar::Scalar;

pub const REAL: &str = "-1";

pub fn block_index(j: usize, k: usize) -> String {
    format!("({j},{k})")
}

/// Coefficients `c_g(1, n/N)` of `q^{-1/N} + Σ_{n>0} c_g(1, n/N) q^{n/N}`, keyed by `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientTable {
    pub n: u32,
    pub coeffs: BTreeMap<i64, BigInt>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableJson {
    #[serde(rename = "N")]
    n: u32,
    coeffs: BTreeMap<String, serde_json::Value>,
}

fn value_to_int(v: &serde_json::Value) -> Result<BigInt> {
    match v {
        serde_json::Value::Number(x) if x.is_i64() || x.is_u64() => {
            x.to_string().parse().map_err(|_| Error::MalformedTable(format!("bad coefficient {x}")))
        }
        serde_json::Value::String(s) => s.trim().parse().map_err(|_| Error::MalformedTable(format!("bad coefficient `{s}`"))),
        other => Err(Error::MalformedTable(format!("coefficient {other} is not an integer"))),
    }
}

impl CoefficientTable {
    pub fn new(n: u32, coeffs: BTreeMap<i64, BigInt>) -> Result<Self> {
        let t = CoefficientTable { n, coeffs };
        t.validate()?;
        Ok(t)
    }

    /// The table of `J` itself (`N = 1`).
    pub fn identity_class(nmax: usize) -> Self {
        let c = j_coefficients(nmax);
        let coeffs = c.into_iter().enumerate().map(|(p, x)| (p as i64 - 1, x)).collect();
        CoefficientTable { n: 1, coeffs }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::MalformedTable("N must be positive".into()));
        }
        if self.coeffs.get(&-1) != Some(&BigInt::one()) {
            return Err(Error::MalformedTable(format!("c(-1/{}) must be 1", self.n)));
        }
        for (&e, c) in &self.coeffs {
            if e < -1 {
                return Err(Error::MalformedTable(format!("exponent {e}/{} below the pole", self.n)));
            }
            if e > 0 && c.is_negative() {
                return Err(Error::MalformedTable(format!("c({e}/{}) = {c} is negative", self.n)));
            }
        }
        Ok(())
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    fn exponent(&self, key: &str) -> Result<i64> {
        let q: Scalar = key.parse().map_err(|_| Error::MalformedTable(format!("bad exponent `{key}`")))?;
        let e = &q * &Scalar::int(self.n as i64);
        e.to_i64()
            .filter(|_| e.is_integer())
            .ok_or_else(|| Error::MalformedTable(format!("exponent {key} is not a multiple of 1/{}", self.n)))
    }

    fn key(&self, e: i64) -> String {
        format!("{e}/{}", self.n)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let j: TableJson = serde_json::from_str(s).map_err(|e| Error::MalformedTable(e.to_string()))?;
        Self::from_raw(j)
    }

    fn from_raw(j: TableJson) -> Result<Self> {
        let mut t = CoefficientTable { n: j.n, coeffs: BTreeMap::new() };
        if t.n == 0 {
            return Err(Error::MalformedTable("N must be positive".into()));
        }
        for (k, v) in &j.coeffs {
            let e = t.exponent(k)?;
            if t.coeffs.insert(e, value_to_int(v)?).is_some() {
                return Err(Error::MalformedTable(format!("exponent {k} listed twice")));
            }
        }
        t.validate()?;
        Ok(t)
    }

    /// Rows `exponent,coefficient`; a leading header row is skipped.
    pub fn from_csv(n: u32, r: impl Read) -> Result<Self> {
        let mut rd = csv::ReaderBuilder::new().has_headers(false).trim(csv::Trim::All).from_reader(r);
        let mut raw = TableJson { n, coeffs: BTreeMap::new() };
        for (p, rec) in rd.records().enumerate() {
            let rec = rec.map_err(|e| Error::MalformedTable(e.to_string()))?;
            if rec.len() != 2 {
                return Err(Error::MalformedTable(format!("line {}: expected 2 fields", p + 1)));
            }
            if p == 0 && rec[0].parse::<Scalar>().is_err() {
                continue;
            }
            if raw.coeffs.insert(rec[0].to_string(), serde_json::Value::String(rec[1].to_string())).is_some() {
                return Err(Error::MalformedTable(format!("line {}: exponent {} repeated", p + 1, &rec[0])));
            }
        }
        Self::from_raw(raw)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.raw()).expect("tables serialize")
    }

    fn raw(&self) -> TableJson {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&e, c)| {
                let v = match c.to_i64() {
                    Some(x) => serde_json::Value::from(x),
                    None => serde_json::Value::String(c.to_string()),
                };
                (self.key(e), v)
            })
            .collect();
        TableJson { n: self.n, coeffs }
    }
}

impl Serialize for CoefficientTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.raw().serialize(s)
    }
}

impl<'de> Deserialize<'de> for CoefficientTable {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = TableJson::deserialize(d)?;
        CoefficientTable::from_raw(raw).map_err(serde::de::Error::custom)
    }
}

fn capped(c: &BigInt, kcap: usize) -> usize {
    if c.sign() != Sign::Plus {
        return 0;
    }
    c.to_usize().map_or(kcap, |x| x.min(kcap))
}

/// Shared builder: blocks `(j, copies, multiplicity)` with strings of length `dim(j)`,
/// `a_{-1,(jk)} = real_pair(j)` and `a_{(jk),(pq)} = −(j+p)`.
fn build_strings(
    id: &str,
    kind: ModelKind,
    caps: Caps,
    blocks: &[(usize, usize, BigInt)],
    dim: impl Fn(usize) -> usize,
    real_pair: impl Fn(usize) -> i64,
    label: impl Fn(usize, usize, usize) -> String,
) -> Result<ModelSpec> {
    let gcm = Gcm::sl2(REAL);
    let mut idx = vec![REAL.to_string()];
    let mut js = vec![0usize];
    for &(j, copies, _) in blocks {
        for k in 1..=copies {
            idx.push(block_index(j, k));
            js.push(j);
        }
    }
    let n = idx.len();
    let mut a = vec![vec![Scalar::zero(); n]; n];
    a[0][0] = Scalar::int(2);
    for p in 1..n {
        a[0][p] = Scalar::int(real_pair(js[p]));
        a[p][0] = a[0][p].clone();
        for q in 1..n {
            a[p][q] = Scalar::int(-((js[p] + js[q]) as i64));
        }
    }
    let bcm = BorcherdsCartanMatrix::new(idx, a);
    let mut d = Draft::new(gcm, bcm);
    let mut out = Vec::new();
    for (j, copies, mult) in blocks {
        for k in 1..=*copies {
            let index = block_index(*j, k);
            let top = -&RootVector::simple(&index);
            let gens: Vec<_> = (0..dim(*j))
                .map(|l| {
                    let deg = &top - &RootVector::simple(REAL).scale(l as i64);
                    d.push(label(l, *j, k), deg)
                })
                .collect();
            sl2_string(&mut d, 0, &gens);
            out.push(Block { index, dim: gens.len(), multiplicity: mult.to_string(), generators: gens });
        }
    }
    let gcm = d.gcm.clone();
    let bcm = d.bcm.clone();
    let (alphabet, table) = d.finish()?;
    Ok(ModelSpec { id: id.to_string(), kind, provenance: provenance(id, &caps), caps, gcm, bcm, blocks: out, alphabet, table })
}

pub fn monster_label(l: usize, j: usize, k: usize) -> String {
    format!("f[ℓ={l},j={j},k={k}]")
}

/// Blocks of dimension `j` for `1 ≤ j ≤ max_block`, `min(c(j), kcap)` copies each.
pub fn build_monster(caps: Caps) -> Result<ModelSpec> {
    caps.check_truncation()?;
    let jmax = caps.need("max_block", caps.max_block)?;
    let kcap = caps.need("kcap", caps.kcap)?;
    let c = j_coefficients(jmax);
    let blocks: Vec<_> = (1..=jmax).map(|j| (j, capped(&c[j + 1], kcap), c[j + 1].clone())).collect();
    let mut spec = build_strings(
        "monster",
        ModelKind::Monster,
        caps,
        &blocks,
        |j| j,
        |j| 1 - j as i64,
        monster_label,
    )?;
    spec.provenance.insert("block_dimension".into(), "j".into());
    Ok(spec)
}

/// Blocks of dimension `j + 1`, `min(c_g(1, j/N), kcap)` copies each.
pub fn build_fricke(table: &CoefficientTable, caps: Caps) -> Result<ModelSpec> {
    caps.check_truncation()?;
    table.validate()?;
    let jmax = caps.need("max_block", caps.max_block)?;
    let kcap = caps.need("kcap", caps.kcap)?;
    let blocks: Vec<_> = (1..=jmax)
        .map(|j| (j, capped(&table.coeff(j as i64), kcap), table.coeff(j as i64)))
        .filter(|b| b.1 > 0)
        .collect();
    let id = format!("fricke-{}", table.n);
    let mut spec = build_strings(
        &id,
        ModelKind::Fricke { n: table.n, table: table.clone() },
        caps,
        &blocks,
        |j| j + 1,
        |j| -(j as i64),
        monster_label,
    )?;
    spec.provenance.insert("block_dimension".into(), "j+1".into());
    spec.provenance.insert("N".into(), table.n.to_string());
    Ok(spec)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSets {
    pub include_zero: bool,
    pub r_prime: BTreeSet<RootVector>,
    pub s_prime: BTreeSet<RootVector>,
}

/// `R′ = {(a−bℓ)α₋₁ − bα_{jk} : a−bℓ < j}` and `S′ = {−(a+bℓ)α₋₁ − bα_{jk} : a+bℓ < j}`
/// for `a ≤ amax`, `b ≤ bmax`, with `a, b ≥ 1` unless `include_zero`.
pub fn monster_root_sets(l: usize, j: usize, k: usize, amax: usize, bmax: usize, include_zero: bool) -> RootSets {
    let lo = usize::from(!include_zero);
    let index = block_index(j, k);
    let (l, j) = (l as i64, j as i64);
    let mut r_prime = BTreeSet::new();
    let mut s_prime = BTreeSet::new();
    for a in lo..=amax {
        for b in lo..=bmax {
            let (a, b) = (a as i64, b as i64);
            let v = |c: i64| RootVector::from_pairs([(REAL, c), (index.as_str(), -b)]);
            if a - b * l < j {
                r_prime.insert(v(a - b * l));
            }
            if a + b * l < j {
                s_prime.insert(v(-(a + b * l)));
            }
        }
    }
    RootSets { include_zero, r_prime, s_prime }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::{derive, e_label, f_label, RowKind};
    use crate::algebra::NcPolynomial;

    #[test]
    fn monster_blocks_have_dimension_j() {
        let m = build_monster(Caps::monster()).unwrap();
        let dims: Vec<usize> = m.blocks.iter().map(|b| b.dim).collect();
        assert_eq!(dims, vec![1, 1, 2, 2, 3, 3]);
        assert_eq!(m.blocks[0].multiplicity, "196884");
        assert!(m.check().unwrap().passed());
    }

    #[test]
    fn monster_string_coefficients() {
        let m = build_monster(Caps::monster()).unwrap();
        let v = m.generator(&monster_label(0, 2, 1)).unwrap();
        let p = NcPolynomial::generator(&m.alphabet, v, 1).unwrap();
        let q = derive(&m.table, &e_label(REAL), &derive(&m.table, &f_label(REAL), &p).unwrap()).unwrap();
        assert_eq!(q, p);
        let one = m.generator(&monster_label(0, 1, 1)).unwrap();
        for kind in [RowKind::E, RowKind::F] {
            let row = m.table.rows().iter().find(|r| r.kind == kind).unwrap();
            assert_eq!(row.image(one), Some(&Vec::new()));
        }
        let top = m.alphabet.get(m.generator(&monster_label(0, 3, 2)).unwrap()).unwrap();
        assert_eq!(top.weights["h_{-1}"], Scalar::int(2));
    }

    #[test]
    fn fricke_identity_class() {
        let f = build_fricke(&CoefficientTable::identity_class(4), Caps::monster()).unwrap();
        assert_eq!(f.blocks.iter().map(|b| b.dim).collect::<Vec<_>>(), vec![2, 2, 3, 3, 4, 4]);
        let top = f.alphabet.get(f.blocks[2].generators[0]).unwrap();
        assert_eq!(top.weights["h_{-1}"], Scalar::int(2));
        assert!(f.check().unwrap().passed());
    }

    #[test]
    fn tables_parse_and_validate() {
        let t = CoefficientTable::from_json_str(r#"{"N": 2, "coeffs": {"-1/2": 1, "1/2": 4372, "3/2": "96256"}}"#).unwrap();
        assert_eq!(t.coeff(3), BigInt::from(96256));
        assert_eq!(CoefficientTable::from_json_str(&t.to_json_string()).unwrap(), t);
        assert!(CoefficientTable::from_json_str(r#"{"N": 2, "coeffs": {"1/2": 4372}}"#).is_err());
        let csv = "exponent,coefficient\n-1/3,1\n1/3,783\n";
        assert_eq!(CoefficientTable::from_csv(3, csv.as_bytes()).unwrap().coeff(1), BigInt::from(783));
    }

    #[test]
    fn root_set_conventions() {
        let s = monster_root_sets(0, 1, 1, 3, 1, true);
        let b1: Vec<_> = s.r_prime.iter().filter(|r| r.coord("(1,1)") == -1).collect();
        assert_eq!(b1, vec![&RootVector::from_pairs([("(1,1)", -1)])]);
        let e = monster_root_sets(0, 1, 1, 0, 0, false);
        assert!(e.r_prime.is_empty() && e.s_prime.is_empty());
        let t = monster_root_sets(2, 3, 1, 4, 1, true);
        assert!(t.s_prime.iter().all(|r| !(r.coord("(3,1)") == -1 && r.coord(REAL) < -2)));
    }
}
