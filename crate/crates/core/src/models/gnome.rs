//! The gnome Lie algebra on the lattice II₁,₁ with coordinates `⟨ℓ,n⟩` and
//! `⟨ℓ,n⟩·⟨ℓ′,n′⟩ = −ℓn′ − ℓ′n`.

use std::collections::BTreeMap;

use num_bigint::{BigInt, Sign};
use num_traits::{One, ToPrimitive, Zero};

use super::qseries::two_one;
use super::spec::{provenance, sl2_string, Block, Caps, Draft, ModelKind, ModelSpec};
use crate::algebra::{BorcherdsCartanMatrix, RootVector};
use crate::error::{Error, Result};
use crate::km::Gcm;
use crate::scalar::Scalar;

pub const REAL: &str = "-1";

pub fn lc_pair(x: (i64, i64), y: (i64, i64)) -> i64 {
    -x.0 * y.1 - y.0 * x.1
}

pub fn root_index(l: usize, n: usize, k: usize) -> String {
    format!("<{l},{n};{k}>")
}

/// Coefficients `[ℓ][n]` of `X^ℓ Y^n` for `ℓ ≤ lmax`, `n ≤ nmax`.
pub type Grid = Vec<Vec<BigInt>>;

fn binom_signed(c: &BigInt, t: usize) -> BigInt {
    // (−1)^t C(c, t)
    let mut r = BigInt::one();
    for s in 0..t {
        r = r * (c - s) / (s + 1);
    }
    if t % 2 == 1 {
        -r
    } else {
        r
    }
}

/// `1 − Π_{ℓ,n ≥ 1} (1 − X^ℓ Y^n)^{II₁(1+ℓn)}`, the character of `V′` read off
/// the denominator identity with `X^ℓY^n ↔ e^{−⟨ℓ,n⟩}`.
pub fn vprime_character(lmax: usize, nmax: usize) -> Grid {
    let mut prod: Grid = vec![vec![BigInt::zero(); nmax + 1]; lmax + 1];
    prod[0][0] = BigInt::one();
    for a in 1..=lmax {
        for b in 1..=nmax {
            let c = two_one(1 + a * b);
            let tmax = (lmax / a).min(nmax / b);
            let factor: Vec<BigInt> = (0..=tmax).map(|t| binom_signed(&c, t)).collect();
            let mut next: Grid = vec![vec![BigInt::zero(); nmax + 1]; lmax + 1];
            for l in 0..=lmax {
                for n in 0..=nmax {
                    if prod[l][n].is_zero() {
                        continue;
                    }
                    for (t, f) in factor.iter().enumerate() {
                        let (l2, n2) = (l + a * t, n + b * t);
                        if l2 > lmax || n2 > nmax {
                            break;
                        }
                        next[l2][n2] += &prod[l][n] * f;
                    }
                }
            }
            prod = next;
        }
    }
    for row in prod.iter_mut() {
        for x in row.iter_mut() {
            *x = -&*x;
        }
    }
    prod[0][0] += 1;
    prod
}

/// Number `m_⟨ℓ,n⟩` of sl₂ highest weight vectors of degree `−⟨ℓ,n⟩` in `V′`,
/// for `1 ≤ ℓ ≤ lmax`, `ℓ ≤ n ≤ nmax`. Raising by `e₋₁` moves `⟨ℓ,n⟩` to `⟨ℓ−1,n+1⟩`.
pub fn simple_multiplicities(lmax: usize, nmax: usize) -> Result<BTreeMap<(usize, usize), BigInt>> {
    let (rows, cols) = (lmax.max(nmax + 1), nmax + 1);
    let ch = vprime_character(rows, cols);
    // below the wall the character must mirror the one above it
    for l in 1..=cols {
        for n in 1..l {
            if ch[l][n] != ch[n][l] {
                return Err(Error::InconsistentModule(format!("character not reflection symmetric at <{l},{n}>")));
            }
        }
    }
    let mut out = BTreeMap::new();
    for l in 1..=lmax {
        for n in l..=nmax {
            let m = &ch[l][n] - &ch[l - 1][n + 1];
            if m.sign() == Sign::Minus {
                return Err(Error::InconsistentModule(format!("negative multiplicity at <{l},{n}>")));
            }
            out.insert((l, n), m);
        }
    }
    Ok(out)
}

/// Imaginary simple roots `⟨ℓ,n⟩` in bounds, each with `min(m_α, kcap)` copies of
/// the sl₂ module of highest weight `n − ℓ` generated by `f_{−α}`.
pub fn build_gnome(lmax: usize, nmax: usize, caps: Caps) -> Result<ModelSpec> {
    caps.check_truncation()?;
    let kcap = caps.need("kcap", caps.kcap)?;
    if lmax == 0 || nmax == 0 {
        return Err(Error::InvalidCaps("lmax and nmax must be at least 1".into()));
    }
    let mults = simple_multiplicities(lmax, nmax)?;
    let mut roots = Vec::new();
    for (&(l, n), m) in &mults {
        let copies = m.to_usize().map_or(kcap, |x| x.min(kcap));
        for k in 1..=copies {
            roots.push((l, n, k, m.clone()));
        }
    }
    let mut idx = vec![REAL.to_string()];
    let mut vecs = vec![(1i64, -1i64)];
    for (l, n, k, _) in &roots {
        idx.push(root_index(*l, *n, *k));
        vecs.push((*l as i64, *n as i64));
    }
    let a: Vec<Vec<Scalar>> = vecs.iter().map(|&x| vecs.iter().map(|&y| Scalar::int(lc_pair(x, y))).collect()).collect();
    let bcm = BorcherdsCartanMatrix::new(idx, a);
    let mut d = Draft::new(Gcm::sl2(REAL), bcm.clone());
    let mut blocks = Vec::new();
    for (l, n, k, m) in &roots {
        let index = root_index(*l, *n, *k);
        let gens: Vec<_> = (0..=(n - l))
            .map(|t| {
                let deg = &(-&RootVector::simple(&index)) - &RootVector::simple(REAL).scale(t as i64);
                d.push(format!("f[t={t},ℓ={l},n={n},k={k}]"), deg)
            })
            .collect();
        sl2_string(&mut d, 0, &gens);
        blocks.push(Block { index, dim: gens.len(), multiplicity: m.to_string(), generators: gens });
    }
    let (alphabet, table) = d.finish()?;
    let mut p = provenance("gnome", &caps);
    p.insert("lmax".into(), lmax.to_string());
    p.insert("nmax".into(), nmax.to_string());
    let zero: Vec<String> = mults.iter().filter(|(_, m)| m.is_zero()).map(|((l, n), _)| format!("<{l},{n}>")).collect();
    p.insert("roots_without_generators".into(), zero.join(" "));
    Ok(ModelSpec {
        id: "gnome".into(),
        kind: ModelKind::Gnome { lmax, nmax },
        caps,
        gcm: Gcm::sl2(REAL),
        bcm,
        blocks,
        provenance: p,
        alphabet,
        table,
    })
}
