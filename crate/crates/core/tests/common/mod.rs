//! Oracles written from scratch, sharing no code with the library.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use borcherds_magnus::algebra::NcPolynomial;

pub fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

fn mobius(n: u64) -> i64 {
    let (mut n, mut mu, mut p) = (n, 1i64, 2u64);
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        -mu
    } else {
        mu
    }
}

/// Number of Lyndon words of length `n` over `k` letters, `(1/n) Σ_{d|n} μ(d) k^{n/d}`.
pub fn witt_count(k: u64, n: u64) -> u64 {
    let s: i128 = (1..=n).filter(|d| n % d == 0).map(|d| mobius(d) as i128 * (k as i128).pow((n / d) as u32)).sum();
    (s / n as i128) as u64
}

/// Partition numbers by counting with a largest-part bound.
pub fn partitions(n: usize) -> Vec<u64> {
    // t[m][k]: partitions of m with parts ≤ k
    let mut t = vec![vec![0u64; n + 1]; n + 1];
    for k in 0..=n {
        t[0][k] = 1;
    }
    for m in 1..=n {
        for k in 1..=n {
            t[m][k] = t[m][k - 1] + if k <= m { t[m - k][k] } else { 0 };
        }
    }
    (0..=n).map(|m| t[m][n]).collect()
}

/// `II₁(k) = p(k) − p(k−1)`, with `II₁(0) = 1`.
pub fn two_one(k: usize) -> i128 {
    let p = partitions(k.max(1));
    if k == 0 {
        1
    } else {
        p[k] as i128 - p[k - 1] as i128
    }
}

/// `c(−1), …, c(nmax)` of `J` from `E₆²/Δ + 984`.
pub fn j_via_e6(nmax: usize) -> Vec<i128> {
    let len = nmax + 2;
    let sigma5 = |n: usize| -> i128 { (1..=n).filter(|d| n % d == 0).map(|d| (d as i128).pow(5)).sum() };
    let e6: Vec<i128> = (0..len).map(|n| if n == 0 { 1 } else { -504 * sigma5(n) }).collect();
    let mul = |a: &[i128], b: &[i128]| -> Vec<i128> {
        let mut o = vec![0i128; len];
        for i in 0..len {
            for j in 0..len - i {
                o[i + j] += a[i] * b[j];
            }
        }
        o
    };
    let e6s = mul(&e6, &e6);
    // Π (1 − q^n)^{-24}, one factor 1/(1 − q^n) at a time
    let mut inv = vec![0i128; len];
    inv[0] = 1;
    for _ in 0..24 {
        for n in 1..len {
            for k in n..len {
                inv[k] += inv[k - n];
            }
        }
    }
    let mut out = mul(&e6s, &inv);
    out[1] += 984;
    out
}

/// Noncommutative series over letters with rational coefficients, truncated at `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    pub n: usize,
    pub terms: BTreeMap<Vec<u32>, BigRational>,
}

impl Series {
    pub fn from_poly(p: &NcPolynomial, n: usize) -> Self {
        let mut s = Series { n, terms: BTreeMap::new() };
        for (w, c) in p.terms() {
            if w.len() <= n {
                s.terms.insert(w.letters().to_vec(), c.as_rational().clone());
            }
        }
        s.clean()
    }

    fn clean(mut self) -> Self {
        self.terms.retain(|_, c| !c.is_zero());
        self
    }

    pub fn add(&self, o: &Series) -> Series {
        let mut t = self.terms.clone();
        for (w, c) in &o.terms {
            *t.entry(w.clone()).or_insert_with(BigRational::zero) += c;
        }
        Series { n: self.n, terms: t }.clean()
    }

    pub fn scale(&self, k: &BigRational) -> Series {
        Series { n: self.n, terms: self.terms.iter().map(|(w, c)| (w.clone(), c * k)).collect() }.clean()
    }

    pub fn mul(&self, o: &Series) -> Series {
        let mut t: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                if a.len() + b.len() <= self.n {
                    let mut w = a.clone();
                    w.extend(b);
                    *t.entry(w).or_insert_with(BigRational::zero) += x * y;
                }
            }
        }
        Series { n: self.n, terms: t }.clean()
    }

    pub fn br(&self, o: &Series) -> Series {
        self.mul(o).add(&o.mul(self).scale(&rat(-1, 1)))
    }
}

/// `X + Y + ½[X,Y] + (1/12)[X,[X,Y]] − (1/12)[Y,[X,Y]] − (1/24)[Y,[X,[X,Y]]]`, exact through degree 4.
pub fn bch_degree4(x: &Series, y: &Series) -> Series {
    let xy = x.br(y);
    let xxy = x.br(&xy);
    let yxy = y.br(&xy);
    let yxxy = y.br(&xxy);
    x.add(y).add(&xy.scale(&rat(1, 2))).add(&xxy.scale(&rat(1, 12))).add(&yxy.scale(&rat(-1, 12))).add(&yxxy.scale(&rat(-1, 24)))
}

/// `⟨β, α_i^∨⟩ = Σ_j a_ij β_j`.
fn coroot(a: &[Vec<i64>], i: usize, beta: &[i64]) -> i64 {
    a[i].iter().zip(beta).map(|(x, y)| x * y).sum()
}

/// Kostant partition count of `gamma` as a sum of the listed positive roots, with multiplicity.
pub fn kostant(roots: &[(Vec<i64>, u64)], gamma: &[i64]) -> u64 {
    fn go(roots: &[(Vec<i64>, u64)], gamma: &mut Vec<i64>, from: usize) -> u64 {
        if gamma.iter().all(|&x| x == 0) {
            return 1;
        }
        let mut total = 0;
        for r in from..roots.len() {
            let root = &roots[r].0;
            if gamma.iter().zip(root).all(|(g, x)| g >= x) {
                for (g, x) in gamma.iter_mut().zip(root) {
                    *g -= x;
                }
                total += go(roots, gamma, r);
                for (g, x) in gamma.iter_mut().zip(root) {
                    *g += x;
                }
            }
        }
        total
    }
    // expand multiplicities into separate part types so ordering counts multisets
    let expanded: Vec<(Vec<i64>, u64)> = roots.iter().flat_map(|(r, m)| (0..*m).map(move |_| (r.clone(), 1))).collect();
    go(&expanded, &mut gamma.to_vec(), 0)
}

/// Weight-space dimensions of `L(λ)` at `λ − β`, `ht β ≤ depth`, by the Weyl–Kac
/// alternating sum over the dot orbit of `λ`. `roots` must list every positive root
/// of height at most `depth` with its multiplicity.
pub fn weyl_kac_dims(a: &[Vec<i64>], lambda: &[i64], depth: i64, roots: &[(Vec<i64>, u64)]) -> BTreeMap<Vec<i64>, i64> {
    let r = a.len();
    // orbit points β_w = λ − w·λ with sign (−1)^{ℓ(w)}
    let mut orbit: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    let mut q = VecDeque::from([(vec![0i64; r], 1i64)]);
    orbit.insert(vec![0; r], 1);
    while let Some((b, sign)) = q.pop_front() {
        for i in 0..r {
            let k = lambda[i] - coroot(a, i, &b) + 1;
            if k <= 0 {
                continue;
            }
            let mut nb = b.clone();
            nb[i] += k;
            if nb.iter().sum::<i64>() <= depth && !orbit.contains_key(&nb) {
                orbit.insert(nb.clone(), -sign);
                q.push_back((nb, -sign));
            }
        }
    }
    let mut out = BTreeMap::new();
    let mut all = vec![vec![]];
    for _ in 0..r {
        all = all.into_iter().flat_map(|v: Vec<i64>| (0..=depth).map(move |x| [v.clone(), vec![x]].concat())).collect();
    }
    for beta in all.into_iter().filter(|b| b.iter().sum::<i64>() <= depth) {
        let mut d = 0i64;
        for (bw, s) in &orbit {
            let g: Vec<i64> = beta.iter().zip(bw).map(|(x, y)| x - y).collect();
            if g.iter().all(|&x| x >= 0) {
                d += s * kostant(roots, &g) as i64;
            }
        }
        out.insert(beta, d);
    }
    out
}

/// Prenilpotence by brute force: some Weyl element makes both roots positive and some
/// makes both negative. Words in the simple reflections up to `len` are enumerated.
pub fn prenilpotent_brute(a: &[Vec<i64>], alpha: &[i64], beta: &[i64], len: usize) -> bool {
    let reflect = |i: usize, x: &[i64]| -> Vec<i64> {
        let mut y = x.to_vec();
        y[i] -= coroot(a, i, x);
        y
    };
    let pos = |x: &[i64]| x.iter().all(|&v| v >= 0);
    let neg = |x: &[i64]| x.iter().all(|&v| v <= 0);
    let (mut both_pos, mut both_neg) = (false, false);
    let mut seen = BTreeSet::new();
    let mut layer = vec![(alpha.to_vec(), beta.to_vec())];
    for _ in 0..=len {
        let mut next = Vec::new();
        for (x, y) in layer {
            both_pos |= pos(&x) && pos(&y);
            both_neg |= neg(&x) && neg(&y);
            if !seen.insert((x.clone(), y.clone())) {
                continue;
            }
            for i in 0..a.len() {
                next.push((reflect(i, &x), reflect(i, &y)));
            }
        }
        layer = next;
    }
    both_pos && both_neg
}

/// Points `⟨A,B⟩` with `A, B ≤ 12` and `AB ≤ 11`, closed under going down in either coordinate.
pub fn gnome_region() -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for a in 0..=12 {
        for b in 0..=12 {
            if a * b <= 11 {
                v.push((a, b));
            }
        }
    }
    v
}

pub type Grid = BTreeMap<(usize, usize), i128>;

/// `1 − Π_{a,b ≥ 1} (1 − X^a Y^b)^{c(a,b)}` on the gnome region.
pub fn gnome_product(c: impl Fn(usize, usize) -> i128) -> Grid {
    let region = gnome_region();
    let mut prod: Grid = region.iter().map(|&p| (p, 0)).collect();
    prod.insert((0, 0), 1);
    for &(a, b) in &region {
        if a == 0 || b == 0 {
            continue;
        }
        let e = c(a, b);
        // (1 − X^a Y^b)^e = Σ_t (−1)^t C(e, t) X^{ta} Y^{tb}, walking points from the top down
        for &(x, y) in region.iter().rev() {
            let mut binom = 1i128;
            for t in 1.. {
                if x < t * a || y < t * b {
                    break;
                }
                binom = binom * (e - t as i128 + 1) / t as i128;
                let lower = prod[&(x - t * a, y - t * b)];
                let sign = if t % 2 == 1 { -1 } else { 1 };
                *prod.get_mut(&(x, y)).unwrap() += sign * binom * lower;
            }
        }
    }
    let mut out: Grid = prod.iter().map(|(&p, &v)| (p, -v)).collect();
    *out.get_mut(&(0, 0)).unwrap() += 1;
    out
}

/// Highest-weight counts `ch⟨ℓ,n⟩ − ch⟨ℓ−1,n+1⟩` for `ℓ ≥ 1`, keyed by `⟨ℓ,n⟩`.
pub fn string_heads(ch: &Grid) -> BTreeMap<(usize, usize), i128> {
    let mut out = BTreeMap::new();
    for (&(l, n), &v) in ch {
        if l == 0 || n == 0 {
            continue;
        }
        if let Some(&up) = ch.get(&(l - 1, n + 1)) {
            out.insert((l, n), v - up);
        }
    }
    out
}

/// Rebuilds `ch V′` from highest-weight counts as sums of strings `⟨ℓ+t, n−t⟩`.
pub fn character_from_strings(heads: &BTreeMap<(usize, usize), i128>) -> Grid {
    let mut ch: Grid = gnome_region().into_iter().map(|p| (p, 0)).collect();
    for (&(l, n), &m) in heads {
        for t in 0..=n.saturating_sub(l) {
            if let Some(v) = ch.get_mut(&(l + t, n - t)) {
                *v += m;
            }
        }
    }
    ch
}

/// Root multiplicities from `Π (1 − e^α)^{mult α} = 1 − ch V′`: take `−log(1 − ch V′)`
/// and invert `c_β = Σ_{d|β} mult(β/d)/d` by Möbius.
pub fn multiplicities_from_character(ch: &Grid) -> BTreeMap<(usize, usize), BigRational> {
    let region = gnome_region();
    let to_rat = |g: &Grid| -> BTreeMap<(usize, usize), BigRational> {
        g.iter().map(|(&p, &v)| (p, BigRational::from_integer(BigInt::from(v)))).collect()
    };
    let mut base = to_rat(ch);
    base.insert((0, 0), BigRational::zero());
    let mul = |x: &BTreeMap<(usize, usize), BigRational>, y: &BTreeMap<(usize, usize), BigRational>| {
        let mut o: BTreeMap<(usize, usize), BigRational> = region.iter().map(|&p| (p, BigRational::zero())).collect();
        for (&(a, b), u) in x {
            if u.is_zero() {
                continue;
            }
            for (&(c, d), v) in y {
                if let Some(slot) = o.get_mut(&(a + c, b + d)) {
                    *slot += u * v;
                }
            }
        }
        o
    };
    let mut log: BTreeMap<(usize, usize), BigRational> = region.iter().map(|&p| (p, BigRational::zero())).collect();
    let mut pw = base.clone();
    // every term of ch V′ has A + B ≥ 2 and the region has A + B ≤ 13
    for k in 1..=6 {
        for (p, v) in &pw {
            *log.get_mut(p).unwrap() += v / BigInt::from(k);
        }
        pw = mul(&pw, &base);
    }
    let mut out = BTreeMap::new();
    for &(a, b) in &region {
        if a == 0 || b == 0 {
            continue;
        }
        let g = num_integer::gcd(a, b);
        let mut m = BigRational::zero();
        for d in (1..=g).filter(|d| g % d == 0) {
            let mu = mobius(d as u64);
            if mu != 0 {
                m += &log[&(a / d, b / d)] * rat(mu, d as i64);
            }
        }
        out.insert((a, b), m);
    }
    out
}

/// 2×2 rational matrices for checking SL₂ identities directly.
pub type Mat = [[BigRational; 2]; 2];

pub fn mat(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Mat {
    [[a, b], [c, d]]
}

pub fn mmul(x: &Mat, y: &Mat) -> Mat {
    let e = |i: usize, j: usize| &x[i][0] * &y[0][j] + &x[i][1] * &y[1][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

pub fn upper(s: &BigRational) -> Mat {
    mat(BigRational::one(), s.clone(), BigRational::zero(), BigRational::one())
}

pub fn lower(s: &BigRational) -> Mat {
    mat(BigRational::one(), BigRational::zero(), s.clone(), BigRational::one())
}

pub fn torus(s: &BigRational) -> Mat {
    mat(s.clone(), BigRational::zero(), BigRational::zero(), s.recip())
}

pub fn product(ms: &[Mat]) -> Mat {
    ms.iter().skip(1).fold(ms[0].clone(), |acc, m| mmul(&acc, m))
}

pub fn is_nonnegative(m: &BigRational) -> bool {
    !m.is_negative()
}
