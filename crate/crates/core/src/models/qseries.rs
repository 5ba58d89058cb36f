//! Exact q-series: the modular function J, partition numbers and the gnome
//! multiplicity formula.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Truncated power series `Σ_{k<len} a_k q^k`.
type Series = Vec<BigInt>;

fn mul(a: &Series, b: &Series, len: usize) -> Series {
    let mut out = vec![BigInt::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// `a / b` for `b` with constant term ±1.
fn div(a: &Series, b: &Series, len: usize) -> Series {
    let b0 = &b[0];
    assert!(b0.is_one() || (-b0).is_one(), "leading coefficient must be a unit");
    let mut out = vec![BigInt::zero(); len];
    for k in 0..len {
        let mut acc = a.get(k).cloned().unwrap_or_default();
        for j in 1..=k {
            if let Some(bj) = b.get(j) {
                acc -= bj * &out[k - j];
            }
        }
        out[k] = acc * b0;
    }
    out
}

fn sigma(n: u64, k: u32) -> BigInt {
    (1..=n).filter(|d| n % d == 0).map(|d| BigInt::from(d).pow(k)).sum()
}

fn eisenstein(c: i64, k: u32, len: usize) -> Series {
    (0..len).map(|n| if n == 0 { BigInt::one() } else { BigInt::from(c) * sigma(n as u64, k) }).collect()
}

/// `Π_{n≥1} (1 − q^n)` truncated.
fn euler_product(len: usize) -> Series {
    let mut s = vec![BigInt::zero(); len];
    s[0] = BigInt::one();
    for n in 1..len {
        for k in (n..len).rev() {
            let t = s[k - n].clone();
            s[k] -= t;
        }
    }
    s
}

/// `c(−1), c(0), …, c(nmax)` of `J = E₄³/Δ − 744` with `Δ = q Π(1 − q^n)^24`.
pub fn j_coefficients(nmax: usize) -> Vec<BigInt> {
    let len = nmax + 2;
    let e4 = eisenstein(240, 3, len);
    let e4c = mul(&mul(&e4, &e4, len), &e4, len);
    let mut eta24 = vec![BigInt::zero(); len];
    eta24[0] = BigInt::one();
    let p = euler_product(len);
    for _ in 0..24 {
        eta24 = mul(&eta24, &p, len);
    }
    // q · J = E₄³ / Π(1 − q^n)^24 − 744 q
    let mut out = div(&e4c, &eta24, len);
    out[1] -= 744;
    out
}

/// The same coefficients from `J = 1728 E₄³/(E₄³ − E₆²) − 744`.
pub fn j_coefficients_eisenstein(nmax: usize) -> Vec<BigInt> {
    let len = nmax + 3;
    let e4 = eisenstein(240, 3, len);
    let e6 = eisenstein(-504, 5, len);
    let e4c = mul(&mul(&e4, &e4, len), &e4, len);
    let e6s = mul(&e6, &e6, len);
    // E₄³ − E₆² = 1728 q (1 + …); divide out 1728 q exactly
    let d: Series = e4c.iter().zip(&e6s).map(|(x, y)| x - y).collect();
    assert!(d[0].is_zero() && d[1] == BigInt::from(1728));
    let shifted: Series = d[1..].iter().map(|x| x / BigInt::from(1728)).collect();
    assert!(d[1..].iter().all(|x| (x % BigInt::from(1728)).is_zero()));
    let mut out = div(&e4c, &shifted, len - 1);
    out.truncate(nmax + 2);
    out[1] -= 744;
    out
}

/// `p(0), …, p(n)` by Euler's pentagonal recurrence.
pub fn partitions_upto(n: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); n + 1];
    p[0] = BigInt::one();
    for m in 1..=n {
        let mut acc = BigInt::zero();
        for k in 1.. {
            let k = k as i64;
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc += &p[m - g1] * sign;
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= m {
                acc += &p[m - g2] * sign;
            }
        }
        p[m] = acc;
    }
    p
}

pub fn partition_p(n: usize) -> BigInt {
    partitions_upto(n).pop().expect("nonempty")
}

/// `II₁(k) = p(k) − p(k − 1)`.
pub fn two_one(k: usize) -> BigInt {
    if k == 0 {
        return BigInt::one();
    }
    let p = partitions_upto(k);
    &p[k] - &p[k - 1]
}

/// `II₁(1 + mn)` for `n ≥ m ≥ 1`.
pub fn gnome_mult(m: usize, n: usize) -> Result<BigInt> {
    if m == 0 || n < m {
        return Err(Error::OutOfRange(format!("need n ≥ m ≥ 1, got m = {m}, n = {n}")));
    }
    Ok(two_one(1 + m * n))
}
