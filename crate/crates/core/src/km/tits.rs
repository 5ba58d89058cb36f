//! Rank-2 prenilpotence and the Tits generators χ_α, w̃_i, h_i as G_J words.

use super::gcm::{Coeffs, Gcm};
use super::roots::RealRoots;
use crate::action::{e_label, f_label, KmLetter, KmWord};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// For a symmetric rank-2 matrix: finite type admits every pair with `α ≠ −β`;
/// otherwise real roots `xα₁ + yα₂` split into the branches `x > y` and `x < y`,
/// and a pair is prenilpotent exactly when both roots lie on one branch.
pub fn is_prenilpotent(a: &Gcm, real: &RealRoots, alpha: &[i64], beta: &[i64]) -> Result<bool> {
    if a.rank() != 2 {
        return Err(Error::InvalidGcm(format!("rank {} given, rank 2 expected", a.rank())));
    }
    for r in [alpha, beta] {
        if !real.is_real(r) {
            return Err(Error::WindowTooSmall(format!(
                "{} is not a real root of height at most {}",
                a.to_root(r),
                real.bound
            )));
        }
    }
    if alpha.iter().zip(beta).all(|(x, y)| *x == -y) {
        return Ok(false);
    }
    if a.entry(0, 1) * a.entry(1, 0) < 4 {
        return Ok(true);
    }
    let branch = |r: &[i64]| (r[0] - r[1]).signum();
    Ok(branch(alpha) == branch(beta))
}

/// Builds χ_α(u) for real roots by conjugating simple root groups with w̃_i.
#[derive(Clone, Debug)]
pub struct Tits<'a> {
    pub gcm: &'a Gcm,
    pub real: &'a RealRoots,
}

impl Tits<'_> {
    fn label(&self, i: usize) -> &str {
        &self.gcm.labels()[i]
    }

    /// `exp(u e_i)` or `exp(u f_i)`.
    pub fn simple(&self, i: usize, positive: bool, u: Scalar) -> KmWord {
        let gen = if positive { e_label(self.label(i)) } else { f_label(self.label(i)) };
        KmWord::letter(KmLetter::exp(&gen, u))
    }

    /// `w̃_i(s) = χ_i(s) χ_{−i}(−s⁻¹) χ_i(s)`.
    pub fn w_tilde(&self, i: usize, s: &Scalar) -> Result<KmWord> {
        let inv = s.recip().ok_or(Error::ZeroTorusParameter)?;
        Ok(self.simple(i, true, s.clone()).concat(&self.simple(i, false, -&inv)).concat(&self.simple(i, true, s.clone())))
    }

    /// `h_i(s) = w̃_i(s) w̃_i(1)⁻¹`.
    pub fn h(&self, i: usize, s: &Scalar) -> Result<KmWord> {
        Ok(self.w_tilde(i, s)?.concat(&self.w_tilde(i, &Scalar::one())?.inverse()?))
    }

    /// χ_α(u); for `α = r_i(α′)` this is `w̃_i χ_α′(u) w̃_i⁻¹`.
    pub fn chi(&self, alpha: &[i64], u: &Scalar) -> Result<KmWord> {
        let positive = alpha.iter().any(|&c| c > 0);
        let pos: Coeffs = if positive { alpha.to_vec() } else { alpha.iter().map(|c| -c).collect() };
        let parent = self.real.parents.get(&pos).ok_or_else(|| {
            Error::WindowTooSmall(format!("{} is not a real root within height {}", self.gcm.to_root(alpha), self.real.bound))
        })?;
        match parent {
            None => {
                let i = pos.iter().position(|&c| c == 1).expect("simple root");
                Ok(self.simple(i, positive, u.clone()))
            }
            Some((i, p)) => {
                let p: Coeffs = if positive { p.clone() } else { p.iter().map(|c| -c).collect() };
                let w = self.w_tilde(*i, &Scalar::one())?;
                Ok(w.concat(&self.chi(&p, u)?).concat(&w.inverse()?))
            }
        }
    }
}
