//! Seeded random elements for the verification suites.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::action::{GeneratorActionTable, KmLetter, KmWord, RowKind};
use crate::algebra::{Alphabet, GenId};
use crate::error::{Error, Result};
use crate::lie::{lyndon_words, LieSeries};
use crate::scalar::Scalar;
use crate::semidirect::{GroupElement, SemidirectGroup};

/// Attempts per sample before a suite gives up on the window.
pub const MAX_ATTEMPTS: usize = 200;

pub struct Sampler {
    rng: ChaCha8Rng,
    /// Draws discarded because an image left the materialized window.
    pub rejected: usize,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed), rejected: 0 }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// `p/q` with `|p| ≤ 3`, `1 ≤ q ≤ 3`.
    pub fn scalar(&mut self) -> Scalar {
        Scalar::ratio(self.rng.gen_range(-3..=3), self.rng.gen_range(1..=3))
    }

    pub fn nonzero(&mut self) -> Scalar {
        loop {
            let s = self.scalar();
            if !s.is_zero() {
                return s;
            }
        }
    }

    /// Sparse Lie series: a few nested brackets of random generators.
    pub fn lie(&mut self, alphabet: &Arc<Alphabet>, n: usize, terms: usize) -> Result<LieSeries> {
        let mut out = LieSeries::zero(alphabet, n);
        let ids: Vec<GenId> = alphabet.ids().collect();
        for _ in 0..terms {
            let d = self.rng.gen_range(1..=n.min(3));
            let g = *ids.choose(&mut self.rng).expect("nonempty alphabet");
            let mut t = LieSeries::generator(alphabet, g, self.nonzero(), n)?;
            for _ in 1..d {
                let h = *ids.choose(&mut self.rng).expect("nonempty alphabet");
                t = LieSeries::generator(alphabet, h, Scalar::one(), n)?.bracket(&t)?;
            }
            out = out.add(&t)?;
        }
        Ok(out)
    }

    /// Lie series with a random coefficient on roughly half of all Lyndon words up to `n`.
    pub fn dense_lie(&mut self, alphabet: &Arc<Alphabet>, n: usize) -> Result<LieSeries> {
        let mut coords = Vec::new();
        for d in 1..=n {
            for w in lyndon_words(alphabet, d) {
                if self.rng.gen_bool(0.5) {
                    coords.push((w.word().clone(), self.scalar()));
                }
            }
        }
        LieSeries::from_coords(alphabet, coords, n)
    }

    pub fn torus_parameter(&mut self) -> Scalar {
        let choices = [(2, 1), (-1, 1), (1, 2), (-3, 1), (2, 3), (-1, 2)];
        let (p, q) = *choices.choose(&mut self.rng).expect("nonempty");
        Scalar::ratio(p, q)
    }

    pub fn km_word(&mut self, table: &GeneratorActionTable, max_len: usize) -> KmWord {
        let len = self.rng.gen_range(1..=max_len);
        let rows = table.rows();
        let letters = (0..len)
            .map(|_| {
                let r = rows.choose(&mut self.rng).expect("nonempty table");
                match r.kind {
                    RowKind::H => KmLetter::torus(&r.label, self.torus_parameter()),
                    _ => KmLetter::exp(&r.label, self.nonzero()),
                }
            })
            .collect();
        KmWord::new(letters)
    }

    pub fn element(&mut self, group: &SemidirectGroup) -> Result<GroupElement> {
        let terms = self.rng.gen_range(1..=3);
        let log = self.lie(group.alphabet(), group.truncation(), terms)?;
        let g = self.km_word(group.table(), 3);
        group.element(log, g)
    }

    /// Runs `f` until it does not leave the window.
    pub fn retry<T>(&mut self, mut f: impl FnMut(&mut Sampler) -> Result<T>) -> Result<T> {
        for _ in 0..MAX_ATTEMPTS {
            match f(self) {
                Err(Error::WindowExceeded { .. }) => self.rejected += 1,
                other => return other,
            }
        }
        Err(Error::WindowTooSmall(format!("{MAX_ATTEMPTS} consecutive samples left the window")))
    }
}
