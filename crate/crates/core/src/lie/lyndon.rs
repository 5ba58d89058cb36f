//! Lyndon words and their standard bracketings.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use once_cell::sync::Lazy;

use crate::algebra::{Alphabet, GenId, NcPolynomial, Word};
use crate::error::Result;
use crate::scalar::Scalar;

/// True when `w` is strictly smaller than each of its proper rotations.
pub fn is_lyndon(w: &[GenId]) -> bool {
    let n = w.len();
    if n == 0 {
        return false;
    }
    (1..n).all(|r| {
        let rot = w[r..].iter().chain(w[..r].iter());
        w.iter().lt(rot)
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LyndonWord {
    word: Word,
    split: usize,
}

impl LyndonWord {
    pub fn new(word: Word) -> Option<Self> {
        if !is_lyndon(word.letters()) {
            return None;
        }
        let split = standard_split(word.letters());
        Some(LyndonWord { word, split })
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `(u, v)` with `v` the longest proper Lyndon suffix; `None` for letters.
    pub fn factorization(&self) -> Option<(LyndonWord, LyndonWord)> {
        if self.word.len() < 2 {
            return None;
        }
        let l = self.word.letters();
        let u = LyndonWord::new(Word::from_slice(&l[..self.split])).expect("left factor is Lyndon");
        let v = LyndonWord::new(Word::from_slice(&l[self.split..])).expect("right factor is Lyndon");
        Some((u, v))
    }
}

fn standard_split(w: &[GenId]) -> usize {
    (1..w.len()).find(|&p| is_lyndon(&w[p..])).unwrap_or(w.len())
}

/// Lyndon words of length `n` over the given letters (ascending order), in lex order.
pub fn lyndon_words_over(letters: &[GenId], n: usize) -> Vec<Word> {
    let k = letters.len();
    if n == 0 || k == 0 {
        return Vec::new();
    }
    // Duval's generation on positions into `letters`.
    let mut out = Vec::new();
    let mut w: Vec<usize> = vec![0];
    loop {
        if w.len() == n {
            out.push(Word::from_slice(&w.iter().map(|&i| letters[i]).collect::<Vec<_>>()));
        }
        let m = w.len();
        while w.len() < n {
            let c = w[w.len() - m];
            w.push(c);
        }
        while let Some(&last) = w.last() {
            if last == k - 1 {
                w.pop();
            } else {
                break;
            }
        }
        match w.last_mut() {
            Some(l) => *l += 1,
            None => break,
        }
    }
    out
}

pub fn lyndon_words(alphabet: &Alphabet, n: usize) -> Vec<LyndonWord> {
    let letters: Vec<GenId> = alphabet.ids().collect();
    lyndon_words_over(&letters, n).into_iter().map(|w| LyndonWord::new(w).expect("generated word is Lyndon")).collect()
}

type Expansion = Arc<Vec<(Word, i64)>>;

static BRACKETS: Lazy<RwLock<HashMap<Word, Expansion>>> = Lazy::new(|| RwLock::new(HashMap::new()));

/// Word expansion of the standard bracketing; leading word is `w` with coefficient 1.
pub fn bracket_expansion(w: &LyndonWord) -> Expansion {
    if let Some(e) = BRACKETS.read().expect("bracket cache poisoned").get(&w.word) {
        return e.clone();
    }
    let e: Expansion = match w.factorization() {
        None => Arc::new(vec![(w.word.clone(), 1)]),
        Some((u, v)) => {
            let pu = bracket_expansion(&u);
            let pv = bracket_expansion(&v);
            let mut acc: HashMap<Word, i64> = HashMap::new();
            for (a, x) in pu.iter() {
                for (b, y) in pv.iter() {
                    *acc.entry(a.concat(b)).or_insert(0) += x * y;
                    *acc.entry(b.concat(a)).or_insert(0) -= x * y;
                }
            }
            let mut v: Vec<(Word, i64)> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
            v.sort();
            Arc::new(v)
        }
    };
    BRACKETS.write().expect("bracket cache poisoned").insert(w.word.clone(), e.clone());
    e
}

pub fn bracketing(alphabet: &Arc<Alphabet>, w: &LyndonWord, truncation: usize) -> Result<NcPolynomial> {
    NcPolynomial::from_terms(
        alphabet,
        bracket_expansion(w).iter().map(|(u, c)| (u.clone(), Scalar::int(*c))),
        truncation,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lw(s: &[GenId]) -> LyndonWord {
        LyndonWord::new(Word::from_slice(s)).unwrap()
    }

    #[test]
    fn lyndon_predicate() {
        assert!(is_lyndon(&[0]));
        assert!(is_lyndon(&[0, 1]));
        assert!(is_lyndon(&[0, 0, 1]));
        assert!(is_lyndon(&[0, 1, 1]));
        assert!(!is_lyndon(&[1, 0]));
        assert!(!is_lyndon(&[0, 1, 0, 1]));
        assert!(!is_lyndon(&[0, 0]));
        assert!(!is_lyndon(&[]));
    }

    #[test]
    fn small_enumerations() {
        let a = Alphabet::plain(&["x", "y"]);
        let w1: Vec<_> = lyndon_words(&a, 1).into_iter().map(|w| w.word().letters().to_vec()).collect();
        assert_eq!(w1, vec![vec![0], vec![1]]);
        let w2: Vec<_> = lyndon_words(&a, 2).into_iter().map(|w| w.word().letters().to_vec()).collect();
        assert_eq!(w2, vec![vec![0, 1]]);
        assert_eq!(lyndon_words(&a, 5).len(), 6);
    }

    #[test]
    fn factorization_uses_longest_lyndon_suffix() {
        let (u, v) = lw(&[0, 0, 1, 0, 1]).factorization().unwrap();
        assert_eq!(u.word().letters(), &[0, 0, 1]);
        assert_eq!(v.word().letters(), &[0, 1]);
        let (u, v) = lw(&[0, 1, 1]).factorization().unwrap();
        assert_eq!(u.word().letters(), &[0, 1]);
        assert_eq!(v.word().letters(), &[1]);
    }

    #[test]
    fn expansions() {
        let e = bracket_expansion(&lw(&[0, 1]));
        assert_eq!(*e, vec![(Word::from_slice(&[0, 1]), 1), (Word::from_slice(&[1, 0]), -1)]);
        let e = bracket_expansion(&lw(&[0, 0, 1]));
        assert_eq!(
            *e,
            vec![
                (Word::from_slice(&[0, 0, 1]), 1),
                (Word::from_slice(&[0, 1, 0]), -2),
                (Word::from_slice(&[1, 0, 0]), 1)
            ]
        );
    }

    #[test]
    fn leading_word_is_the_lyndon_word() {
        for n in 1..=6 {
            for w in lyndon_words_over(&[0, 1, 2], n) {
                let e = bracket_expansion(&LyndonWord::new(w.clone()).unwrap());
                assert_eq!(e[0], (w.clone(), 1));
            }
        }
    }
}
