//! Lyndon words over the ordered alphabet `1 < 2 < … < n`.
//!
//! A word is Lyndon when it is strictly smaller, lexicographically, than every
//! proper rotation of itself. Words compare lexicographically with a proper
//! prefix ranking below its extensions. These two conventions fix the sign of
//! every basis element of the free Lie algebra: the basis element attached to
//! a Lyndon word `w` is its standard bracketing `[P(u), P(v)]`, where `w = uv`
//! and `v` is the longest proper suffix of `w` that is itself Lyndon.

use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LyndonWord(Vec<u8>);

/// True iff `letters` is nonempty and strictly below all of its proper rotations.
pub fn is_lyndon(letters: &[u8]) -> bool {
    let len = letters.len();
    if len == 0 {
        return false;
    }
    (1..len).all(|k| {
        let rotated = letters[k..].iter().chain(&letters[..k]);
        letters.iter().cmp(rotated) == core::cmp::Ordering::Less
    })
}

impl LyndonWord {
    /// Returns `None` unless the letters (1-based) form a Lyndon word.
    pub fn new(letters: Vec<u8>) -> Option<Self> {
        if letters.contains(&0) || !is_lyndon(&letters) {
            return None;
        }
        Some(LyndonWord(letters))
    }

    pub fn letter(k: u8) -> Self {
        assert!(k >= 1, "letters are 1-based");
        LyndonWord(alloc::vec![k])
    }

    pub(crate) fn from_letters_unchecked(letters: Vec<u8>) -> Self {
        debug_assert!(is_lyndon(&letters));
        LyndonWord(letters)
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn max_letter(&self) -> u8 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Concatenation, returned only when the result is Lyndon.
    pub fn concat(&self, other: &LyndonWord) -> Option<LyndonWord> {
        let mut w = self.0.clone();
        w.extend_from_slice(&other.0);
        LyndonWord::new(w)
    }

    /// `(u, v)` with `self = uv` and `v` the longest proper Lyndon suffix.
    /// `None` for single letters.
    pub fn standard_factorization(&self) -> Option<(LyndonWord, LyndonWord)> {
        let w = &self.0;
        (1..w.len()).find(|&k| is_lyndon(&w[k..])).map(|k| {
            (LyndonWord::from_letters_unchecked(w[..k].to_vec()), LyndonWord::from_letters_unchecked(w[k..].to_vec()))
        })
    }
}

impl fmt::Display for LyndonWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("⟨")?;
        for (k, a) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", a)?;
        }
        f.write_str("⟩")
    }
}

impl fmt::Debug for LyndonWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All Lyndon words of length `d` over `n` letters, in lexicographic order.
///
/// Duval's successor rule enumerates Lyndon words of length ≤ d in
/// lexicographic order; the length-`d` ones are kept.
pub fn lyndon_basis(n: usize, d: usize) -> Vec<LyndonWord> {
    assert!(n >= 1 && d >= 1, "lyndon_basis needs n >= 1 and d >= 1");
    assert!(n <= u8::MAX as usize, "at most 255 generators");
    let top = n as u8;
    let mut out = Vec::new();
    let mut w: Vec<u8> = alloc::vec![1];
    loop {
        if w.len() == d {
            out.push(LyndonWord(w.clone()));
        }
        let period = w.len();
        while w.len() < d {
            w.push(w[w.len() - period]);
        }
        while w.last() == Some(&top) {
            w.pop();
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => break,
        }
    }
    out
}

fn mobius(mut k: u64) -> i128 {
    let mut sign = 1i128;
    let mut p = 2u64;
    while p * p <= k {
        if k.is_multiple_of(p) {
            k /= p;
            if k.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if k > 1 {
        sign = -sign;
    }
    sign
}

/// Dimension of the degree-`d` component of the free Lie algebra on `n`
/// generators: `(1/d) Σ_{e | d} μ(d/e) nᵉ`. Panics if `nᵈ` overflows `i128`.
pub fn free_lie_dim(n: usize, d: usize) -> u64 {
    assert!(n >= 1 && d >= 1, "free_lie_dim needs n >= 1 and d >= 1");
    let base = n as i128;
    let total: i128 = (1..=d)
        .filter(|e| d.is_multiple_of(*e))
        .map(|e| {
            let power = base.checked_pow(e as u32).expect("n^d overflows");
            mobius((d / e) as u64) * power
        })
        .sum();
    (total / d as i128) as u64
}
