//! The free Lie algebra f(n) over Q(i) in the Lyndon basis.
//!
//! Brackets of basis words are rewritten into the basis recursively: for
//! Lyndon words `u < v`, if `u` is a letter or the right standard factor of
//! `u` is `≥ v`, then `(u, v)` is the standard factorization of `uv` and
//! `[u, v]` is the basis element `uv`. Otherwise, with `u = (u1, u2)`,
//! Jacobi gives `[u, v] = [u1, [u2, v]] - [u2, [u1, v]]`.

use alloc::collections::{BTreeMap, BTreeSet};
use core::cell::RefCell;
use core::fmt;

use crate::error::{Error, Result};
use crate::lyndon::LyndonWord;
use crate::scalar::GaussianRational;

/// Finite linear combination of Lyndon basis elements of f(n).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FreeLieElement {
    n: usize,
    terms: BTreeMap<LyndonWord, GaussianRational>,
}

impl FreeLieElement {
    pub fn zero(n: usize) -> Self {
        FreeLieElement { n, terms: BTreeMap::new() }
    }

    /// The generator `x_k`, 1-based.
    pub fn generator(n: usize, k: usize) -> Self {
        assert!(k >= 1 && k <= n, "generator x_{k} outside 1..={n}");
        FreeLieElement::basis(n, LyndonWord::letter(k as u8))
    }

    pub fn basis(n: usize, word: LyndonWord) -> Self {
        assert!(word.max_letter() as usize <= n, "word {word} uses letters beyond {n}");
        let mut terms = BTreeMap::new();
        terms.insert(word, GaussianRational::one());
        FreeLieElement { n, terms }
    }

    /// Builds an element from (word, coefficient) pairs, summing repeats.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (LyndonWord, GaussianRational)>,
    {
        let mut out = FreeLieElement::zero(n);
        for (w, c) in terms {
            let letter = w.max_letter() as usize;
            if letter > n {
                return Err(Error::LetterOutOfRange { letter, n });
            }
            out.add_term(w, &c);
        }
        Ok(out)
    }

    pub fn generator_count(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LyndonWord, &GaussianRational)> + '_ {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, w: &LyndonWord) -> GaussianRational {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn degrees(&self) -> BTreeSet<usize> {
        self.terms.keys().map(|w| w.degree()).collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degrees().len() <= 1
    }

    pub fn homogeneous_part(&self, d: usize) -> FreeLieElement {
        FreeLieElement {
            n: self.n,
            terms: self.terms.iter().filter(|(w, _)| w.degree() == d).map(|(w, c)| (w.clone(), c.clone())).collect(),
        }
    }

    fn add_term(&mut self, w: LyndonWord, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    /// `self += k * other`.
    pub fn add_scaled_assign(&mut self, k: &GaussianRational, other: &FreeLieElement) {
        if k.is_zero() {
            return;
        }
        for (w, c) in other.terms.iter() {
            let slot = self.terms.entry(w.clone()).or_default();
            *slot += &(k * c);
            if slot.is_zero() {
                self.terms.remove(w);
            }
        }
    }

    pub fn add(&self, other: &FreeLieElement) -> FreeLieElement {
        let mut out = self.clone();
        out.add_scaled_assign(&GaussianRational::one(), other);
        out
    }

    pub fn sub(&self, other: &FreeLieElement) -> FreeLieElement {
        let mut out = self.clone();
        out.add_scaled_assign(&GaussianRational::from_int(-1), other);
        out
    }

    pub fn scale(&self, k: &GaussianRational) -> FreeLieElement {
        if k.is_zero() {
            return FreeLieElement::zero(self.n);
        }
        FreeLieElement { n: self.n, terms: self.terms.iter().map(|(w, c)| (w.clone(), c * k)).collect() }
    }

    pub fn neg(&self) -> FreeLieElement {
        self.scale(&GaussianRational::from_int(-1))
    }

    /// Same element viewed in f(m); fails if a letter exceeds `m`.
    pub fn with_generator_count(&self, m: usize) -> Result<FreeLieElement> {
        FreeLieElement::from_terms(m, self.terms.iter().map(|(w, c)| (w.clone(), c.clone())))
    }
}

impl fmt::Display for FreeLieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "{}", w)?;
            } else {
                write!(f, "({})*{}", c, w)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FreeLieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f({})[{}]", self.n, self)
    }
}

/// f(n) together with a memo of basis-word brackets.
///
/// The memo lives in a `RefCell`, so a context is confined to one thread;
/// element values themselves are plain data and can be shared freely.
pub struct FreeLieAlgebra {
    n: usize,
    memo: RefCell<BTreeMap<(LyndonWord, LyndonWord), FreeLieElement>>,
}

impl FreeLieAlgebra {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1 && n <= u8::MAX as usize, "generator count must be in 1..=255");
        FreeLieAlgebra { n, memo: RefCell::new(BTreeMap::new()) }
    }

    pub fn generator_count(&self) -> usize {
        self.n
    }

    pub fn generator(&self, k: usize) -> FreeLieElement {
        FreeLieElement::generator(self.n, k)
    }

    pub fn zero(&self) -> FreeLieElement {
        FreeLieElement::zero(self.n)
    }

    pub fn memo_len(&self) -> usize {
        self.memo.borrow().len()
    }

    fn check(&self, a: &FreeLieElement) -> Result<()> {
        if a.n != self.n {
            return Err(Error::GeneratorMismatch { left: self.n, right: a.n });
        }
        Ok(())
    }

    pub fn bracket(&self, a: &FreeLieElement, b: &FreeLieElement) -> Result<FreeLieElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.bracket_unchecked(a, b))
    }

    pub(crate) fn bracket_unchecked(&self, a: &FreeLieElement, b: &FreeLieElement) -> FreeLieElement {
        let mut out = self.zero();
        for (u, cu) in a.terms.iter() {
            for (v, cv) in b.terms.iter() {
                let k = cu * cv;
                out.add_scaled_assign(&k, &self.bracket_words(u, v));
            }
        }
        out
    }

    /// `[P(u), P(v)]` in the Lyndon basis.
    pub fn bracket_words(&self, u: &LyndonWord, v: &LyndonWord) -> FreeLieElement {
        use core::cmp::Ordering::*;
        match u.cmp(v) {
            Equal => self.zero(),
            Greater => self.bracket_words(v, u).neg(),
            Less => {
                let key = (u.clone(), v.clone());
                if let Some(hit) = self.memo.borrow().get(&key) {
                    return hit.clone();
                }
                let value = self.rewrite_ordered(u, v);
                self.memo.borrow_mut().insert(key, value.clone());
                value
            }
        }
    }

    fn rewrite_ordered(&self, u: &LyndonWord, v: &LyndonWord) -> FreeLieElement {
        let joined = || {
            let mut w = u.letters().to_vec();
            w.extend_from_slice(v.letters());
            FreeLieElement::basis(self.n, LyndonWord::from_letters_unchecked(w))
        };
        match u.standard_factorization() {
            None => joined(),
            Some((_, ref u2)) if u2 >= v => joined(),
            Some((u1, u2)) => {
                let inner_a = self.bracket_words(&u2, v);
                let inner_b = self.bracket_words(&u1, v);
                let mut out = self.bracket_word_element(&u1, &inner_a);
                out.add_scaled_assign(&GaussianRational::from_int(-1), &self.bracket_word_element(&u2, &inner_b));
                out
            }
        }
    }

    fn bracket_word_element(&self, w: &LyndonWord, x: &FreeLieElement) -> FreeLieElement {
        let mut out = self.zero();
        for (t, c) in x.terms.iter() {
            out.add_scaled_assign(c, &self.bracket_words(w, t));
        }
        out
    }

    /// Left-normed bracket `[a1, [a2, [..., ak]]]`.
    pub fn nested(&self, elems: &[FreeLieElement]) -> Result<FreeLieElement> {
        let (last, rest) = elems.split_last().ok_or_else(|| Error::InvalidArgument("empty bracket".into()))?;
        let mut acc = last.clone();
        for a in rest.iter().rev() {
            acc = self.bracket(a, &acc)?;
        }
        Ok(acc)
    }
}

/// `[a, b]` using a fresh memo.
pub fn bracket(a: &FreeLieElement, b: &FreeLieElement) -> Result<FreeLieElement> {
    if a.n != b.n {
        return Err(Error::GeneratorMismatch { left: a.n, right: b.n });
    }
    FreeLieAlgebra::new(a.n).bracket(a, b)
}

/// `Σ cᵢ·elemᵢ` with zero coefficients pruned.
pub fn scalar_combine(coeffs: &[GaussianRational], elems: &[FreeLieElement]) -> Result<FreeLieElement> {
    if coeffs.len() != elems.len() {
        return Err(Error::LengthMismatch { left: coeffs.len(), right: elems.len() });
    }
    let Some(first) = elems.first() else {
        return Err(Error::InvalidArgument("empty combination has no generator count".into()));
    };
    let mut out = FreeLieElement::zero(first.n);
    for (c, e) in coeffs.iter().zip(elems) {
        if e.n != first.n {
            return Err(Error::GeneratorMismatch { left: first.n, right: e.n });
        }
        out.add_scaled_assign(c, e);
    }
    Ok(out)
}
