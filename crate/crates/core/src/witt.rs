//! The Witt algebra with basis `e_n` (n ∈ Z) and its central extension, the
//! Virasoro algebra:
//!
//! `[e_n, e_m] = (m - n) e_{m+n} + δ_{m+n,0} (m³ - m)/12 · c`, `c` central.
//!
//! The cocycle term is only produced in Virasoro mode.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::linalg::{SparseVec, Subspace};
use crate::scalar::GaussianRational;

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct WittElement {
    terms: BTreeMap<i64, GaussianRational>,
    central: GaussianRational,
}

impl WittElement {
    pub fn zero() -> Self {
        WittElement::default()
    }

    /// The basis vector `e_n`.
    pub fn basis(n: i64) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(n, GaussianRational::one());
        WittElement { terms, central: GaussianRational::zero() }
    }

    /// The central element `c`.
    pub fn central_unit() -> Self {
        WittElement { terms: BTreeMap::new(), central: GaussianRational::one() }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, GaussianRational)>>(terms: I, central: GaussianRational) -> Self {
        let mut out = WittElement { terms: BTreeMap::new(), central };
        for (n, c) in terms {
            out.add_term(n, &c);
        }
        out
    }

    fn add_term(&mut self, n: i64, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(n).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&n);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &GaussianRational)> + '_ {
        self.terms.iter().map(|(n, c)| (*n, c))
    }

    pub fn coefficient(&self, n: i64) -> GaussianRational {
        self.terms.get(&n).cloned().unwrap_or_default()
    }

    pub fn central(&self) -> &GaussianRational {
        &self.central
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.central.is_zero()
    }

    /// Largest `|n|` in the support, ignoring `c`.
    pub fn max_abs_index(&self) -> Option<u64> {
        self.terms.keys().map(|n| n.unsigned_abs()).max()
    }

    pub fn add(&self, other: &WittElement) -> WittElement {
        let mut out = self.clone();
        for (n, c) in other.terms.iter() {
            out.add_term(*n, c);
        }
        out.central += &other.central;
        out
    }

    pub fn scale(&self, k: &GaussianRational) -> WittElement {
        WittElement::from_terms(self.terms.iter().map(|(n, c)| (*n, c * k)), &self.central * k)
    }

    pub fn neg(&self) -> WittElement {
        self.scale(&GaussianRational::from_int(-1))
    }

    fn to_vector(&self) -> SparseVec {
        let mut pairs: Vec<(usize, GaussianRational)> =
            self.terms.iter().map(|(n, c)| (index_column(*n), c.clone())).collect();
        pairs.push((0, self.central.clone()));
        SparseVec::from_pairs(pairs)
    }

    fn from_vector(v: &SparseVec) -> WittElement {
        let mut out = WittElement::zero();
        for (col, c) in v.iter() {
            match column_index(col) {
                None => out.central = c.clone(),
                Some(n) => out.add_term(n, c),
            }
        }
        out
    }
}

// column 0 is c; e_n sits at 1 + zigzag(n)
fn index_column(n: i64) -> usize {
    let z = if n >= 0 { (n as u64) << 1 } else { ((-(n + 1)) as u64) << 1 | 1 };
    1 + z as usize
}

fn column_index(col: usize) -> Option<i64> {
    if col == 0 {
        return None;
    }
    let z = (col - 1) as u64;
    Some(if z & 1 == 0 { (z >> 1) as i64 } else { -((z >> 1) as i64) - 1 })
}

impl fmt::Display for WittElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut parts: Vec<String> = Vec::new();
        let term = |c: &GaussianRational, name: String| {
            if c.is_one() {
                name
            } else {
                let mut s = String::new();
                let _ = write!(s, "({})*{}", c, name);
                s
            }
        };
        for (n, c) in self.terms.iter() {
            parts.push(term(c, alloc::format!("e_{}", n)));
        }
        if !self.central.is_zero() {
            parts.push(term(&self.central, "c".into()));
        }
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for WittElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `(m³ - m)/12`, the coefficient of `c` in `[e_{-m}, e_m]`.
pub fn virasoro_cocycle(m: i64) -> GaussianRational {
    let m = BigInt::from(m);
    let num = &m * &m * &m - &m;
    GaussianRational::from(BigRational::new(num, BigInt::from(12)))
}

pub fn witt_bracket(u: &WittElement, v: &WittElement, virasoro: bool) -> WittElement {
    let mut out = WittElement::zero();
    for (&n, a) in u.terms.iter() {
        for (&m, b) in v.terms.iter() {
            let ab = a * b;
            let k = GaussianRational::from_i128(m as i128 - n as i128);
            out.add_term(n.checked_add(m).expect("Witt index overflow"), &(&ab * &k));
            if virasoro && n.checked_add(m) == Some(0) {
                out.central += &(&ab * &virasoro_cocycle(m));
            }
        }
    }
    out
}

/// The Witt (or Virasoro) algebra as a bracket target.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WittAlgebra {
    pub virasoro: bool,
}

impl WittAlgebra {
    pub fn witt() -> Self {
        WittAlgebra { virasoro: false }
    }

    pub fn virasoro() -> Self {
        WittAlgebra { virasoro: true }
    }

    pub fn bracket(&self, u: &WittElement, v: &WittElement) -> WittElement {
        witt_bracket(u, v, self.virasoro)
    }
}

/// Finite evidence for generation: which `e_n`, `|n| ≤ window`, lie in the
/// span reached after `depth` bracketing rounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowCoverage {
    pub depth: usize,
    pub window: u64,
    pub virasoro: bool,
    pub covered: Vec<i64>,
    pub missing: Vec<i64>,
    /// Dimension of the span of everything kept.
    pub span_dim: usize,
    /// Whether `c` itself lies in the span (Virasoro only).
    pub central_covered: bool,
}

impl WindowCoverage {
    pub fn all_covered(&self) -> bool {
        self.missing.is_empty()
    }
}

/// Iterated-bracket closure of `gens`, certified on a finite index window.
///
/// Round 1 brackets the generators pairwise; every later round brackets all
/// rows of the current span pairwise. A produced bracket is kept only when its
/// whole support lies within `|n| ≤ window`; generators are always kept.
/// Nothing is projected, so every kept vector is a genuine element of the
/// generated subalgebra and "covered" is sound.
pub fn generated_window(gens: &[WittElement], depth: usize, window: u64, virasoro: bool) -> WindowCoverage {
    let mut span = Subspace::zero(usize::MAX);
    for g in gens {
        span.insert(&g.to_vector());
    }
    for _ in 0..depth {
        let rows: Vec<WittElement> = span.rows().map(WittElement::from_vector).collect();
        let mut grew = false;
        for (k, a) in rows.iter().enumerate() {
            for b in &rows[k + 1..] {
                let x = witt_bracket(a, b, virasoro);
                if x.max_abs_index().is_none_or(|m| m <= window) {
                    grew |= span.insert(&x.to_vector());
                }
            }
        }
        if !grew {
            break;
        }
    }
    let w = window as i64;
    let (covered, missing): (Vec<i64>, Vec<i64>) =
        (-w..=w).partition(|&n| span.contains(&WittElement::basis(n).to_vector()));
    WindowCoverage {
        depth,
        window,
        virasoro,
        covered,
        missing,
        span_dim: span.dim(),
        central_covered: span.contains(&SparseVec::unit(0)),
    }
}
