//! Finite-dimensional Lie algebras given by structure constants.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Write as _;

use crate::error::{Error, Result};
use crate::linalg::{SparseVec, Subspace};
use crate::scalar::GaussianRational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstantAlgebra {
    labels: Vec<String>,
    // [e_i, e_j] at i * dim + j
    table: Vec<SparseVec>,
}

/// Element of a [`StructureConstantAlgebra`] in basis coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TargetElement {
    dim: usize,
    coords: SparseVec,
}

impl TargetElement {
    pub fn zero(dim: usize) -> Self {
        TargetElement { dim, coords: SparseVec::new() }
    }

    pub fn from_coords(dim: usize, coords: SparseVec) -> Result<Self> {
        if let Some(c) = coords.max_col() {
            if c >= dim {
                return Err(Error::DimensionMismatch { expected: dim, got: c + 1 });
            }
        }
        Ok(TargetElement { dim, coords })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coords(&self) -> &SparseVec {
        &self.coords
    }

    pub fn coefficient(&self, k: usize) -> GaussianRational {
        self.coords.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }

    fn same_space(&self, other: &TargetElement) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: other.dim });
        }
        Ok(())
    }

    pub fn add(&self, other: &TargetElement) -> Result<TargetElement> {
        self.same_space(other)?;
        Ok(TargetElement { dim: self.dim, coords: self.coords.add(&other.coords) })
    }

    pub fn sub(&self, other: &TargetElement) -> Result<TargetElement> {
        self.same_space(other)?;
        Ok(TargetElement { dim: self.dim, coords: self.coords.sub(&other.coords) })
    }

    pub fn scale(&self, k: &GaussianRational) -> TargetElement {
        TargetElement { dim: self.dim, coords: self.coords.scale(k) }
    }
}

impl StructureConstantAlgebra {
    /// Builds an algebra from brackets of basis pairs `(i, j, [e_i, e_j])`.
    ///
    /// Unlisted pairs are zero and `[e_j, e_i] = -[e_i, e_j]` is filled in.
    /// A pair listed in both orders must agree up to sign, diagonal entries
    /// must vanish, and the Jacobi identity is checked on every basis triple.
    pub fn new<I>(labels: Vec<String>, brackets: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, SparseVec)>,
    {
        let dim = labels.len();
        for (k, l) in labels.iter().enumerate() {
            if labels[..k].contains(l) {
                return Err(Error::InvalidArgument(alloc::format!("duplicate basis label `{l}`")));
            }
        }
        let mut table: Vec<Option<SparseVec>> = alloc::vec![None; dim * dim];
        for (i, j, v) in brackets {
            if i >= dim || j >= dim {
                return Err(Error::DimensionMismatch { expected: dim, got: i.max(j) + 1 });
            }
            if let Some(c) = v.max_col() {
                if c >= dim {
                    return Err(Error::DimensionMismatch { expected: dim, got: c + 1 });
                }
            }
            if i == j {
                if !v.is_zero() {
                    return Err(Error::NotAntisymmetric { i, j });
                }
                continue;
            }
            let neg = v.neg();
            for (slot, val) in [(i * dim + j, v), (j * dim + i, neg)] {
                match &table[slot] {
                    Some(existing) if *existing != val => return Err(Error::NotAntisymmetric { i, j }),
                    _ => table[slot] = Some(val),
                }
            }
        }
        let alg =
            StructureConstantAlgebra { labels, table: table.into_iter().map(Option::unwrap_or_default).collect() };
        alg.verify_jacobi()?;
        Ok(alg)
    }

    fn verify_jacobi(&self) -> Result<()> {
        let dim = self.dim();
        for i in 0..dim {
            for j in i + 1..dim {
                for k in j + 1..dim {
                    let (ei, ej, ek) = (self.basis_element(i), self.basis_element(j), self.basis_element(k));
                    let t1 = self.bracket_raw(&ei.coords, &self.bracket_raw(&ej.coords, &ek.coords));
                    let t2 = self.bracket_raw(&ej.coords, &self.bracket_raw(&ek.coords, &ei.coords));
                    let t3 = self.bracket_raw(&ek.coords, &self.bracket_raw(&ei.coords, &ej.coords));
                    if !t1.add(&t2).add(&t3).is_zero() {
                        return Err(Error::JacobiFailure { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn basis_element(&self, k: usize) -> TargetElement {
        assert!(k < self.dim(), "basis index {k} out of range");
        TargetElement { dim: self.dim(), coords: SparseVec::unit(k) }
    }

    pub fn zero(&self) -> TargetElement {
        TargetElement::zero(self.dim())
    }

    /// The basis element with the given label.
    pub fn named(&self, label: &str) -> Result<TargetElement> {
        self.index_of(label).map(|k| self.basis_element(k)).ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// `Σ c · e_label`.
    pub fn element(&self, terms: &[(&str, GaussianRational)]) -> Result<TargetElement> {
        let mut pairs = Vec::with_capacity(terms.len());
        for (l, c) in terms {
            let k = self.index_of(l).ok_or_else(|| Error::UnknownLabel(l.to_string()))?;
            pairs.push((k, c.clone()));
        }
        Ok(TargetElement { dim: self.dim(), coords: SparseVec::from_pairs(pairs) })
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dim() + j]
    }

    pub(crate) fn bracket_raw(&self, u: &SparseVec, v: &SparseVec) -> SparseVec {
        let mut pairs = Vec::new();
        for (i, a) in u.iter() {
            for (j, b) in v.iter() {
                let ab = a * b;
                for (k, c) in self.basis_bracket(i, j).iter() {
                    pairs.push((k, &ab * c));
                }
            }
        }
        SparseVec::from_pairs(pairs)
    }

    /// Bilinear bracket of two elements of this algebra.
    pub fn bracket(&self, u: &TargetElement, v: &TargetElement) -> Result<TargetElement> {
        for x in [u, v] {
            if x.dim != self.dim() {
                return Err(Error::DimensionMismatch { expected: self.dim(), got: x.dim });
            }
        }
        Ok(TargetElement { dim: self.dim(), coords: self.bracket_raw(&u.coords, &v.coords) })
    }

    pub fn format(&self, x: &TargetElement) -> String {
        if x.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (i, c)) in x.coords.iter().enumerate() {
            if k > 0 {
                s.push_str(" + ");
            }
            if c.is_one() {
                s.push_str(&self.labels[i]);
            } else {
                let _ = write!(s, "({})*{}", c, self.labels[i]);
            }
        }
        s
    }
}

/// Free-function form of [`StructureConstantAlgebra::bracket`].
pub fn bracket_in(alg: &StructureConstantAlgebra, u: &TargetElement, v: &TargetElement) -> Result<TargetElement> {
    alg.bracket(u, v)
}

/// sl(m): basis `E^{ij}` for `i < j`, then `H_k = E^{kk} - E^{k+1,k+1}`, then
/// `E^{ij}` for `i > j`. Labels are `E12`, `H1`, `E21`, …; for `m = 2` the
/// basis is named `e, h, f`.
pub fn sl_algebra(m: usize) -> Result<StructureConstantAlgebra> {
    if m < 2 {
        return Err(Error::InvalidArgument(alloc::format!("sl(m) needs m >= 2, got {m}")));
    }
    #[derive(Clone, Copy)]
    enum Basis {
        Root(usize, usize),
        Cartan(usize),
    }
    let mut basis = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            basis.push(Basis::Root(i, j));
        }
    }
    for k in 0..m - 1 {
        basis.push(Basis::Cartan(k));
    }
    for i in 0..m {
        for j in 0..i {
            basis.push(Basis::Root(i, j));
        }
    }
    let labels: Vec<String> = if m == 2 {
        ["e", "h", "f"].iter().map(|s| s.to_string()).collect()
    } else {
        basis
            .iter()
            .map(|b| match *b {
                Basis::Root(i, j) => alloc::format!("E{}{}", i + 1, j + 1),
                Basis::Cartan(k) => alloc::format!("H{}", k + 1),
            })
            .collect()
    };
    let root_index =
        |i: usize, j: usize| basis.iter().position(|b| matches!(*b, Basis::Root(a, c) if a == i && c == j)).unwrap();
    let cartan_offset = m * (m - 1) / 2;

    // matrices as sparse (row, col, value) with integer entries
    let as_matrix = |b: Basis| -> Vec<(usize, usize, i64)> {
        match b {
            Basis::Root(i, j) => alloc::vec![(i, j, 1)],
            Basis::Cartan(k) => alloc::vec![(k, k, 1), (k + 1, k + 1, -1)],
        }
    };
    let mut brackets = Vec::new();
    for (p, &bp) in basis.iter().enumerate() {
        for (q, &bq) in basis.iter().enumerate().skip(p + 1) {
            let (x, y) = (as_matrix(bp), as_matrix(bq));
            let mut prod = alloc::collections::BTreeMap::<(usize, usize), i64>::new();
            for &(a, b, s) in &x {
                for &(c, d, t) in &y {
                    if b == c {
                        *prod.entry((a, d)).or_default() += s * t;
                    }
                    if d == a {
                        *prod.entry((c, b)).or_default() -= s * t;
                    }
                }
            }
            let mut pairs = Vec::new();
            let mut diag = alloc::vec![0i64; m];
            for ((a, b), v) in prod {
                if v == 0 {
                    continue;
                }
                if a == b {
                    diag[a] += v;
                } else {
                    pairs.push((root_index(a, b), GaussianRational::from_int(v)));
                }
            }
            // trace-zero diagonal d = Σ c_k (E^{kk} - E^{k+1,k+1}) with c_k = d_1 + … + d_k
            let mut partial = 0;
            for (k, d) in diag.iter().take(m - 1).enumerate() {
                partial += d;
                if partial != 0 {
                    pairs.push((cartan_offset + k, GaussianRational::from_int(partial)));
                }
            }
            brackets.push((p, q, SparseVec::from_pairs(pairs)));
        }
    }
    StructureConstantAlgebra::new(labels, brackets)
}

/// The Heisenberg algebra h₁ with basis `p, q, z`, `[p, q] = z`, `z` central.
pub fn heisenberg() -> StructureConstantAlgebra {
    let labels = ["p", "q", "z"].iter().map(|s| s.to_string()).collect();
    StructureConstantAlgebra::new(labels, [(0, 1, SparseVec::unit(2))]).expect("h1 is a Lie algebra")
}

/// Smallest bracket-closed subspace containing `gens`.
///
/// Each round brackets every current basis row against the generators and
/// against every current row, until the dimension stops growing.
pub fn subalgebra_closure(alg: &StructureConstantAlgebra, gens: &[TargetElement]) -> Result<Subspace> {
    let mut span = Subspace::zero(alg.dim());
    for g in gens {
        if g.dim != alg.dim() {
            return Err(Error::DimensionMismatch { expected: alg.dim(), got: g.dim });
        }
        span.insert(&g.coords);
    }
    let gen_vecs: Vec<SparseVec> = gens.iter().map(|g| g.coords.clone()).collect();
    loop {
        let rows: Vec<SparseVec> = span.rows().cloned().collect();
        let mut grew = false;
        for (k, r) in rows.iter().enumerate() {
            for other in gen_vecs.iter().chain(rows[k + 1..].iter()) {
                grew |= span.insert(&alg.bracket_raw(r, other));
                if span.is_full() {
                    return Ok(span);
                }
            }
        }
        if !grew {
            return Ok(span);
        }
    }
}

/// Dimensions of the derived and lower central series of a subalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesReport {
    /// `dim S, dim [S,S], …` until the series stabilizes.
    pub derived_series: Vec<usize>,
    /// `dim S, dim [S,S], dim [S,[S,S]], …` until the series stabilizes.
    pub lower_central_series: Vec<usize>,
    pub is_solvable: bool,
    pub is_nilpotent: bool,
}

fn bracket_span(alg: &StructureConstantAlgebra, a: &Subspace, b: &Subspace) -> Subspace {
    let mut out = Subspace::zero(alg.dim());
    let brows: Vec<&SparseVec> = b.rows().collect();
    for x in a.rows() {
        for y in &brows {
            out.insert(&alg.bracket_raw(x, y));
        }
    }
    out
}

pub fn is_bracket_closed(alg: &StructureConstantAlgebra, s: &Subspace) -> bool {
    let rows: Vec<&SparseVec> = s.rows().collect();
    rows.iter().enumerate().all(|(k, x)| rows[k + 1..].iter().all(|y| s.contains(&alg.bracket_raw(x, y))))
}

pub fn series_analysis(alg: &StructureConstantAlgebra, s: &Subspace) -> Result<SeriesReport> {
    if s.ambient() != alg.dim() {
        return Err(Error::DimensionMismatch { expected: alg.dim(), got: s.ambient() });
    }
    if !is_bracket_closed(alg, s) {
        return Err(Error::NotBracketClosed);
    }
    // each term is contained in the previous one, so equal dimension means a fixed point
    let run = |next: &dyn Fn(&Subspace) -> Subspace| {
        let mut dims = alloc::vec![s.dim()];
        let mut cur = s.clone();
        while !cur.is_zero() {
            let nxt = next(&cur);
            if nxt.dim() == cur.dim() {
                break;
            }
            dims.push(nxt.dim());
            cur = nxt;
        }
        dims
    };
    let derived_series = run(&|cur| bracket_span(alg, cur, cur));
    let lower_central_series = run(&|cur| bracket_span(alg, s, cur));
    Ok(SeriesReport {
        is_solvable: derived_series.last() == Some(&0),
        is_nilpotent: lower_central_series.last() == Some(&0),
        derived_series,
        lower_central_series,
    })
}
