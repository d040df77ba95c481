//! Yang-Mills relations, the graded ideal they generate in f(n), and the
//! degreewise dimensions of the quotient ym(n).
//!
//! The ideal is generated in degree 3 and f(n) is generated in degree 1, so
//! its components satisfy `I_3 = span(relators)` and
//! `I_{d+1} = span{[x_i, r] : r ∈ I_d, 1 ≤ i ≤ n}`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::free_lie::{FreeLieAlgebra, FreeLieElement};
use crate::linalg::{SparseVec, Subspace};
use crate::lyndon::{free_lie_dim, lyndon_basis, LyndonWord};

/// Default upper bound on the degrees any enumeration will touch.
pub const DEFAULT_DEGREE_CAP: usize = 12;

#[derive(Clone, Debug)]
pub struct YangMillsPresentation {
    n: usize,
    relators: Vec<FreeLieElement>,
    strong: bool,
}

impl YangMillsPresentation {
    pub fn generator_count(&self) -> usize {
        self.n
    }

    pub fn relators(&self) -> &[FreeLieElement] {
        &self.relators
    }

    pub fn is_strong(&self) -> bool {
        self.strong
    }
}

/// The relators of ym(n), or with `strong` set, the n² elements
/// `[x_i, [x_i, x_j]]` ordered by `(i, j)`. Entries with `i = j` are kept as
/// zero elements so the list always has `n²` entries.
pub fn ym_relations(n: usize, strong: bool) -> YangMillsPresentation {
    assert!(n >= 1, "ym_relations needs n >= 1");
    let f = FreeLieAlgebra::new(n);
    let double = |i: usize, j: usize| {
        let (xi, xj) = (f.generator(i), f.generator(j));
        f.bracket_unchecked(&xi, &f.bracket_unchecked(&xi, &xj))
    };
    let relators = if strong {
        (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).map(|(i, j)| double(i, j)).collect()
    } else {
        (1..=n)
            .map(|j| {
                let mut r = f.zero();
                for i in 1..=n {
                    r.add_scaled_assign(&crate::GaussianRational::one(), &double(i, j));
                }
                r
            })
            .collect()
    };
    YangMillsPresentation { n, relators, strong }
}

/// A subspace of f(n)_d, stored as an RREF matrix in Lyndon coordinates.
#[derive(Clone, Debug)]
pub struct GradedSubspace {
    n: usize,
    degree: usize,
    basis: Vec<LyndonWord>,
    index: BTreeMap<LyndonWord, usize>,
    space: Subspace,
}

impl GradedSubspace {
    fn zero(n: usize, degree: usize) -> Self {
        let basis = lyndon_basis(n, degree);
        let index = basis.iter().cloned().enumerate().map(|(k, w)| (w, k)).collect();
        let space = Subspace::zero(basis.len());
        GradedSubspace { n, degree, basis, index, space }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generator_count(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Dimension of the ambient component f(n)_d.
    pub fn ambient_dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_words(&self) -> &[LyndonWord] {
        &self.basis
    }

    pub fn matrix(&self) -> &Subspace {
        &self.space
    }

    fn to_vector(&self, a: &FreeLieElement) -> Result<SparseVec> {
        let mut pairs = Vec::with_capacity(a.num_terms());
        for (w, c) in a.terms() {
            if w.degree() != self.degree {
                return Err(Error::InvalidArgument(alloc::format!(
                    "element has a term of degree {} in a degree-{} component",
                    w.degree(),
                    self.degree
                )));
            }
            let col =
                *self.index.get(w).ok_or(Error::LetterOutOfRange { letter: w.max_letter() as usize, n: self.n })?;
            pairs.push((col, c.clone()));
        }
        Ok(SparseVec::from_pairs(pairs))
    }

    fn to_element(&self, v: &SparseVec) -> FreeLieElement {
        FreeLieElement::from_terms(self.n, v.iter().map(|(c, x)| (self.basis[c].clone(), x.clone())))
            .expect("basis words fit the generator count")
    }

    /// Rows of the RREF matrix as elements of f(n).
    pub fn rows(&self) -> Vec<FreeLieElement> {
        self.space.rows().map(|r| self.to_element(r)).collect()
    }

    /// Whether a homogeneous element of this degree lies in the subspace.
    pub fn contains(&self, a: &FreeLieElement) -> Result<bool> {
        Ok(self.space.contains(&self.to_vector(a)?))
    }

    fn insert(&mut self, a: &FreeLieElement) -> Result<bool> {
        let v = self.to_vector(a)?;
        Ok(self.space.insert(&v))
    }
}

/// Degreewise dimensions `dims[d - 1]` for `d = 1..=D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDims {
    n: usize,
    dims: Vec<u64>,
}

impl GradedDims {
    pub fn new(n: usize, dims: Vec<u64>) -> Result<Self> {
        for (k, &x) in dims.iter().enumerate() {
            let bound = free_lie_dim(n, k + 1);
            if x > bound {
                return Err(Error::InvalidArgument(alloc::format!(
                    "dimension {x} in degree {} exceeds free dimension {bound}",
                    k + 1
                )));
            }
        }
        Ok(GradedDims { n, dims })
    }

    pub fn generator_count(&self) -> usize {
        self.n
    }

    pub fn max_degree(&self) -> usize {
        self.dims.len()
    }

    pub fn get(&self, d: usize) -> Option<u64> {
        d.checked_sub(1).and_then(|k| self.dims.get(k).copied())
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.dims
    }

    /// Dimension of the truncation `ym(n)^l = ⊕_{j ≤ l} ym(n)_j` at `l = D`.
    pub fn total(&self) -> u64 {
        self.dims.iter().sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DimensionRow {
    pub degree: usize,
    pub free_dim: u64,
    pub ideal_dim: u64,
    pub ym_dim: u64,
}

/// Lazily computed ideal components `I_1, I_2, …` up to a degree cap.
pub struct IdealTower {
    pres: YangMillsPresentation,
    algebra: FreeLieAlgebra,
    cap: usize,
    components: Vec<GradedSubspace>,
}

impl IdealTower {
    pub fn new(pres: YangMillsPresentation) -> Self {
        IdealTower::with_cap(pres, DEFAULT_DEGREE_CAP)
    }

    pub fn with_cap(pres: YangMillsPresentation, cap: usize) -> Self {
        let algebra = FreeLieAlgebra::new(pres.n);
        IdealTower { pres, algebra, cap, components: Vec::new() }
    }

    pub fn presentation(&self) -> &YangMillsPresentation {
        &self.pres
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn check_degree(&self, d: usize) -> Result<()> {
        if d == 0 {
            return Err(Error::InvalidArgument("degrees start at 1".into()));
        }
        if d > self.cap {
            return Err(Error::DegreeCapExceeded { degree: d, cap: self.cap });
        }
        Ok(())
    }

    /// The degree-`d` component of the ideal.
    pub fn component(&mut self, d: usize) -> Result<&GradedSubspace> {
        self.check_degree(d)?;
        while self.components.len() < d {
            let next = self.components.len() + 1;
            let comp = self.build(next)?;
            self.components.push(comp);
        }
        Ok(&self.components[d - 1])
    }

    fn build(&self, d: usize) -> Result<GradedSubspace> {
        let n = self.pres.n;
        let mut comp = GradedSubspace::zero(n, d);
        if d < 3 {
            return Ok(comp);
        }
        if d == 3 {
            for r in &self.pres.relators {
                comp.insert(r)?;
            }
            return Ok(comp);
        }
        let prev = &self.components[d - 2];
        for row in prev.rows() {
            for i in 1..=n {
                let x = self.algebra.generator(i);
                let b = self.algebra.bracket_unchecked(&x, &row);
                comp.insert(&b)?;
            }
            if comp.dim() == comp.ambient_dim() {
                break;
            }
        }
        Ok(comp)
    }

    pub fn ideal_dim(&mut self, d: usize) -> Result<u64> {
        Ok(self.component(d)?.dim() as u64)
    }

    pub fn ym_dim(&mut self, d: usize) -> Result<u64> {
        let comp = self.component(d)?;
        Ok((comp.ambient_dim() - comp.dim()) as u64)
    }

    pub fn graded_dims(&mut self, max_degree: usize) -> Result<GradedDims> {
        let dims = (1..=max_degree).map(|d| self.ym_dim(d)).collect::<Result<Vec<_>>>()?;
        GradedDims::new(self.pres.n, dims)
    }

    pub fn dimension_table(&mut self, max_degree: usize) -> Result<Vec<DimensionRow>> {
        (1..=max_degree)
            .map(|d| {
                let comp = self.component(d)?;
                let free_dim = comp.ambient_dim() as u64;
                let ideal_dim = comp.dim() as u64;
                Ok(DimensionRow { degree: d, free_dim, ideal_dim, ym_dim: free_dim - ideal_dim })
            })
            .collect()
    }

    /// Per degree present in `a`: whether that homogeneous part lies in the ideal.
    pub fn contains(&mut self, a: &FreeLieElement) -> Result<BTreeMap<usize, bool>> {
        if a.generator_count() != self.pres.n {
            return Err(Error::GeneratorMismatch { left: self.pres.n, right: a.generator_count() });
        }
        let degrees = a.degrees();
        if let Some(&top) = degrees.iter().next_back() {
            self.check_degree(top)?;
        }
        degrees
            .into_iter()
            .map(|d| {
                let part = a.homogeneous_part(d);
                Ok((d, self.component(d)?.contains(&part)?))
            })
            .collect()
    }

    /// True iff `a` is zero in the quotient.
    pub fn is_zero(&mut self, a: &FreeLieElement) -> Result<bool> {
        Ok(self.contains(a)?.values().all(|&z| z))
    }
}

/// Degree-`d` component of the ideal generated by the presentation's relators.
/// Degrees below 3 give the zero subspace.
pub fn ideal_graded_component(pres: &YangMillsPresentation, d: usize) -> Result<GradedSubspace> {
    if d < 3 {
        return Ok(GradedSubspace::zero(pres.n, d.max(1)));
    }
    let mut tower = IdealTower::with_cap(pres.clone(), d.max(DEFAULT_DEGREE_CAP));
    Ok(tower.component(d)?.clone())
}

pub fn ym_dim(n: usize, d: usize, strong: bool) -> Result<u64> {
    let mut tower = IdealTower::new(ym_relations(n, strong));
    tower.ym_dim(d)
}

/// Per-degree membership of `a` in the ideal, using the default degree cap.
pub fn is_zero_in_ym(pres: &YangMillsPresentation, a: &FreeLieElement) -> Result<BTreeMap<usize, bool>> {
    IdealTower::new(pres.clone()).contains(a)
}
