//! Generalized Cartan matrices, their realizations, and the generator bound
//! for quotients of ym(n) onto Kac–Moody algebras.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::linalg::{rank, SparseVec, Subspace};
use crate::scalar::GaussianRational;

/// A square matrix over Q(i) together with its rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixData {
    entries: Vec<Vec<GaussianRational>>,
    rank: usize,
}

impl MatrixData {
    pub fn new(entries: Vec<Vec<GaussianRational>>) -> Result<Self> {
        let m = entries.len();
        if m == 0 || entries.iter().any(|row| row.len() != m) {
            return Err(Error::NotSquare);
        }
        let rank = rank(&entries);
        Ok(MatrixData { entries, rank })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        MatrixData::new(rows.iter().map(|r| r.iter().map(|&x| GaussianRational::from_int(x)).collect()).collect())
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entry(&self, i: usize, j: usize) -> &GaussianRational {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<GaussianRational>] {
        &self.entries
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GcmViolation {
    NonInteger { i: usize, j: usize },
    Diagonal { i: usize },
    PositiveOffDiagonal { i: usize, j: usize },
    AsymmetricZero { i: usize, j: usize },
}

impl fmt::Display for GcmViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GcmViolation::NonInteger { i, j } => write!(f, "entry ({i}, {j}) is not an integer"),
            GcmViolation::Diagonal { i } => write!(f, "diagonal entry ({i}, {i}) is not 2"),
            GcmViolation::PositiveOffDiagonal { i, j } => write!(f, "off-diagonal entry ({i}, {j}) is positive"),
            GcmViolation::AsymmetricZero { i, j } => {
                write!(f, "entry ({i}, {j}) is zero but ({j}, {i}) is not")
            }
        }
    }
}

/// Checks, in this order: integrality, diagonal 2, off-diagonal ≤ 0, and
/// `a_ij = 0 ⇔ a_ji = 0`. Reports the first violation in row-major order.
pub fn is_generalized_cartan(a: &MatrixData) -> core::result::Result<(), GcmViolation> {
    let m = a.size();
    let cells = || (0..m).flat_map(move |i| (0..m).map(move |j| (i, j)));
    let mut ints = Vec::with_capacity(m * m);
    for (i, j) in cells() {
        match a.entry(i, j).as_integer() {
            Some(x) => ints.push(x),
            None => return Err(GcmViolation::NonInteger { i, j }),
        }
    }
    let at = |i: usize, j: usize| &ints[i * m + j];
    for i in 0..m {
        if *at(i, i) != 2.into() {
            return Err(GcmViolation::Diagonal { i });
        }
    }
    for (i, j) in cells() {
        if i != j && *at(i, j) > 0.into() {
            return Err(GcmViolation::PositiveOffDiagonal { i, j });
        }
    }
    for (i, j) in cells() {
        if i != j && at(i, j) == &0.into() && at(j, i) != &0.into() {
            return Err(GcmViolation::AsymmetricZero { i, j });
        }
    }
    Ok(())
}

/// A realization `(h, Π, Π∨)`: rows of `pi` are the simple roots in
/// coordinates of `h*`, rows of `pi_check` the coroots in coordinates of `h`,
/// with dual bases so that `⟨α_i∨, α_j⟩ = Σ_k pi_check[i][k] · pi[j][k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizationOfMatrix {
    pub h_dim: usize,
    pub pi: Vec<Vec<GaussianRational>>,
    pub pi_check: Vec<Vec<GaussianRational>>,
}

impl RealizationOfMatrix {
    /// The matrix `(⟨α_i∨, α_j⟩)_{ij}`.
    pub fn pairing(&self) -> Vec<Vec<GaussianRational>> {
        self.pi_check
            .iter()
            .map(|c| self.pi.iter().map(|p| c.iter().zip(p).map(|(x, y)| x * y).sum()).collect())
            .collect()
    }
}

/// Coroots are the first `m` coordinate vectors of `h`, so `Π∨ = [I | 0]`;
/// simple roots are `Π = [Aᵀ | B]` where the columns of `B` are the first
/// unit vectors completing the row space of `A` to all of `k^m`.
pub fn build_realization(a: &MatrixData) -> RealizationOfMatrix {
    let m = a.size();
    let r = a.rank();
    let h_dim = 2 * m - r;
    let mut span = Subspace::zero(m);
    for row in a.rows() {
        span.insert(&SparseVec::from_dense(row));
    }
    let mut extra = Vec::with_capacity(m - r);
    for k in 0..m {
        if span.is_full() {
            break;
        }
        if span.insert(&SparseVec::unit(k)) {
            extra.push(k);
        }
    }
    debug_assert_eq!(extra.len(), m - r);

    let zero = GaussianRational::zero;
    let pi = (0..m)
        .map(|j| {
            let mut row: Vec<GaussianRational> = (0..m).map(|i| a.entry(i, j).clone()).collect();
            row.extend(extra.iter().map(|&k| if k == j { GaussianRational::one() } else { zero() }));
            row
        })
        .collect();
    let pi_check =
        (0..m).map(|i| (0..h_dim).map(|k| if k == i { GaussianRational::one() } else { zero() }).collect()).collect();
    RealizationOfMatrix { h_dim, pi, pi_check }
}

/// Checks `dim h = 2m - rank`, that both `Π` and `Π∨` are independent, and
/// that the pairing reproduces `a`.
pub fn verify_realization(a: &MatrixData, real: &RealizationOfMatrix) -> bool {
    let m = a.size();
    let shaped = |rows: &[Vec<GaussianRational>]| rows.len() == m && rows.iter().all(|r| r.len() == real.h_dim);
    real.h_dim == 2 * m - a.rank()
        && shaped(&real.pi)
        && shaped(&real.pi_check)
        && rank(&real.pi) == m
        && rank(&real.pi_check) == m
        && real.pairing() == a.rows()
}

/// Number of generators `n` sufficient for ym(n) to surject onto the derived
/// Kac–Moody algebra of an `m × m` matrix of rank `r`: 4 when `r + 2 ≥ m`,
/// otherwise `max(4, 2(m - r))`.
pub fn ym_quotient_bound(m: usize, r: usize) -> usize {
    if r + 2 >= m {
        4
    } else {
        core::cmp::max(4, 2 * (m - r))
    }
}

pub fn ym_quotient_bound_for(a: &MatrixData) -> usize {
    ym_quotient_bound(a.size(), a.rank())
}
