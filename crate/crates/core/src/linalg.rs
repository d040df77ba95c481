//! Sparse exact vectors and row-reduced subspaces over Q(i).
//!
//! A [`Subspace`] keeps its rows in reduced row-echelon form at all times:
//! every row has leading coefficient 1 at its pivot column, and no other row
//! has a nonzero entry in that column. Inserting a vector reduces it against
//! the pivots, and a nonzero remainder becomes a new row after clearing its
//! pivot column from the existing rows. Two subspaces are equal iff their
//! canonical row lists are equal.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::scalar::GaussianRational;

/// Sparse vector: strictly increasing column indices, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, GaussianRational)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec::default()
    }

    pub fn unit(col: usize) -> Self {
        SparseVec { entries: alloc::vec![(col, GaussianRational::one())] }
    }

    /// Builds a vector from arbitrary (column, coefficient) pairs, summing repeats.
    pub fn from_pairs<I: IntoIterator<Item = (usize, GaussianRational)>>(pairs: I) -> Self {
        let mut acc: BTreeMap<usize, GaussianRational> = BTreeMap::new();
        for (c, x) in pairs {
            *acc.entry(c).or_default() += &x;
        }
        SparseVec::from_map(acc)
    }

    pub fn from_map(map: BTreeMap<usize, GaussianRational>) -> Self {
        SparseVec { entries: map.into_iter().filter(|(_, x)| !x.is_zero()).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &GaussianRational)> + '_ {
        self.entries.iter().map(|(c, x)| (*c, x))
    }

    pub fn get(&self, col: usize) -> Option<&GaussianRational> {
        self.entries.binary_search_by_key(&col, |(c, _)| *c).ok().map(|k| &self.entries[k].1)
    }

    pub fn leading(&self) -> Option<(usize, &GaussianRational)> {
        self.entries.first().map(|(c, x)| (*c, x))
    }

    pub fn max_col(&self) -> Option<usize> {
        self.entries.last().map(|(c, _)| *c)
    }

    pub fn scale(&self, k: &GaussianRational) -> SparseVec {
        if k.is_zero() {
            return SparseVec::new();
        }
        SparseVec { entries: self.entries.iter().map(|(c, x)| (*c, x * k)).collect() }
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec { entries: self.entries.iter().map(|(c, x)| (*c, -x)).collect() }
    }

    /// `self + k * other`, merged in one pass.
    pub fn add_scaled(&self, k: &GaussianRational, other: &SparseVec) -> SparseVec {
        if k.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((ca, xa)), Some((cb, xb))) => {
                    if ca < cb {
                        out.push((*ca, xa.clone()));
                        a.next();
                    } else if cb < ca {
                        out.push((*cb, k * xb));
                        b.next();
                    } else {
                        let s = xa + &(k * xb);
                        if !s.is_zero() {
                            out.push((*ca, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((ca, xa)), None) => {
                    out.push((*ca, xa.clone()));
                    a.next();
                }
                (None, Some((cb, xb))) => {
                    out.push((*cb, k * xb));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        self.add_scaled(&GaussianRational::one(), other)
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        self.add_scaled(&GaussianRational::from_int(-1), other)
    }

    pub fn to_dense(&self, len: usize) -> Vec<GaussianRational> {
        let mut out = alloc::vec![GaussianRational::zero(); len];
        for (c, x) in self.iter() {
            out[c] = x.clone();
        }
        out
    }

    pub fn from_dense(values: &[GaussianRational]) -> SparseVec {
        SparseVec {
            entries: values.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(c, x)| (c, x.clone())).collect(),
        }
    }
}

/// Row space in canonical reduced row-echelon form.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<SparseVec>,
    // pivot column -> index into `rows`
    pivots: BTreeMap<usize, usize>,
}

impl Subspace {
    /// The zero subspace of a space with `ambient` coordinates.
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new(), pivots: BTreeMap::new() }
    }

    pub fn spanned_by<'a, I: IntoIterator<Item = &'a SparseVec>>(ambient: usize, vecs: I) -> Self {
        let mut s = Subspace::zero(ambient);
        for v in vecs {
            s.insert(v);
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    /// Rows ordered by pivot column: the canonical RREF matrix.
    pub fn rows(&self) -> impl Iterator<Item = &SparseVec> + '_ {
        self.pivots.values().map(move |&k| &self.rows[k])
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Remainder of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        // rows vanish on foreign pivot columns, so one pass over v's pivots suffices
        let hits: Vec<(usize, GaussianRational)> =
            v.iter().filter_map(|(c, x)| self.pivots.get(&c).map(|&k| (k, x.clone()))).collect();
        if hits.is_empty() {
            return v.clone();
        }
        let mut acc: BTreeMap<usize, GaussianRational> = v.iter().map(|(c, x)| (c, x.clone())).collect();
        for (k, coef) in hits {
            for (c, x) in self.rows[k].iter() {
                *acc.entry(c).or_default() -= &(&coef * x);
            }
        }
        SparseVec::from_map(acc)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        if let Some(c) = v.max_col() {
            assert!(c < self.ambient, "column {c} outside ambient dimension {}", self.ambient);
        }
        let r = self.reduce(v);
        let Some((pivot, lead)) = r.leading() else {
            return false;
        };
        let r = r.scale(&lead.inv().expect("leading entry is nonzero"));
        for row in self.rows.iter_mut() {
            if let Some(x) = row.get(pivot) {
                let k = -x;
                *row = row.add_scaled(&k, &r);
            }
        }
        self.pivots.insert(pivot, self.rows.len());
        self.rows.push(r);
        true
    }

    pub fn extend<'a, I: IntoIterator<Item = &'a SparseVec>>(&mut self, vecs: I) -> bool {
        let mut grew = false;
        for v in vecs {
            grew |= self.insert(v);
        }
        grew
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    /// Coefficients of `v` in the canonical row basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<GaussianRational>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.keys().map(|&p| v.get(p).cloned().unwrap_or_default()).collect())
    }
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.dim() == other.dim() && self.rows().eq(other.rows())
    }
}

impl Eq for Subspace {}

/// Rank of a dense matrix given by rows.
pub fn rank(rows: &[Vec<GaussianRational>]) -> usize {
    let ambient = rows.first().map_or(0, |r| r.len());
    let vecs: Vec<SparseVec> = rows.iter().map(|r| SparseVec::from_dense(r)).collect();
    Subspace::spanned_by(ambient, vecs.iter()).dim()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> SparseVec {
        SparseVec::from_dense(&xs.iter().map(|&x| GaussianRational::from_int(x)).collect::<Vec<_>>())
    }

    #[test]
    fn insert_keeps_rref() {
        let mut s = Subspace::zero(3);
        assert!(s.insert(&v(&[1, 2, 3])));
        assert!(s.insert(&v(&[2, 4, 7])));
        assert!(!s.insert(&v(&[3, 6, 10])));
        let rows: Vec<_> = s.rows().cloned().collect();
        assert_eq!(rows, alloc::vec![v(&[1, 2, 0]), v(&[0, 0, 1])]);
        assert_eq!(s.dim(), 2);
    }

    #[test]
    fn equality_is_canonical() {
        let a = Subspace::spanned_by(3, [v(&[1, 1, 0]), v(&[0, 1, 1])].iter());
        let b = Subspace::spanned_by(3, [v(&[1, 0, -1]), v(&[2, 3, 1])].iter());
        assert_eq!(a, b);
        let c = Subspace::spanned_by(3, [v(&[1, 0, 0])].iter());
        assert_ne!(a, c);
    }

    #[test]
    fn gaussian_entries() {
        let i = GaussianRational::i();
        let one = GaussianRational::one();
        let x = SparseVec::from_dense(&[one.clone(), i.clone()]);
        let y = x.scale(&i);
        let mut s = Subspace::zero(2);
        s.insert(&x);
        assert!(s.contains(&y));
        assert_eq!(rank(&[alloc::vec![one.clone(), i.clone()], alloc::vec![i.clone(), -one]]), 1);
    }

    #[test]
    fn add_scaled_cancels() {
        let a = v(&[1, 2, 0, 4]);
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.add_scaled(&GaussianRational::from_int(2), &v(&[0, -1, 1, 0])), v(&[1, 0, 2, 4]));
    }
}
