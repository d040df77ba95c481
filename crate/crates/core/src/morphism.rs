//! Lie morphisms out of f(n) determined by the images of the generators.
//!
//! A Lyndon basis word is evaluated through its standard bracketing, so one
//! evaluation path serves every target. A morphism factors through ym(n)
//! (or the strong quotient) exactly when every relator evaluates to zero.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{series_analysis, sl_algebra, subalgebra_closure, StructureConstantAlgebra, TargetElement};
use crate::error::{Error, Result};
use crate::free_lie::{FreeLieAlgebra, FreeLieElement};
use crate::linalg::Subspace;
use crate::lyndon::LyndonWord;
use crate::scalar::GaussianRational;
use crate::witt::{generated_window, WindowCoverage, WittAlgebra, WittElement};
use crate::ym::{ym_relations, IdealTower};

/// A Lie algebra that can receive a morphism.
pub trait LieTarget {
    type Element: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Element;
    fn is_zero(&self, x: &Self::Element) -> bool;
    fn add(&self, x: &Self::Element, y: &Self::Element) -> Self::Element;
    fn scale(&self, k: &GaussianRational, x: &Self::Element) -> Self::Element;
    /// Bracket of two elements already accepted by [`LieTarget::validate`].
    fn bracket(&self, x: &Self::Element, y: &Self::Element) -> Self::Element;
    fn validate(&self, x: &Self::Element) -> Result<()>;
}

impl LieTarget for FreeLieAlgebra {
    type Element = FreeLieElement;

    fn zero(&self) -> FreeLieElement {
        FreeLieAlgebra::zero(self)
    }
    fn is_zero(&self, x: &FreeLieElement) -> bool {
        x.is_zero()
    }
    fn add(&self, x: &FreeLieElement, y: &FreeLieElement) -> FreeLieElement {
        x.add(y)
    }
    fn scale(&self, k: &GaussianRational, x: &FreeLieElement) -> FreeLieElement {
        x.scale(k)
    }
    fn bracket(&self, x: &FreeLieElement, y: &FreeLieElement) -> FreeLieElement {
        self.bracket_unchecked(x, y)
    }
    fn validate(&self, x: &FreeLieElement) -> Result<()> {
        if x.generator_count() != self.generator_count() {
            return Err(Error::GeneratorMismatch { left: self.generator_count(), right: x.generator_count() });
        }
        Ok(())
    }
}

impl LieTarget for StructureConstantAlgebra {
    type Element = TargetElement;

    fn zero(&self) -> TargetElement {
        StructureConstantAlgebra::zero(self)
    }
    fn is_zero(&self, x: &TargetElement) -> bool {
        x.is_zero()
    }
    fn add(&self, x: &TargetElement, y: &TargetElement) -> TargetElement {
        x.add(y).expect("validated elements share a dimension")
    }
    fn scale(&self, k: &GaussianRational, x: &TargetElement) -> TargetElement {
        x.scale(k)
    }
    fn bracket(&self, x: &TargetElement, y: &TargetElement) -> TargetElement {
        StructureConstantAlgebra::bracket(self, x, y).expect("validated elements share a dimension")
    }
    fn validate(&self, x: &TargetElement) -> Result<()> {
        if x.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: x.dim() });
        }
        Ok(())
    }
}

impl LieTarget for WittAlgebra {
    type Element = WittElement;

    fn zero(&self) -> WittElement {
        WittElement::zero()
    }
    fn is_zero(&self, x: &WittElement) -> bool {
        x.is_zero()
    }
    fn add(&self, x: &WittElement, y: &WittElement) -> WittElement {
        x.add(y)
    }
    fn scale(&self, k: &GaussianRational, x: &WittElement) -> WittElement {
        x.scale(k)
    }
    fn bracket(&self, x: &WittElement, y: &WittElement) -> WittElement {
        WittAlgebra::bracket(self, x, y)
    }
    fn validate(&self, x: &WittElement) -> Result<()> {
        if !self.virasoro && !x.central().is_zero() {
            return Err(Error::InvalidArgument("central term in a Witt algebra element".into()));
        }
        Ok(())
    }
}

/// The morphism f(n) → target with `x_k ↦ images[k - 1]`.
pub struct GeneratorMorphism<T: LieTarget> {
    target: T,
    images: Vec<T::Element>,
}

impl<T: LieTarget> GeneratorMorphism<T> {
    pub fn new(target: T, images: Vec<T::Element>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::InvalidArgument("a morphism needs at least one generator".into()));
        }
        for x in &images {
            target.validate(x)?;
        }
        Ok(GeneratorMorphism { target, images })
    }

    /// Number of source generators `n`.
    pub fn source_generators(&self) -> usize {
        self.images.len()
    }

    pub fn target(&self) -> &T {
        &self.target
    }

    pub fn images(&self) -> &[T::Element] {
        &self.images
    }

    pub fn evaluate(&self, a: &FreeLieElement) -> Result<T::Element> {
        let n = self.source_generators();
        if a.generator_count() != n {
            return Err(Error::GeneratorMismatch { left: n, right: a.generator_count() });
        }
        let mut memo = BTreeMap::new();
        let mut out = self.target.zero();
        for (w, c) in a.terms() {
            let x = self.evaluate_word(w, &mut memo);
            out = self.target.add(&out, &self.target.scale(c, &x));
        }
        Ok(out)
    }

    fn evaluate_word(&self, w: &LyndonWord, memo: &mut BTreeMap<LyndonWord, T::Element>) -> T::Element {
        if let Some(x) = memo.get(w) {
            return x.clone();
        }
        let value = match w.standard_factorization() {
            None => self.images[w.letters()[0] as usize - 1].clone(),
            Some((u, v)) => {
                let (pu, pv) = (self.evaluate_word(&u, memo), self.evaluate_word(&v, memo));
                self.target.bracket(&pu, &pv)
            }
        };
        memo.insert(w.clone(), value.clone());
        value
    }

    /// Images of the relators of `ym_relations(n, strong)`, in order.
    pub fn relation_residuals(&self, strong: bool) -> Vec<T::Element> {
        let pres = ym_relations(self.source_generators(), strong);
        pres.relators().iter().map(|r| self.evaluate(r).expect("relators live in f(n)")).collect()
    }

    pub fn residuals_vanish(&self, strong: bool) -> bool {
        self.relation_residuals(strong).iter().all(|x| self.target.is_zero(x))
    }
}

impl<T: LieTarget> fmt::Debug for GeneratorMorphism<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GeneratorMorphism").field("images", &self.images).finish()
    }
}

/// Free-function form of [`GeneratorMorphism::relation_residuals`].
pub fn relation_residuals<T: LieTarget>(phi: &GeneratorMorphism<T>, strong: bool) -> Vec<T::Element> {
    phi.relation_residuals(strong)
}

/// `x_j ↦ y_j`, `x_{m+j} ↦ i·y_j` for arbitrary target elements `y_1..y_m`.
///
/// Every weak relator cancels: the `x_{m+j}` summands contribute
/// `i² [y_j, [y_j, ·]] = -[y_j, [y_j, ·]]`.
pub fn doubling_into<T: LieTarget>(target: T, ys: Vec<T::Element>) -> Result<GeneratorMorphism<T>> {
    let i = GaussianRational::i();
    let mut images = ys.clone();
    images.extend(ys.iter().map(|y| target.scale(&i, y)));
    GeneratorMorphism::new(target, images)
}

/// The surjection f(2m) → f(m) that kills the relators of ym(2m).
pub fn doubling_morphism(m: usize) -> GeneratorMorphism<FreeLieAlgebra> {
    let target = FreeLieAlgebra::new(m);
    let ys = (1..=m).map(|j| target.generator(j)).collect();
    doubling_into(target, ys).expect("generators of f(m) are valid")
}

/// f(n) → f(m), `x_i ↦ x_i` for `i ≤ m` and `x_i ↦ 0` otherwise.
pub fn projection_morphism(n: usize, m: usize) -> Result<GeneratorMorphism<FreeLieAlgebra>> {
    if m < 1 || m > n {
        return Err(Error::InvalidArgument(alloc::format!("projection needs 1 <= m <= n, got n={n}, m={m}")));
    }
    let target = FreeLieAlgebra::new(m);
    let images = (1..=n).map(|i| if i <= m { target.generator(i) } else { target.zero() }).collect();
    GeneratorMorphism::new(target, images)
}

/// Whether the projection ym(n) → ym(m) is well defined: every relator of
/// ym(n) maps into the ideal of ym(m).
pub fn projection_respects_ideal(n: usize, m: usize) -> Result<bool> {
    let phi = projection_morphism(n, m)?;
    let mut tower = IdealTower::new(ym_relations(m, false));
    for r in phi.relation_residuals(false) {
        if !tower.is_zero(&r)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// ym(3) → sl(3), `x₁ ↦ E^{12}`, `x₂ ↦ E^{23}`, `x₃ ↦ E^{31}`.
pub fn yu_morphism() -> GeneratorMorphism<StructureConstantAlgebra> {
    let g = sl_algebra(3).expect("sl(3) exists");
    let images = ["E12", "E23", "E31"].iter().map(|l| g.named(l).expect("sl(3) label")).collect();
    GeneratorMorphism::new(g, images).expect("images lie in sl(3)")
}

/// ym(4) → g with images `(a, b, i·a, i·b)`.
pub fn pair_to_ym4_morphism(
    g: StructureConstantAlgebra,
    a: TargetElement,
    b: TargetElement,
) -> Result<GeneratorMorphism<StructureConstantAlgebra>> {
    doubling_into(g, alloc::vec![a, b])
}

/// ym(4) → Witt or Virasoro with images `(e_{-2}, e_3, i·e_{-2}, i·e_3)`.
pub fn witt_virasoro_morphism(virasoro: bool) -> GeneratorMorphism<WittAlgebra> {
    doubling_into(WittAlgebra { virasoro }, alloc::vec![WittElement::basis(-2), WittElement::basis(3)])
        .expect("basis elements are valid")
}

/// Window evidence that the generator images generate the Witt/Virasoro target.
pub fn witt_generation_evidence(phi: &GeneratorMorphism<WittAlgebra>, depth: usize, window: u64) -> WindowCoverage {
    generated_window(phi.images(), depth, window, phi.target().virasoro)
}

/// Subalgebra generated by the images.
pub fn image_subalgebra(phi: &GeneratorMorphism<StructureConstantAlgebra>) -> Subspace {
    subalgebra_closure(phi.target(), phi.images()).expect("validated images")
}

pub fn check_surjective(phi: &GeneratorMorphism<StructureConstantAlgebra>) -> bool {
    image_subalgebra(phi).is_full()
}

/// Residuals and image structure of a morphism into a finite-dimensional algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismReport {
    pub residuals_zero: bool,
    pub residuals: Vec<TargetElement>,
    pub image_dim: usize,
    pub solvable: bool,
    pub nilpotent: bool,
    pub surjective: bool,
}

pub fn analyze(phi: &GeneratorMorphism<StructureConstantAlgebra>, strong: bool) -> MorphismReport {
    let residuals = phi.relation_residuals(strong);
    let image = image_subalgebra(phi);
    let series = series_analysis(phi.target(), &image).expect("closures are bracket-closed");
    MorphismReport {
        residuals_zero: residuals.iter().all(|r| r.is_zero()),
        residuals,
        image_dim: image.dim(),
        solvable: series.is_solvable,
        nilpotent: series.is_nilpotent,
        surjective: image.is_full(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluate_on_generators_and_brackets() {
        let phi = yu_morphism();
        let f = FreeLieAlgebra::new(3);
        let g = phi.target().clone();
        for j in 1..=3 {
            assert_eq!(&phi.evaluate(&f.generator(j)).unwrap(), &phi.images()[j - 1]);
        }
        let x12 = f.bracket(&f.generator(1), &f.generator(2)).unwrap();
        assert_eq!(phi.evaluate(&x12).unwrap(), g.named("E13").unwrap());
        let x23 = f.bracket(&f.generator(2), &f.generator(3)).unwrap();
        assert_eq!(phi.evaluate(&x23).unwrap(), g.named("E21").unwrap());
        assert!(matches!(phi.evaluate(&FreeLieElement::generator(2, 1)), Err(Error::GeneratorMismatch { .. })));
    }

    #[test]
    fn yu_strong_residuals() {
        let phi = yu_morphism();
        let res = phi.relation_residuals(true);
        assert_eq!(res.len(), 9);
        assert!(res.iter().all(|r| r.is_zero()));
        assert!(check_surjective(&phi));
        assert_eq!(image_subalgebra(&phi).dim(), 8);
    }

    #[test]
    fn sl2_e_f_zero_is_not_yang_mills() {
        let g = sl_algebra(2).unwrap();
        let (e, f) = (g.named("e").unwrap(), g.named("f").unwrap());
        let phi = GeneratorMorphism::new(g.clone(), alloc::vec![e, f.clone(), g.zero()]).unwrap();
        let f3 = FreeLieAlgebra::new(3);
        let x12 = f3.bracket(&f3.generator(1), &f3.generator(2)).unwrap();
        assert_eq!(phi.evaluate(&x12).unwrap(), g.named("h").unwrap());
        let res = phi.relation_residuals(false);
        assert_eq!(res[0], f.scale(&GaussianRational::from_int(-2)));
        assert!(!phi.residuals_vanish(false));
    }

    #[test]
    fn doubling_kills_relators() {
        for m in 1..=3 {
            let phi = doubling_morphism(m);
            assert!(phi.relation_residuals(false).iter().all(|r| r.is_zero()), "m = {m}");
        }
        let phi = doubling_morphism(2);
        let f4 = FreeLieAlgebra::new(4);
        let x12 = f4.bracket(&f4.generator(1), &f4.generator(2)).unwrap();
        let y = phi.evaluate(&x12).unwrap();
        assert_eq!(y, FreeLieElement::basis(2, LyndonWord::new(alloc::vec![1, 2]).unwrap()));
    }

    #[test]
    fn projections() {
        assert!(projection_respects_ideal(3, 2).unwrap());
        assert!(projection_respects_ideal(3, 3).unwrap());
        assert!(projection_respects_ideal(4, 2).unwrap());
        let p = projection_morphism(2, 1).unwrap();
        assert!(p.relation_residuals(false).iter().all(|r| r.is_zero()));
        assert!(projection_morphism(2, 3).is_err());
    }

    #[test]
    fn pairs() {
        let g = sl_algebra(2).unwrap();
        let n = |l| g.named(l).unwrap();
        let phi = pair_to_ym4_morphism(g.clone(), n("e"), n("f")).unwrap();
        let rep = analyze(&phi, false);
        assert!(rep.residuals_zero && rep.surjective);
        let phi = pair_to_ym4_morphism(g.clone(), n("e"), n("h")).unwrap();
        let rep = analyze(&phi, false);
        assert!(rep.residuals_zero);
        assert!(!rep.surjective);
        assert_eq!(rep.image_dim, 2);

        let s3 = sl_algebra(3).unwrap();
        let a = s3.named("E12").unwrap().add(&s3.named("E23").unwrap()).unwrap();
        // the principal pair only reaches a copy of sl(2)
        let b = s3.named("E21").unwrap().add(&s3.named("E32").unwrap()).unwrap();
        let rep = analyze(&pair_to_ym4_morphism(s3.clone(), a.clone(), b).unwrap(), false);
        assert!(rep.residuals_zero);
        assert_eq!(rep.image_dim, 3);
        let rep = analyze(&pair_to_ym4_morphism(s3.clone(), a, s3.named("E31").unwrap()).unwrap(), false);
        assert!(rep.residuals_zero && rep.surjective);
        assert_eq!(rep.image_dim, 8);
    }

    #[test]
    fn witt_morphisms() {
        for virasoro in [false, true] {
            let phi = witt_virasoro_morphism(virasoro);
            assert!(phi.residuals_vanish(false));
            let f4 = FreeLieAlgebra::new(4);
            let x12 = f4.bracket(&f4.generator(1), &f4.generator(2)).unwrap();
            assert_eq!(phi.evaluate(&x12).unwrap(), WittElement::basis(1).scale(&GaussianRational::from_int(5)));
        }
    }
}
