//! Morphisms ym(3) → sl(2): closed-form relator conditions, isotropic
//! vectors in k², and seeded audits that every morphism found has solvable image.
//!
//! Parameters describe `φ(x_i) = α_i e + β_i h + γ_i f` for `i = 1, 2` with
//! `φ(x₃)` normalized to `e` (nilpotent branch) or `h` (semisimple branch).
//! Dot products are the symmetric form `x·y = x₁y₁ + x₂y₂` on pairs.

use alloc::boxed::Box;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{series_analysis, sl_algebra, subalgebra_closure, StructureConstantAlgebra, TargetElement};
use crate::morphism::GeneratorMorphism;
use crate::scalar::GaussianRational;

pub type Pair = [GaussianRational; 2];

pub fn dot(x: &Pair, y: &Pair) -> GaussianRational {
    &(&x[0] * &y[0]) + &(&x[1] * &y[1])
}

fn lin(terms: &[(&GaussianRational, &Pair)]) -> Pair {
    let mut out = [GaussianRational::zero(), GaussianRational::zero()];
    for (k, v) in terms {
        out[0] += &(*k * &v[0]);
        out[1] += &(*k * &v[1]);
    }
    out
}

fn pair_is_zero(p: &Pair) -> bool {
    p[0].is_zero() && p[1].is_zero()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    /// `φ(x₃) = e`
    Nilpotent,
    /// `φ(x₃) = h`
    Semisimple,
}

impl Branch {
    pub fn name(self) -> &'static str {
        match self {
            Branch::Nilpotent => "nilpotent",
            Branch::Semisimple => "semisimple",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2CaseParameters {
    pub branch: Branch,
    pub alpha: Pair,
    pub beta: Pair,
    pub gamma: Pair,
}

impl Sl2CaseParameters {
    /// The morphism f(3) → sl(2) these parameters describe.
    pub fn morphism(&self) -> GeneratorMorphism<StructureConstantAlgebra> {
        let g = sl_algebra(2).expect("sl(2)");
        let image = |k: usize| sl2_element(&g, &self.alpha[k], &self.beta[k], &self.gamma[k]);
        let third = match self.branch {
            Branch::Nilpotent => g.named("e"),
            Branch::Semisimple => g.named("h"),
        }
        .expect("sl(2) label");
        let images = alloc::vec![image(0), image(1), third];
        GeneratorMorphism::new(g, images).expect("sl(2) elements")
    }
}

pub(crate) fn sl2_element(
    g: &StructureConstantAlgebra,
    a: &GaussianRational,
    b: &GaussianRational,
    c: &GaussianRational,
) -> TargetElement {
    g.element(&[("e", a.clone()), ("h", b.clone()), ("f", c.clone())]).expect("sl(2) labels")
}

/// The closed-form relator conditions of one branch.
///
/// `r3` are the scalar conditions equivalent to `φ(r₃) = 0`; `rj` are the
/// three vector identities (components indexed by `j = 1, 2`) equivalent to
/// `φ(r₁) = φ(r₂) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2CaseConditions {
    pub r3: [GaussianRational; 3],
    pub rj: [Pair; 3],
}

impl Sl2CaseConditions {
    pub fn all_vanish(&self) -> bool {
        self.r3.iter().all(|x| x.is_zero()) && self.rj.iter().all(pair_is_zero)
    }
}

pub fn sl2_case_residual(p: &Sl2CaseParameters) -> Sl2CaseConditions {
    let (a, b, c) = (&p.alpha, &p.beta, &p.gamma);
    let (aa, bb, cc) = (dot(a, a), dot(b, b), dot(c, c));
    let (ab, ac, bc) = (dot(a, b), dot(a, c), dot(b, c));
    let two = GaussianRational::from_int(2);
    let one = GaussianRational::one();
    let neg = |x: &GaussianRational| -x;

    // 2(β·β) + (α·γ), plus 2 in the semisimple branch
    let mut lead = &(&two * &bb) + &ac;
    if p.branch == Branch::Semisimple {
        lead = &lead + &two;
    }
    let r3 = match p.branch {
        Branch::Nilpotent => [&(&two * &bb) + &ac, bc.clone(), cc.clone()],
        Branch::Semisimple => [ab.clone(), ac.clone(), bc.clone()],
    };
    let alpha_coef_first = match p.branch {
        Branch::Nilpotent => neg(&(&aa + &one)),
        Branch::Semisimple => neg(&aa),
    };
    let two_ba = &two * &ab;
    let two_ac = &two * &ac;
    let two_bc = &two * &bc;
    let rj = [
        lin(&[(&lead, a), (&neg(&two_ba), b), (&alpha_coef_first, c)]),
        lin(&[(&two_ac, b), (&neg(&ab), c), (&neg(&bc), a)]),
        lin(&[(&lead, c), (&neg(&cc), a), (&neg(&two_bc), b)]),
    ];
    Sl2CaseConditions { r3, rj }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum WitnessError {
    #[error("x is the zero vector")]
    ZeroVector,
    #[error("x is not isotropic: x·x = {0}")]
    NotIsotropic(Box<GaussianRational>),
    #[error("x and y are not orthogonal: x·y = {0}")]
    NotOrthogonal(Box<GaussianRational>),
}

/// For nonzero isotropic `x` and `y ⟂ x`, the scalar `λ` with `y = λx`.
pub fn isotropic_orthogonal_witness(x: &Pair, y: &Pair) -> Result<GaussianRational, WitnessError> {
    if pair_is_zero(x) {
        return Err(WitnessError::ZeroVector);
    }
    let xx = dot(x, x);
    if !xx.is_zero() {
        return Err(WitnessError::NotIsotropic(Box::new(xx)));
    }
    let xy = dot(x, y);
    if !xy.is_zero() {
        return Err(WitnessError::NotOrthogonal(Box::new(xy)));
    }
    let k = if x[0].is_zero() { 1 } else { 0 };
    let lambda = &y[k] / &x[k];
    assert!(&lambda * &x[0] == y[0] && &lambda * &x[1] == y[1], "isotropic orthogonal vector is not a multiple");
    Ok(lambda)
}

/// Per-sample seeds derived from a master seed (SplitMix64 finalizer).
pub fn derive_seed(master: u64, index: u64) -> u64 {
    let mut z = master ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn sample_rng(master: u64, index: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(master, index as u64))
}

/// Small random Gaussian rational: integer parts in [-3, 3] over a denominator in 1..=3.
pub fn random_scalar<R: Rng>(rng: &mut R) -> GaussianRational {
    let re = rng.random_range(-3i64..=3);
    let im = if rng.random_bool(0.5) { rng.random_range(-3i64..=3) } else { 0 };
    let den = rng.random_range(1i64..=3);
    GaussianRational::from_parts(re, den, im, den)
}

fn random_nonzero_scalar<R: Rng>(rng: &mut R) -> GaussianRational {
    loop {
        let x = random_scalar(rng);
        if !x.is_zero() {
            return x;
        }
    }
}

fn random_pair<R: Rng>(rng: &mut R) -> Pair {
    [random_scalar(rng), random_scalar(rng)]
}

fn zero_pair() -> Pair {
    [GaussianRational::zero(), GaussianRational::zero()]
}

/// Random nonzero isotropic pair `t·(1, ±i)`.
fn random_isotropic<R: Rng>(rng: &mut R) -> Pair {
    let t = random_nonzero_scalar(rng);
    let s = if rng.random_bool(0.5) { GaussianRational::i() } else { -GaussianRational::i() };
    let second = &t * &s;
    [t, second]
}

/// Random pair with `β·β = -1`: `i·((1-t²)/(1+t²), 2t/(1+t²))`.
fn random_minus_one_norm<R: Rng>(rng: &mut R) -> Pair {
    loop {
        let t = random_scalar(rng);
        let t2 = &t * &t;
        let den = &GaussianRational::one() + &t2;
        let Some(inv) = den.inv() else { continue };
        let i = GaussianRational::i();
        let first = &(&i * &(&GaussianRational::one() - &t2)) * &inv;
        let second = &(&i * &(&GaussianRational::from_int(2) * &t)) * &inv;
        return [first, second];
    }
}

fn orthogonal_to(p: &Pair, scale: &GaussianRational) -> Pair {
    [-(scale * &p[1]), scale * &p[0]]
}

/// Random parameters satisfying every relator condition of `branch`.
pub fn random_solution<R: Rng>(branch: Branch, rng: &mut R) -> Sl2CaseParameters {
    let zero = zero_pair;
    let (alpha, beta, gamma) = match branch {
        Branch::Nilpotent => match rng.random_range(0..2) {
            0 => (random_pair(rng), zero(), zero()),
            _ => {
                let beta = random_isotropic(rng);
                let u = random_scalar(rng);
                let alpha = [&u * &beta[0], &u * &beta[1]];
                (alpha, beta, zero())
            }
        },
        Branch::Semisimple => match rng.random_range(0..3) {
            0 => (zero(), random_pair(rng), zero()),
            1 => {
                let beta = random_minus_one_norm(rng);
                let alpha = orthogonal_to(&beta, &random_scalar(rng));
                (alpha, beta, zero())
            }
            _ => {
                let beta = random_minus_one_norm(rng);
                let gamma = orthogonal_to(&beta, &random_scalar(rng));
                (zero(), beta, gamma)
            }
        },
    };
    Sl2CaseParameters { branch, alpha, beta, gamma }
}

pub fn random_parameters<R: Rng>(branch: Branch, rng: &mut R) -> Sl2CaseParameters {
    Sl2CaseParameters { branch, alpha: random_pair(rng), beta: random_pair(rng), gamma: random_pair(rng) }
}

/// Outcome of comparing the closed-form conditions with direct evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub branch: Branch,
    pub seed: u64,
    pub samples: usize,
    /// Samples whose closed-form conditions all vanish.
    pub closed_form_zero: usize,
    /// Samples whose direct relator residuals all vanish.
    pub residuals_zero: usize,
    /// Indices of samples where the two disagree.
    pub mismatches: Vec<usize>,
}

/// Sample `k` is drawn as: unconstrained (k ≡ 0 mod 3), an exact solution
/// (k ≡ 1), or a solution with one coordinate perturbed (k ≡ 2).
pub fn sample_parameters(branch: Branch, seed: u64, k: usize) -> Sl2CaseParameters {
    let mut rng = sample_rng(seed, k);
    match k % 3 {
        0 => random_parameters(branch, &mut rng),
        1 => random_solution(branch, &mut rng),
        _ => {
            let mut p = random_solution(branch, &mut rng);
            let delta = random_nonzero_scalar(&mut rng);
            let (which, slot) = (rng.random_range(0..3), rng.random_range(0..2));
            let target = match which {
                0 => &mut p.alpha,
                1 => &mut p.beta,
                _ => &mut p.gamma,
            };
            target[slot] += &delta;
            p
        }
    }
}

pub fn oracle_equivalence(branch: Branch, samples: usize, seed: u64) -> EquivalenceReport {
    let mut report =
        EquivalenceReport { branch, seed, samples, closed_form_zero: 0, residuals_zero: 0, mismatches: Vec::new() };
    for k in 0..samples {
        let p = sample_parameters(branch, seed, k);
        let closed = sl2_case_residual(&p).all_vanish();
        let direct = p.morphism().residuals_vanish(false);
        report.closed_form_zero += closed as usize;
        report.residuals_zero += direct as usize;
        if closed != direct {
            report.mismatches.push(k);
        }
    }
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CandidateFamily {
    /// Three unconstrained random images.
    Random,
    /// Solutions of the nilpotent branch, moved by a random automorphism.
    NilpotentBranch,
    /// Solutions of the semisimple branch, moved by a random automorphism.
    SemisimpleBranch,
    /// All images proportional to one element.
    Proportional,
    /// `x₁ ↦ h`, `x₂ ↦ e`, `x₃ ↦ i·h`, moved by a random automorphism.
    Remark,
}

impl CandidateFamily {
    pub const ALL: [CandidateFamily; 5] = [
        CandidateFamily::Random,
        CandidateFamily::NilpotentBranch,
        CandidateFamily::SemisimpleBranch,
        CandidateFamily::Proportional,
        CandidateFamily::Remark,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CandidateFamily::Random => "random",
            CandidateFamily::NilpotentBranch => "nilpotent-branch",
            CandidateFamily::SemisimpleBranch => "semisimple-branch",
            CandidateFamily::Proportional => "proportional",
            CandidateFamily::Remark => "remark",
        }
    }
}

type Mat2 = [[GaussianRational; 2]; 2];

fn mat_mul(x: &Mat2, y: &Mat2) -> Mat2 {
    let entry = |r: usize, c: usize| &(&x[r][0] * &y[0][c]) + &(&x[r][1] * &y[1][c]);
    [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]]
}

/// Conjugation by `g = [[1, s], [0, 1]]·[[1, 0], [t, 1]]`, an inner automorphism of sl(2).
struct Conjugation {
    g: Mat2,
    g_inv: Mat2,
}

impl Conjugation {
    fn random<R: Rng>(rng: &mut R) -> Self {
        let (s, t) = (random_scalar(rng), random_scalar(rng));
        let one = GaussianRational::one();
        let st = &s * &t;
        let g = [[&one + &st, s.clone()], [t.clone(), one.clone()]];
        let g_inv = [[one.clone(), -&s], [-&t, &one + &st]];
        Conjugation { g, g_inv }
    }

    fn apply(&self, alg: &StructureConstantAlgebra, x: &TargetElement) -> TargetElement {
        let (a, b, c) = (x.coefficient(0), x.coefficient(1), x.coefficient(2));
        let m = [[b.clone(), a], [c, -&b]];
        let y = mat_mul(&mat_mul(&self.g, &m), &self.g_inv);
        sl2_element(alg, &y[0][1], &y[0][0], &y[1][0])
    }
}

fn transform<R: Rng>(alg: &StructureConstantAlgebra, images: Vec<TargetElement>, rng: &mut R) -> Vec<TargetElement> {
    let conj = Conjugation::random(rng);
    let scale = random_nonzero_scalar(rng);
    let mut out: Vec<TargetElement> = images.iter().map(|x| conj.apply(alg, x).scale(&scale)).collect();
    // a random generator order; the relator set is permutation invariant
    for k in (1..out.len()).rev() {
        let j = rng.random_range(0..=k);
        out.swap(k, j);
    }
    out
}

/// Images of one audit candidate.
pub fn candidate_images(family: CandidateFamily, seed: u64, k: usize) -> Vec<TargetElement> {
    let g = sl_algebra(2).expect("sl(2)");
    let mut rng = sample_rng(seed, k);
    let random_el =
        |rng: &mut ChaCha8Rng| sl2_element(&g, &random_scalar(rng), &random_scalar(rng), &random_scalar(rng));
    match family {
        CandidateFamily::Random => (0..3).map(|_| random_el(&mut rng)).collect(),
        CandidateFamily::NilpotentBranch | CandidateFamily::SemisimpleBranch => {
            let branch =
                if family == CandidateFamily::NilpotentBranch { Branch::Nilpotent } else { Branch::Semisimple };
            let images = random_solution(branch, &mut rng).morphism().images().to_vec();
            transform(&g, images, &mut rng)
        }
        CandidateFamily::Proportional => {
            let base = random_el(&mut rng);
            (0..3).map(|_| base.scale(&random_scalar(&mut rng))).collect()
        }
        CandidateFamily::Remark => transform(&g, remark_images(&g), &mut rng),
    }
}

fn remark_images(g: &StructureConstantAlgebra) -> Vec<TargetElement> {
    let h = g.named("h").expect("h");
    alloc::vec![h.clone(), g.named("e").expect("e"), h.scale(&GaussianRational::i())]
}

/// The morphism `x₁ ↦ h`, `x₂ ↦ e`, `x₃ ↦ i·h`: solvable image, not nilpotent.
pub fn remark_morphism() -> GeneratorMorphism<StructureConstantAlgebra> {
    let g = sl_algebra(2).expect("sl(2)");
    let images = remark_images(&g);
    GeneratorMorphism::new(g, images).expect("sl(2) elements")
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FamilyCount {
    pub candidates: usize,
    pub residual_zero: usize,
    pub solvable: usize,
    pub nilpotent: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub family: CandidateFamily,
    pub sample: usize,
    pub images: Vec<TargetElement>,
}

/// The image structure of a single morphism into sl(2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImageCheck {
    pub residuals_zero: bool,
    pub image_dim: usize,
    pub solvable: bool,
    pub nilpotent: bool,
}

pub fn check_images(images: Vec<TargetElement>) -> ImageCheck {
    let g = sl_algebra(2).expect("sl(2)");
    let phi = GeneratorMorphism::new(g, images).expect("sl(2) elements");
    let residuals_zero = phi.residuals_vanish(false);
    let image = subalgebra_closure(phi.target(), phi.images()).expect("sl(2) elements");
    let series = series_analysis(phi.target(), &image).expect("closure is closed");
    ImageCheck { residuals_zero, image_dim: image.dim(), solvable: series.is_solvable, nilpotent: series.is_nilpotent }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditReport {
    pub seed: u64,
    pub samples: usize,
    pub families: Vec<(CandidateFamily, FamilyCount)>,
    /// Candidates left out of the solvability assertion because a residual is nonzero.
    pub excluded: usize,
    pub violations: Vec<Violation>,
    /// The unmodified `(h, e, i·h)` morphism.
    pub remark: ImageCheck,
    /// The zero morphism.
    pub zero: ImageCheck,
}

/// Draws `samples` candidates per family and checks that every one with
/// vanishing residuals has solvable image. Candidate `k` of a family uses the
/// seed derived from `(seed, k)`.
pub fn solvable_image_audit(samples: usize, seed: u64) -> AuditReport {
    solvable_image_audit_for(&CandidateFamily::ALL, samples, seed)
}

pub fn solvable_image_audit_for(families: &[CandidateFamily], samples: usize, seed: u64) -> AuditReport {
    let g = sl_algebra(2).expect("sl(2)");
    let mut counts = Vec::new();
    let mut excluded = 0;
    let mut violations = Vec::new();
    for (f_idx, &family) in families.iter().enumerate() {
        let mut count = FamilyCount::default();
        // distinct seed streams per family
        let family_seed = derive_seed(seed, 1_000_003 + f_idx as u64 + 7 * family as u64);
        for k in 0..samples {
            let images = candidate_images(family, family_seed, k);
            let check = check_images(images.clone());
            count.candidates += 1;
            if !check.residuals_zero {
                excluded += 1;
                continue;
            }
            count.residual_zero += 1;
            count.solvable += check.solvable as usize;
            count.nilpotent += check.nilpotent as usize;
            if !check.solvable {
                violations.push(Violation { family, sample: k, images });
            }
        }
        counts.push((family, count));
    }
    AuditReport {
        seed,
        samples,
        families: counts,
        excluded,
        violations,
        remark: check_images(remark_images(&g)),
        zero: check_images(alloc::vec![g.zero(), g.zero(), g.zero()]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gi(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_parts(re, 1, im, 1)
    }

    fn pair(a: (i64, i64), b: (i64, i64)) -> Pair {
        [gi(a.0, a.1), gi(b.0, b.1)]
    }

    #[test]
    fn witness_examples() {
        assert_eq!(isotropic_orthogonal_witness(&pair((1, 0), (0, 1)), &pair((2, 0), (0, 2))), Ok(gi(2, 0)));
        assert_eq!(isotropic_orthogonal_witness(&pair((1, 0), (0, 1)), &pair((0, 0), (0, 0))), Ok(gi(0, 0)));
        assert_eq!(isotropic_orthogonal_witness(&pair((1, 0), (0, -1)), &pair((0, 3), (3, 0))), Ok(gi(0, 3)));
        assert_eq!(
            isotropic_orthogonal_witness(&pair((0, 0), (0, 0)), &pair((1, 0), (0, 0))),
            Err(WitnessError::ZeroVector)
        );
        assert!(matches!(
            isotropic_orthogonal_witness(&pair((1, 0), (1, 0)), &pair((1, 0), (0, 0))),
            Err(WitnessError::NotIsotropic(_))
        ));
        assert!(matches!(
            isotropic_orthogonal_witness(&pair((1, 0), (0, 1)), &pair((1, 0), (0, 0))),
            Err(WitnessError::NotOrthogonal(_))
        ));
    }

    #[test]
    fn closed_form_examples() {
        let z = zero_pair();
        let p = Sl2CaseParameters {
            branch: Branch::Semisimple,
            alpha: z.clone(),
            beta: pair((1, 0), (0, 1)),
            gamma: z.clone(),
        };
        assert!(sl2_case_residual(&p).all_vanish());
        assert!(p.morphism().residuals_vanish(false));

        let p = Sl2CaseParameters {
            branch: Branch::Nilpotent,
            alpha: z.clone(),
            beta: z.clone(),
            gamma: pair((1, 0), (0, 0)),
        };
        let c = sl2_case_residual(&p);
        assert_eq!(c.r3[2], gi(1, 0));
        assert!(!c.all_vanish());

        let p =
            Sl2CaseParameters { branch: Branch::Semisimple, alpha: pair((1, 0), (0, 0)), beta: z.clone(), gamma: z };
        let c = sl2_case_residual(&p);
        assert_eq!(c.rj[0], pair((2, 0), (0, 0)));
        assert!(!c.all_vanish());
    }

    #[test]
    fn solutions_satisfy_conditions() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for branch in [Branch::Nilpotent, Branch::Semisimple] {
            for _ in 0..30 {
                let p = random_solution(branch, &mut rng);
                assert!(sl2_case_residual(&p).all_vanish(), "{p:?}");
            }
        }
    }

    #[test]
    fn remark_is_solvable_not_nilpotent() {
        let phi = remark_morphism();
        assert!(phi.residuals_vanish(false));
        let c = check_images(phi.images().to_vec());
        assert!(c.solvable && !c.nilpotent);
        assert_eq!(c.image_dim, 2);
    }

    #[test]
    fn conjugation_is_an_automorphism() {
        let g = sl_algebra(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let conj = Conjugation::random(&mut rng);
        let (e, f) = (g.named("e").unwrap(), g.named("f").unwrap());
        let lhs = conj.apply(&g, &g.bracket(&e, &f).unwrap());
        let rhs = g.bracket(&conj.apply(&g, &e), &conj.apply(&g, &f)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn small_audit() {
        let rep = solvable_image_audit(6, 1);
        assert!(rep.violations.is_empty());
        assert!(rep.remark.solvable && !rep.remark.nilpotent);
        assert!(rep.zero.residuals_zero && rep.zero.solvable);
    }
}
