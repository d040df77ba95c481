use proptest::prelude::*;
use ymalg_core::case_study::{
    check_images, oracle_equivalence, remark_morphism, sl2_case_residual, solvable_image_audit_for, Branch,
    CandidateFamily, Sl2CaseParameters,
};
use ymalg_core::{yu_morphism, GaussianRational};

fn gi(re: i64, im: i64) -> GaussianRational {
    GaussianRational::from_parts(re, 1, im, 1)
}

fn scalar() -> impl Strategy<Value = GaussianRational> {
    prop_oneof![
        2 => Just(GaussianRational::zero()),
        3 => (-3i64..=3, -3i64..=3, 1i64..=2).prop_map(|(a, b, d)| GaussianRational::from_parts(a, d, b, d)),
    ]
}

fn params(branch: Branch) -> impl Strategy<Value = Sl2CaseParameters> {
    prop::collection::vec(scalar(), 6).prop_map(move |v| Sl2CaseParameters {
        branch,
        alpha: [v[0].clone(), v[1].clone()],
        beta: [v[2].clone(), v[3].clone()],
        gamma: [v[4].clone(), v[5].clone()],
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn closed_form_iff_residuals_nilpotent(p in params(Branch::Nilpotent)) {
        prop_assert_eq!(sl2_case_residual(&p).all_vanish(), p.morphism().residuals_vanish(false));
    }

    #[test]
    fn closed_form_iff_residuals_semisimple(p in params(Branch::Semisimple)) {
        prop_assert_eq!(sl2_case_residual(&p).all_vanish(), p.morphism().residuals_vanish(false));
    }

    #[test]
    fn zero_residual_images_are_solvable(p in params(Branch::Semisimple)) {
        let phi = p.morphism();
        if phi.residuals_vanish(false) {
            prop_assert!(check_images(phi.images().to_vec()).solvable);
        }
    }
}

#[test]
fn remark_parameters() {
    // (h, e, ih) = i·(-ih, -ie, h), i.e. the semisimple branch with α = (0, -i), β = (-i, 0), γ = 0
    let p = Sl2CaseParameters {
        branch: Branch::Semisimple,
        alpha: [gi(0, 0), gi(0, -1)],
        beta: [gi(0, -1), gi(0, 0)],
        gamma: [gi(0, 0), gi(0, 0)],
    };
    assert!(sl2_case_residual(&p).all_vanish());
    let c = check_images(p.morphism().images().to_vec());
    assert!(c.residuals_zero && c.solvable && !c.nilpotent);
    assert!(remark_morphism().residuals_vanish(false));
    // [h, [h, e]] = 4e, so the individual relations fail
    assert!(!remark_morphism().residuals_vanish(true));
}

#[test]
fn isotropic_beta_without_gamma() {
    // nilpotent branch: β = (1, i) isotropic and α ∥ β
    let p = Sl2CaseParameters {
        branch: Branch::Nilpotent,
        alpha: [gi(2, 0), gi(0, 2)],
        beta: [gi(1, 0), gi(0, 1)],
        gamma: [gi(0, 0), gi(0, 0)],
    };
    assert!(sl2_case_residual(&p).all_vanish());
    // α not parallel to β breaks the second identity
    let q = Sl2CaseParameters { alpha: [gi(1, 0), gi(0, 0)], ..p };
    assert!(!sl2_case_residual(&q).all_vanish());
    assert!(!q.morphism().residuals_vanish(false));
}

#[test]
fn seeded_equivalence_has_no_mismatches() {
    for branch in [Branch::Nilpotent, Branch::Semisimple] {
        let r = oracle_equivalence(branch, 120, 42);
        assert!(r.mismatches.is_empty(), "{:?}", r.mismatches);
        assert!(r.closed_form_zero >= 40, "too few solutions sampled");
        assert!(r.closed_form_zero < 120);
    }
}

#[test]
fn audits_are_deterministic() {
    let a = solvable_image_audit_for(&CandidateFamily::ALL, 10, 5);
    let b = solvable_image_audit_for(&CandidateFamily::ALL, 10, 5);
    assert_eq!(a, b);
    assert!(a.violations.is_empty());
    let c = solvable_image_audit_for(&[CandidateFamily::Random], 10, 6);
    assert_eq!(c.excluded + c.families[0].1.residual_zero, 10);
}

#[test]
fn yu_strong_residuals() {
    let phi = yu_morphism();
    let r = phi.relation_residuals(true);
    assert_eq!(r.len(), 9);
    assert!(r.iter().all(|x| x.is_zero()));
}
