//! Exact computations around Yang-Mills Lie algebras.
//!
//! Everything here works over the Gaussian rationals Q(i) with exact
//! arithmetic: the free Lie algebra f(n) in a Lyndon basis, the graded ideal
//! of Yang-Mills relations and the dimensions of ym(n), structure-constant
//! and Witt/Virasoro target algebras, morphisms defined on generators, the
//! sl(2) case analysis for ym(3), and realizations of matrices.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod case_study;
pub mod error;
pub mod free_lie;
pub mod kac_moody;
pub mod linalg;
pub mod lyndon;
pub mod morphism;
pub mod scalar;
pub mod witt;
pub mod ym;

pub use algebra::{
    heisenberg, series_analysis, sl_algebra, subalgebra_closure, SeriesReport, StructureConstantAlgebra, TargetElement,
};
pub use case_study::{
    isotropic_orthogonal_witness, oracle_equivalence, sl2_case_residual, solvable_image_audit, Branch,
    Sl2CaseParameters,
};
pub use error::{Error, Result};
pub use free_lie::{bracket, scalar_combine, FreeLieAlgebra, FreeLieElement};
pub use kac_moody::{
    build_realization, is_generalized_cartan, verify_realization, ym_quotient_bound, MatrixData, RealizationOfMatrix,
};
pub use lyndon::{free_lie_dim, lyndon_basis, LyndonWord};
pub use morphism::{
    analyze, doubling_morphism, pair_to_ym4_morphism, relation_residuals, witt_virasoro_morphism, yu_morphism,
    GeneratorMorphism, LieTarget, MorphismReport,
};
pub use scalar::GaussianRational;
pub use witt::{generated_window, witt_bracket, WindowCoverage, WittAlgebra, WittElement};
pub use ym::{
    ideal_graded_component, is_zero_in_ym, ym_dim, ym_relations, GradedDims, GradedSubspace, IdealTower,
    YangMillsPresentation,
};
