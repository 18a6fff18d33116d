//! Exact computer algebra for the Kostant cascade of a Borel nilradical `n`
//! in classical types A, B, C and D.
//!
//! The crate builds the cascade, the canonical central generators of the
//! enveloping algebra `U(n)`, the minors and Pfaffians of the root-vector
//! matrix, and checks the identities relating them: centrality, weights,
//! commutation rules, the Weyl-algebra presentation of the quotient by a
//! centrally generated primitive ideal, the Heisenberg reduction, polarizations
//! and rank stability.
//!
//! All arithmetic is exact over ℚ(√2) ([`Scalar`]).
//!
//! ```
//! use kcascade::{canonical_generator, kostant_cascade, RootSystem, TypeLabel, Uea};
//! let d4 = RootSystem::new(TypeLabel::D, 4).unwrap();
//! let u = Uea::new(&d4);
//! for beta in kostant_cascade(&d4).roots {
//!     let xi = canonical_generator(&beta, &d4).unwrap();
//!     assert!(u.is_central(&u.symmetrize(&xi)));
//! }
//! ```

pub mod central;
pub mod ideals;
pub mod liealg;
pub mod linalg;
pub mod poly;
pub mod report;
pub mod rootsys;
pub mod scalar;
pub mod uea;

pub use central::{
    canonical_generator, expected_weight, factor_root, jacobian_check, matrix_u, minor_delta,
    p_alpha, square_root_check,
};
pub use ideals::heisenberg::{heisenberg_reduction, HeisenbergReport};
pub use ideals::kostant::{c_from_xi, xi_from_c, KostantForm, ScalarAssignment};
pub use ideals::lemmas::{
    compute_a, factorization_sweep, lemma2_sweep, verify_comm_with_generators, AMode,
};
pub use ideals::polar::{bilinear_form_matrix, polarization, PolarizationReport};
pub use ideals::stability::{c_product_check, stability_check, CProductReport};
pub use ideals::weyl::{weyl_presentation, WeylPair, WeylPresentation};
pub use liealg::{bracket_matrices, root_vector_matrix, structure_constants, MatrixRep, StructureConstants};
pub use poly::{CommutingPoly, SymbolicMatrix};
pub use report::Report;
pub use rootsys::{
    cascade_from_order, index_sets, is_strongly_orthogonal, kostant_cascade, Cascade, IndexSets,
    OrderCascade, OrderSpec, Root, RootKind, RootSystem, SignedRoot, TypeLabel, Weight,
};
pub use scalar::Scalar;
pub use uea::{Element, LieTable, Uea, Word};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("outside domain: {0}")]
    Domain(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("not skew-symmetric about the antidiagonal")]
    NotSkew,
    #[error("inadmissible scalars: {0}")]
    Inadmissible(String),
    #[error("consistency failure: {0}")]
    Consistency(String),
}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/roots.md")]
    mod roots {}
    #[doc = include_str!("../../../book/src/enveloping.md")]
    mod enveloping {}
    #[doc = include_str!("../../../book/src/generators.md")]
    mod generators {}
    #[doc = include_str!("../../../book/src/ideals.md")]
    mod ideals {}
    #[doc = include_str!("../../../book/src/infinite.md")]
    mod infinite {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
