//! Kostant forms and the identities behind the centrally generated primitive
//! ideals of `U(n)`.

pub mod heisenberg;
pub mod kostant;
pub mod lemmas;
pub mod polar;
pub mod stability;
pub mod weyl;
