//! Exact computational algebra for reductive group combinatorics: root data,
//! Weyl groups, Chevalley bases over small fields, finite-group cohomology,
//! formal characters and affine Hecke algebras.

pub mod coxeterhom;
pub mod error;
pub mod finitegrp;
pub mod gf;
pub mod hecke;
pub mod linalg;
pub mod polyfq;
pub mod pseudochar;
pub mod rootdata;
pub mod charring;
pub mod chevalley;
pub mod weyl;

pub use error::Error;
