//! Verification of the integral identities for Ξ and their n-dimensional
//! harmonic extensions.

pub mod convention;
pub mod dirichlet;
pub mod eq11;
pub mod harmonicity;
pub mod kernel;
pub mod laplace_chain;
pub mod report;
pub mod rk;
pub mod upsilon;

pub use convention::Convention;
pub use report::{IdentityId, Param, PassRule, VerificationReport};
