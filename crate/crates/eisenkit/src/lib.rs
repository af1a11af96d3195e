//! Eisenstein series for GL(2) over ℚ attached to a pair of Dirichlet characters.
//!
//! The crate evaluates the Fourier expansion at the cusp ∞, the scattering
//! constant and its local factorization, and runs numerical experiments:
//! functional-equation residuals, amplifier prime sums and sup-norm scans.

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::manual_is_multiple_of)]

pub mod amplifier;
pub mod arith;
pub mod characters;
pub mod cli;
pub mod eisenstein;
pub mod error;
pub mod lfunctions;
pub mod special_functions;
pub mod supnorm;

pub use characters::{DirichletCharacter, LocalComponent, LocalEpsilonData};
pub use error::{Error, Result};
