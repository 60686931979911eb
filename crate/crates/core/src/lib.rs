//! Periods, point counts and Hasse-Witt data for the genus-3 generalized
//! Legendre curves `y^4 = x(x-1)(x-λ)`.
//!
//! - [`field`]: prime fields with a primitive root and discrete-log table
//! - [`characters`]: multiplicative characters, Jacobi sums, normalized binomials
//! - [`ffhyper`]: Greene's finite-field `2F1` (two definitions) and its inversion formula
//! - [`classical`]: exact classical `2F1` series, truncations mod `p`, period operators
//! - [`curves`]: point counts, trace of Frobenius, Hasse-Witt matrix
//! - [`congruence`]: classical/finite-field congruence checks and the period match table
//! - [`cli`]: the `legendre-hgf` command-line front end

pub mod characters;
pub mod classical;
pub mod cli;
pub mod congruence;
pub mod curves;
pub mod error;
pub mod ffhyper;
pub mod field;

pub use characters::{CharacterGroup, ComplexValue, MultChar};
pub use classical::{period_params, ClassicalParams, Rational, SeriesTermTable};
pub use congruence::{check_thm_congruence, match_table, CongruenceReport, MatchRow};
pub use curves::{HasseWittMatrix, LegendreCurve};
pub use error::{Error, Result};
pub use ffhyper::{ff_2f1_charsum, ff_2f1_pointsum, inversion_transform_residual, FF2F1Spec};
pub use field::{FieldElement, PrimeField};
