//! Exact decomposition of invariants in the centraliser algebras
//! `End_{S(n,r)}(V^{⊗r})` and `End_{P_r(n)}(V^{⊗r})` with respect to their
//! canonical permutation bases.
//!
//! Every invariant `X` is a unique combination `Σ c(p) rep(p)` over a basis
//! of permutation matrices. Instead of solving the full overdetermined
//! system, one matrix entry is selected per basis element so that the
//! resulting square system is unitriangular; its coefficients are then
//! integral combinations of the selected entries of `X`.
//!
//! - [`perm`]: permutations, Coxeter length, canonical factorisation.
//! - [`basis`]: the basis index sets and their length-compatible order.
//! - [`maps`]: entry selectors and their inverses.
//! - [`tensor`]: the two actions on multi-indices and the matrices they give.
//! - [`solver`]: assembling, inverting and solving the unitriangular system.
//! - [`oracle`]: full Gaussian elimination used as an independent check.
//! - [`format`]: JSON file formats.

pub mod basis;
pub mod error;
pub mod format;
pub mod maps;
pub mod oracle;
pub mod perm;
pub mod solver;
pub mod tensor;

pub use basis::{BasisSet, Caps, Side};
pub use error::{Error, Result};
pub use maps::{EntrySelector, MultiIndex, Weight};
pub use perm::{CanonicalFactorisation, Permutation};
pub use solver::{CoefficientVector, CoeffMatrix, IntMatrix, Invariant, Scalar, Subsystem, SystemOptions};
