//! Exact computations in the model space of generalized affine buildings.
//!
//! The crate covers crystallographic root systems of rank at most three, the
//! Λ-valued metric on the model space for two ordered groups (the rationals and
//! lexicographically ordered rational pairs), dual convex hulls of Weyl
//! orbits, Littelmann root operators on piecewise-linear paths, the maximal
//! folding recursion, positively folded alcove galleries and a finite thick
//! Λ-tree with both retractions.
//!
//! Everything is exact; there is no floating point outside of SVG rendering.

pub mod convexity;
pub mod folding;
pub mod galleries;
pub mod json;
pub mod lambda_tree;
pub mod literal;
pub mod model_space;
pub mod paths;
pub mod plot;
pub mod root_system;
pub mod scalar;

pub use model_space::Point;
pub use root_system::{CartanType, RootSystem, WeylElement};
pub use scalar::{Lex, Rational, Scalar};

/// Errors surfaced by the library.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum Error {
    #[error("unknown root system `{0}` (expected one of A1, A2, A3, B2, C2, G2)")]
    UnknownRootSystem(String),
    #[error("{0:?} is not a root")]
    NotARoot(Vec<i64>),
    #[error("expected a point with {expected} coordinates, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("malformed literal: {0}")]
    Parse(String),
    #[error("bad word: {0}")]
    BadWord(String),
    #[error("point {0} is not in the hull")]
    NotInHull(String),
    #[error("point {0} is not in the required lattice coset")]
    NotInLattice(String),
    #[error("point {0} is not dominant")]
    NotDominant(String),
    #[error("{0} is not a simple root index")]
    NotSimple(usize),
    #[error("step budget of {budget} exhausted after {explored} steps ({completed} galleries completed)")]
    BudgetExceeded {
        budget: u64,
        explored: u64,
        completed: u64,
    },
    #[error("root operator e_{letter} returned nothing at step {step} of the fold construction")]
    FoldConstructionFailed { step: usize, letter: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
struct ReadmeDoctests;
