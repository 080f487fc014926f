//! Exact tropical (max-plus) invariant theory for permutation groups.
//!
//! The crate covers canonical forms of tropical polynomials with rational
//! coefficients, lattice polytopes and Newton polytopes, transfer
//! (orbit-sum) invariants of permutation groups, generators of invariant
//! semirings, rewriting of transfers as rational expressions in bounded
//! generators, and separating invariants giving orbit-space embeddings.
//!
//! All arithmetic is exact; the only geometric primitive is the rational
//! simplex in [`lp`].

pub mod embed;
pub mod error;
mod hull;
pub mod invariants;
pub mod io;
pub mod lp;
pub mod poly;
pub mod polytope;
pub mod group;
pub mod rational;
pub mod rewrite;

pub use error::{Error, Result};
pub use group::{Permutation, PermGroup};
pub use poly::{Exponent, TropPoly, TropScalar};
pub use polytope::LatticePolytope;
pub use rational::Rational;
