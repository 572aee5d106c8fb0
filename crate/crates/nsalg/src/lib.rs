//! Exact combinatorics of numerical semigroup algebras.
//!
//! A numerical semigroup is the set of nonnegative integer combinations of
//! finitely many positive rationals. A pair R ⊆ R' of them (the coefficient
//! ring and its extension) carries relative invariants: gap and sporadic
//! monomials, the conductor ideal, Frobenius and pseudo-Frobenius monomials,
//! a symmetry/irreducibility classification, the lattice of intermediate
//! extensions, n-th radicals and fundamental gap monomials. Everything is
//! computed in exact rational arithmetic; an intentionally naive brute-force
//! oracle cross-validates the fast paths at every level.
//!
//! The `parallel` feature (on by default) runs batch workloads, namely the
//! self-check corpus and candidate sweeps, on a rayon pool; without it the
//! same code runs sequentially with identical results.

pub mod algebra;
pub mod classify;
pub mod cli;
mod error;
pub mod exponent;
pub mod fundgap;
pub mod lattice;
pub mod oracle;
pub mod radical;
pub mod selfcheck;
pub mod semigroup;

mod par;

pub use algebra::{ConductorIdeal, InvariantReport, Order, SemigroupAlgebra};
pub use classify::{classify, Classification, Verdict};
pub use error::{Error, Result};
pub use exponent::{Exponent, MonomialSet};
pub use semigroup::NumericalSemigroup;
