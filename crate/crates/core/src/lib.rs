//! Exact valuations on rational polytopes.
//!
//! Polytopes with rational vertices, translation-invariant valuations on
//! them, the difference calculus that extracts polynomial expansions
//! `λ ↦ f_0 + f_1(λ) + … + f_d(λ)` from black-box functions, and the formal
//! sums of translation classes on which the components `e_i[X]` live.
//! Everything is exact; nothing here needs `std`, only `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod error;
pub mod decomposition;
pub mod difference;
mod faces;
pub mod group;
mod linalg;
pub mod point;
pub mod polytope;
pub mod rational;
pub mod report;
pub mod valuation;

pub use error::{Error, Result};
pub use point::Point;
pub use polytope::{simplex_from_basis, Membership, Polytope, SimplexBasis};
pub use rational::{q, Rational};
pub use report::{Check, Report};
