//! Exact homological algebra for finite-dimensional algebras over `Q` and
//! `F_p`: modules and bimodules, minimal projective resolutions, `Tor` and
//! `Ext`, ring extensions and their boundedness, and Gorenstein checks.
//!
//! Everything here is `no_std` with `alloc`.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod algebra;
pub mod arith;
pub mod error;
pub mod verdict;

pub use algebra::{AlgRef, AlgebraTable};
pub use arith::{Field, Mat, PrimeField, Rational, Rationals};
pub use verdict::{Status, Verdict};
pub mod homology;
pub mod module;
pub mod extensions;
pub mod gorenstein;
