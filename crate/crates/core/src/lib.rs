//! Exact computational toolkit for transfer maps on abelianizations.
//!
//! The crate provides, bottom to top:
//!
//! * exact unbounded-integer linear algebra — Smith and Hermite normal
//!   forms, finitely generated abelian groups, kernels/images/cokernels
//!   ([`matrix`], [`snf`], [`hnf`], [`abelian`]);
//! * two group backends — explicit permutation groups with breadth-first
//!   enumeration ([`perm`]) and finitely presented groups with coset
//!   enumeration and subgroup rewriting ([`fp`]);
//! * the transfer homomorphism between abelianizations, its kernel,
//!   cokernel and ratio, together with verifiers for the identities they
//!   satisfy ([`transfer`]);
//! * Tate cohomology and Herbrand quotients of modules over finite cyclic
//!   groups, and multiplicity recovery for lattices over a cyclic group of
//!   prime order ([`cyclic`]);
//! * two-level cohomological Mackey functor data with section cohomology,
//!   the six-term exact sequence and Euler characteristics ([`mackey`]);
//! * a built-in catalog of test groups ([`catalog`]) and text formats for
//!   matrices, groups, modules and data ([`formats`]).
//!
//! All arithmetic is exact; quotients of orders are represented as
//! rationals, never floats.

pub mod abelian;
pub mod error;
pub mod hnf;
pub mod matrix;
pub mod snf;

pub use abelian::{AbHom, FgAbGroup};
pub use error::{Error, Result};
pub use matrix::IntMatrix;
