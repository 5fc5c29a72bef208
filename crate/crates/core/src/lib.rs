//! Mod-p homology of finite regular covers of 2-dimensional presentation
//! complexes.
//!
//! The crate builds the equivariant boundary matrices of a regular cover
//! from a group presentation and a homomorphism onto a finite ordered group,
//! computes Betti numbers over F_p, and compares them with lower bounds on
//! `b_1` of finite-index normal subgroups coming from the augmentation-ideal
//! filtration of the group ring `F_p[H]`.
//!
//! Module map:
//!
//! * [`fpexact`]: rank, kernel dimension and Smith normal form over F_p.
//! * [`groupring`]: ordered finite groups, `F_p[H]` and the filtration `Δ^k`.
//! * [`omega`]: coefficients of `(1 + x + ⋯ + x^{p-1})^r` and the inequality
//!   family built from them.
//! * [`presentations`]: parsing, free words, Fox derivatives, presentation
//!   complexes, normalization and Reidemeister–Schreier rewriting.
//! * [`covers`]: the chain complex of the cover and its Betti numbers.
//! * [`bounds`]: lower bounds on `b_1(N; F_p)` and classification verdicts.
//! * [`selfcheck`]: the invariant suites and the reference corpus.

pub mod bounds;
pub mod corpus;
pub mod covers;
pub mod error;
pub mod fpexact;
pub mod groupring;
pub mod json;
pub mod omega;
pub mod presentations;
pub mod selfcheck;

pub use error::{Error, Result};
pub use fpexact::{Fp, FpMatrix, Prime};
