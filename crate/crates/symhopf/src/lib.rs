//! Exact computation in the mod-2 cohomology of symmetric groups.
//!
//! The direct sum of the cohomology rings of all the symmetric groups,
//! `⊕_n H^*(BS_n; F_2)`, carries a Hopf ring structure: a transfer product
//! induced by the inclusions `S_n × S_m → S_{n+m}`, the cup product on each
//! component, and a coproduct dual to the Pontryagin product in homology.
//! This crate computes in that object exactly, over F_2, by three mutually
//! independent routes:
//!
//! * directly on the cohomology side, through gathered monomials in the
//!   Hopf ring generators ([`cohomology`]);
//! * on the homology side, through the Kudo-Araki operations acting on the
//!   polynomial Pontryagin ring ([`kudo_araki`], [`homology`]), connected to
//!   cohomology by the exact pairing of [`duality`];
//! * through rings of invariant polynomials in set-indexed variables
//!   ([`invariants`]).
//!
//! The routes share no computational path, so agreement between them is a
//! meaningful check; the companion command line crate wires those
//! cross-validations into a `verify` subcommand.
//!
//! The crate is `no_std` (with `alloc`) and has no dependencies. All
//! arithmetic is exact; coefficients live in F_2 throughout.

#![no_std]
#![forbid(unsafe_code)]
#![warn(missing_docs)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod cohomology;
pub mod duality;
pub mod f2;
pub mod generators;
pub mod homology;
pub mod invariants;
pub mod kudo_araki;

pub use cohomology::GatheredMonomial;
pub use duality::{pair, Duality};
pub use f2::F2Sum;
pub use homology::NakaokaMonomial;
pub use kudo_araki::AdmissibleSeq;
