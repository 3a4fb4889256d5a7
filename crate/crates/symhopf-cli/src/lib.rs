//! Calculator front end for the Hopf ring of symmetric group cohomology.
//!
//! The binary parses expressions in the gathered-monomial and Nakaoka
//! bases, runs the library operations, and prints either display text or
//! JSON.  The verification suites live here too so the acceptance tests
//! and the `verify` subcommand share one implementation.

#![warn(missing_docs)]

pub mod json;
pub mod parse;
pub mod render;
pub mod verify;
