//! Exact arithmetic for critical pairs of sets in prime fields.
//!
//! Everything here is `no_std` (with `alloc`): prime-field arithmetic,
//! dense polynomials and truncated series, symmetric functions,
//! Hanson–Petridis polynomials, residues of rational differential forms,
//! an exact-rational symbolic engine for the Stepanov-type identities, and
//! exhaustive searches expressed as independent branches so a caller can
//! run them on any executor.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bitset;
pub mod error;
pub mod fp;
pub mod hp;
pub mod poly;
pub mod residues;
pub mod search;
pub mod stepanov;
pub mod symm;

pub use error::{Error, Result};
pub use fp::{batch_inverse, binom_mod, is_prime, roots_of_unity, FieldElem, FpSet, PrimeField};
pub use poly::{Center, FpPoly, TruncatedSeries};
