//! Exact base-b digit arithmetic and the number classes built on it:
//! Niven (Harshad) numbers and the additive/multiplicative Ramanujan-Hardy
//! classes, with constructive generators for every known infinite family
//! and a brute-force oracle that re-verifies each construction.
//!
//! Everything is exact: naturals are arbitrary precision and no operation
//! ever rounds. See the `taxicab` binary for the command-line front end.

pub mod classify;
pub mod error;
pub mod families;
pub mod numtheory;
pub mod pattern;
pub mod radix;
pub mod verify;

pub use error::{Error, Result};
pub use num_bigint::BigUint;
