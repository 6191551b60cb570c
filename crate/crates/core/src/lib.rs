//! Covering arrays of strength 3 and 4 built from finite-geometry objects.
//!
//! The crate is `no_std` (with `alloc`) unless the `std` feature is on. It
//! covers four layers:
//!
//! - [`gf`]: prime fields, prime-power fields and the degree-3/4 towers
//!   `GF(q^m)` with discrete-log tables, trace and coordinate decomposition.
//! - [`geometry`]: the Singer difference set, the elliptic-quadric ovoid of
//!   `PG(3, q)`, its Möbius plane, the three truncated planes on the
//!   even-indexed points, and executable versions of the combinatorial
//!   lemmas about circles through the point 0.
//! - [`construct`]: generator matrices `G^l_c`, their span arrays and the
//!   covering arrays `CA(2q^3-1; 3, q^2+q+1, q)`,
//!   `CA(3q^4-2; 4, (q^2+1)/2, q)` and `CA(3q^4+N(q-2); 4, q^2+1, q)`.
//! - [`verify`]: brute-force t-wise coverage, rank-based CPHF certification
//!   and a structural verifier for the recursive construction.
//!
//! With the `parallel` feature the verifiers and the anti-cocircularity
//! checker split their outer loops across rayon workers; results are merged
//! in enumeration order so reports are identical either way.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod combin;
pub mod construct;
pub mod error;
pub mod geometry;
pub mod gf;
mod par;
pub mod verify;

pub use error::{Error, Result};
