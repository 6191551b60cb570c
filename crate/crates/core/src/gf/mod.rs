//! Finite-field arithmetic: `GF(p)`, `GF(q = p^e)` and the towers `GF(q^m)`.

mod base;
mod int;
mod poly;
mod tower;

pub use base::{BaseField, MAX_BASE_ORDER};
pub use int::{factor_distinct, is_prime, prime_power, smallest_primitive_root};
pub use poly::{
    find_primitive_poly, find_primitive_poly_bounded, PrimePoly, PRIMITIVE_SEARCH_BOUND,
};
pub use tower::{CoordinateVector, FieldElement, FieldTower, MAX_TOWER_ORDER};
