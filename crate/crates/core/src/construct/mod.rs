//! Generator matrices, span arrays and the covering-array constructions.

mod array;
mod build;
mod generator;
mod matrix;

pub use array::{CoveringArray, Provenance};
pub use build::{
    build_ca3_projective, build_ca4_full, build_ca4_half, ca3_projective_size, ca4_full_size,
    ca4_half_size, default_ingredient, half_generators, recursive_generators, restrict_columns,
    CA3_PROJECTIVE, CA3_RESTRICTED, CA4_FULL, CA4_HALF,
};
pub use generator::{generator_matrix, span_array, GeneratorMatrix};
pub use matrix::SymbolMatrix;
