// SPDX-License-Identifier: Apache-2.0

//! Exact scalars and dense linear algebra over ℚ and 𝔽_p.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::{
    add_vectors, axpy, combine, dot, is_zero_vector, kernel, scale_vector, sub_vectors, unit_vector,
    zero_vector, Matrix, Vector,
};
pub use scalar::{is_prime, Field, Scalar, MAX_PRIME};
pub use subspace::{member, subspace_meet_join, Subspace};

/// Parses a whole row of scalars in one field.
pub fn vector_from_ints(field: Field, values: &[i64]) -> Vector {
    values.iter().map(|&v| field.from_i64(v)).collect()
}
