//! Concrete finite-geometry machinery: vectors of F_q^n, block codes,
//! canonical k-subspaces, distance computations, enumeration, and uniform
//! sampling.
//!
//! Hamming-side operations work over any alphabet of size q >= 2; the
//! subspace side needs a prime-power q and goes through table-backed field
//! arithmetic (with a packed fast path for q = 2).

pub mod field;
mod subspace;
mod vector;

pub use field::FiniteField;
pub use subspace::{
    enumerate_grassmannian, grassmannian_size, injection_distance, sample_subspace_code_uniform,
    sample_subspace_uniform, Subspace, SubspaceCode,
};
pub use vector::{
    enumerate_vectors, hamming_distance, sample_code_uniform, sample_vector_uniform, space_size,
    Code, Vector,
};
