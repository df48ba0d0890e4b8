//! Exact dense linear algebra and the concrete forms, involutions and
//! subgroups attached to each twisted case.

pub mod matrix;
pub mod rank;
pub mod sampling;
pub mod twisted;

pub use matrix::RationalMatrix;
pub use sampling::{
    exp_nilpotent, k_triangular_basis, random_k_element, random_k_pair, random_triangular, triangular_basis,
};
pub use twisted::{
    adjoint, block_toeplitz_rank, eigenspace_membership, form_adjoint, in_k_group, in_lie_algebra,
    jordan_type, Membership, TwistedCase,
};
