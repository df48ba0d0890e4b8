//! Laurent-polynomial matrices over the rationals and Schubert-cell
//! determination in the twisted affine Grassmannian.

pub mod cell;
pub mod laurent;
pub mod poly;
pub mod stabilizer;

pub use cell::{cell_of, cell_of_fixed, coweight_multiset, exponent_pattern, norm_element};
pub use laurent::{det1_check, iota, pi, sigma, sigma_fixed, LaurentMatrix};
pub use poly::LaurentPoly;
pub use stabilizer::{exp_loop, random_stabilizer, random_stabilizer_factor};
