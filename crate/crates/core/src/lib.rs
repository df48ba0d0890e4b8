//! Exact computations for nilpotent orbits in symmetric spaces and for the
//! twisted affine Schubert cells they correspond to.

pub mod cli;
pub mod correspondence;
pub mod error;
pub mod exactlinalg;
pub mod exec;
pub mod grassmannian;
pub mod partitions;
pub mod rational;
pub mod weights;

pub use error::{Error, Result};
pub use exactlinalg::{RationalMatrix, TwistedCase};
pub use grassmannian::LaurentMatrix;
pub use partitions::{OrbitDescriptor, PairCase, Partition};
pub use rational::Rational;
pub use weights::{HType, WeightTuple};
