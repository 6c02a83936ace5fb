pub mod cli;
pub mod error;
pub mod partitions;
pub mod poly;
pub mod rspec;
pub mod scalar;
pub mod schur;
pub mod suite;
pub mod tau;
pub mod verify;

pub use error::{Result, TauError};
pub use scalar::Scalar;
