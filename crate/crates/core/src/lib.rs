pub mod coefficients;
pub mod error;
pub mod hall_littlewood;
pub mod partitions;
pub mod polyring;
pub mod powersum;
pub mod schur;
pub mod symmetries;

pub use error::{Error, Result};
