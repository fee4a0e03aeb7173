pub mod cli;
pub mod complex;
pub mod dsl;
pub mod error;
pub mod fixtures;
pub mod linalg;
pub mod quiver;
pub mod random;
pub mod reconstruct;
pub mod rep;
pub mod spectrum;

pub use error::{Error, Result};
