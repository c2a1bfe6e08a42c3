pub mod arith;
pub mod bounds;
pub mod census;
pub mod error;
pub mod factor;
pub mod field;
pub mod galois;
pub mod poly;

pub use error::{HitError, Result};
