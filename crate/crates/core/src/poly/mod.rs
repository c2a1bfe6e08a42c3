//! Bivariate polynomials in `K[T][Y]`, sparse multivariate polynomials, and
//! the transforms built on them.

mod bipoly;
mod mpoly;
mod symmetric;
mod transform;

pub use bipoly::{BiPoly, BiRing};
pub(crate) use mpoly::add_term;
pub use mpoly::{MPoly, MRing};
pub use symmetric::{subset_resolvent, symmetric_reduce, SymPoly, MAX_RESOLVENT_DEGREE};
pub use transform::{
    discriminant_y, monicize, shift_exponent, shift_exponent_from, shift_transform, Discriminant,
};
