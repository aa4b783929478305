//! Exact arithmetic over the Laurent polynomial ring Z[a^±1, x^±1], plus
//! 3x3 matrices and vectors over it.

mod mat;
mod poly;

pub use mat::{mat_inverse, mat_pow, MatError, Mat3, Vec3};
pub use poly::LaurentPoly2;
