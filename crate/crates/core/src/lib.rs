//! Invariants of two-bridge (rational) knots and links.
//!
//! The pipeline: a fraction p/q determines a rational tangle word, the word
//! determines an alternating front diagram, and the Kauffman polynomial of
//! that diagram determines the maximal Thurston-Bennequin number of the link
//! and of its mirror. Everything is computed exactly over arbitrary-precision
//! integers.

pub mod catalog;
pub mod diagram;
pub mod fraction;
pub mod kauffman;
pub mod laurent;
pub mod legendrian;
pub mod verify;

pub use fraction::{CfValue, Fraction, TwistWord};
pub use kauffman::{f_polynomial, kauffman_bound, l_polynomial};
pub use laurent::LaurentPoly2;
pub use legendrian::{max_tb, TbResult};
