//! Maximal Thurston-Bennequin numbers of two-bridge links.
//!
//! For a rational link presented by a fraction p/q, the all-entries >= 2
//! twist word gives a diagram that is the projection of a Legendrian front
//! with exactly four cusps, so it realizes tb = writhe - 2. The Kauffman
//! polynomial bound tb <= min-deg_a F - 1 is sharp on this class, and both
//! sides of that equality are computed independently here; a mismatch is
//! reported as an internal error rather than papered over.

mod front;

pub use front::{render_front, tb_from_front, Front, FrontError, FrontLayout, FrontStyle};

use thiserror::Error;

use crate::diagram::{build_diagram, orient_with, writhe, LinkOrientation};
use crate::fraction::{legendrian_form, mirror_fraction, Fraction, FractionError, TwistWord};
use crate::kauffman::{kauffman_bound, l_polynomial};
use crate::laurent::LaurentPoly2;

#[derive(Debug, Error)]
pub enum TbError {
    #[error(transparent)]
    Fraction(#[from] FractionError),
    #[error(transparent)]
    Front(#[from] FrontError),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

/// Maximal Thurston-Bennequin data for a link and its mirror image.
#[derive(Clone, Debug)]
pub struct TbResult {
    pub fraction: Fraction,
    pub word: TwistWord,
    pub writhe: i64,
    /// min-deg_a of F = a^writhe L; always writhe - 1 here.
    pub kauffman_min_deg: i64,
    pub tb: i64,
    pub mirror_fraction: Fraction,
    pub mirror_word: TwistWord,
    pub mirror_writhe: i64,
    pub tb_mirror: i64,
}

struct Side {
    word: TwistWord,
    writhe: i64,
    min_deg: i64,
    tb: i64,
    f: LaurentPoly2,
}

fn evaluate_side(fraction: &Fraction, orientation: LinkOrientation) -> Result<Side, TbError> {
    let word = legendrian_form(fraction)?;
    let od = orient_with(&build_diagram(&word), orientation);
    let w = writhe(&od);
    let f = l_polynomial(&word).mul_monomial(1, w, 0);
    let bound = kauffman_bound(&f).map_err(|e| TbError::Inconsistent(e.to_string()))?;
    let tb = tb_from_front(&Front::from_word_with(&word, orientation)?)?;
    if tb != bound {
        return Err(TbError::Inconsistent(format!(
            "front of ({word}) gives tb {tb} but the polynomial bound is {bound}"
        )));
    }
    let min_deg = f.min_deg_a().expect("F of a link is never zero");
    Ok(Side {
        word,
        writhe: w,
        min_deg,
        tb,
        f,
    })
}

pub fn max_tb(fraction: &Fraction) -> Result<TbResult, TbError> {
    max_tb_with(fraction, LinkOrientation::default())
}

/// Computes tb for the link and its mirror, checking the front count
/// against the polynomial degree on both sides. The orientation choice
/// only matters for two-component links.
pub fn max_tb_with(
    fraction: &Fraction,
    orientation: LinkOrientation,
) -> Result<TbResult, TbError> {
    let side = evaluate_side(fraction, orientation)?;
    let mf = mirror_fraction(fraction)?;
    let mirror = evaluate_side(&mf, orientation)?;
    // For a knot, orientation drops out and the two standard forms must
    // have polynomials exchanged by a -> 1/a.
    if fraction.p() % 2 == 1 && mirror.f != side.f.substitute_a_inverse() {
        return Err(TbError::Inconsistent(format!(
            "mirror form ({}) does not invert the polynomial of ({})",
            mirror.word, side.word
        )));
    }
    Ok(TbResult {
        fraction: *fraction,
        word: side.word,
        writhe: side.writhe,
        kauffman_min_deg: side.min_deg,
        tb: side.tb,
        mirror_fraction: mf,
        mirror_word: mirror.word,
        mirror_writhe: mirror.writhe,
        tb_mirror: mirror.tb,
    })
}
