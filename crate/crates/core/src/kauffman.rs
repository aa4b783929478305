//! The matrix formula for the Kauffman L-polynomial of rational-form
//! diagrams, the normalization F = a^w * L, the resulting bound on the
//! Thurston-Bennequin number, and the minimum-degree witness polynomial.

use std::sync::LazyLock;

use thiserror::Error;

use crate::diagram::{build_diagram, orient_with, writhe, LinkOrientation};
use crate::fraction::TwistWord;
use crate::laurent::{mat_inverse, mat_pow, LaurentPoly2, Mat3, Vec3};

#[derive(Debug, Error)]
pub enum KauffmanError {
    #[error("degree of the zero polynomial is undefined")]
    ZeroPolynomial,
    #[error(
        "word ({0}) violates the witness hypothesis: interior entries must be >= 2"
    )]
    HypothesisViolated(TwistWord),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

/// The fixed matrices and vectors of the L-polynomial product formula
///
///   L = (1/a) * v^t M^(-a_1 - 1) S ... M^(-a_n - 1) S w
///
/// together with the auxiliary constant-part matrices used by the
/// minimum-degree argument. Everything is validated at construction: the
/// derived matrices must reproduce their independently known forms, so a
/// transcription slip in any entry panics at first use.
pub struct FormulaConstants {
    pub m: Mat3,
    pub s: Mat3,
    pub v: Vec3,
    pub w: Vec3,
    pub m_inv: Mat3,
    /// M^-1 * S; contains no powers of `a` at all.
    pub m_inv_s: Mat3,
    /// Constant part (in `a`) of M^-1.
    pub a_mat: Mat3,
    /// Constant part of M^-2 S M^-1.
    pub b_mat: Mat3,
    pub u: Vec3,
}

fn t(c: i64, da: i64, dx: i64) -> LaurentPoly2 {
    LaurentPoly2::term(c, da, dx)
}

fn zero() -> LaurentPoly2 {
    LaurentPoly2::zero()
}

/// delta = (a + a^-1)/x - 1, the value of a split unknot component.
pub fn delta() -> LaurentPoly2 {
    LaurentPoly2::from_terms(&[(1, -1, -1), (-1, 0, 0), (1, 1, -1)])
}

fn build_constants() -> Result<FormulaConstants, String> {
    let m = Mat3::from_rows([
        [t(1, 0, 1), t(-1, 0, 0), t(1, 0, 1)],
        [t(1, 0, 0), zero(), zero()],
        [zero(), zero(), t(1, -1, 0)],
    ]);
    let s = Mat3::from_rows([
        [zero(), t(1, 0, 0), zero()],
        [zero(), zero(), t(1, 0, 0)],
        [t(1, -1, 0), zero(), zero()],
    ]);
    let v = Vec3::new([t(1, 0, 0), zero(), zero()]);
    // w = (a, a^2, (a^2 + 1)/x - a)^t
    let w = Vec3::new([
        t(1, 1, 0),
        t(1, 2, 0),
        LaurentPoly2::from_terms(&[(1, 2, -1), (1, 0, -1), (-1, 1, 0)]),
    ]);
    let u = Vec3::new([zero(), t(1, 0, 0), zero()]);

    let a_inv = t(1, -1, 0);
    if m.determinant() != a_inv {
        return Err(format!("det M = {}, expected a^-1", m.determinant()));
    }
    if s.determinant() != a_inv {
        return Err(format!("det S = {}, expected a^-1", s.determinant()));
    }

    let m_inv = mat_inverse(&m).map_err(|e| e.to_string())?;
    let m_inv_s = &m_inv * &s;

    // None of M^-1, M^-1 S, and w may contain negative powers of a; this is
    // what confines the lowest a-degree of the product to the final 1/a.
    let no_negative_a = |name: &str, entries: &[&LaurentPoly2]| -> Result<(), String> {
        for (i, p) in entries.iter().enumerate() {
            if p.min_deg_a().is_some_and(|d| d < 0) {
                return Err(format!("{name} entry {i} has negative a-degree: {p}"));
            }
        }
        Ok(())
    };
    no_negative_a("M^-1", &m_inv.entries.iter().flatten().collect::<Vec<_>>())?;
    no_negative_a("M^-1 S", &m_inv_s.entries.iter().flatten().collect::<Vec<_>>())?;
    no_negative_a("w", &w.entries.iter().collect::<Vec<_>>())?;

    // The auxiliary matrices are computed, then compared entry-by-entry
    // against their known closed forms.
    let a_mat = m_inv.a_constant_part();
    let a_expected = Mat3::from_rows([
        [zero(), t(1, 0, 0), zero()],
        [t(-1, 0, 0), t(1, 0, 1), zero()],
        [zero(), zero(), zero()],
    ]);
    if a_mat != a_expected {
        return Err("constant part of M^-1 does not match its known form".into());
    }
    let b_mat = (&(&(&m_inv * &m_inv) * &s) * &m_inv).a_constant_part();
    let b_expected = Mat3::from_rows([
        [t(1, 0, 0), zero(), zero()],
        [t(1, 0, 1), zero(), zero()],
        [zero(), zero(), zero()],
    ]);
    if b_mat != b_expected {
        return Err("constant part of M^-2 S M^-1 does not match its known form".into());
    }

    // (A S w)|_{a=0} = (1/x) A u and B = A u v^t.
    let au = a_mat.mat_vec(&u);
    let asw = a_mat.mat_vec(&s.mat_vec(&w));
    let asw0 = Vec3::new([
        asw.entries[0].coefficient_of_a(0),
        asw.entries[1].coefficient_of_a(0),
        asw.entries[2].coefficient_of_a(0),
    ]);
    let au_over_x = Vec3::new([
        au.entries[0].mul_monomial(1, 0, -1),
        au.entries[1].mul_monomial(1, 0, -1),
        au.entries[2].mul_monomial(1, 0, -1),
    ]);
    if asw0 != au_over_x {
        return Err("(A S w) at a = 0 does not equal (1/x) A u".into());
    }
    if b_mat != au.outer(&v) {
        return Err("B does not equal A u v^t".into());
    }

    Ok(FormulaConstants {
        m,
        s,
        v,
        w,
        m_inv,
        m_inv_s,
        a_mat,
        b_mat,
        u,
    })
}

static CONSTANTS: LazyLock<FormulaConstants> = LazyLock::new(|| {
    build_constants().expect("formula constants failed validation")
});

pub fn constants() -> &'static FormulaConstants {
    &CONSTANTS
}

/// Re-runs the construction-time validation, reporting rather than
/// panicking. The lazily built constants have necessarily already passed.
pub fn transcription_check() -> Result<(), KauffmanError> {
    build_constants()
        .map(|_| ())
        .map_err(KauffmanError::Internal)
}

/// L-polynomial of the rational-form diagram named by the word, by the
/// matrix product formula. Negative matrix powers are taken as powers of
/// M^-1 via repeated squaring.
pub fn l_polynomial(word: &TwistWord) -> LaurentPoly2 {
    let c = constants();
    let mut r = c.w.clone();
    for &a in word.entries().iter().rev() {
        r = c.s.mat_vec(&r);
        let power = mat_pow(&c.m_inv, a + 1).expect("M^-1 is a constant matrix");
        r = power.mat_vec(&r);
    }
    // L = (1/a) * v^t r and v = (1, 0, 0)^t.
    r.entries[0].mul_monomial(1, -1, 0)
}

/// F = a^writhe * L, the ambient-isotopy normalization, using the template
/// orientation for a second component if the closure has one.
pub fn f_polynomial(word: &TwistWord) -> LaurentPoly2 {
    f_polynomial_with(word, LinkOrientation::default())
}

pub fn f_polynomial_with(word: &TwistWord, orientation: LinkOrientation) -> LaurentPoly2 {
    let oriented = orient_with(&build_diagram(word), orientation);
    let w = writhe(&oriented);
    l_polynomial(word).mul_monomial(1, w, 0)
}

/// The bound `tb <= min-deg_a F - 1`.
pub fn kauffman_bound(f: &LaurentPoly2) -> Result<i64, KauffmanError> {
    Ok(f.min_deg_a().ok_or(KauffmanError::ZeroPolynomial)? - 1)
}

/// The witness sequence f_1 = 1, f_2 = x, f_{k+2} = x f_{k+1} - f_k,
/// returned as a table with `table[k] = f_k` (and f_0 = 0).
pub fn fk_sequence(max: usize) -> Vec<LaurentPoly2> {
    let mut table = vec![LaurentPoly2::zero(); max + 1];
    if max >= 1 {
        table[1] = LaurentPoly2::one();
    }
    if max >= 2 {
        table[2] = t(1, 0, 1);
    }
    for k in 3..=max {
        table[k] = &table[k - 1].mul_monomial(1, 0, 1) - &table[k - 2];
    }
    table
}

/// f_k computed from the matrix side as `v^t A^k u`.
pub fn fk_from_matrix(k: i64) -> LaurentPoly2 {
    let power = mat_pow(&constants().a_mat, k).expect("nonnegative power");
    constants().v.vec_mat(&power).dot(&constants().u)
}

fn a_zero_part(p: &LaurentPoly2, what: &str) -> Result<LaurentPoly2, KauffmanError> {
    if p.min_deg_a().is_some_and(|d| d < 0) {
        return Err(KauffmanError::Internal(format!(
            "{what} has negative a-degree, cannot evaluate at a = 0"
        )));
    }
    Ok(p.coefficient_of_a(0))
}

/// The coefficient of `a^-1` in the L-polynomial, as a polynomial in `x`,
/// computed two independent ways which must agree:
///
///  - directly, as the constant part of v^t M^(-a_1) (M^-1 S) ... w, and
///  - in product form, as (1/x) f_{a_1+1} for a single-entry word and
///    (1/x) f_{a_1} f_{a_2 - 1} ... f_{a_{n-1} - 1} f_{a_n} otherwise.
///
/// Requires interior entries >= 2 (an interior 1 makes a factor f_0 = 0 and
/// the argument breaks down); the result is then nonzero, which pins the
/// minimum a-degree of L at exactly -1.
pub fn f_lemma(word: &TwistWord) -> Result<LaurentPoly2, KauffmanError> {
    let entries = word.entries();
    let n = entries.len();
    if n >= 2 && entries[1..n - 1].iter().any(|&a| a < 2) {
        return Err(KauffmanError::HypothesisViolated(word.clone()));
    }

    let c = constants();
    let mut r = c.w.clone();
    for &a in entries.iter().rev() {
        r = c.m_inv_s.mat_vec(&r);
        let power = mat_pow(&c.m_inv, a).expect("M^-1 is a constant matrix");
        r = power.mat_vec(&r);
    }
    let direct = a_zero_part(&r.entries[0], "witness product chain")?;

    let max_k = entries.iter().map(|&a| a + 1).max().unwrap() as usize;
    let fk = fk_sequence(max_k);
    let mut product = if n == 1 {
        fk[(entries[0] + 1) as usize].clone()
    } else {
        let mut p = &fk[entries[0] as usize] * &fk[entries[n - 1] as usize];
        for &a in &entries[1..n - 1] {
            p = &p * &fk[(a - 1) as usize];
        }
        p
    };
    product = product.mul_monomial(1, 0, -1); // the leading 1/x

    if direct != product {
        return Err(KauffmanError::Internal(format!(
            "witness mismatch for ({word}): direct {direct} vs product {product}"
        )));
    }
    Ok(direct)
}
