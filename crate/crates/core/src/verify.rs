//! Exhaustive consistency sweeps over whole families of twist words.
//!
//! Three cross-checks, each tying two independent computations together:
//!
//!  - [`lemma_sweep`] walks every word with interior entries >= 2 up to a
//!    length and crossing budget and confirms that the L-polynomial has
//!    minimum a-degree exactly -1, with the a^-1 coefficient given by the
//!    product of witness polynomials f_k.  For words whose entries are all
//!    >= 2 it additionally builds the template diagram and checks that the
//!    writhe and the degree bound lock together as `w - 2 = min_deg F - 1`.
//!  - [`oracle_sweep`] evaluates every diagram up to a crossing budget with
//!    the recursive skein oracle and compares against the matrix formula.
//!  - [`streamed_matches_direct`] compares the incremental chain evaluation
//!    used by the sweep against the repeated-squaring matrix route.
//!
//! The sweep exploits that the chain for the word (a_1, ..., a_n) factors
//! as v^t M^(-a_1) C M^(-a_2) C ... M^(-a_n) C w with C = M^-1 S free of
//! `a`.  Walking the prefix tree, one M^-1 application per unit of twisting
//! and one C application per descent, shares every prefix's row vector
//! across all words below it; closing a word is a single dot product with
//! the precomputed vector C w.

use thiserror::Error;

use crate::diagram::{build_diagram, orient, skein_kauffman_l, writhe, DiagramError};
use crate::fraction::TwistWord;
use crate::kauffman::{fk_sequence, l_polynomial};
use crate::laurent::LaurentPoly2;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("word ({word}): {detail}")]
    Mismatch { word: String, detail: String },
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// Counts from a completed [`lemma_sweep`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LemmaReport {
    /// Words checked against the product-form witness.
    pub words: usize,
    /// The all-entries >= 2 subset, additionally checked against diagrams.
    pub normal_form_words: usize,
}

type Row = [LaurentPoly2; 3];

// r M^-1 = (-r2, r1 + x r2, a x r2 + a r3) for M^-1 = ((0,1,0),(-1,x,ax),(0,0,a)).
fn step_m_inv(r: &Row) -> Row {
    let xr1 = r[1].mul_monomial(1, 0, 1);
    [
        -&r[1],
        &r[0] + &xr1,
        &xr1.mul_monomial(1, 1, 0) + &r[2].mul_monomial(1, 1, 0),
    ]
}

// r C = (x r2 + r3, -r2, r1 + x r2) for C = M^-1 S = ((0,0,1),(x,-1,x),(1,0,0)).
fn step_c(r: &Row) -> Row {
    let xr1 = r[1].mul_monomial(1, 0, 1);
    [&xr1 + &r[2], -&r[1], &r[0] + &xr1]
}

// C w = (a^2/x + 1/x - a, 1, a) for w = (a, a^2, a^2/x + 1/x - a).
fn closing_vector() -> Row {
    [
        LaurentPoly2::from_terms(&[(1, 2, -1), (1, 0, -1), (-1, 1, 0)]),
        LaurentPoly2::one(),
        LaurentPoly2::term(1, 1, 0),
    ]
}

fn close(r: &Row, cw: &Row) -> LaurentPoly2 {
    let mut g = LaurentPoly2::zero();
    for i in 0..3 {
        g = &g + &(&r[i] * &cw[i]);
    }
    g
}

/// a L computed by the incremental chain, for cross-checking against the
/// repeated-squaring route in [`l_polynomial`].
pub fn streamed_l(word: &TwistWord) -> LaurentPoly2 {
    let mut r: Row = [
        LaurentPoly2::one(),
        LaurentPoly2::zero(),
        LaurentPoly2::zero(),
    ];
    let cw = closing_vector();
    let entries = word.entries();
    for (i, &a) in entries.iter().enumerate() {
        for _ in 0..a {
            r = step_m_inv(&r);
        }
        if i + 1 < entries.len() {
            r = step_c(&r);
        }
    }
    close(&r, &cw)
}

struct Sweep<'a> {
    max_len: usize,
    max_sum: i64,
    check_diagrams: bool,
    fk: &'a [LaurentPoly2],
    cw: Row,
    prefix: Vec<i64>,
    words: usize,
    normal_form_words: usize,
}

impl Sweep<'_> {
    fn mismatch(&self, last: i64, detail: String) -> VerifyError {
        let mut word: Vec<String> = self.prefix.iter().map(|a| a.to_string()).collect();
        word.push(last.to_string());
        VerifyError::Mismatch {
            word: word.join(","),
            detail,
        }
    }

    /// Visits every word extending the current prefix.  `r` is the row
    /// vector after the prefix's complete blocks, `first_ge2` whether its
    /// first entry is >= 2, `stem` the product of its witness factors.
    fn descend(
        &mut self,
        r: &Row,
        depth: usize,
        sum: i64,
        first_ge2: bool,
        stem: &LaurentPoly2,
    ) -> Result<(), VerifyError> {
        let mut rr = r.clone();
        for t in 1..=(self.max_sum - sum) {
            rr = step_m_inv(&rr);

            // Close with final entry t: g = a L for the word prefix + (t).
            let g = close(&rr, &self.cw);
            let expected = if depth == 0 {
                self.fk[(t + 1) as usize].mul_monomial(1, 0, -1)
            } else {
                (stem * &self.fk[t as usize]).mul_monomial(1, 0, -1)
            };
            if expected.is_zero() {
                return Err(self.mismatch(t, "witness product vanished".into()));
            }
            if g.min_deg_a() != Some(0) {
                return Err(self.mismatch(
                    t,
                    format!("a L has minimum a-degree {:?}, want 0", g.min_deg_a()),
                ));
            }
            let witness = g.coefficient_of_a(0);
            if witness != expected {
                return Err(self.mismatch(
                    t,
                    format!("witness {witness} differs from product form {expected}"),
                ));
            }
            self.words += 1;

            if self.check_diagrams && t >= 2 && (depth == 0 || first_ge2) {
                let mut entries = self.prefix.clone();
                entries.push(t);
                let word = TwistWord::new(entries).expect("entries are positive");
                let od = orient(&build_diagram(&word));
                let w = writhe(&od);
                // F = a^w L, so its minimum a-degree is w + min_deg(a L) - 1
                // and the degree bound meets the writhe: w - 2 = min_deg F - 1.
                let min_f = w + g.min_deg_a().expect("g is nonzero") - 1;
                if w - 2 != min_f - 1 {
                    return Err(self.mismatch(
                        t,
                        format!("writhe {w} - 2 differs from degree bound {}", min_f - 1),
                    ));
                }
                self.normal_form_words += 1;
            }

            // Extend with t as a non-final entry: the first entry may be 1,
            // every later non-final entry must be >= 2.
            if depth + 2 <= self.max_len && sum + t + 1 <= self.max_sum && (depth == 0 || t >= 2) {
                let deeper = step_c(&rr);
                let stem2 = if depth == 0 {
                    self.fk[t as usize].clone()
                } else {
                    stem * &self.fk[(t - 1) as usize]
                };
                self.prefix.push(t);
                let first = if depth == 0 { t >= 2 } else { first_ge2 };
                let result = self.descend(&deeper, depth + 1, sum + t, first, &stem2);
                self.prefix.pop();
                result?;
            }
        }
        Ok(())
    }
}

/// Checks every word with first and last entry >= 1, interior entries >= 2,
/// at most `max_len` entries and at most `max_sum` crossings: the minimum
/// a-degree of L is exactly -1 and the a^-1 coefficient matches the product
/// of witness polynomials.  With `check_diagrams` the all-entries >= 2
/// subset is also built as a diagram and its writhe tied to the bound.
pub fn lemma_sweep(
    max_len: usize,
    max_sum: i64,
    check_diagrams: bool,
) -> Result<LemmaReport, VerifyError> {
    let fk = fk_sequence((max_sum.max(0) as usize) + 1);
    let mut sweep = Sweep {
        max_len,
        max_sum,
        check_diagrams,
        fk: &fk,
        cw: closing_vector(),
        prefix: Vec::new(),
        words: 0,
        normal_form_words: 0,
    };
    if max_len >= 1 {
        let start: Row = [
            LaurentPoly2::one(),
            LaurentPoly2::zero(),
            LaurentPoly2::zero(),
        ];
        sweep.descend(&start, 0, 0, false, &LaurentPoly2::one())?;
    }
    Ok(LemmaReport {
        words: sweep.words,
        normal_form_words: sweep.normal_form_words,
    })
}

fn for_each_word(
    max_sum: i64,
    f: &mut impl FnMut(&[i64]) -> Result<(), VerifyError>,
) -> Result<(), VerifyError> {
    fn rec(
        prefix: &mut Vec<i64>,
        left: i64,
        f: &mut impl FnMut(&[i64]) -> Result<(), VerifyError>,
    ) -> Result<(), VerifyError> {
        for t in 1..=left {
            prefix.push(t);
            f(prefix)?;
            rec(prefix, left - t, f)?;
            prefix.pop();
        }
        Ok(())
    }
    rec(&mut Vec::new(), max_sum, f)
}

/// Evaluates every word with entries >= 1 and at most `max_sum` crossings
/// through the skein oracle and compares against the matrix formula.
/// Returns the number of words checked (2^max_sum - 1).
pub fn oracle_sweep(max_sum: i64) -> Result<usize, VerifyError> {
    let mut words = 0;
    for_each_word(max_sum, &mut |entries| {
        let word = TwistWord::new(entries.to_vec()).expect("entries are positive");
        let oracle = skein_kauffman_l(&build_diagram(&word))?;
        let matrix = l_polynomial(&word);
        if oracle != matrix {
            return Err(VerifyError::Mismatch {
                word: word.to_string(),
                detail: format!("skein oracle {oracle} differs from matrix formula {matrix}"),
            });
        }
        words += 1;
        Ok(())
    })?;
    Ok(words)
}

/// Compares the incremental chain evaluation against the repeated-squaring
/// matrix route on every word with entries >= 1 and at most `max_sum`
/// crossings.  Returns the number of words checked.
pub fn streamed_matches_direct(max_sum: i64) -> Result<usize, VerifyError> {
    let mut words = 0;
    for_each_word(max_sum, &mut |entries| {
        let word = TwistWord::new(entries.to_vec()).expect("entries are positive");
        let streamed = streamed_l(&word);
        let direct = l_polynomial(&word).mul_monomial(1, 1, 0);
        if streamed != direct {
            return Err(VerifyError::Mismatch {
                word: word.to_string(),
                detail: format!("streamed chain {streamed} differs from matrix route {direct}"),
            });
        }
        words += 1;
        Ok(())
    })?;
    Ok(words)
}
