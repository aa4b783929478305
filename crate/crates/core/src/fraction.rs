//! Fractions classifying two-bridge links, the alternating continued-fraction
//! convention, and conversion to Legendrian normal form.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FractionError {
    #[error("malformed fraction `{0}`, expected `p/q`")]
    Malformed(String),
    #[error("denominator must be nonzero")]
    ZeroDenominator,
    #[error("numerator must be nonzero")]
    ZeroNumerator,
    #[error("fraction 1/q is the trivial knot, not two-bridge")]
    TrivialKnot,
    #[error("twist word must be nonempty")]
    EmptyWord,
    #[error("twist word entries must be >= 1, got {0}")]
    EntryOutOfRange(i64),
    #[error("malformed twist word `{0}`, expected comma-separated integers")]
    MalformedWord(String),
    #[error("integer overflow while evaluating continued fraction")]
    Overflow,
}

/// A reduced fraction `p/q` with `p >= 1`; the sign lives in the denominator.
/// Two-bridge link types correspond to `p >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fraction {
    p: i64,
    q: i64,
}

impl Fraction {
    pub fn new(p: i64, q: i64) -> Result<Self, FractionError> {
        if q == 0 {
            return Err(FractionError::ZeroDenominator);
        }
        if p == 0 {
            return Err(FractionError::ZeroNumerator);
        }
        let g = p.gcd(&q);
        let (mut p, mut q) = (p / g, q / g);
        if p < 0 {
            p = -p;
            q = -q;
        }
        Ok(Fraction { p, q })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for Fraction {
    type Err = FractionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let malformed = || FractionError::Malformed(s.to_string());
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (
                p.trim().parse::<i64>().map_err(|_| malformed())?,
                q.trim().parse::<i64>().map_err(|_| malformed())?,
            ),
            None => (s.trim().parse::<i64>().map_err(|_| malformed())?, 1),
        };
        Fraction::new(p, q)
    }
}

/// A twist word `(a_1, ..., a_n)` naming the rational-form diagram with
/// `a_i` crossings in the i-th twist box. All entries are >= 1; the word is
/// in Legendrian normal form when every entry is >= 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwistWord {
    entries: Vec<i64>,
}

impl TwistWord {
    pub fn new(entries: Vec<i64>) -> Result<Self, FractionError> {
        if entries.is_empty() {
            return Err(FractionError::EmptyWord);
        }
        if let Some(&bad) = entries.iter().find(|&&a| a < 1) {
            return Err(FractionError::EntryOutOfRange(bad));
        }
        Ok(TwistWord { entries })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn sum(&self) -> i64 {
        self.entries.iter().sum()
    }

    /// True when every entry is >= 2, so the diagram converts directly to a
    /// Legendrian front realizing the maximal Thurston-Bennequin number.
    pub fn is_legendrian_form(&self) -> bool {
        self.entries.iter().all(|&a| a >= 2)
    }
}

impl fmt::Display for TwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.entries.iter().map(|a| a.to_string()).collect();
        f.write_str(&strs.join(","))
    }
}

impl FromStr for TwistWord {
    type Err = FractionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let entries: Result<Vec<i64>, _> = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<i64>()
                    .map_err(|_| FractionError::MalformedWord(s.to_string()))
            })
            .collect();
        TwistWord::new(entries?)
    }
}

/// Value of the alternating continued fraction: a finite `p/q`, zero, or
/// infinity (the unknot closure).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CfValue {
    Finite(Fraction),
    Zero,
    Infinite,
}

impl CfValue {
    /// Numerator of the value with zero read as `0/1` and infinity as `1/0`.
    /// Its parity decides the component count of the closed diagram.
    pub fn numerator(&self) -> i64 {
        match self {
            CfValue::Finite(f) => f.p(),
            CfValue::Zero => 0,
            CfValue::Infinite => 1,
        }
    }
}

/// Evaluates `[a_1, ..., a_n] = a_1 + 1/(-a_2 + 1/(a_3 + ...))` with the
/// alternating sign convention, right to left, in exact arithmetic.
pub fn eval_cf(word: &TwistWord) -> Result<CfValue, FractionError> {
    // Carry the tail as a pair num/den; 1/0 stands for infinity and the
    // update (n, d) -> (s*a*n + d, n) handles both degenerate cases.
    let mut num: i128 = 1;
    let mut den: i128 = 0;
    for (i, &a) in word.entries().iter().enumerate().rev() {
        let sign: i128 = if i % 2 == 0 { 1 } else { -1 };
        let next_num = (sign * a as i128)
            .checked_mul(num)
            .and_then(|t| t.checked_add(den))
            .ok_or(FractionError::Overflow)?;
        den = num;
        num = next_num;
    }
    let value = if num == 0 {
        CfValue::Zero
    } else if den == 0 {
        CfValue::Infinite
    } else {
        let (num, den) = (
            i64::try_from(num).map_err(|_| FractionError::Overflow)?,
            i64::try_from(den).map_err(|_| FractionError::Overflow)?,
        );
        CfValue::Finite(Fraction::new(num, den)?)
    };
    // A word with all entries >= 2 keeps every tail strictly outside (-1, 1),
    // so the value stays finite and nonzero.
    debug_assert!(
        !word.is_legendrian_form() || matches!(value, CfValue::Finite(_)),
        "legendrian-form word evaluated to a degenerate fraction"
    );
    Ok(value)
}

/// Converts a two-bridge fraction to its Legendrian normal form: the unique
/// twist word with all entries >= 2 evaluating to `p / (q mod p)`.
///
/// Runs the ceiling expansion `x_1 = r`, `b_i = ceil(x_i)`,
/// `x_{i+1} = 1 / (b_i - x_i)`, stopping when `x_m` is an integer.
pub fn legendrian_form(f: &Fraction) -> Result<TwistWord, FractionError> {
    if f.p() < 2 {
        return Err(FractionError::TrivialKnot);
    }
    // r = p / (q mod p) > 1.
    let qm = f.q().rem_euclid(f.p());
    debug_assert!(qm >= 1, "gcd(p, q) = 1 rules out q = 0 mod p");
    let mut num = f.p();
    let mut den = qm;
    let mut entries = Vec::new();
    loop {
        debug_assert!(num > den && den >= 1);
        if num % den == 0 {
            // den = 1 since the pair stays coprime; x_m = num is an integer.
            entries.push(num / den);
            break;
        }
        let b = (num + den - 1) / den; // ceil(num / den), exact
        entries.push(b);
        // x_{i+1} = 1 / (b - x) = den / (b*den - num); denominators of the
        // sequence strictly decrease, which guarantees termination.
        let next_den = b * den - num;
        debug_assert!(next_den >= 1 && next_den < den);
        num = den;
        den = next_den;
    }
    debug_assert!(entries.iter().all(|&b| b >= 2));
    TwistWord::new(entries)
}

/// The mirror image's fraction: `p/q` maps to `p / (p - (q mod p))`.
pub fn mirror_fraction(f: &Fraction) -> Result<Fraction, FractionError> {
    if f.p() < 2 {
        return Err(FractionError::TrivialKnot);
    }
    let qm = f.q().rem_euclid(f.p());
    Fraction::new(f.p(), f.p() - qm)
}

/// Sufficient condition for ambient isotopy of the two link types:
/// `q/p - q'/p'` an integer certifies isotopy; `false` is inconclusive.
pub fn isotopic_sufficient(f: &Fraction, g: &Fraction) -> bool {
    let (p1, q1) = (f.p() as i128, f.q() as i128);
    let (p2, q2) = (g.p() as i128, g.q() as i128);
    (q1 * p2 - q2 * p1) % (p1 * p2) == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(entries: &[i64]) -> TwistWord {
        TwistWord::new(entries.to_vec()).unwrap()
    }

    fn frac(p: i64, q: i64) -> Fraction {
        Fraction::new(p, q).unwrap()
    }

    #[test]
    fn fraction_normalizes() {
        assert_eq!(frac(14, 10), frac(7, 5));
        assert_eq!(frac(-7, 5), frac(7, -5));
        assert_eq!(frac(7, -5).p(), 7);
        assert_eq!(frac(7, -5).q(), -5);
        assert_eq!(Fraction::new(3, 0), Err(FractionError::ZeroDenominator));
        assert_eq!(Fraction::new(0, 3), Err(FractionError::ZeroNumerator));
    }

    #[test]
    fn fraction_parsing() {
        assert_eq!("7/5".parse::<Fraction>().unwrap(), frac(7, 5));
        assert_eq!("7/-5".parse::<Fraction>().unwrap(), frac(7, -5));
        assert_eq!("3".parse::<Fraction>().unwrap(), frac(3, 1));
        assert!("x/5".parse::<Fraction>().is_err());
        assert_eq!(frac(7, -5).to_string(), "7/-5");
    }

    #[test]
    fn word_validation() {
        assert_eq!(TwistWord::new(vec![]), Err(FractionError::EmptyWord));
        assert_eq!(
            TwistWord::new(vec![2, 0, 2]),
            Err(FractionError::EntryOutOfRange(0))
        );
        assert_eq!("2,2,3".parse::<TwistWord>().unwrap(), word(&[2, 2, 3]));
        assert_eq!(word(&[2, 2, 3]).to_string(), "2,2,3");
        assert!(word(&[2, 2, 3]).is_legendrian_form());
        assert!(!word(&[2, 1, 3]).is_legendrian_form());
    }

    #[test]
    fn continued_fraction_values() {
        assert_eq!(eval_cf(&word(&[3])).unwrap(), CfValue::Finite(frac(3, 1)));
        assert_eq!(
            eval_cf(&word(&[2, 2, 3])).unwrap(),
            CfValue::Finite(frac(7, 5))
        );
        assert_eq!(
            eval_cf(&word(&[3, 2])).unwrap(),
            CfValue::Finite(frac(5, 2))
        );
        assert_eq!(
            eval_cf(&word(&[2, 2])).unwrap(),
            CfValue::Finite(frac(3, 2))
        );
    }

    #[test]
    fn degenerate_continued_fractions() {
        // All-ones words walk through zero and infinity; both are legal
        // values for words that merely have all entries >= 1.
        assert_eq!(eval_cf(&word(&[1, 1])).unwrap(), CfValue::Zero);
        assert_eq!(eval_cf(&word(&[1, 1, 1])).unwrap(), CfValue::Infinite);
        assert_eq!(eval_cf(&word(&[2, 1, 2])).unwrap(), CfValue::Zero);
        assert_eq!(eval_cf(&word(&[1, 1])).unwrap().numerator(), 0);
        assert_eq!(eval_cf(&word(&[1, 1, 1])).unwrap().numerator(), 1);
    }

    #[test]
    fn twos_evaluate_to_successive_fractions() {
        // [2, 2, ..., 2] (k twos) = (k+1)/k
        for k in 1..20 {
            let w = word(&vec![2; k]);
            let expected = frac(k as i64 + 1, k as i64);
            assert_eq!(eval_cf(&w).unwrap(), CfValue::Finite(expected));
        }
    }

    #[test]
    fn normal_form_examples() {
        assert_eq!(legendrian_form(&frac(7, 5)).unwrap(), word(&[2, 2, 3]));
        assert_eq!(legendrian_form(&frac(3, 1)).unwrap(), word(&[3]));
        assert_eq!(legendrian_form(&frac(5, 2)).unwrap(), word(&[3, 2]));
        assert_eq!(legendrian_form(&frac(9, 4)).unwrap(), word(&[3, 2, 2, 2]));
        assert_eq!(
            legendrian_form(&frac(1, 1)),
            Err(FractionError::TrivialKnot)
        );
    }

    #[test]
    fn normal_form_round_trip() {
        // For every reduced p/q with 2 <= p <= 200: the word has all entries
        // >= 2 and evaluates back to p / (q mod p).
        for p in 2..=200i64 {
            for q in 1..p {
                if p.gcd(&q) != 1 {
                    continue;
                }
                let f = frac(p, q);
                let w = legendrian_form(&f).unwrap();
                assert!(w.is_legendrian_form(), "entries < 2 for {f}: {w}");
                assert_eq!(eval_cf(&w).unwrap(), CfValue::Finite(f), "word {w}");
                assert!(isotopic_sufficient(&f, &f));
                // Negative q reduces to the same q mod p.
                let g = frac(p, q - p);
                assert_eq!(legendrian_form(&g).unwrap(), w);
                assert!(isotopic_sufficient(&g, &f));
            }
        }
    }

    #[test]
    fn mirror_formula() {
        assert_eq!(mirror_fraction(&frac(3, 1)).unwrap(), frac(3, 2));
        assert_eq!(mirror_fraction(&frac(5, 2)).unwrap(), frac(5, 3));
        assert_eq!(mirror_fraction(&frac(7, 5)).unwrap(), frac(7, 2));
        // Double mirror returns to a fraction the sufficient test certifies
        // as isotopic to the original.
        for p in 2..=60i64 {
            for q in 1..p {
                if p.gcd(&q) != 1 {
                    continue;
                }
                let f = frac(p, q);
                let mm = mirror_fraction(&mirror_fraction(&f).unwrap()).unwrap();
                assert!(isotopic_sufficient(&f, &mm));
            }
        }
    }

    #[test]
    fn sufficient_isotopy_test() {
        assert!(isotopic_sufficient(&frac(7, 5), &frac(7, 5)));
        assert!(isotopic_sufficient(&frac(7, 5), &frac(7, 12)));
        assert!(!isotopic_sufficient(&frac(7, 5), &frac(7, 2)));
        // 5/3 is the mirror of 5/2 and the two types are in fact isotopic
        // (the figure-eight knot is amphicheiral), but the sufficient test
        // cannot see it: 2/5 - 3/5 is not an integer. Amphicheirality shows
        // up instead as an equal tb pair.
        assert!(!isotopic_sufficient(&frac(5, 2), &frac(5, 3)));
    }
}
