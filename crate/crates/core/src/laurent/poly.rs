use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::Zero;

/// A Laurent polynomial in the two variables `a` and `x`, with
/// arbitrary-precision integer coefficients and integer (possibly negative)
/// exponents.
///
/// Terms are stored sparsely, keyed by `(deg_a, deg_x)`, and the
/// representation is canonical: a zero coefficient is never stored, so
/// structural equality is polynomial equality.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(1, 0, 0)
    }

    /// The single term `coeff * a^dega * x^degx`.
    pub fn term(coeff: impl Into<BigInt>, dega: i64, degx: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(&coeff.into(), dega, degx);
        p
    }

    /// Builds a polynomial from `(coeff, dega, degx)` triples.
    pub fn from_terms(terms: &[(i64, i64, i64)]) -> Self {
        let mut p = Self::zero();
        for &(c, da, dx) in terms {
            p.add_term(&BigInt::from(c), da, dx);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The coefficient of `a^dega * x^degx` (zero if absent).
    pub fn coeff(&self, dega: i64, degx: i64) -> BigInt {
        self.terms.get(&(dega, degx)).cloned().unwrap_or_default()
    }

    /// Iterates terms in ascending `(deg_a, deg_x)` order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64, &BigInt)> {
        self.terms.iter().map(|(&(da, dx), c)| (da, dx, c))
    }

    /// Adds `coeff * a^dega * x^degx` in place, dropping the term if it
    /// cancels to zero.
    pub fn add_term(&mut self, coeff: &BigInt, dega: i64, degx: i64) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry((dega, degx)).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&(dega, degx));
        }
    }

    /// Smallest exponent of `a` among the terms; `None` for the zero
    /// polynomial, whose degree is undefined.
    pub fn min_deg_a(&self) -> Option<i64> {
        self.terms.keys().map(|&(da, _)| da).min()
    }

    pub fn max_deg_a(&self) -> Option<i64> {
        self.terms.keys().map(|&(da, _)| da).max()
    }

    pub fn min_deg_x(&self) -> Option<i64> {
        self.terms.keys().map(|&(_, dx)| dx).min()
    }

    pub fn max_deg_x(&self) -> Option<i64> {
        self.terms.keys().map(|&(_, dx)| dx).max()
    }

    /// The coefficient of `a^k`, as a polynomial in `x` alone (all returned
    /// terms have `deg_a = 0`).
    pub fn coefficient_of_a(&self, k: i64) -> LaurentPoly2 {
        let mut p = Self::zero();
        for (&(da, dx), c) in &self.terms {
            if da == k {
                p.add_term(c, 0, dx);
            }
        }
        p
    }

    /// Substitutes `a -> 1/a`, negating every `a`-exponent. This is how the
    /// mirror image acts on the Kauffman polynomial.
    pub fn substitute_a_inverse(&self) -> LaurentPoly2 {
        let mut p = Self::zero();
        for (&(da, dx), c) in &self.terms {
            p.add_term(c, -da, dx);
        }
        p
    }

    /// Multiplies by the monomial `coeff * a^dega * x^degx`.
    pub fn mul_monomial(&self, coeff: impl Into<BigInt>, dega: i64, degx: i64) -> LaurentPoly2 {
        let coeff = coeff.into();
        let mut p = Self::zero();
        if coeff.is_zero() {
            return p;
        }
        for (&(da, dx), c) in &self.terms {
            p.terms.insert((da + dega, dx + degx), c * &coeff);
        }
        p
    }

    /// `a^k` for any integer `k`.
    pub fn a_power(k: i64) -> LaurentPoly2 {
        Self::term(1, k, 0)
    }

    /// Integer power with exponent `k >= 0`, by repeated squaring.
    pub fn pow(&self, k: u32) -> LaurentPoly2 {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }
}

impl AddAssign<&LaurentPoly2> for LaurentPoly2 {
    fn add_assign(&mut self, rhs: &LaurentPoly2) {
        for (&(da, dx), c) in &rhs.terms {
            self.add_term(c, da, dx);
        }
    }
}

impl SubAssign<&LaurentPoly2> for LaurentPoly2 {
    fn sub_assign(&mut self, rhs: &LaurentPoly2) {
        for (&(da, dx), c) in &rhs.terms {
            self.add_term(&(-c), da, dx);
        }
    }
}

impl Add for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut p = self.clone();
        p += rhs;
        p
    }
}

impl Sub for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut p = self.clone();
        p -= rhs;
        p
    }
}

impl Mul for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut p = LaurentPoly2::zero();
        for (&(da1, dx1), c1) in &self.terms {
            for (&(da2, dx2), c2) in &rhs.terms {
                p.add_term(&(c1 * c2), da1 + da2, dx1 + dx2);
            }
        }
        p
    }
}

impl Neg for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        let mut p = LaurentPoly2::zero();
        for (&(da, dx), c) in &self.terms {
            p.terms.insert((da, dx), -c);
        }
        p
    }
}

impl Add for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, rhs: LaurentPoly2) -> LaurentPoly2 {
        &self + &rhs
    }
}

impl Sub for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: LaurentPoly2) -> LaurentPoly2 {
        &self - &rhs
    }
}

impl Mul for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: LaurentPoly2) -> LaurentPoly2 {
        &self * &rhs
    }
}

impl Neg for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        -&self
    }
}

fn write_monomial(out: &mut String, var: char, deg: i64) {
    out.push(var);
    if deg != 1 {
        out.push('^');
        out.push_str(&deg.to_string());
    }
}

impl fmt::Display for LaurentPoly2 {
    /// Serialization format: terms ascending by `(deg_a, deg_x)`, rendered
    /// as `c*a^i*x^j`; an exponent of 0 omits the variable, an exponent of 1
    /// omits the `^1`, and a coefficient of +-1 omits the digit unless the
    /// monomial part is empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (&(da, dx), c)) in self.terms.iter().enumerate() {
            let negative = c < &BigInt::zero();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let abs = if negative { -c } else { c.clone() };
            let mut pieces: Vec<String> = Vec::new();
            if abs != BigInt::from(1) || (da == 0 && dx == 0) {
                pieces.push(abs.to_string());
            }
            if da != 0 {
                let mut s = String::new();
                write_monomial(&mut s, 'a', da);
                pieces.push(s);
            }
            if dx != 0 {
                let mut s = String::new();
                write_monomial(&mut s, 'x', dx);
                pieces.push(s);
            }
            out.push_str(&pieces.join("*"));
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64, i64)]) -> LaurentPoly2 {
        LaurentPoly2::from_terms(terms)
    }

    #[test]
    fn additive_inverse_cancels() {
        let ax = LaurentPoly2::term(1, 1, 1);
        let sum = &ax + &LaurentPoly2::term(-1, 1, 1);
        assert!(sum.is_zero());
        assert_eq!(sum.num_terms(), 0);
    }

    #[test]
    fn distributes_over_monomials() {
        // (a + a^-1) * x = a*x + a^-1*x
        let lhs = &p(&[(1, 1, 0), (1, -1, 0)]) * &LaurentPoly2::term(1, 0, 1);
        assert_eq!(lhs, p(&[(1, 1, 1), (1, -1, 1)]));
    }

    #[test]
    fn difference_of_squares() {
        // (x - a)(x + a) = x^2 - a^2
        let x = LaurentPoly2::term(1, 0, 1);
        let a = LaurentPoly2::term(1, 1, 0);
        let prod = &(&x - &a) * &(&x + &a);
        assert_eq!(prod, p(&[(1, 0, 2), (-1, 2, 0)]));
    }

    #[test]
    fn degree_queries() {
        let q = p(&[(1, 2, 1), (1, -1, 0)]);
        assert_eq!(q.min_deg_a(), Some(-1));
        assert_eq!(q.max_deg_a(), Some(2));
        assert_eq!(LaurentPoly2::one().min_deg_a(), Some(0));
        assert_eq!(LaurentPoly2::zero().min_deg_a(), None);
        // a^-1 * (x^3 - 2x)
        let q = p(&[(1, -1, 3), (-2, -1, 1)]);
        assert_eq!(q.min_deg_a(), Some(-1));
        assert_eq!(q.max_deg_a(), Some(-1));
    }

    #[test]
    fn substitute_a_inverse_negates_exponents() {
        let q = p(&[(1, 2, 0), (1, 0, 1)]);
        assert_eq!(q.substitute_a_inverse(), p(&[(1, -2, 0), (1, 0, 1)]));
        assert_eq!(q.substitute_a_inverse().substitute_a_inverse(), q);
        assert_eq!(
            q.substitute_a_inverse().min_deg_a(),
            q.max_deg_a().map(|d| -d)
        );
    }

    #[test]
    fn coefficient_slice_is_x_only() {
        let q = p(&[(3, -1, 2), (1, -1, 0), (5, 0, 1)]);
        assert_eq!(q.coefficient_of_a(-1), p(&[(3, 0, 2), (1, 0, 0)]));
        assert_eq!(q.coefficient_of_a(7), LaurentPoly2::zero());
    }

    #[test]
    fn display_golden() {
        assert_eq!(LaurentPoly2::zero().to_string(), "0");
        assert_eq!(LaurentPoly2::one().to_string(), "1");
        assert_eq!(LaurentPoly2::term(-3, 0, 0).to_string(), "-3");
        assert_eq!(LaurentPoly2::term(1, -1, 0).to_string(), "a^-1");
        assert_eq!(LaurentPoly2::term(-1, 1, 2).to_string(), "-a*x^2");
        // delta = (a + a^-1)/x - 1
        let delta = p(&[(1, -1, -1), (-1, 0, 0), (1, 1, -1)]);
        assert_eq!(delta.to_string(), "a^-1*x^-1 - 1 + a*x^-1");
        // L of the 3-twist diagram
        let l3 = p(&[
            (-2, -1, 0),
            (1, -1, 2),
            (1, 0, 1),
            (-1, 1, 0),
            (1, 1, 2),
            (1, 2, 1),
        ]);
        assert_eq!(
            l3.to_string(),
            "-2*a^-1 + a^-1*x^2 + x - a + a*x^2 + a^2*x"
        );
    }

    #[test]
    fn pow_by_squaring() {
        let q = p(&[(1, 0, 1), (-1, 1, 0)]); // x - a
        let mut expected = LaurentPoly2::one();
        for _ in 0..5 {
            expected = &expected * &q;
        }
        assert_eq!(q.pow(5), expected);
        assert_eq!(q.pow(0), LaurentPoly2::one());
    }
}
