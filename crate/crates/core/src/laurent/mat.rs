use std::ops::Mul;

use num_bigint::BigInt;
use thiserror::Error;

use super::LaurentPoly2;

/// A 3x3 matrix over the Laurent ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat3 {
    pub entries: [[LaurentPoly2; 3]; 3],
}

/// A column vector of three Laurent polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vec3 {
    pub entries: [LaurentPoly2; 3],
}

#[derive(Debug, Error)]
pub enum MatError {
    /// Inversion over the Laurent ring needs a unit determinant, i.e. a
    /// single term with coefficient +-1.
    #[error("matrix is not invertible over the Laurent ring: det = {det}")]
    NonUnitDeterminant { det: String },
}

impl Mat3 {
    pub fn from_rows(entries: [[LaurentPoly2; 3]; 3]) -> Self {
        Mat3 { entries }
    }

    pub fn identity() -> Self {
        let mut entries: [[LaurentPoly2; 3]; 3] = Default::default();
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = LaurentPoly2::one();
        }
        Mat3 { entries }
    }

    pub fn determinant(&self) -> LaurentPoly2 {
        let e = &self.entries;
        let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
            &(&e[r1][c1] * &e[r2][c2]) - &(&e[r1][c2] * &e[r2][c1])
        };
        let mut det = &e[0][0] * &minor(1, 2, 1, 2);
        det -= &(&e[0][1] * &minor(1, 2, 0, 2));
        det += &(&e[0][2] * &minor(1, 2, 0, 1));
        det
    }

    /// Applies the matrix to a column vector.
    pub fn mat_vec(&self, v: &Vec3) -> Vec3 {
        let mut out: [LaurentPoly2; 3] = Default::default();
        for i in 0..3 {
            for j in 0..3 {
                out[i] += &(&self.entries[i][j] * &v.entries[j]);
            }
        }
        Vec3 { entries: out }
    }

    /// Keeps only terms with `a`-exponent zero in every entry, i.e. the
    /// evaluation at `a = 0` of a matrix whose entries have no negative
    /// powers of `a`.
    pub fn a_constant_part(&self) -> Mat3 {
        let mut entries: [[LaurentPoly2; 3]; 3] = Default::default();
        for i in 0..3 {
            for j in 0..3 {
                entries[i][j] = self.entries[i][j].coefficient_of_a(0);
            }
        }
        Mat3 { entries }
    }
}

impl Vec3 {
    pub fn new(entries: [LaurentPoly2; 3]) -> Self {
        Vec3 { entries }
    }

    /// Applies a matrix on the right, treating `self` as a row vector.
    pub fn vec_mat(&self, m: &Mat3) -> Vec3 {
        let mut out: [LaurentPoly2; 3] = Default::default();
        for j in 0..3 {
            for i in 0..3 {
                out[j] += &(&self.entries[i] * &m.entries[i][j]);
            }
        }
        Vec3 { entries: out }
    }

    pub fn dot(&self, other: &Vec3) -> LaurentPoly2 {
        let mut out = LaurentPoly2::zero();
        for i in 0..3 {
            out += &(&self.entries[i] * &other.entries[i]);
        }
        out
    }

    /// Outer product `self * other^t`.
    pub fn outer(&self, other: &Vec3) -> Mat3 {
        let mut entries: [[LaurentPoly2; 3]; 3] = Default::default();
        for i in 0..3 {
            for j in 0..3 {
                entries[i][j] = &self.entries[i] * &other.entries[j];
            }
        }
        Mat3 { entries }
    }
}

impl Mul for &Mat3 {
    type Output = Mat3;
    fn mul(self, rhs: &Mat3) -> Mat3 {
        let mut entries: [[LaurentPoly2; 3]; 3] = Default::default();
        for i in 0..3 {
            for j in 0..3 {
                for (k, rhs_row) in rhs.entries.iter().enumerate() {
                    entries[i][j] += &(&self.entries[i][k] * &rhs_row[j]);
                }
            }
        }
        Mat3 { entries }
    }
}

/// Inverts a matrix whose determinant is a unit of the Laurent ring, via the
/// adjugate divided by the (monomial) determinant.
pub fn mat_inverse(m: &Mat3) -> Result<Mat3, MatError> {
    let det = m.determinant();
    let unit = det.num_terms() == 1
        && det
            .terms()
            .all(|(_, _, c)| c == &BigInt::from(1) || c == &BigInt::from(-1));
    if !unit {
        return Err(MatError::NonUnitDeterminant {
            det: det.to_string(),
        });
    }
    let (da, dx, c) = det.terms().next().map(|(da, dx, c)| (da, dx, c.clone())).unwrap();
    let e = &m.entries;
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
        &(&e[r1][c1] * &e[r2][c2]) - &(&e[r1][c2] * &e[r2][c1])
    };
    let rows = [1usize, 2, 0];
    let cols = [1usize, 2, 0];
    let mut entries: [[LaurentPoly2; 3]; 3] = Default::default();
    for i in 0..3 {
        for j in 0..3 {
            // adj[j][i] = (-1)^(i+j) * minor(i, j); 1/det = c * a^-da * x^-dx
            let cof = minor(rows[i], rows[(i + 1) % 3], cols[j], cols[(j + 1) % 3]);
            entries[j][i] = cof.mul_monomial(c.clone(), -da, -dx);
        }
    }
    Ok(Mat3 { entries })
}

/// Integer power of a matrix by repeated squaring; negative exponents invert
/// first and require a unit determinant.
pub fn mat_pow(m: &Mat3, k: i64) -> Result<Mat3, MatError> {
    let base = if k < 0 { mat_inverse(m)? } else { m.clone() };
    let mut result = Mat3::identity();
    let mut base = base;
    let mut k = k.unsigned_abs();
    while k > 0 {
        if k & 1 == 1 {
            result = &result * &base;
        }
        k >>= 1;
        if k > 0 {
            base = &base * &base;
        }
    }
    Ok(result)
}
