//! 2×2 rational matrices and the linear fractional transformations they define.
//!
//! A matrix `[[a, b], [c, d]]` acts on positive `t` by `t ↦ (a·t + b) / (c·t + d)`.
//! Multiplication of matrices corresponds to composition of transformations,
//! `(M·N)(t) = M(N(t))`.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Row-major 2×2 matrix. No invariants are imposed at construction; negative
/// and singular matrices are representable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub e11: Rational,
    pub e12: Rational,
    pub e21: Rational,
    pub e22: Rational,
}

impl Mat2 {
    pub fn new(e11: Rational, e12: Rational, e21: Rational, e22: Rational) -> Self {
        Mat2 { e11, e12, e21, e22 }
    }

    pub fn from_ints(e11: i64, e12: i64, e21: i64, e22: i64) -> Self {
        Mat2::new(e11.into(), e12.into(), e21.into(), e22.into())
    }

    pub fn identity() -> Self {
        Mat2::from_ints(1, 0, 0, 1)
    }

    pub fn is_identity(&self) -> bool {
        self.e11.is_one() && self.e12.is_zero() && self.e21.is_zero() && self.e22.is_one()
    }

    pub fn entries(&self) -> [&Rational; 4] {
        [&self.e11, &self.e12, &self.e21, &self.e22]
    }

    pub fn scale(&self, k: &Rational) -> Mat2 {
        Mat2::new(k * &self.e11, k * &self.e12, k * &self.e21, k * &self.e22)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries().iter().all(|e| !e.is_negative())
    }

    pub fn is_invertible(&self) -> bool {
        !self.det().is_zero()
    }

    pub fn det(&self) -> Rational {
        &self.e11 * &self.e22 - &self.e12 * &self.e21
    }

    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        Mat2 {
            e11: &self.e11 * &rhs.e11 + &self.e12 * &rhs.e21,
            e12: &self.e11 * &rhs.e12 + &self.e12 * &rhs.e22,
            e21: &self.e21 * &rhs.e11 + &self.e22 * &rhs.e21,
            e22: &self.e21 * &rhs.e12 + &self.e22 * &rhs.e22,
        }
    }

    pub fn inverse(&self) -> Result<Mat2> {
        let det = self.det();
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let k = det.recip()?;
        Ok(Mat2 {
            e11: &k * &self.e22,
            e12: -(&k * &self.e12),
            e21: -(&k * &self.e21),
            e22: &k * &self.e11,
        })
    }

    /// Evaluates the transformation at `t`.
    ///
    /// For a nonnegative invertible matrix and `t > 0` the result is positive.
    /// The denominator is checked regardless, since callers may probe arbitrary
    /// matrices.
    pub fn mobius_apply(&self, t: &Rational) -> Result<Rational> {
        let den = &self.e21 * t + &self.e22;
        if den.is_zero() {
            return Err(Error::Pole(t.clone()));
        }
        (&self.e11 * t + &self.e12).checked_div(&den)
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: &Mat2) -> Mat2 {
        Mat2::mul(self, rhs)
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        Mat2::mul(&self, &rhs)
    }
}

/// Canonical text form `[[e11,e12],[e21,e22]]`, no spaces.
impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{},{}],[{},{}]]",
            self.e11, self.e12, self.e21, self.e22
        )
    }
}

/// Parses `[[e11,e12],[e21,e22]]`, ignoring whitespace.
impl FromStr for Mat2 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::parse("matrix", s.trim());
        let body = compact
            .strip_prefix("[[")
            .and_then(|rest| rest.strip_suffix("]]"))
            .ok_or_else(bad)?;
        let (row1, row2) = body.split_once("],[").ok_or_else(bad)?;
        let mut entries = Vec::with_capacity(4);
        for row in [row1, row2] {
            if row.contains(['[', ']']) {
                return Err(bad());
            }
            let cells: Vec<&str> = row.split(',').collect();
            if cells.len() != 2 {
                return Err(bad());
            }
            for cell in cells {
                let value = cell
                    .parse::<Rational>()
                    .map_err(|_| Error::parse("matrix entry", cell))?;
                entries.push(value);
            }
        }
        let [e11, e12, e21, e22]: [Rational; 4] = entries.try_into().map_err(|_| bad())?;
        Ok(Mat2::new(e11, e12, e21, e22))
    }
}
