//! Dense univariate polynomials in `q` with exact `i64` coefficients.
//!
//! Every arithmetic step is overflow-checked; a wraparound panics instead of
//! producing a wrong coefficient.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// Coefficient `i` multiplies `q^i`. Trailing zeros are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<i64>", into = "Vec<i64>")]
pub struct Polynomial {
    coeffs: Vec<i64>,
}

fn overflow() -> ! {
    panic!("integer overflow in polynomial arithmetic")
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * q^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn eval(&self, q: i64) -> i64 {
        self.coeffs.iter().rev().fold(0i64, |acc, &c| {
            acc.checked_mul(q)
                .and_then(|x| x.checked_add(c))
                .unwrap_or_else(|| overflow())
        })
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Polynomial { coeffs }
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .map(|&x| x.checked_mul(c).unwrap_or_else(|| overflow()))
                .collect(),
        )
    }

    /// `q^d * P(1/q)`; requires `d >= deg P`.
    pub fn reflect(&self, d: usize) -> Self {
        assert!(
            self.degree().is_none_or(|deg| deg <= d),
            "reflect degree {d} below polynomial degree"
        );
        let mut coeffs = vec![0; d + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[d - i] = c;
        }
        Self::from_coeffs(coeffs)
    }

    /// Coefficients of degree `< k`.
    pub fn truncate(&self, k: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().take(k).copied().collect())
    }

    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.coeff(i).checked_add(other.coeff(i)))
            .collect::<Option<Vec<_>>>()?;
        Some(Self::from_coeffs(coeffs))
    }

    pub fn checked_mul(&self, other: &Self) -> Option<Self> {
        if self.is_zero() || other.is_zero() {
            return Some(Self::zero());
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].checked_add(a.checked_mul(b)?)?;
            }
        }
        Some(Self::from_coeffs(coeffs))
    }
}

impl From<Vec<i64>> for Polynomial {
    fn from(coeffs: Vec<i64>) -> Self {
        Self::from_coeffs(coeffs)
    }
}

impl From<Polynomial> for Vec<i64> {
    fn from(p: Polynomial) -> Self {
        p.coeffs
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).unwrap_or_else(|| overflow())
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self
                .coeffs
                .iter()
                .map(|&c| c.checked_neg().unwrap_or_else(|| overflow()))
                .collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).unwrap_or_else(|| overflow())
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

/// Ascending powers: `1 + q + 2q^2`, `-1 + q`, `0`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut wrote = false;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if wrote {
                write!(f, " {sign} ")?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            let mag = c.unsigned_abs();
            match (i, mag) {
                (0, _) => write!(f, "{mag}")?,
                (_, 1) => {}
                _ => write!(f, "{mag}")?,
            }
            match i {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{i}")?,
            }
            wrote = true;
        }
        Ok(())
    }
}
