use std::fmt;
use std::ops::{Add, Mul};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Polynomial in `t` with integer coefficients, lowest degree first.
///
/// The coefficient vector never has a trailing zero; the zero polynomial has
/// no coefficients at all.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![1] }
    }

    /// `t^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = 1;
        IntPolynomial { coeffs }
    }

    /// Rank generating function of a list of lengths.
    pub fn from_lengths(lengths: impl IntoIterator<Item = usize>) -> Self {
        let mut coeffs = Vec::new();
        for l in lengths {
            if coeffs.len() <= l {
                coeffs.resize(l + 1, 0);
            }
            coeffs[l] += 1;
        }
        IntPolynomial::new(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, t: i64) -> Result<i64> {
        self.coeffs.iter().rev().try_fold(0i64, |acc, &c| {
            acc.checked_mul(t)
                .and_then(|v| v.checked_add(c))
                .ok_or(Error::Overflow)
        })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| self.coeff(k).checked_add(other.coeff(k)).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(IntPolynomial::new(coeffs))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(IntPolynomial::zero());
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                let term = a.checked_mul(b).ok_or(Error::Overflow)?;
                coeffs[i + j] = coeffs[i + j].checked_add(term).ok_or(Error::Overflow)?;
            }
        }
        Ok(IntPolynomial::new(coeffs))
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        IntPolynomial { coeffs }
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        self.checked_add(rhs).expect("polynomial coefficient overflow")
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        self.checked_mul(rhs).expect("polynomial coefficient overflow")
    }
}

/// Ascending powers: `1+2t+2t^2+t^3`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    write!(f, "t")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
