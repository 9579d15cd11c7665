//! Characteristic polynomial of a linear space of matrices and the count of
//! distinguishing functional tuples it yields.

use crate::error::{DomainError, DomainResult};
use crate::exact::{ipow, ExactInt};
use num_traits::{One, Zero};
use std::fmt;

/// Dense univariate polynomial over ExactInt, coefficient of lambda^i at
/// index i. Leading coefficient nonzero unless the polynomial is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPolynomial {
    coeffs: Vec<ExactInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPolynomial { coeffs: vec![ExactInt::one()] }
    }

    pub fn from_coeffs(mut coeffs: Vec<ExactInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[ExactInt] {
        &self.coeffs
    }

    /// Multiply by the monic linear factor (lambda - c).
    pub fn mul_linear(&self, c: &ExactInt) -> QPolynomial {
        if self.coeffs.is_empty() {
            return QPolynomial::zero();
        }
        let mut out = vec![ExactInt::zero(); self.coeffs.len() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[i + 1] += a;
            out[i] -= a * c;
        }
        QPolynomial::from_coeffs(out)
    }

    pub fn eval(&self, x: &ExactInt) -> ExactInt {
        let mut acc = ExactInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Characteristic polynomial of a k-dimensional linear space of matrices:
/// prod_{i=0}^{k-1} (lambda - q^i).
pub fn char_poly_linear(k: u64, q: u64) -> QPolynomial {
    let mut poly = QPolynomial::one();
    for i in 0..k {
        poly = poly.mul_linear(&ipow(q, i));
    }
    poly
}

/// Number of r-tuples of functionals on F_q^N whose common kernel meets a
/// fixed k-dimensional linear space trivially: q^(r(N-k)) * chi(q^r).
pub fn tau_linear(r: u64, k: u64, n_amb: u64, q: u64) -> DomainResult<ExactInt> {
    if q < 2 {
        return Err(DomainError::new("tau", format!("q = {q} is not a prime power >= 2")));
    }
    if r == 0 || k > n_amb {
        return Err(DomainError::new(
            "tau",
            format!("need r >= 1 and 0 <= k <= N, got r = {r}, k = {k}, N = {n_amb}"),
        ));
    }
    let chi = char_poly_linear(k, q).eval(&ipow(q, r));
    Ok(ipow(q, r * (n_amb - k)) * chi)
}
