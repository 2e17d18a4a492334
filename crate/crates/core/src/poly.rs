//! Integer polynomials in one variable, exact coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Polynomial with arbitrary-precision integer coefficients, stored in
/// ascending degree order. Canonical form: the highest stored coefficient
/// is nonzero, and the zero polynomial stores nothing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    /// `t^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPolynomial { coeffs }
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `(t - r_1)(t - r_2)...` over the given roots.
    pub fn from_integer_roots(roots: &[i64]) -> Self {
        let mut p = IntPolynomial::one();
        for &r in roots {
            p = p.mul(&IntPolynomial::from_i64_coeffs(&[-r, 1]));
        }
        p
    }

    /// `(t-1)(t-2)...(t-n)`, the tree-case characteristic polynomial.
    pub fn falling_product(n: usize) -> Self {
        let roots: Vec<i64> = (1..=n as i64).collect();
        Self::from_integer_roots(&roots)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficients in canonical form.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        Self::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }

    /// Multiply by `t^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    /// Horner evaluation at an integer point.
    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact division by `(t - r)`; `None` when `r` is not a root.
    pub fn div_linear(&self, r: i64) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let r = BigInt::from(r);
        let mut quot = vec![BigInt::zero(); self.coeffs.len() - 1];
        let mut carry = BigInt::zero();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            let v = c + &carry * &r;
            if i == 0 {
                if !v.is_zero() {
                    return None;
                }
            } else {
                quot[i - 1] = v.clone();
                carry = v;
            }
        }
        Some(Self::from_coeffs(quot))
    }

    /// Factors into integer linear factors `c * (t-r_1)^{m_1}...` by trial
    /// division with roots 0..=degree; `None` when the polynomial does not
    /// split over the integers that way.
    pub fn split_linear(&self) -> Option<(BigInt, Vec<(i64, usize)>)> {
        if self.is_zero() {
            return None;
        }
        let deg = self.degree().unwrap();
        let mut rest = self.clone();
        let mut factors: Vec<(i64, usize)> = Vec::new();
        for r in 0..=deg as i64 {
            let mut mult = 0usize;
            while let Some(q) = rest.div_linear(r) {
                rest = q;
                mult += 1;
                if rest.degree().is_none() {
                    break;
                }
            }
            if mult > 0 {
                factors.push((r, mult));
            }
        }
        if rest.degree() == Some(0) {
            Some((rest.coeff(0), factors))
        } else {
            None
        }
    }

    /// JSON array of the ascending coefficients, exact decimal digits.
    pub fn coeffs_json(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("[{}]", parts.join(","))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}
