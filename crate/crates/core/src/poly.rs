//! Exact integer polynomials in one variable, ascending-degree coefficient
//! vectors with arbitrary-precision entries. Just enough arithmetic for
//! dichromatic polynomials: addition, multiplication, falling factorials,
//! and integer evaluation.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Coefficients ascending by degree, with no trailing zeros; the zero
/// polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: i64) -> Self {
        Polynomial::from_coeffs(vec![BigInt::from(c)])
    }

    /// The monomial x.
    pub fn x() -> Self {
        Polynomial::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    /// x + c, handy for building (x - 1)^k products.
    pub fn x_plus(c: i64) -> Self {
        Polynomial::from_coeffs(vec![BigInt::from(c), BigInt::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the zero polynomial is reported as 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Coefficient of x^k (zero beyond the stored degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Polynomial::from_coeffs(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        Polynomial::from_coeffs(out)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(out)
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut e: usize) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::constant(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// The falling factorial x (x-1) ... (x-j+1); j = 0 gives 1.
    pub fn falling_factorial(j: usize) -> Polynomial {
        let mut acc = Polynomial::constant(1);
        for i in 0..j {
            acc = acc.mul(&Polynomial::x_plus(-(i as i64)));
        }
        acc
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_u64(&self, x: u64) -> BigInt {
        self.eval(&BigInt::from(x))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
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

/// Binomial coefficient with the usual convention binom(a, b) = 0 for b > a.
pub fn binomial(a: usize, b: usize) -> BigInt {
    if b > a {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..b.min(a - b) {
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn falling_factorial_values() {
        // x(x-1)(x-2) at x = 5 is 60.
        let ff = Polynomial::falling_factorial(3);
        assert_eq!(ff.eval_u64(5), BigInt::from(60));
        assert_eq!(Polynomial::falling_factorial(0).eval_u64(7), BigInt::one());
    }

    #[test]
    fn arithmetic_round_trip() {
        let p = Polynomial::x().mul(&Polynomial::x_plus(-1)); // x^2 - x
        assert_eq!(p.coeff(2), BigInt::one());
        assert_eq!(p.coeff(1), BigInt::from(-1));
        assert_eq!(p.sub(&p), Polynomial::zero());
        assert_eq!(p.add(&p).eval_u64(3), BigInt::from(12));
        assert_eq!(Polynomial::x_plus(-1).pow(2).eval_u64(4), BigInt::from(9));
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let p = Polynomial::from_coeffs(vec![
            BigInt::from(1),
            BigInt::zero(),
            BigInt::zero(),
        ]);
        assert_eq!(p.degree(), 0);
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 5), BigInt::zero());
        assert_eq!(binomial(6, 0), BigInt::one());
        assert_eq!(binomial(6, 6), BigInt::one());
    }
}
