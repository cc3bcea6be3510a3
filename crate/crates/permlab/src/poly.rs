//! Dense exact polynomials over arbitrary-precision integers.
//!
//! `IntPoly` stores coefficients by ascending power of `t` with no trailing
//! zeros; the zero polynomial has empty support. All arithmetic is exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A univariate polynomial in `t` with `BigInt` coefficients.
///
/// Invariant: the coefficient vector never ends in a zero, so
/// `coeffs.len() == degree + 1` for nonzero polynomials and `coeffs` is
/// empty exactly for the zero polynomial.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    /// A constant polynomial.
    pub fn constant(c: BigInt) -> Self {
        IntPoly::from_coeffs(vec![c])
    }

    /// The monomial `c * t^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly::from_coeffs(coeffs)
    }

    /// Builds a polynomial from ascending-power coefficients, trimming
    /// trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// Convenience constructor for literals in tests and docs.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest power with a nonzero coefficient, or `None` for zero.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Ascending-power coefficient slice (no trailing zeros).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn scalar_mul(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `t^k`.
    pub fn mul_tpow(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Divides by `t^k`; requires the valuation to be at least `k`.
    pub(crate) fn div_tpow(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        debug_assert!(self.coeffs[..k].iter().all(|c| c.is_zero()));
        IntPoly {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    /// Formal derivative d/dt.
    pub fn derivative(&self) -> IntPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigInt::from(k))
            .collect();
        IntPoly::from_coeffs(coeffs)
    }

    /// Evaluates at an integer point by Horner's rule.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluates at a rational point.
    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    /// `(1 + t)^k`.
    pub fn one_plus_t_pow(k: usize) -> IntPoly {
        let coeffs = (0..=k).map(|i| binomial(k as u64, i as u64)).collect();
        IntPoly::from_coeffs(coeffs)
    }

    /// Content: positive gcd of the coefficients (zero for the zero poly).
    pub(crate) fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = num_integer::gcd(g, c.clone());
        }
        g
    }

    /// Divides out the content; the sign of the leading coefficient is kept.
    pub(crate) fn primitive_part(&self) -> IntPoly {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Exact division; panics if `divisor` does not divide `self` over the
    /// integers. Only used internally where divisibility is guaranteed.
    pub(crate) fn exact_div(&self, divisor: &IntPoly) -> IntPoly {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return IntPoly::zero();
        }
        let dd = divisor.degree().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        let lead = divisor.leading_coeff().unwrap().clone();
        for k in (0..quot.len()).rev() {
            let top = std::mem::take(&mut rem[k + dd]);
            if top.is_zero() {
                continue;
            }
            let (q, r) = num_integer::div_rem(top, lead.clone());
            assert!(r.is_zero(), "non-exact polynomial division");
            for (i, dc) in divisor.coeffs.iter().enumerate().take(dd) {
                let sub = dc * &q;
                rem[k + i] -= sub;
            }
            quot[k] = q;
        }
        assert!(rem.iter().all(|c| c.is_zero()), "non-exact polynomial division");
        IntPoly::from_coeffs(quot)
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        IntPoly::from_coeffs(coeffs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
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
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}")?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

/// Binomial coefficient C(n, k) as a `BigInt` (zero when `k > n`).
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivative_of_square() {
        let f = IntPoly::from_i64s(&[1, 2, 1]);
        assert_eq!(f.derivative(), IntPoly::from_i64s(&[2, 2]));
    }

    #[test]
    fn product_of_binomials() {
        let f = IntPoly::from_i64s(&[1, 1]);
        assert_eq!(&f * &f, IntPoly::from_i64s(&[1, 2, 1]));
    }

    #[test]
    fn eval_counts_group_order() {
        // 1 + 6t + t^2 at t = 1 recovers the 8 elements it enumerates.
        let f = IntPoly::from_i64s(&[1, 6, 1]);
        assert_eq!(f.eval(&BigInt::one()), BigInt::from(8));
    }

    #[test]
    fn eval_rational_matches_horner() {
        let f = IntPoly::from_i64s(&[3, 0, -2, 1]);
        let x = BigRational::new(BigInt::from(1), BigInt::from(2));
        // 3 - 2(1/4) + 1/8 = 21/8
        assert_eq!(
            f.eval_rational(&x),
            BigRational::new(BigInt::from(21), BigInt::from(8))
        );
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let f = IntPoly::from_coeffs(vec![BigInt::from(5), BigInt::zero(), BigInt::zero()]);
        assert_eq!(f.degree(), Some(0));
        assert!(IntPoly::from_i64s(&[0, 0]).is_zero());
        assert_eq!(IntPoly::zero().degree(), None);
    }

    #[test]
    fn exact_division_round_trips() {
        let f = IntPoly::from_i64s(&[2, 3, 1]); // (t+1)(t+2)
        let g = IntPoly::from_i64s(&[1, 1]);
        assert_eq!(f.exact_div(&g), IntPoly::from_i64s(&[2, 1]));
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(6, 0), BigInt::one());
        assert_eq!(binomial(3, 5), BigInt::zero());
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(IntPoly::from_i64s(&[0, 16, 66, 36, 2]).to_string(), "16t + 66t^2 + 36t^3 + 2t^4");
        assert_eq!(IntPoly::from_i64s(&[1, -1]).to_string(), "1 - t");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }
}
