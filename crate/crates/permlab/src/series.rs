//! Truncated formal power series over exact integers, and the two
//! Carlitz-type identities they verify.
//!
//! A `TruncatedSeries` is exact modulo `t^(K+1)`. The identities:
//!
//! * [`carlitz_lhs`] / [`carlitz_rhs`] compare
//!   `B_{n,i}(t) / (1-t)^n` against
//!   `Σ_k (2k+1)^(n-i) (2k)^(i-1) t^k` for positive class indices and
//!   `Σ_k (2k-1)^(n-|i|) (2k)^(|i|-1) t^k` for negative ones. With the
//!   convention `0^0 = 1`, the positive sum starts at `k = 0`, which
//!   supplies the constant term `1` needed when `i = 1` and adds nothing
//!   for `i >= 2`; the negative sum starts at `k = 1`.
//!   [`carlitz_rhs_as_printed`] starts both sums at `k = 1`, which drops
//!   that constant term — it exists to demonstrate the discrepancy.
//! * [`brenti_lhs`] / [`brenti_rhs`] compare `B_n(t) / (1-t)^(n+1)`
//!   against `Σ_k (2k+1)^n t^k`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::eulerian::{typeb_des_poly_rec, typeb_poly};
use crate::poly::{binomial, IntPoly};

/// Coefficients `a_0..a_K` of a power series truncated after order `K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// Builds a series from exactly the coefficients `a_0..a_K`.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series carries at least a_0");
        TruncatedSeries { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        TruncatedSeries::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// A polynomial viewed as a series modulo `t^(K+1)`.
    pub fn from_poly(p: &IntPoly, truncation: usize) -> Self {
        TruncatedSeries {
            coeffs: (0..=truncation).map(|k| p.coeff(k)).collect(),
        }
    }

    /// Truncation order `K`.
    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Product modulo `t^(K+1)` where `K` is the smaller truncation.
    pub fn mul(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let k = self.truncation().min(rhs.truncation());
        let mut coeffs = vec![BigInt::zero(); k + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(k + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(k + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs }
    }

    /// `(1 - t)^(-n) = Σ_k C(n-1+k, k) t^k`, truncated.
    pub fn inv_one_minus_t_pow(n: usize, truncation: usize) -> TruncatedSeries {
        let coeffs = (0..=truncation as u64)
            .map(|k| binomial(n as u64 - 1 + k, k))
            .collect();
        TruncatedSeries { coeffs }
    }
}

fn validate_carlitz_args(n: usize, i: i64, truncation: usize) -> Result<()> {
    if n == 0 || i == 0 || i.unsigned_abs() as usize > n {
        return Err(Error::OutOfRange(format!("class index {i} not in ±1..=±{n}")));
    }
    if truncation == 0 {
        return Err(Error::OutOfRange("truncation order must be at least 1".into()));
    }
    Ok(())
}

/// `B_{n,i}(t) · (1-t)^(-n)` truncated after `t^truncation`, with
/// `B_{n,i}` computed by recurrence.
pub fn carlitz_lhs(n: usize, i: i64, truncation: usize) -> Result<TruncatedSeries> {
    validate_carlitz_args(n, i, truncation)?;
    let poly = TruncatedSeries::from_poly(&typeb_des_poly_rec(n, i)?, truncation);
    Ok(poly.mul(&TruncatedSeries::inv_one_minus_t_pow(n, truncation)))
}

/// `signum^exponent` with `0^0 = 1`, over integers that may be negative.
fn int_pow(base: i64, exponent: usize) -> BigInt {
    BigInt::from(base).pow(exponent as u32)
}

fn carlitz_rhs_from(n: usize, i: i64, truncation: usize, k_start: u64) -> TruncatedSeries {
    let abs_i = i.unsigned_abs() as usize;
    let coeffs = (0..=truncation as u64)
        .map(|k| {
            if k < k_start {
                return BigInt::zero();
            }
            let k = k as i64;
            if i > 0 {
                int_pow(2 * k + 1, n - abs_i) * int_pow(2 * k, abs_i - 1)
            } else {
                int_pow(2 * k - 1, n - abs_i) * int_pow(2 * k, abs_i - 1)
            }
        })
        .collect();
    TruncatedSeries { coeffs }
}

/// Closed-form side of the Carlitz-type identity: starts at `k = 0` for
/// positive `i` (under `0^0 = 1`) and at `k = 1` for negative `i`.
pub fn carlitz_rhs(n: usize, i: i64, truncation: usize) -> Result<TruncatedSeries> {
    validate_carlitz_args(n, i, truncation)?;
    let k_start = if i > 0 { 0 } else { 1 };
    Ok(carlitz_rhs_from(n, i, truncation, k_start))
}

/// The same sum started at `k = 1` for both signs. For `i = 1` this drops
/// the constant term `1` and the identity fails there, exactly.
pub fn carlitz_rhs_as_printed(n: usize, i: i64, truncation: usize) -> Result<TruncatedSeries> {
    validate_carlitz_args(n, i, truncation)?;
    Ok(carlitz_rhs_from(n, i, truncation, 1))
}

/// `B_n(t) · (1-t)^(-(n+1))` truncated, with `B_n` summed over every
/// signed first-letter class by recurrence.
pub fn brenti_lhs(n: usize, truncation: usize) -> Result<TruncatedSeries> {
    if n == 0 {
        return Err(Error::OutOfRange("Brenti identity needs n >= 1".into()));
    }
    let poly = TruncatedSeries::from_poly(&typeb_poly(n)?, truncation);
    Ok(poly.mul(&TruncatedSeries::inv_one_minus_t_pow(n + 1, truncation)))
}

/// `Σ_k (2k+1)^n t^k`, truncated.
pub fn brenti_rhs(n: usize, truncation: usize) -> Result<TruncatedSeries> {
    if n == 0 {
        return Err(Error::OutOfRange("Brenti identity needs n >= 1".into()));
    }
    let coeffs = (0..=truncation as u64)
        .map(|k| int_pow(2 * k as i64 + 1, n))
        .collect();
    Ok(TruncatedSeries::from_coeffs(coeffs))
}
