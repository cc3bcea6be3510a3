//! Palindromicity and gamma-vector expansions.
//!
//! A polynomial `f` is palindromic about the center `m/2` when its
//! coefficients satisfy `a_i = a_{m-i}` for `0 <= i <= m` (coefficients
//! beyond the degree read as zero). Such an `f` expands uniquely in the
//! basis `t^i (1+t)^(m-2i)`:
//!
//! ```text
//! f(t) = Σ_{i=0}^{⌊m/2⌋} γ_i t^i (1+t)^(m-2i)
//! ```
//!
//! and `f` is gamma-positive when every `γ_i` is nonnegative. Extraction
//! peels `γ_i` off the coefficient of `t^i` after subtracting the lower
//! basis terms; a nonzero final residual is a hard error.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// The exact expansion of a palindromic polynomial in the
/// `t^i (1+t)^(m-2i)` basis. `m` is twice the center of symmetry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaVector {
    m: usize,
    gammas: Vec<BigInt>,
}

impl GammaVector {
    /// Twice the center of symmetry of the source polynomial.
    pub fn m(&self) -> usize {
        self.m
    }

    /// The coefficients `γ_0, …, γ_{⌊m/2⌋}`.
    pub fn gammas(&self) -> &[BigInt] {
        &self.gammas
    }

    pub fn is_nonnegative(&self) -> bool {
        self.gammas.iter().all(|g| !g.is_negative())
    }

    /// Rebuilds `Σ γ_i t^i (1+t)^(m-2i)`; always equals the source
    /// polynomial exactly.
    pub fn reconstruct(&self) -> IntPoly {
        let mut acc = IntPoly::zero();
        for (i, g) in self.gammas.iter().enumerate() {
            let basis = IntPoly::one_plus_t_pow(self.m - 2 * i).mul_tpow(i);
            acc = &acc + &basis.scalar_mul(g);
        }
        acc
    }
}

/// Checks `a_i = a_{m-i}` for `0 <= i <= m`. Errors when `m` lies below
/// the degree, since no symmetry about `m/2` is then possible.
pub fn is_palindromic(f: &IntPoly, m: usize) -> Result<bool> {
    if let Some(degree) = f.degree() {
        if m < degree {
            return Err(Error::CenterBelowDegree { m, degree });
        }
    }
    Ok((0..=m / 2).all(|i| f.coeff(i) == f.coeff(m - i)))
}

/// Exact gamma expansion of `f` about the center `m/2`.
pub fn gamma_vector(f: &IntPoly, m: usize) -> Result<GammaVector> {
    if !is_palindromic(f, m)? {
        return Err(Error::NotPalindromic { m });
    }
    let mut residual = f.clone();
    let mut gammas = Vec::with_capacity(m / 2 + 1);
    for i in 0..=m / 2 {
        let g = residual.coeff(i);
        if !num_traits::Zero::is_zero(&g) {
            let basis = IntPoly::one_plus_t_pow(m - 2 * i).mul_tpow(i);
            residual = &residual - &basis.scalar_mul(&g);
        }
        gammas.push(g);
    }
    // palindromicity makes the expansion exact; anything left is a bug
    assert!(residual.is_zero(), "gamma extraction left a residual");
    Ok(GammaVector { m, gammas })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gammas_of(f: &IntPoly, m: usize) -> Vec<i64> {
        gamma_vector(f, m)
            .unwrap()
            .gammas()
            .iter()
            .map(|g| i64::try_from(g).unwrap())
            .collect()
    }

    #[test]
    fn basis_elements_expand_trivially() {
        let f = IntPoly::from_i64s(&[1, 2, 1]);
        assert!(is_palindromic(&f, 2).unwrap());
        assert_eq!(gammas_of(&f, 2), vec![1, 0]);

        let g = IntPoly::from_i64s(&[0, 4]);
        assert_eq!(gammas_of(&g, 2), vec![0, 4]);
    }

    #[test]
    fn non_palindromic_inputs_are_rejected() {
        let f = IntPoly::from_i64s(&[1, 2]);
        assert!(!is_palindromic(&f, 1).unwrap());
        assert!(matches!(gamma_vector(&f, 1), Err(Error::NotPalindromic { m: 1 })));
        assert!(matches!(
            is_palindromic(&IntPoly::from_i64s(&[1, 2, 1]), 1),
            Err(Error::CenterBelowDegree { m: 1, degree: 2 })
        ));
    }

    #[test]
    fn restricted_eulerian_pair_sum() {
        // 18t + 102t^2 + 102t^3 + 18t^4 about center 5/2
        let f = IntPoly::from_i64s(&[0, 18, 102, 102, 18]);
        assert!(is_palindromic(&f, 5).unwrap());
        let gv = gamma_vector(&f, 5).unwrap();
        assert_eq!(gv.gammas(), IntPoly::from_i64s(&[0, 18, 48]).coeffs());
        assert!(gv.is_nonnegative());
        assert_eq!(gv.reconstruct(), f);
    }

    #[test]
    fn zero_polynomial_expands_to_zero() {
        let gv = gamma_vector(&IntPoly::zero(), 4).unwrap();
        assert!(gv.is_nonnegative());
        assert_eq!(gv.reconstruct(), IntPoly::zero());
    }

    #[test]
    fn negative_gamma_is_reported_not_hidden() {
        // 1 + t + t^2 is palindromic about 1 but not gamma-positive
        let f = IntPoly::from_i64s(&[1, 1, 1]);
        let gv = gamma_vector(&f, 2).unwrap();
        assert_eq!(gv.gammas(), IntPoly::from_i64s(&[1, -1]).coeffs());
        assert!(!gv.is_nonnegative());
        assert_eq!(gv.reconstruct(), f);
    }
}
