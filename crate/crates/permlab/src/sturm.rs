//! Real-rootedness certificates via Sturm chains over exact integers.
//!
//! The chain is a primitive pseudo-remainder sequence: each step multiplies
//! by a positive power of the leading coefficient (flipping the remainder's
//! sign when the multiplier would be negative) and divides out the content.
//! Positive scalar factors never change sign variations, so the sequence
//! carries the same information as the rational Sturm chain without
//! coefficient blow-up.
//!
//! The number of distinct real roots of a squarefree polynomial is
//! `V(-∞) - V(+∞)`, the drop in sign variations between the two ends of
//! the real line; a polynomial is real-rooted exactly when its squarefree
//! part attains its full degree in distinct real roots.

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// Pseudo-remainder of `a` by `b`, scaled so that it equals a *positive*
/// rational multiple of the true remainder `a mod b`.
///
/// Each elimination step multiplies the running remainder by the leading
/// coefficient of `b` exactly once, so the accumulated multiplier is
/// `lead^iterations`; when that is negative the result is negated.
fn signed_pseudo_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.degree().expect("nonzero divisor");
    let lead = b.leading_coeff().unwrap().clone();
    let mut rem = a.clone();
    let mut iterations = 0u32;
    while let Some(dr) = rem.degree() {
        if dr < db {
            break;
        }
        let top = rem.coeff(dr);
        rem = &rem.scalar_mul(&lead) - &b.scalar_mul(&top).mul_tpow(dr - db);
        iterations += 1;
    }
    if lead.is_negative() && iterations % 2 == 1 {
        -&rem
    } else {
        rem
    }
}

/// Primitive polynomial gcd (positive leading coefficient).
fn poly_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut f = a.primitive_part();
    let mut g = b.primitive_part();
    while !g.is_zero() {
        if f.degree() < g.degree() {
            std::mem::swap(&mut f, &mut g);
            continue;
        }
        let r = signed_pseudo_rem(&f, &g).primitive_part();
        f = g;
        g = r;
    }
    normalize_sign(f)
}

fn normalize_sign(f: IntPoly) -> IntPoly {
    match f.leading_coeff() {
        Some(c) if c.is_negative() => -&f,
        _ => f,
    }
}

/// Squarefree part of a nonzero polynomial: `f / gcd(f, f')`, primitive.
fn squarefree_part(f: &IntPoly) -> IntPoly {
    let f = f.primitive_part();
    let derivative = f.derivative();
    if derivative.is_zero() {
        // degree zero
        return IntPoly::one();
    }
    let g = poly_gcd(&f, &derivative);
    f.exact_div(&g).primitive_part()
}

/// The Sturm chain of a squarefree polynomial: `p_0 = f`, `p_1 = f'`,
/// `p_{k+1} = -(p_{k-1} mod p_k)` up to positive scalar factors.
fn sturm_chain(f: &IntPoly) -> Vec<IntPoly> {
    let mut chain = vec![f.clone(), f.derivative()];
    loop {
        let len = chain.len();
        let (prev, last) = (&chain[len - 2], &chain[len - 1]);
        if last.is_zero() || prev.degree() < last.degree() {
            break;
        }
        let rem = signed_pseudo_rem(prev, last);
        if rem.is_zero() {
            break;
        }
        chain.push(-&rem.primitive_part());
    }
    chain
}

/// Sign of `p(±∞)`: the leading coefficient's sign, flipped at `-∞` for
/// odd degrees.
fn sign_at_infinity(p: &IntPoly, positive_end: bool) -> i8 {
    match p.leading_coeff() {
        None => 0,
        Some(c) => {
            let mut s: i8 = if c.is_negative() { -1 } else { 1 };
            if !positive_end && p.degree().unwrap() % 2 == 1 {
                s = -s;
            }
            s
        }
    }
}

fn sign_variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut variations = 0;
    let mut last: i8 = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            variations += 1;
        }
        last = s;
    }
    variations
}

/// Number of distinct real roots, counted without multiplicity.
pub fn distinct_real_roots(f: &IntPoly) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let trailing = f.valuation().unwrap();
    let stripped = f.div_tpow(trailing);
    let square_free = squarefree_part(&stripped);
    let from_chain = match square_free.degree() {
        None | Some(0) => 0,
        _ => {
            let chain = sturm_chain(&square_free);
            let at_minus = sign_variations(chain.iter().map(|p| sign_at_infinity(p, false)));
            let at_plus = sign_variations(chain.iter().map(|p| sign_at_infinity(p, true)));
            at_minus - at_plus
        }
    };
    // the stripped factor t^trailing contributes the root 0
    Ok(from_chain + usize::from(trailing > 0))
}

/// True when every complex root of `f` (with multiplicity) is real:
/// the squarefree part must realize its entire degree as distinct real
/// roots.
pub fn is_real_rooted(f: &IntPoly) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let trailing = f.valuation().unwrap();
    let stripped = f.div_tpow(trailing);
    let square_free = squarefree_part(&stripped);
    match square_free.degree() {
        None | Some(0) => Ok(true),
        Some(degree) => {
            let chain = sturm_chain(&square_free);
            let at_minus = sign_variations(chain.iter().map(|p| sign_at_infinity(p, false)));
            let at_plus = sign_variations(chain.iter().map(|p| sign_at_infinity(p, true)));
            Ok(at_minus - at_plus == degree)
        }
    }
}
