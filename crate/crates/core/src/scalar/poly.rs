//! Dense univariate polynomials over ℚ, lowest degree first.
//!
//! Only the handful of operations the cyclotomic and Laurent rings need:
//! multiplication, Euclidean division and the extended gcd used for inverses.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) type Poly = Vec<BigRational>;

pub(crate) fn trim(p: &mut Poly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn from_ints(c: &[BigInt]) -> Poly {
    c.iter().map(|x| BigRational::from_integer(x.clone())).collect()
}

pub(crate) fn mul(a: &[BigRational], b: &[BigRational]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn sub(a: &[BigRational], b: &[BigRational]) -> Poly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let x = a.get(k).cloned().unwrap_or_else(BigRational::zero);
        let y = b.get(k).cloned().unwrap_or_else(BigRational::zero);
        out.push(x - y);
    }
    trim(&mut out);
    out
}

/// Quotient and remainder. `b` must be nonzero and trimmed.
pub(crate) fn divrem(a: &[BigRational], b: &[BigRational]) -> (Poly, Poly) {
    debug_assert!(!b.is_empty());
    let mut rem: Poly = a.to_vec();
    trim(&mut rem);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead = b.last().unwrap();
    let mut quot = vec![BigRational::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() && !rem.is_empty() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap() / lead;
        for (k, bk) in b.iter().enumerate() {
            if !bk.is_zero() {
                rem[shift + k] -= &c * bk;
            }
        }
        quot[shift] = c;
        // the leading coefficient is now exactly zero
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

/// Inverse of `a` modulo `m`, or `None` when they share a factor.
pub(crate) fn inverse_mod(a: &[BigRational], m: &[BigRational]) -> Option<Poly> {
    let mut r0: Poly = m.to_vec();
    let mut r1: Poly = a.to_vec();
    trim(&mut r1);
    if r1.is_empty() {
        return None;
    }
    let mut s0: Poly = Vec::new();
    let mut s1: Poly = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let s2 = sub(&s0, &mul(&q, &s1));
        r0 = core::mem::replace(&mut r1, r);
        s0 = core::mem::replace(&mut s1, s2);
    }
    if r0.len() != 1 {
        return None;
    }
    let c = &r0[0];
    Some(s0.iter().map(|x| x / c).collect())
}

/// Integer coefficients of the `l`-th cyclotomic polynomial.
pub(crate) fn cyclotomic_polynomial(l: u32) -> Vec<BigInt> {
    // x^l - 1 divided by Φ_d for every proper divisor d
    let mut num: Poly = vec![BigRational::zero(); l as usize + 1];
    num[0] = -BigRational::one();
    num[l as usize] = BigRational::one();
    for d in 1..l {
        if l.is_multiple_of(d) {
            let phi_d = from_ints(&cyclotomic_polynomial(d));
            let (q, r) = divrem(&num, &phi_d);
            debug_assert!(r.is_empty());
            num = q;
        }
    }
    num.into_iter().map(|c| c.to_integer()).collect()
}
