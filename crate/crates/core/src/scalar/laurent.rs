use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::cyclotomic::render_poly;
use super::poly;
use super::ScalarRing;

/// ℚ[q, q⁻¹] with ζ ↦ q.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LaurentRing;

/// Σ_k c_k q^{low+k}. Canonical: no zero coefficient at either end, and the
/// zero element has no coefficients and `low == 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentScalar {
    low: i64,
    coeffs: Vec<BigRational>,
}

impl LaurentScalar {
    pub fn new(low: i64, coeffs: Vec<BigRational>) -> Self {
        let mut s = Self { low, coeffs };
        s.normalize();
        s
    }

    pub fn from_ints(low: i64, coeffs: &[i64]) -> Self {
        Self::new(low, coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn monomial(e: i64) -> Self {
        Self { low: e, coeffs: vec![BigRational::one()] }
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero element).
    pub fn low_exponent(&self) -> i64 {
        self.low
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    fn normalize(&mut self) {
        poly::trim(&mut self.coeffs);
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.low = 0;
            return;
        }
        self.coeffs.drain(..lead);
        self.low += lead as i64;
    }

    fn zero() -> Self {
        Self { low: 0, coeffs: Vec::new() }
    }
}

fn combine(a: &LaurentScalar, b: &LaurentScalar, sign: bool) -> LaurentScalar {
    if a.coeffs.is_empty() {
        return if sign { b.clone() } else { LaurentRing.neg(b) };
    }
    if b.coeffs.is_empty() {
        return a.clone();
    }
    let low = a.low.min(b.low);
    let high = (a.low + a.coeffs.len() as i64).max(b.low + b.coeffs.len() as i64);
    let mut out = vec![BigRational::zero(); (high - low) as usize];
    for (k, c) in a.coeffs.iter().enumerate() {
        out[(a.low - low) as usize + k] += c;
    }
    for (k, c) in b.coeffs.iter().enumerate() {
        let slot = &mut out[(b.low - low) as usize + k];
        if sign {
            *slot += c;
        } else {
            *slot -= c;
        }
    }
    LaurentScalar::new(low, out)
}

impl ScalarRing for LaurentRing {
    type Elem = LaurentScalar;

    fn zero(&self) -> LaurentScalar {
        LaurentScalar::zero()
    }

    fn one(&self) -> LaurentScalar {
        LaurentScalar::monomial(0)
    }

    fn from_int(&self, n: i64) -> LaurentScalar {
        LaurentScalar::from_ints(0, &[n])
    }

    fn from_rational(&self, q: &BigRational) -> LaurentScalar {
        LaurentScalar::new(0, vec![q.clone()])
    }

    fn add(&self, a: &LaurentScalar, b: &LaurentScalar) -> LaurentScalar {
        combine(a, b, true)
    }

    fn sub(&self, a: &LaurentScalar, b: &LaurentScalar) -> LaurentScalar {
        combine(a, b, false)
    }

    fn neg(&self, a: &LaurentScalar) -> LaurentScalar {
        LaurentScalar { low: a.low, coeffs: a.coeffs.iter().map(|c| -c).collect() }
    }

    fn mul(&self, a: &LaurentScalar, b: &LaurentScalar) -> LaurentScalar {
        if a.coeffs.is_empty() || b.coeffs.is_empty() {
            return LaurentScalar::zero();
        }
        LaurentScalar::new(a.low + b.low, poly::mul(&a.coeffs, &b.coeffs))
    }

    fn is_zero(&self, a: &LaurentScalar) -> bool {
        a.coeffs.is_empty()
    }

    fn zeta_pow(&self, e: i64) -> LaurentScalar {
        LaurentScalar::monomial(e)
    }

    fn mul_zeta_pow(&self, e: i64, a: &LaurentScalar) -> LaurentScalar {
        if a.coeffs.is_empty() {
            return LaurentScalar::zero();
        }
        LaurentScalar { low: a.low + e, coeffs: a.coeffs.clone() }
    }

    fn div_exact(&self, a: &LaurentScalar, b: &LaurentScalar) -> Option<LaurentScalar> {
        if b.coeffs.is_empty() {
            return None;
        }
        if a.coeffs.is_empty() {
            return Some(LaurentScalar::zero());
        }
        // both polynomial parts have nonzero constant terms after normalisation
        let (q, r) = poly::divrem(&a.coeffs, &b.coeffs);
        if !r.is_empty() {
            return None;
        }
        Some(LaurentScalar::new(a.low - b.low, q))
    }

    fn inverse(&self, a: &LaurentScalar) -> Option<LaurentScalar> {
        // units are the monomials c·q^k
        if a.coeffs.len() != 1 {
            return None;
        }
        Some(LaurentScalar { low: -a.low, coeffs: vec![BigRational::one() / &a.coeffs[0]] })
    }

    fn is_field(&self) -> bool {
        false
    }

    fn render(&self, a: &LaurentScalar) -> String {
        render_poly(a.coeffs.iter().enumerate().map(|(k, c)| (a.low + k as i64, c)), "q")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let a = LaurentScalar::from_ints(-2, &[0, 0, 3, 0]);
        assert_eq!(a, LaurentScalar::from_ints(0, &[3]));
        assert_eq!(LaurentScalar::from_ints(4, &[0, 0]), LaurentRing.zero());
        assert_eq!(a.low_exponent(), 0);
    }

    #[test]
    fn arithmetic_and_rendering() {
        let g = LaurentRing;
        // 1 - q^{-2}
        let d = g.sub(&g.one(), &g.zeta_pow(-2));
        assert_eq!(g.render(&d), "-q^-2 + 1");
        let p = g.mul(&d, &g.add(&g.one(), &g.zeta_pow(-2)));
        assert_eq!(p, g.sub(&g.one(), &g.zeta_pow(-4)));
        assert_eq!(g.div_exact(&p, &d), Some(g.add(&g.one(), &g.zeta_pow(-2))));
        assert_eq!(g.div_exact(&g.one(), &d), None);
        assert_eq!(g.inverse(&g.zeta_pow(3)), Some(g.zeta_pow(-3)));
        assert_eq!(g.inverse(&d), None);
    }
}
