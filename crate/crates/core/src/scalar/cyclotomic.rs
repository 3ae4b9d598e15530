use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly;
use super::ScalarRing;
use crate::Error;

/// The order of the root of unity a run is parameterised by.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RootOfUnitySpec {
    pub l: u32,
}

impl RootOfUnitySpec {
    pub fn new(l: u32) -> Result<Self, Error> {
        if l == 0 {
            return Err(Error::InvalidRootOfUnity { l, reason: "l must be positive" });
        }
        Ok(Self { l })
    }

    /// The small quantum group features need l > 3 with gcd(l, 6) = 1.
    pub fn require_small_quantum(&self) -> Result<(), Error> {
        if self.l <= 3 || self.l.is_multiple_of(2) || self.l.is_multiple_of(3) {
            return Err(Error::InvalidRootOfUnity {
                l: self.l,
                reason: "requires l > 3 prime to 2 and 3",
            });
        }
        Ok(())
    }
}

/// ℚ(ζ) for a primitive `l`-th root of unity ζ.
///
/// Cheap to clone; the reduction tables are shared.
#[derive(Clone)]
pub struct CyclotomicField {
    inner: Arc<Inner>,
}

struct Inner {
    l: u32,
    degree: usize,
    /// Φ_l, monic, `degree + 1` coefficients.
    modulus: Vec<BigRational>,
    /// ζ^k for k in 0..l.
    powers: Vec<CyclotomicNumber>,
}

/// A reduced residue modulo Φ_l: exactly φ(l) rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicNumber {
    coeffs: Vec<BigRational>,
}

impl CyclotomicNumber {
    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }
}

impl core::fmt::Debug for CyclotomicField {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "CyclotomicField(l={})", self.inner.l)
    }
}

impl CyclotomicField {
    pub fn new(l: u32) -> Result<Self, Error> {
        let spec = RootOfUnitySpec::new(l)?;
        Ok(Self::from_spec(spec))
    }

    pub fn from_spec(spec: RootOfUnitySpec) -> Self {
        let l = spec.l;
        let modulus = poly::from_ints(&poly::cyclotomic_polynomial(l));
        let degree = modulus.len() - 1;
        let mut inner = Inner { l, degree, modulus, powers: Vec::with_capacity(l as usize) };
        let mut cur = CyclotomicNumber { coeffs: vec![BigRational::zero(); degree] };
        cur.coeffs[0] = BigRational::one();
        for _ in 0..l {
            let next = inner.shift(&cur);
            inner.powers.push(core::mem::replace(&mut cur, next));
        }
        Self { inner: Arc::new(inner) }
    }

    pub fn order(&self) -> u32 {
        self.inner.l
    }

    pub fn spec(&self) -> RootOfUnitySpec {
        RootOfUnitySpec { l: self.inner.l }
    }

    /// φ(l), the dimension over ℚ.
    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    /// Reduces an arbitrary polynomial in ζ (lowest degree first).
    pub fn from_coefficients(&self, coeffs: Vec<BigRational>) -> Result<CyclotomicNumber, Error> {
        Ok(self.inner.reduce(coeffs))
    }
}

impl Inner {
    fn reduce(&self, mut p: Vec<BigRational>) -> CyclotomicNumber {
        let d = self.degree;
        while p.len() > d {
            let c = p.pop().unwrap();
            if c.is_zero() {
                continue;
            }
            let shift = p.len() - d;
            for (t, m) in self.modulus[..d].iter().enumerate() {
                if !m.is_zero() {
                    p[shift + t] -= &c * m;
                }
            }
        }
        p.resize(d, BigRational::zero());
        CyclotomicNumber { coeffs: p }
    }

    /// Multiplication by ζ.
    fn shift(&self, a: &CyclotomicNumber) -> CyclotomicNumber {
        let d = self.degree;
        let mut out = Vec::with_capacity(d);
        out.push(BigRational::zero());
        out.extend(a.coeffs[..d - 1].iter().cloned());
        let top = &a.coeffs[d - 1];
        if !top.is_zero() {
            for (t, m) in self.modulus[..d].iter().enumerate() {
                if !m.is_zero() {
                    out[t] -= top * m;
                }
            }
        }
        CyclotomicNumber { coeffs: out }
    }

    fn exp_mod(&self, e: i64) -> usize {
        e.rem_euclid(i64::from(self.l)) as usize
    }
}

impl ScalarRing for CyclotomicField {
    type Elem = CyclotomicNumber;

    fn zero(&self) -> CyclotomicNumber {
        CyclotomicNumber { coeffs: vec![BigRational::zero(); self.inner.degree] }
    }

    fn one(&self) -> CyclotomicNumber {
        self.inner.powers[0].clone()
    }

    fn from_int(&self, n: i64) -> CyclotomicNumber {
        self.from_rational(&BigRational::from_integer(n.into()))
    }

    fn from_rational(&self, q: &BigRational) -> CyclotomicNumber {
        let mut z = self.zero();
        z.coeffs[0] = q.clone();
        z
    }

    fn add(&self, a: &CyclotomicNumber, b: &CyclotomicNumber) -> CyclotomicNumber {
        CyclotomicNumber { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect() }
    }

    fn sub(&self, a: &CyclotomicNumber, b: &CyclotomicNumber) -> CyclotomicNumber {
        CyclotomicNumber { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect() }
    }

    fn neg(&self, a: &CyclotomicNumber) -> CyclotomicNumber {
        CyclotomicNumber { coeffs: a.coeffs.iter().map(|x| -x).collect() }
    }

    fn mul(&self, a: &CyclotomicNumber, b: &CyclotomicNumber) -> CyclotomicNumber {
        self.inner.reduce(poly::mul(&a.coeffs, &b.coeffs))
    }

    fn is_zero(&self, a: &CyclotomicNumber) -> bool {
        a.coeffs.iter().all(Zero::is_zero)
    }

    fn zeta_pow(&self, e: i64) -> CyclotomicNumber {
        self.inner.powers[self.inner.exp_mod(e)].clone()
    }

    fn mul_zeta_pow(&self, e: i64, a: &CyclotomicNumber) -> CyclotomicNumber {
        let k = self.inner.exp_mod(e);
        if k == 0 {
            return a.clone();
        }
        if self.is_zero(a) {
            return a.clone();
        }
        // a rational constant times ζ^k is read off the table
        if a.coeffs[1..].iter().all(Zero::is_zero) {
            let c = &a.coeffs[0];
            let p = &self.inner.powers[k];
            return CyclotomicNumber { coeffs: p.coeffs.iter().map(|x| x * c).collect() };
        }
        let mut cur = self.inner.shift(a);
        for _ in 1..k {
            cur = self.inner.shift(&cur);
        }
        cur
    }

    fn add_assign(&self, a: &mut CyclotomicNumber, b: &CyclotomicNumber) {
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            if !y.is_zero() {
                *x += y;
            }
        }
    }

    fn div_exact(&self, a: &CyclotomicNumber, b: &CyclotomicNumber) -> Option<CyclotomicNumber> {
        let inv = self.inverse(b)?;
        Some(self.mul(a, &inv))
    }

    fn inverse(&self, a: &CyclotomicNumber) -> Option<CyclotomicNumber> {
        if self.is_zero(a) {
            return None;
        }
        let mut p = a.coeffs.clone();
        poly::trim(&mut p);
        if p.len() == 1 {
            return Some(self.from_rational(&(BigRational::one() / &p[0])));
        }
        let inv = poly::inverse_mod(&p, &self.inner.modulus)?;
        Some(self.inner.reduce(inv))
    }

    fn is_field(&self) -> bool {
        true
    }

    fn render(&self, a: &CyclotomicNumber) -> String {
        render_poly(a.coeffs.iter().enumerate().map(|(k, c)| (k as i64, c)), "z")
    }
}

/// Writes `c0 + c1*x + ...`, skipping zero coefficients; `"0"` when empty.
pub(super) fn render_poly<'a>(
    terms: impl Iterator<Item = (i64, &'a BigRational)>,
    var: &str,
) -> String {
    let mut out = String::new();
    for (e, c) in terms {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let unit = mag.is_one();
        if e == 0 {
            let _ = write!(out, "{mag}");
            continue;
        }
        if !unit {
            let _ = write!(out, "{mag}*");
        }
        if e == 1 {
            out.push_str(var);
        } else {
            let _ = write!(out, "{var}^{e}");
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_validation() {
        assert!(RootOfUnitySpec::new(0).is_err());
        assert!(RootOfUnitySpec::new(5).unwrap().require_small_quantum().is_ok());
        assert!(RootOfUnitySpec::new(7).unwrap().require_small_quantum().is_ok());
        for bad in [1, 2, 3, 4, 6, 9, 10] {
            assert!(RootOfUnitySpec::new(bad).unwrap().require_small_quantum().is_err());
        }
    }

    #[test]
    fn degrees_and_rendering() {
        let k = CyclotomicField::new(5).unwrap();
        assert_eq!(k.degree(), 4);
        assert_eq!(CyclotomicField::new(12).unwrap().degree(), 4);
        assert_eq!(CyclotomicField::new(1).unwrap().degree(), 1);
        // ζ^4 = -1 - ζ - ζ^2 - ζ^3 in ℚ(ζ_5)
        assert_eq!(k.render(&k.zeta_pow(4)), "-1 - z - z^2 - z^3");
        let half = BigRational::new(1.into(), 2.into());
        let x = k.add(&k.from_rational(&half), &k.mul_zeta_pow(2, &k.from_int(-3)));
        assert_eq!(k.render(&x), "1/2 - 3*z^2");
        assert_eq!(k.render(&k.zero()), "0");
    }

    #[test]
    fn trivial_orders() {
        let k1 = CyclotomicField::new(1).unwrap();
        assert_eq!(k1.zeta_pow(3), k1.one());
        let k2 = CyclotomicField::new(2).unwrap();
        assert_eq!(k2.zeta_pow(1), k2.from_int(-1));
    }
}
