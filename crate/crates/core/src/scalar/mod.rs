//! Exact coefficient rings.
//!
//! Every computation in the crate is parameterised by a [`ScalarRing`]: a
//! context object that owns whatever tables the ring needs and performs the
//! arithmetic on plain element values. Two rings are provided:
//!
//! - [`CyclotomicField`]: ℚ(ζ) for a primitive `l`-th root of unity ζ, with
//!   elements stored as reduced residues modulo the `l`-th cyclotomic
//!   polynomial so that zero tests are exact.
//! - [`LaurentRing`]: ℚ[q, q⁻¹], where ζ is replaced by a formal parameter q.
//!   This is the "generic parameter" world: it is an integral domain, not a
//!   field, and only exact division is available.
//!
//! A run never mixes the two.

mod cyclotomic;
mod laurent;
pub(crate) mod poly;

use alloc::string::String;
use core::fmt::Debug;

use num_rational::BigRational;

pub use cyclotomic::{CyclotomicField, CyclotomicNumber, RootOfUnitySpec};
pub use laurent::{LaurentRing, LaurentScalar};

use crate::Error;

/// A commutative ring with a distinguished invertible element ζ.
pub trait ScalarRing: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: i64) -> Self::Elem;
    fn from_rational(&self, q: &BigRational) -> Self::Elem;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// ζ^e; negative exponents allowed.
    fn zeta_pow(&self, e: i64) -> Self::Elem;

    /// `a / b` when the quotient exists in the ring.
    fn div_exact(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;

    /// Multiplicative inverse, when `a` is a unit.
    fn inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Whether every nonzero element is invertible.
    fn is_field(&self) -> bool;

    /// Exact textual form ("z" for ζ in the cyclotomic field, "q" in the
    /// Laurent ring).
    fn render(&self, a: &Self::Elem) -> String;

    /// ζ^e · a. Rings override this when a shift is cheaper than a product.
    fn mul_zeta_pow(&self, e: i64, a: &Self::Elem) -> Self::Elem {
        self.mul(&self.zeta_pow(e), a)
    }

    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.add(a, b);
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut e: u32) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

/// [a]_ζ = 1 − ζ^{−2a}.
pub fn bracket<R: ScalarRing>(ring: &R, a: i64) -> R::Elem {
    ring.sub(&ring.one(), &ring.zeta_pow(-2 * a))
}

/// [a]_{ζ_i} = 1 − ζ^{−2·d_i·a} with ζ_i = ζ^{d_i}.
pub fn q_bracket_i<R: ScalarRing>(ring: &R, a: i64, d_i: i64) -> Result<R::Elem, Error> {
    if d_i < 1 {
        return Err(Error::InvalidSymmetrizer(d_i));
    }
    Ok(bracket(ring, d_i * a))
}

/// The quantum factorial [p]_i^! = ∏_{a=1}^p (ζ_i^a − ζ_i^{−a})/(ζ_i − ζ_i^{−1}).
pub fn q_factorial_i<R: ScalarRing>(ring: &R, p: u32, d_i: i64) -> Result<R::Elem, Error> {
    if d_i < 1 {
        return Err(Error::InvalidSymmetrizer(d_i));
    }
    let denom = ring.sub(&ring.zeta_pow(d_i), &ring.zeta_pow(-d_i));
    if p > 0 && ring.is_zero(&denom) {
        return Err(Error::DivisionByZero);
    }
    let mut acc = ring.one();
    for a in 1..=i64::from(p) {
        let num = ring.sub(&ring.zeta_pow(d_i * a), &ring.zeta_pow(-d_i * a));
        let factor = ring.div_exact(&num, &denom).ok_or(Error::DivisionByZero)?;
        acc = ring.mul(&acc, &factor);
    }
    Ok(acc)
}
