use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// The coefficient ring a matrix lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "p")]
pub enum ScalarDomain {
    Rational,
    PrimeField(u32),
    Polynomial,
}

/// Exact commutative ring elements with decidable equality.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    /// The multiplicative inverse, if this element is a unit.
    fn unit_inverse(&self) -> Option<Self>;
    fn from_i64(v: i64) -> Self;
    fn domain() -> ScalarDomain;
}

impl Scalar for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn unit_inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn domain() -> ScalarDomain {
        ScalarDomain::Rational
    }
}

/// Formats a rational as `a` or `a/b`.
pub(crate) fn rational_text(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn rational_is_negative(r: &BigRational) -> bool {
    r.is_negative()
}

const fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of `F_P`. `P` must be a prime below 2³¹; this is checked at compile time.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u32>(u32);

impl<const P: u32> Fp<P> {
    const VALID: () = assert!(is_prime(P) && P < (1 << 31), "modulus must be a prime below 2^31");

    pub fn new(v: u64) -> Self {
        #[allow(clippy::let_unit_value)]
        let () = Self::VALID;
        Fp((v % P as u64) as u32)
    }

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Self::new(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u32> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> Add for Fp<P> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.0 as u64 + o.0 as u64)
    }
}

impl<const P: u32> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.0 as u64 + P as u64 - o.0 as u64)
    }
}

impl<const P: u32> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self::new(self.0 as u64 * o.0 as u64)
    }
}

impl<const P: u32> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(P as u64 - self.0 as u64)
    }
}

impl<const P: u32> Scalar for Fp<P> {
    fn zero() -> Self {
        Self::new(0)
    }
    fn one() -> Self {
        Self::new(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn unit_inverse(&self) -> Option<Self> {
        (self.0 != 0).then(|| self.pow(P as u64 - 2))
    }
    fn from_i64(v: i64) -> Self {
        Self::new(v.rem_euclid(P as i64) as u64)
    }
    fn domain() -> ScalarDomain {
        ScalarDomain::PrimeField(P)
    }
}

/// Finite fields whose elements can be listed.
pub trait FiniteField: Scalar + Copy + Eq + std::hash::Hash + Ord {
    const ORDER: u32;
    /// The `i`-th element, `0 ≤ i < ORDER`.
    fn element(i: u32) -> Self;
    fn index(self) -> u32;
}

impl<const P: u32> FiniteField for Fp<P> {
    const ORDER: u32 = P;
    fn element(i: u32) -> Self {
        Self::new(i as u64)
    }
    fn index(self) -> u32 {
        self.0
    }
}

/// Field sizes the command line and the oracle accept.
pub const SUPPORTED_PRIMES: [u32; 6] = [2, 3, 5, 7, 11, 13];

/// Calls `$body` with `$F` bound to `Fp<q>` for a runtime prime `q`.
#[macro_export]
macro_rules! with_prime_field {
    ($q:expr, $F:ident => $body:expr) => {
        match $q {
            2 => { type $F = $crate::exactla::Fp<2>; Ok($body) }
            3 => { type $F = $crate::exactla::Fp<3>; Ok($body) }
            5 => { type $F = $crate::exactla::Fp<5>; Ok($body) }
            7 => { type $F = $crate::exactla::Fp<7>; Ok($body) }
            11 => { type $F = $crate::exactla::Fp<11>; Ok($body) }
            13 => { type $F = $crate::exactla::Fp<13>; Ok($body) }
            other => Err($crate::error::Error::InvalidField(other)),
        }
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        type F = Fp<7>;
        let a = F::new(5);
        let b = F::new(4);
        assert_eq!((a + b).value(), 2);
        assert_eq!((a - b).value(), 1);
        assert_eq!((b - a).value(), 6);
        assert_eq!((a * b).value(), 6);
        assert_eq!((-a).value(), 2);
        for i in 1..7 {
            let x = F::new(i);
            assert!((x * x.unit_inverse().unwrap()).is_one());
        }
        assert_eq!(F::zero().unit_inverse(), None);
        assert_eq!(F::from_i64(-1).value(), 6);
    }

    #[test]
    fn rationals() {
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(half.unit_inverse().unwrap(), BigRational::from_i64(2));
        assert_eq!(rational_text(&half), "1/2");
        assert_eq!(rational_text(&BigRational::from_i64(-3)), "-3");
    }

    #[test]
    fn runtime_dispatch() {
        let r: crate::error::Result<u32> = with_prime_field!(5u32, F => F::ORDER);
        assert_eq!(r.unwrap(), 5);
        let r: crate::error::Result<u32> = with_prime_field!(4u32, F => F::ORDER);
        assert!(r.is_err());
    }
}
