//! Exact arithmetic in a real quadratic field Q(sqrt(d)).
//!
//! A [`Surd`] is `a + b*sqrt(d)` with rational `a`, `b` and a non-square
//! integer `d >= 2`.  The invariant `b != 0` is maintained so every `Surd`
//! is irrational; values that collapse to rationals are handled one level
//! up by [`crate::real::Real`].  All comparisons are exact: the sign of
//! `a + b*sqrt(d)` is decided by comparing `a^2` with `b^2 d`.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::util::rational_to_f64;

/// An irrational element `a + b*sqrt(d)` of a real quadratic field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Surd {
    a: BigRational,
    b: BigRational,
    d: BigUint,
}

/// True iff `n` is a perfect square.
pub fn is_perfect_square(n: &BigUint) -> bool {
    let r = n.sqrt();
    &r * &r == *n
}

impl Surd {
    /// Build `a + b*sqrt(d)`.  Fails when `b = 0` or `d` is a perfect square
    /// (either case makes the value rational, which this type must not hold).
    pub fn new(a: BigRational, b: BigRational, d: BigUint) -> Result<Self> {
        if b.is_zero() {
            return Err(Error::Construction("surd with b = 0 is rational".into()));
        }
        if d < BigUint::from(2u8) || is_perfect_square(&d) {
            return Err(Error::Construction(format!("discriminant {d} is a perfect square")));
        }
        Ok(Surd { a, b, d })
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn radical_part(&self) -> &BigRational {
        &self.b
    }

    pub fn discriminant(&self) -> &BigUint {
        &self.d
    }

    /// `sqrt(d)` itself.
    pub fn sqrt_of(d: u64) -> Result<Self> {
        Surd::new(BigRational::zero(), BigRational::one(), BigUint::from(d))
    }

    fn check_field(&self, other: &Surd) -> Result<()> {
        if self.d == other.d {
            Ok(())
        } else {
            Err(Error::MixedFields { left: self.d.to_string(), right: other.d.to_string() })
        }
    }

    /// Exact sign of the value: -1, 0 never (irrational), +1.
    pub fn signum(&self) -> i32 {
        let sa = self.a.signum();
        let sb = self.b.signum();
        if sa.is_zero() {
            return if sb.is_positive() { 1 } else { -1 };
        }
        if sa == sb {
            return if sa.is_positive() { 1 } else { -1 };
        }
        // a and b have opposite signs: compare a^2 with b^2 d.
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * BigRational::from_integer(BigInt::from(self.d.clone()));
        match a2.cmp(&b2d) {
            Ordering::Greater => {
                if sa.is_positive() {
                    1
                } else {
                    -1
                }
            }
            Ordering::Less => {
                if sb.is_positive() {
                    1
                } else {
                    -1
                }
            }
            // a^2 = b^2 d would make sqrt(d) rational.
            Ordering::Equal => unreachable!("non-square discriminant"),
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    /// Exact comparison against a rational.
    pub fn cmp_rational(&self, q: &BigRational) -> Ordering {
        let diff = Surd { a: &self.a - q, b: self.b.clone(), d: self.d.clone() };
        if diff.signum() > 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    /// Exact comparison within the same field.
    pub fn cmp_same_field(&self, other: &Surd) -> Result<Ordering> {
        self.check_field(other)?;
        let a = &self.a - &other.a;
        let b = &self.b - &other.b;
        if b.is_zero() {
            return Ok(a.cmp(&BigRational::zero()));
        }
        let diff = Surd { a, b, d: self.d.clone() };
        Ok(if diff.signum() > 0 { Ordering::Greater } else { Ordering::Less })
    }

    pub fn neg(&self) -> Surd {
        Surd { a: -self.a.clone(), b: -self.b.clone(), d: self.d.clone() }
    }

    pub fn add_rational(&self, q: &BigRational) -> Surd {
        Surd { a: &self.a + q, b: self.b.clone(), d: self.d.clone() }
    }

    pub fn mul_rational(&self, q: &BigRational) -> Option<Surd> {
        if q.is_zero() {
            return None;
        }
        Some(Surd { a: &self.a * q, b: &self.b * q, d: self.d.clone() })
    }

    /// Sum of two surds; `Err(q)` in the inner result when the radical parts
    /// cancel and the value collapses to the rational `q`.
    pub fn add(&self, other: &Surd) -> Result<std::result::Result<Surd, BigRational>> {
        self.check_field(other)?;
        let a = &self.a + &other.a;
        let b = &self.b + &other.b;
        if b.is_zero() {
            Ok(Err(a))
        } else {
            Ok(Ok(Surd { a, b, d: self.d.clone() }))
        }
    }

    /// Product; `None` with the rational value when the radical cancels.
    pub fn mul(&self, other: &Surd) -> Result<std::result::Result<Surd, BigRational>> {
        self.check_field(other)?;
        let d = BigRational::from_integer(BigInt::from(self.d.clone()));
        let a = &self.a * &other.a + &self.b * &other.b * &d;
        let b = &self.a * &other.b + &self.b * &other.a;
        if b.is_zero() {
            Ok(Err(a))
        } else {
            Ok(Ok(Surd { a, b, d: self.d.clone() }))
        }
    }

    /// Multiplicative inverse (the value is irrational, hence nonzero).
    pub fn recip(&self) -> Surd {
        // 1/(a + b sqrt d) = (a - b sqrt d) / (a^2 - b^2 d)
        let d = BigRational::from_integer(BigInt::from(self.d.clone()));
        let norm = &self.a * &self.a - &self.b * &self.b * &d;
        debug_assert!(!norm.is_zero());
        Surd { a: &self.a / &norm, b: -(&self.b / &norm), d: self.d.clone() }
    }

    /// Rational enclosure `lo <= value < hi` with `hi - lo < 2^-bits`.
    pub fn enclosure(&self, bits: u32) -> (BigRational, BigRational) {
        // sqrt(d) in [s/2^k, (s+1)/2^k] with s = isqrt(d * 4^k).
        // Width of the surd enclosure is |b| / 2^k, so pick k accordingly.
        let extra = {
            let mag = self.b.abs();
            let num_bits = mag.numer().magnitude().bits() as i64;
            let den_bits = mag.denom().magnitude().bits() as i64;
            (num_bits - den_bits + 2).max(0) as u32
        };
        let k = bits + extra;
        let scaled = &self.d << (2 * k as u64);
        let s = scaled.sqrt();
        let pow = BigInt::from(1u8) << k;
        let lo_sqrt = BigRational::new(BigInt::from(s.clone()), pow.clone());
        let hi_sqrt = BigRational::new(BigInt::from(s + 1u8), pow);
        let (lo, hi) = if self.b.is_positive() {
            (&self.a + &self.b * lo_sqrt, &self.a + &self.b * hi_sqrt)
        } else {
            (&self.a + &self.b * hi_sqrt, &self.a + &self.b * lo_sqrt)
        };
        debug_assert!(lo < hi);
        (lo, hi)
    }

    /// Exact floor.
    pub fn floor(&self) -> BigInt {
        let mut bits = 32;
        loop {
            let (lo, hi) = self.enclosure(bits);
            let fl = lo.floor().to_integer();
            let fh = hi.floor().to_integer();
            if fl == fh {
                return fl;
            }
            // The value is irrational so it cannot sit on an integer; a few
            // doublings always separate the enclosure from the integer.
            bits *= 2;
            assert!(bits <= 1 << 20, "floor of surd failed to converge");
        }
    }

    /// Fractional part, always in (0, 1) and still irrational.
    pub fn frac(&self) -> Surd {
        let f = self.floor();
        self.add_rational(&BigRational::from_integer(-f))
    }

    pub fn abs(&self) -> Surd {
        if self.is_positive() {
            self.clone()
        } else {
            self.neg()
        }
    }

    pub fn to_f64(&self) -> f64 {
        let d = self.d.to_f64().unwrap_or(f64::MAX);
        rational_to_f64(&self.a) + rational_to_f64(&self.b) * d.sqrt()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn golden() -> Surd {
        // (sqrt(5) - 1) / 2
        Surd::new(rat(-1, 2), rat(1, 2), BigUint::from(5u8)).unwrap()
    }

    #[test]
    fn rejects_square_discriminant() {
        assert!(Surd::new(rat(0, 1), rat(1, 1), BigUint::from(9u8)).is_err());
        assert!(Surd::new(rat(1, 1), rat(0, 1), BigUint::from(2u8)).is_err());
    }

    #[test]
    fn golden_mean_signs_and_floor() {
        let g = golden();
        assert_eq!(g.signum(), 1);
        assert_eq!(g.floor(), BigInt::from(0));
        assert_eq!(g.add_rational(&rat(-1, 1)).signum(), -1);
        // 0.618... compared against rationals on both sides
        assert_eq!(g.cmp_rational(&rat(1, 2)), Ordering::Greater);
        assert_eq!(g.cmp_rational(&rat(2, 3)), Ordering::Less);
    }

    #[test]
    fn golden_mean_satisfies_its_equation() {
        // 1/g = 1 + g
        let g = golden();
        let r = g.recip();
        let expected = g.add_rational(&rat(1, 1));
        assert_eq!(r.cmp_same_field(&expected).unwrap(), Ordering::Equal);
    }

    #[test]
    fn product_collapses_to_rational() {
        let s = Surd::sqrt_of(2).unwrap();
        match s.mul(&s).unwrap() {
            Err(q) => assert_eq!(q, rat(2, 1)),
            Ok(_) => panic!("sqrt2 * sqrt2 must collapse"),
        }
    }

    #[test]
    fn mixed_fields_rejected() {
        let s2 = Surd::sqrt_of(2).unwrap();
        let s3 = Surd::sqrt_of(3).unwrap();
        assert!(matches!(s2.cmp_same_field(&s3), Err(Error::MixedFields { .. })));
    }

    #[test]
    fn enclosure_brackets_value() {
        let g = golden();
        let (lo, hi) = g.enclosure(80);
        let width = &hi - &lo;
        assert!(width < rat(1, 1 << 20) * rat(1, 1 << 60));
        let v = g.to_f64();
        assert!(rational_to_f64(&lo) <= v && v <= rational_to_f64(&hi));
        // exact check: g - lo > 0 and hi - g > 0
        assert_eq!(g.add_rational(&-lo).signum(), 1);
        assert_eq!(g.add_rational(&-hi).signum(), -1);
    }

    #[test]
    fn frac_reduces_into_unit_interval() {
        let s = Surd::sqrt_of(2).unwrap(); // 1.414...
        let f = s.frac();
        assert_eq!(f.floor(), BigInt::from(0));
        assert!((f.to_f64() - 0.41421356237).abs() < 1e-9);
    }
}
