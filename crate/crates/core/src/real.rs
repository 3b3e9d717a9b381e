//! Exact-or-enclosed real numbers.
//!
//! [`Real`] carries a number in one of three representations:
//!
//! * `Rational` — exact `p/q`;
//! * `Quadratic` — exact quadratic irrational `a + b*sqrt(d)` ([`Surd`]);
//! * `Enclosure` — a rigorous rational interval plus a refinement hook
//!   that can produce an enclosure of width `< 2^-n` for any `n`.
//!
//! Comparisons between exact kinds are decided symbolically.  As soon as an
//! enclosure is involved the comparison refines with doubling precision
//! (width `2^-32`, `2^-64`, ...) up to a hard cap, after which
//! [`Error::InsufficientPrecision`] is raised.  Equality of an enclosed
//! value with anything is never certified — boundary cases are errors by
//! design, not coin flips.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::surd::Surd;
use crate::util::{format_rational, rational_to_f64};

/// First refinement width is `2^-ENCLOSURE_START_BITS`.
pub const ENCLOSURE_START_BITS: u32 = 32;
/// Refinement stops (and errors) once the requested width reaches
/// `2^-ENCLOSURE_CAP_BITS`.
pub const ENCLOSURE_CAP_BITS: u32 = 4096;

/// Refinement hook: produce `(lo, hi)` with `hi - lo < 2^-bits`, never
/// excluding the represented value.
pub type RefineFn = Arc<dyn Fn(u32) -> Result<(BigRational, BigRational)> + Send + Sync>;

/// A rigorous interval with its refinement procedure.
#[derive(Clone)]
pub struct Enclosure {
    lo: BigRational,
    hi: BigRational,
    refine: RefineFn,
}

impl Enclosure {
    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }
}

impl fmt::Debug for Enclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Enclosure[{}, {}]", self.lo, self.hi)
    }
}

/// A real number, exact where possible.
#[derive(Debug, Clone)]
pub enum Real {
    Rational(BigRational),
    Quadratic(Surd),
    Enclosure(Enclosure),
}

impl From<BigRational> for Real {
    fn from(q: BigRational) -> Self {
        Real::Rational(q)
    }
}

impl From<Surd> for Real {
    fn from(s: Surd) -> Self {
        Real::Quadratic(s)
    }
}

impl Real {
    pub fn zero() -> Real {
        Real::Rational(BigRational::zero())
    }

    pub fn one() -> Real {
        Real::Rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Real {
        Real::Rational(BigRational::from_integer(n.into()))
    }

    pub fn from_ratio(num: i64, den: i64) -> Real {
        Real::Rational(BigRational::new(num.into(), den.into()))
    }

    /// The golden mean `(sqrt(5) - 1) / 2`.
    pub fn golden_mean() -> Real {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        Real::Quadratic(Surd::new(-half.clone(), half, 5u8.into()).unwrap())
    }

    /// Wrap a user-supplied refinement procedure.
    pub fn from_refine_fn(refine: RefineFn) -> Result<Real> {
        let (lo, hi) = refine(ENCLOSURE_START_BITS)?;
        if lo >= hi {
            return Err(Error::Construction("enclosure with lo >= hi".into()));
        }
        Ok(Real::Enclosure(Enclosure { lo, hi, refine }))
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, Real::Enclosure(_))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Real::Rational(q) => Some(q),
            _ => None,
        }
    }

    /// Rational enclosure of width `< 2^-bits` (exact kinds may return a
    /// degenerate interval).
    pub fn enclosure(&self, bits: u32) -> Result<(BigRational, BigRational)> {
        match self {
            Real::Rational(q) => Ok((q.clone(), q.clone())),
            Real::Quadratic(s) => Ok(s.enclosure(bits)),
            Real::Enclosure(e) => {
                if bits > ENCLOSURE_CAP_BITS {
                    return Err(Error::InsufficientPrecision { max_bits: ENCLOSURE_CAP_BITS });
                }
                (e.refine)(bits)
            }
        }
    }

    /// Tighten a stored enclosure to width `< 2^-bits`; exact values are
    /// returned unchanged.
    pub fn refined(&self, bits: u32) -> Result<Real> {
        match self {
            Real::Enclosure(e) => {
                let (lo, hi) = self.enclosure(bits)?;
                Ok(Real::Enclosure(Enclosure { lo, hi, refine: e.refine.clone() }))
            }
            _ => Ok(self.clone()),
        }
    }

    /// Exact comparison, refining enclosures as needed.
    pub fn cmp_real(&self, other: &Real) -> Result<Ordering> {
        use Real::*;
        match (self, other) {
            (Rational(a), Rational(b)) => Ok(a.cmp(b)),
            (Rational(a), Quadratic(b)) => Ok(b.cmp_rational(a).reverse()),
            (Quadratic(a), Rational(b)) => Ok(a.cmp_rational(b)),
            (Quadratic(a), Quadratic(b)) => a.cmp_same_field(b),
            _ => {
                let mut bits = ENCLOSURE_START_BITS;
                loop {
                    let (alo, ahi) = self.enclosure(bits)?;
                    let (blo, bhi) = other.enclosure(bits)?;
                    if ahi < blo {
                        return Ok(Ordering::Less);
                    }
                    if bhi < alo {
                        return Ok(Ordering::Greater);
                    }
                    if bits >= ENCLOSURE_CAP_BITS {
                        return Err(Error::InsufficientPrecision { max_bits: ENCLOSURE_CAP_BITS });
                    }
                    bits = (bits * 2).min(ENCLOSURE_CAP_BITS);
                }
            }
        }
    }

    pub fn cmp_rational(&self, q: &BigRational) -> Result<Ordering> {
        self.cmp_real(&Real::Rational(q.clone()))
    }

    /// Exact sign where decidable.
    pub fn signum(&self) -> Result<i32> {
        match self {
            Real::Rational(q) => Ok(q.signum().to_i32().unwrap()),
            Real::Quadratic(s) => Ok(s.signum()),
            _ => self.cmp_rational(&BigRational::zero()).map(|o| match o {
                Ordering::Less => -1,
                Ordering::Equal => 0,
                Ordering::Greater => 1,
            }),
        }
    }

    pub fn is_zero_exact(&self) -> bool {
        matches!(self, Real::Rational(q) if q.is_zero())
    }

    pub fn neg(&self) -> Real {
        match self {
            Real::Rational(q) => Real::Rational(-q.clone()),
            Real::Quadratic(s) => Real::Quadratic(s.neg()),
            Real::Enclosure(e) => {
                let inner = e.refine.clone();
                Real::Enclosure(Enclosure {
                    lo: -e.hi.clone(),
                    hi: -e.lo.clone(),
                    refine: Arc::new(move |bits| {
                        let (lo, hi) = inner(bits)?;
                        Ok((-hi, -lo))
                    }),
                })
            }
        }
    }

    pub fn add(&self, other: &Real) -> Result<Real> {
        use Real::*;
        match (self, other) {
            (Rational(a), Rational(b)) => Ok(Rational(a + b)),
            (Rational(a), Quadratic(b)) | (Quadratic(b), Rational(a)) => {
                Ok(Quadratic(b.add_rational(a)))
            }
            (Quadratic(a), Quadratic(b)) => Ok(match a.add(b)? {
                Ok(s) => Quadratic(s),
                Err(q) => Rational(q),
            }),
            _ => {
                let x = self.clone();
                let y = other.clone();
                Real::from_refine_fn(Arc::new(move |bits| {
                    let (alo, ahi) = x.enclosure(bits + 1)?;
                    let (blo, bhi) = y.enclosure(bits + 1)?;
                    Ok((alo + blo, ahi + bhi))
                }))
            }
        }
    }

    pub fn sub(&self, other: &Real) -> Result<Real> {
        self.add(&other.neg())
    }

    pub fn add_rational(&self, q: &BigRational) -> Real {
        match self {
            Real::Rational(a) => Real::Rational(a + q),
            Real::Quadratic(s) => Real::Quadratic(s.add_rational(q)),
            Real::Enclosure(_) => self
                .add(&Real::Rational(q.clone()))
                .expect("adding a rational to an enclosure cannot fail"),
        }
    }

    pub fn mul(&self, other: &Real) -> Result<Real> {
        use Real::*;
        match (self, other) {
            (Rational(a), Rational(b)) => Ok(Rational(a * b)),
            (Rational(a), Quadratic(b)) | (Quadratic(b), Rational(a)) => Ok(match b.mul_rational(a)
            {
                Some(s) => Quadratic(s),
                None => Rational(BigRational::zero()),
            }),
            (Quadratic(a), Quadratic(b)) => Ok(match a.mul(b)? {
                Ok(s) => Quadratic(s),
                Err(q) => Rational(q),
            }),
            _ => {
                let x = self.clone();
                let y = other.clone();
                Real::from_refine_fn(Arc::new(move |bits| {
                    // Interval product with enough slack to hit the width.
                    let mut extra = 2u32;
                    loop {
                        let (alo, ahi) = x.enclosure(bits + extra)?;
                        let (blo, bhi) = y.enclosure(bits + extra)?;
                        let corners = [&alo * &blo, &alo * &bhi, &ahi * &blo, &ahi * &bhi];
                        let lo = corners.iter().min().unwrap().clone();
                        let hi = corners.iter().max().unwrap().clone();
                        let width_ok = {
                            let w = &hi - &lo;
                            w * BigRational::from_integer(BigInt::from(1) << bits.min(4096))
                                < BigRational::one()
                        };
                        if width_ok || bits + extra >= ENCLOSURE_CAP_BITS {
                            return Ok((lo, hi));
                        }
                        extra = extra.saturating_mul(4);
                    }
                }))
            }
        }
    }

    pub fn mul_rational(&self, q: &BigRational) -> Real {
        self.mul(&Real::Rational(q.clone())).expect("rational multiply cannot fail")
    }

    /// Multiplicative inverse.  Fails on exact zero, and on enclosures that
    /// cannot be refined away from zero.
    pub fn recip(&self) -> Result<Real> {
        match self {
            Real::Rational(q) => {
                if q.is_zero() {
                    Err(Error::Domain("reciprocal of zero".into()))
                } else {
                    Ok(Real::Rational(q.recip()))
                }
            }
            Real::Quadratic(s) => Ok(Real::Quadratic(s.recip())),
            Real::Enclosure(_) => {
                let x = self.clone();
                Real::from_refine_fn(Arc::new(move |bits| {
                    let mut work = ENCLOSURE_START_BITS.max(bits);
                    loop {
                        let (lo, hi) = x.enclosure(work)?;
                        if lo.is_positive() || hi.is_negative() {
                            let (rlo, rhi) = (hi.recip(), lo.recip());
                            let w = &rhi - &rlo;
                            if w * BigRational::from_integer(BigInt::from(1) << bits.min(4096))
                                < BigRational::one()
                            {
                                return Ok((rlo, rhi));
                            }
                        }
                        if work >= ENCLOSURE_CAP_BITS {
                            return Err(Error::InsufficientPrecision {
                                max_bits: ENCLOSURE_CAP_BITS,
                            });
                        }
                        work = (work * 2).min(ENCLOSURE_CAP_BITS);
                    }
                }))
            }
        }
    }

    pub fn div(&self, other: &Real) -> Result<Real> {
        self.mul(&other.recip()?)
    }

    /// Exact floor where decidable.
    pub fn floor(&self) -> Result<BigInt> {
        match self {
            Real::Rational(q) => Ok(q.floor().to_integer()),
            Real::Quadratic(s) => Ok(s.floor()),
            Real::Enclosure(_) => {
                let mut bits = ENCLOSURE_START_BITS;
                loop {
                    let (lo, hi) = self.enclosure(bits)?;
                    let (fl, fh) = (lo.floor().to_integer(), hi.floor().to_integer());
                    if fl == fh {
                        return Ok(fl);
                    }
                    if bits >= ENCLOSURE_CAP_BITS {
                        return Err(Error::InsufficientPrecision { max_bits: ENCLOSURE_CAP_BITS });
                    }
                    bits = (bits * 2).min(ENCLOSURE_CAP_BITS);
                }
            }
        }
    }

    /// Fractional part `x - floor(x)` in `[0, 1)`.
    pub fn frac(&self) -> Result<Real> {
        let f = self.floor()?;
        Ok(self.add_rational(&BigRational::from_integer(-f)))
    }

    pub fn abs(&self) -> Result<Real> {
        match self.signum()? {
            -1 => Ok(self.neg()),
            _ => Ok(self.clone()),
        }
    }

    /// Distance to the nearest integer.
    pub fn nearest_int_distance(&self) -> Result<Real> {
        let fr = self.frac()?;
        let half = BigRational::new(1.into(), 2.into());
        match fr.cmp_rational(&half)? {
            Ordering::Less | Ordering::Equal => Ok(fr),
            Ordering::Greater => Ok(fr.neg().add_rational(&BigRational::one())),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Real::Rational(q) => rational_to_f64(q),
            Real::Quadratic(s) => s.to_f64(),
            Real::Enclosure(e) => (rational_to_f64(&e.lo) + rational_to_f64(&e.hi)) / 2.0,
        }
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Real::Rational(q) => write!(f, "{}", format_rational(q)),
            Real::Quadratic(s) => {
                write!(f, "{} + {}*sqrt({})", s.rational_part(), s.radical_part(), s.discriminant())
            }
            Real::Enclosure(e) => write!(f, "[{}, {}]", e.lo, e.hi),
        }
    }
}

/// Total order wrapper for exact (rational or quadratic) values, for use in
/// sorted containers.  Panics on enclosures and on mixed fields, which the
/// exact-geometry code never produces.
#[derive(Debug, Clone)]
pub struct OrdReal(pub Real);

impl PartialEq for OrdReal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for OrdReal {}

impl PartialOrd for OrdReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for OrdReal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp_real(&other.0).expect("OrdReal requires exactly comparable values")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_comparisons() {
        let g = Real::golden_mean();
        let half = Real::from_ratio(1, 2);
        assert_eq!(g.cmp_real(&half).unwrap(), Ordering::Greater);
        assert_eq!(half.cmp_real(&g).unwrap(), Ordering::Less);
        assert_eq!(half.cmp_real(&Real::from_ratio(2, 4)).unwrap(), Ordering::Equal);
    }

    #[test]
    fn golden_identity_alpha_squared() {
        // g^2 = 1 - g
        let g = Real::golden_mean();
        let g2 = g.mul(&g).unwrap();
        let rhs = g.neg().add_rational(&BigRational::one());
        assert_eq!(g2.cmp_real(&rhs).unwrap(), Ordering::Equal);
    }

    #[test]
    fn nearest_int_distance_of_golden() {
        // ||g|| = 1 - g = g^2 since g > 1/2
        let g = Real::golden_mean();
        let d = g.nearest_int_distance().unwrap();
        let g2 = g.mul(&g).unwrap();
        assert_eq!(d.cmp_real(&g2).unwrap(), Ordering::Equal);
    }

    #[test]
    fn enclosure_arithmetic_and_comparison() {
        // sqrt(2)/2 as a hand-rolled refinement hook
        let hook: RefineFn = Arc::new(|bits| {
            let s = Surd::sqrt_of(2).unwrap();
            let (lo, hi) = s.enclosure(bits + 1);
            Ok((lo / BigRational::from_integer(2.into()), hi / BigRational::from_integer(2.into())))
        });
        let x = Real::from_refine_fn(hook).unwrap();
        // x^2 = 1/2, so x < 0.71 and x > 0.70
        assert_eq!(x.cmp_rational(&BigRational::new(71.into(), 100.into())).unwrap(), Ordering::Less);
        assert_eq!(
            x.cmp_rational(&BigRational::new(70.into(), 100.into())).unwrap(),
            Ordering::Greater
        );
        let sq = x.mul(&x).unwrap();
        // squared enclosure still brackets 1/2 tightly: compare against
        // nearby rationals on both sides
        assert_eq!(sq.cmp_rational(&BigRational::new(4999.into(), 10000.into())).unwrap(), Ordering::Greater);
        assert_eq!(sq.cmp_rational(&BigRational::new(5001.into(), 10000.into())).unwrap(), Ordering::Less);
    }

    #[test]
    fn undecidable_comparison_errors_out() {
        // An enclosure that genuinely holds 1/2 can never be separated from it.
        let hook: RefineFn = Arc::new(|bits| {
            let half = BigRational::new(1.into(), 2.into());
            let eps = BigRational::new(1.into(), BigInt::from(1) << (bits + 1));
            Ok((&half - &eps, &half + &eps))
        });
        let x = Real::from_refine_fn(hook).unwrap();
        let err = x.cmp_rational(&BigRational::new(1.into(), 2.into())).unwrap_err();
        assert!(matches!(err, Error::InsufficientPrecision { .. }));
    }

    #[test]
    fn floor_and_frac() {
        let x = Real::from_ratio(7, 2);
        assert_eq!(x.floor().unwrap(), BigInt::from(3));
        let f = x.frac().unwrap();
        assert_eq!(f.cmp_real(&Real::from_ratio(1, 2)).unwrap(), Ordering::Equal);

        let s = Real::Quadratic(Surd::sqrt_of(2).unwrap());
        assert_eq!(s.floor().unwrap(), BigInt::from(1));
    }
}
