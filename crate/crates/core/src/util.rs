//! Small shared helpers: integer logs, rational parsing, curve statistics.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// `ceil(log2(n))` for `n >= 1`; 0 for `n <= 1`.
pub fn ceil_log2(n: u64) -> u32 {
    if n <= 1 {
        0
    } else {
        64 - (n - 1).leading_zeros()
    }
}

/// `floor(log2(n))` for `n >= 1`.
pub fn floor_log2(n: u64) -> u32 {
    debug_assert!(n >= 1);
    63 - n.leading_zeros()
}

/// Approximate base-2 logarithm of a positive big integer.
pub fn big_log2(n: &BigUint) -> f64 {
    let bits = n.bits();
    if bits == 0 {
        return f64::NEG_INFINITY;
    }
    if bits <= 53 {
        return n.to_f64().unwrap().log2();
    }
    // Top 53 bits carry the mantissa, the rest is the exponent.
    let shift = bits - 53;
    let top = (n >> shift).to_f64().unwrap();
    top.log2() + shift as f64
}

/// Approximate base-2 logarithm of a positive rational.
pub fn rational_log2(q: &BigRational) -> f64 {
    debug_assert!(q.is_positive());
    big_log2(q.numer().magnitude()) - big_log2(q.denom().magnitude())
}

/// Convert a rational to `f64` (best effort, for diagnostics and CSV output).
pub fn rational_to_f64(q: &BigRational) -> f64 {
    if let Some(v) = q.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    let sign = if q.is_negative() { -1.0 } else { 1.0 };
    sign * 2f64.powf(rational_log2(&q.abs()))
}

/// Parse `"p/q"` or a plain integer or decimal (`"0.37"`) as an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = |_| Error::Parse(format!("invalid rational: {s:?}"));
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(bad)?;
        let d: BigInt = den.trim().parse().map_err(bad)?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let int = if int.is_empty() { "0" } else { int };
        let neg = int.starts_with('-');
        let i: BigInt = int.parse().map_err(bad)?;
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("invalid rational: {s:?}")));
        }
        let f: BigInt = frac.parse().map_err(bad)?;
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let frac_part = BigRational::new(f, scale);
        let int_part = BigRational::from_integer(i);
        return Ok(if neg { int_part - frac_part } else { int_part + frac_part });
    }
    let n: BigInt = s.parse().map_err(bad)?;
    Ok(BigRational::from_integer(n))
}

/// Render a rational as `"p/q"` (or `"p"` when integral).
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Least-squares slope and intercept of `y` against `x`.
///
/// Returns `(slope, intercept, rms_residual)`.
pub fn linear_fit(x: &[f64], y: &[f64]) -> (f64, f64, f64) {
    assert_eq!(x.len(), y.len());
    assert!(x.len() >= 2);
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxx: f64 = x.iter().map(|v| (v - mx) * (v - mx)).sum();
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let rss: f64 = x
        .iter()
        .zip(y)
        .map(|(a, b)| {
            let e = b - (intercept + slope * a);
            e * e
        })
        .sum();
    (slope, intercept, (rss / n).sqrt())
}

/// Extremes of the deepest `fraction` of a curve: `(min, max)` over the tail.
///
/// Empirical liminf/limsup surrogates are reported this way so the shallow
/// transient does not contaminate the estimate.
pub fn tail_extrema(values: &[f64], fraction: f64) -> (f64, f64) {
    assert!(!values.is_empty());
    let start = ((values.len() as f64) * (1.0 - fraction)).floor() as usize;
    let start = start.min(values.len() - 1);
    let tail = &values[start..];
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for &v in tail {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ceil_log2_small_values() {
        assert_eq!(ceil_log2(0), 0);
        assert_eq!(ceil_log2(1), 0);
        assert_eq!(ceil_log2(2), 1);
        assert_eq!(ceil_log2(3), 2);
        assert_eq!(ceil_log2(4), 2);
        assert_eq!(ceil_log2(5), 3);
        assert_eq!(ceil_log2(1024), 10);
        assert_eq!(ceil_log2(1025), 11);
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("3/4").unwrap(), BigRational::new(3.into(), 4.into()));
        assert_eq!(parse_rational("5").unwrap(), BigRational::from_integer(5.into()));
        assert_eq!(parse_rational("2.5").unwrap(), BigRational::new(5.into(), 2.into()));
        assert_eq!(parse_rational("-0.25").unwrap(), BigRational::new((-1).into(), 4.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn big_log2_matches_f64() {
        let n = BigUint::from(1_000_000u64);
        assert!((big_log2(&n) - 1_000_000f64.log2()).abs() < 1e-9);
        let big = BigUint::from(7u8).pow(100);
        assert!((big_log2(&big) - 100.0 * 7f64.log2()).abs() < 1e-6);
    }

    #[test]
    fn linear_fit_recovers_line() {
        let x: Vec<f64> = (1..10).map(|i| i as f64).collect();
        let y: Vec<f64> = x.iter().map(|v| 2.5 * v - 1.0).collect();
        let (m, b, r) = linear_fit(&x, &y);
        assert!((m - 2.5).abs() < 1e-12);
        assert!((b + 1.0).abs() < 1e-12);
        assert!(r < 1e-12);
    }

    #[test]
    fn tail_extrema_uses_deepest_half() {
        let v = [100.0, 0.0, 1.0, 2.0, 3.0, 4.0];
        let (lo, hi) = tail_extrema(&v, 0.5);
        assert_eq!(lo, 1.0);
        assert_eq!(hi, 4.0);
    }
}
