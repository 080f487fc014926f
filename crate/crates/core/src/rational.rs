//! Exact rational scalars.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"3"`, `"-1/2"` or a plain decimal such as `"0.25"`.
pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Schema(format!("not a rational number: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((whole, fraction)) = s.split_once('.') {
        if fraction.is_empty() || !fraction.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let digits = format!("{}{}", whole.trim_start_matches(['-', '+']), fraction);
        let mut n = BigInt::from_str(&digits).map_err(|_| bad())?;
        if negative {
            n = -n;
        }
        let d = BigInt::from(10u32).pow(fraction.len() as u32);
        return Ok(Rational::new(n, d));
    }
    BigInt::from_str(s).map(Rational::from_integer).map_err(|_| bad())
}

/// `"3"` for integers, `"-1/2"` otherwise.
pub fn format(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Decimal approximation of `sqrt(r)` truncated to `digits` significant
/// digits. `r` must be nonnegative.
pub fn sqrt_decimal(r: &Rational, digits: usize) -> String {
    assert!(!r.is_negative(), "square root of a negative rational");
    if r.is_zero() {
        return "0".to_string();
    }
    // Scale by 10^(2k) so that the integer root carries enough digits.
    let mut k: u32 = 0;
    let root = loop {
        let scale = BigInt::from(10u32).pow(2 * k);
        let scaled = (r.numer() * &scale) / r.denom();
        let root = scaled.sqrt();
        if root.to_string().len() >= digits || k > 10_000 {
            break root;
        }
        k += 1;
    };
    let text = root.to_string();
    let int_len = text.len() as i64 - k as i64;
    let sig: String = text.chars().take(digits).collect();
    if int_len <= 0 {
        let zeros = "0".repeat((-int_len) as usize);
        format!("0.{zeros}{}", sig.trim_end_matches('0'))
            .trim_end_matches('.')
            .to_string()
    } else if int_len as usize >= sig.len() {
        format!("{sig}{}", "0".repeat(int_len as usize - sig.len()))
    } else {
        let (a, b) = sig.split_at(int_len as usize);
        let b = b.trim_end_matches('0');
        if b.is_empty() {
            a.to_string()
        } else {
            format!("{a}.{b}")
        }
    }
}

/// Parses a comma separated rational vector such as `"1,2,-1/2"`.
pub fn parse_vector(s: &str) -> Result<Vec<Rational>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse).collect()
}
