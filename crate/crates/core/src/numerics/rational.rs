use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision fraction, always held in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// `numer / denom` in canonical form. Panics on a zero denominator.
pub fn rat(numer: i64, denom: i64) -> Rational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `"a/b"` or a bare integer `"a"`. Decimal notation is rejected so
/// that probabilities never pass through binary floating point.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = || Error::Parse(s.to_string());
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(BigRational::new(num, den))
}

/// Renders as `"a/b"`, including integers (`"3/1"`).
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// `base^exp` for any integer exponent; negative exponents need a nonzero base.
pub fn powi(base: &Rational, exp: i64) -> Rational {
    let magnitude = num_traits::pow(base.clone(), exp.unsigned_abs() as usize);
    if exp < 0 {
        magnitude.recip()
    } else {
        magnitude
    }
}

/// Correctly rounded decimal with `digits` significant digits (ties away
/// from zero), trailing zeros trimmed. Plain notation for moderate
/// magnitudes, `d.ddde±x` otherwise.
pub fn to_decimal_string(r: &Rational, digits: u32) -> String {
    assert!(digits >= 1, "need at least one significant digit");
    if r.is_zero() {
        return "0".to_string();
    }
    let ten = BigRational::from_integer(BigInt::from(10));
    let a = r.abs();

    // Locate 10^e <= a < 10^(e+1); the float estimate is only a starting point.
    let mut e = a.to_f64().map(|f| f.log10().floor() as i64).unwrap_or(0);
    while powi(&ten, e) > a {
        e -= 1;
    }
    while powi(&ten, e + 1) <= a {
        e += 1;
    }

    let shift = i64::from(digits) - 1 - e;
    let mut mantissa = (a * powi(&ten, shift)).round().to_integer();
    if mantissa == num_traits::pow(BigInt::from(10), digits as usize) {
        mantissa /= 10;
        e += 1;
    }
    let mut s = mantissa.to_string();
    debug_assert_eq!(s.len(), digits as usize);

    let sign = if r.is_negative() { "-" } else { "" };
    let body = if (-6..21).contains(&e) {
        if e >= 0 {
            let int_len = (e + 1) as usize;
            if s.len() < int_len {
                s.push_str(&"0".repeat(int_len - s.len()));
            }
            let (ip, fp) = s.split_at(int_len);
            let fp = fp.trim_end_matches('0');
            if fp.is_empty() {
                ip.to_string()
            } else {
                format!("{ip}.{fp}")
            }
        } else {
            let zeros = "0".repeat((-e - 1) as usize);
            format!("0.{zeros}{}", s.trim_end_matches('0'))
        }
    } else {
        let (lead, rest) = s.split_at(1);
        let rest = rest.trim_end_matches('0');
        if rest.is_empty() {
            format!("{lead}e{e}")
        } else {
            format!("{lead}.{rest}e{e}")
        }
    };
    format!("{sign}{body}")
}
