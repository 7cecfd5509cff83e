//! Exact scalar arithmetic: arbitrary-precision integers and reduced rationals,
//! plus parsing and rendering of the `p/q` and decimal wire formats.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
/// Always reduced to lowest terms with a positive denominator; zero is 0/1.
pub type Rat = BigRational;

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// 10^k as a big integer.
pub fn pow10(k: u32) -> Int {
    Int::from(10u32).pow(k)
}

/// Renders a rational as `p/q`, omitting `/q` when the denominator is 1.
pub fn render_rat(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p`, `p/q`, or a decimal literal such as `-3.25` into an exact rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: Int = num
            .trim()
            .parse()
            .map_err(|_| Error::MalformedDecimal(s.to_string()))?;
        let d: Int = den
            .trim()
            .parse()
            .map_err(|_| Error::MalformedDecimal(s.to_string()))?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        return Ok(Rat::new(n, d));
    }
    parse_decimal(s)
}

/// Parses a plain decimal literal (`[+-]digits[.digits]`) into an exact rational.
pub fn parse_decimal(s: &str) -> Result<Rat> {
    let t = s.trim();
    let err = || Error::MalformedDecimal(s.to_string());
    let (sign, body) = match t.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, t.strip_prefix('+').unwrap_or(t)),
    };
    if body.is_empty() {
        return Err(err());
    }
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(err());
    }
    if !int_part.bytes().all(|b| b.is_ascii_digit()) || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err());
    }
    let digits = format!("{}{}", int_part, frac_part);
    let numer: Int = if digits.is_empty() {
        Int::zero()
    } else {
        digits.parse().map_err(|_| err())?
    };
    let denom = pow10(frac_part.len() as u32);
    Ok(Rat::new(Int::from(sign) * numer, denom))
}

/// Number of fractional digits in a decimal literal; 0 for integers.
pub fn decimal_fraction_digits(s: &str) -> u32 {
    match s.trim().split_once('.') {
        Some((_, f)) => f.len() as u32,
        None => 0,
    }
}

/// Renders a nonnegative rational truncated toward zero with exactly
/// `digits` fractional digits.
pub fn render_decimal_abs(x: &Rat, digits: u32) -> String {
    assert!(!x.is_negative(), "render_decimal_abs expects a nonnegative value");
    let scale = pow10(digits);
    let scaled = (x * Rat::from_integer(scale.clone())).floor().to_integer();
    let int_part = &scaled / &scale;
    let frac_part = &scaled % &scale;
    if digits == 0 {
        int_part.to_string()
    } else {
        format!("{}.{:0>width$}", int_part, frac_part.to_string(), width = digits as usize)
    }
}

/// Renders any rational truncated toward zero with `digits` fractional digits.
pub fn render_decimal(x: &Rat, digits: u32) -> String {
    if x.is_negative() {
        format!("-{}", render_decimal_abs(&-x, digits))
    } else {
        render_decimal_abs(x, digits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render_rationals() {
        assert_eq!(render_rat(&rat(3, 1)), "3");
        assert_eq!(render_rat(&rat(1, 2)), "1/2");
        assert_eq!(render_rat(&rat(-2, 4)), "-1/2");
        assert_eq!(parse_rat("5/10").unwrap(), rat(1, 2));
        assert_eq!(parse_rat(" -7 ").unwrap(), rat_int(-7));
        assert_eq!(parse_rat("2.5").unwrap(), rat(5, 2));
        assert_eq!(parse_rat("-0.125").unwrap(), rat(-1, 8));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("abc").is_err());
        assert!(parse_rat("1.2.3").is_err());
    }

    #[test]
    fn decimal_rendering_truncates_toward_zero() {
        assert_eq!(render_decimal(&rat(1, 3), 5), "0.33333");
        assert_eq!(render_decimal(&rat(-1, 3), 5), "-0.33333");
        assert_eq!(render_decimal(&rat(5, 2), 3), "2.500");
        assert_eq!(render_decimal(&rat_int(4), 2), "4.00");
        assert_eq!(render_decimal(&rat(1, 1000), 2), "0.00");
    }

    #[test]
    fn decimal_round_trip() {
        let x = parse_decimal("3.141592653589793238462643383279").unwrap();
        assert_eq!(render_decimal(&x, 30), "3.141592653589793238462643383279");
        assert_eq!(decimal_fraction_digits("3.1415"), 4);
        assert_eq!(decimal_fraction_digits("12"), 0);
    }
}
