//! Scalar tower: exact rationals and binary64.

use core::fmt;
use core::ops::Neg;

use num_bigint::BigInt;
use num_traits::{Num, One, ToPrimitive, Zero};

/// Exact arbitrary-precision rational, always reduced with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Field element the recurrence arithmetic is generic over.
///
/// Two implementations are provided: [`Rational`] (the default, exact) and
/// `f64` (opt-in, for benchmarking).
pub trait Scalar: Num + Clone + Neg<Output = Self> + fmt::Debug + fmt::Display + Send + Sync {
    /// Converts an exact rational into this scalar type.
    fn from_rational(value: &Rational) -> Self;

    /// Nearest `f64`, used for float-tolerance checks.
    fn to_f64(&self) -> f64;

    /// Scalar from a machine integer.
    fn from_i64(value: i64) -> Self;
}

impl Scalar for Rational {
    fn from_rational(value: &Rational) -> Self {
        value.clone()
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn from_i64(value: i64) -> Self {
        Rational::from_integer(BigInt::from(value))
    }
}

impl Scalar for f64 {
    fn from_rational(value: &Rational) -> Self {
        ToPrimitive::to_f64(value).unwrap_or(f64::NAN)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn from_i64(value: i64) -> Self {
        value as f64
    }
}

/// Why a rational literal failed to parse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum RationalParseError {
    /// Unexpected character at a byte offset.
    #[error("unexpected character at offset {0}")]
    Unexpected(usize),
    /// Input ended where digits were expected.
    #[error("missing digits at offset {0}")]
    MissingDigits(usize),
    /// The denominator is zero.
    #[error("zero denominator at offset {0}")]
    ZeroDenominator(usize),
}

impl RationalParseError {
    /// Byte offset of the error inside the literal.
    pub fn position(&self) -> usize {
        match *self {
            Self::Unexpected(p) | Self::MissingDigits(p) | Self::ZeroDenominator(p) => p,
        }
    }
}

/// Parses `"p/q"` or `"p"` (optional leading `-` or `+`, decimal digits).
pub fn parse_rational(text: &str) -> Result<Rational, RationalParseError> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let negative = match bytes.first() {
        Some(b'-') => {
            pos = 1;
            true
        }
        Some(b'+') => {
            pos = 1;
            false
        }
        _ => false,
    };
    let num_start = pos;
    let num_end = scan_digits(bytes, num_start)?;
    let numer = parse_digits(&text[num_start..num_end]);
    let denom = match bytes.get(num_end) {
        None => BigInt::one(),
        Some(b'/') => {
            let den_start = num_end + 1;
            let den_end = scan_digits(bytes, den_start)?;
            if den_end != bytes.len() {
                return Err(RationalParseError::Unexpected(den_end));
            }
            let denom = parse_digits(&text[den_start..den_end]);
            if denom.is_zero() {
                return Err(RationalParseError::ZeroDenominator(den_start));
            }
            denom
        }
        Some(_) => return Err(RationalParseError::Unexpected(num_end)),
    };
    let numer = if negative { -numer } else { numer };
    Ok(Rational::new(numer, denom))
}

fn scan_digits(bytes: &[u8], start: usize) -> Result<usize, RationalParseError> {
    let len = bytes[start..].iter().take_while(|b| b.is_ascii_digit()).count();
    if len == 0 {
        return Err(match bytes.get(start) {
            None => RationalParseError::MissingDigits(start),
            Some(_) => RationalParseError::Unexpected(start),
        });
    }
    Ok(start + len)
}

fn parse_digits(digits: &str) -> BigInt {
    BigInt::from_str_radix(digits, 10).expect("scanned decimal digits")
}

/// Canonical text form: `"p/q"`, or `"p"` for integers.
pub fn render_rational(value: &Rational) -> alloc::string::String {
    alloc::format!("{value}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("5").unwrap(), r(5, 1));
        assert_eq!(parse_rational("-3/6").unwrap(), r(-1, 2));
        assert_eq!(parse_rational("+4/2").unwrap(), r(2, 1));
    }

    #[test]
    fn reduced_with_positive_denominator() {
        let x = parse_rational("-10/4").unwrap();
        assert_eq!(x.numer(), &BigInt::from(-5));
        assert_eq!(x.denom(), &BigInt::from(2));
    }

    #[test]
    fn rejects_malformed() {
        assert_eq!(parse_rational("1/0"), Err(RationalParseError::ZeroDenominator(2)));
        assert_eq!(parse_rational(""), Err(RationalParseError::MissingDigits(0)));
        assert_eq!(parse_rational("1/"), Err(RationalParseError::MissingDigits(2)));
        assert_eq!(parse_rational("1.5"), Err(RationalParseError::Unexpected(1)));
        assert_eq!(parse_rational("1/-2"), Err(RationalParseError::Unexpected(2)));
        assert_eq!(parse_rational("1/2x"), Err(RationalParseError::Unexpected(3)));
    }

    #[test]
    fn renders_integers_without_denominator() {
        assert_eq!(render_rational(&r(4, 2)), "2");
        assert_eq!(render_rational(&r(-3, 9)), "-1/3");
    }

    fn big_rational() -> impl Strategy<Value = Rational> {
        let bound = 1_000_000_000_000_000_000i64;
        (-bound..=bound, 1..=bound).prop_map(|(n, d)| r(n, d))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn render_parse_round_trip(x in big_rational()) {
            prop_assert_eq!(parse_rational(&render_rational(&x)).unwrap(), x);
        }

        #[test]
        fn exact_field_cancellation(x in big_rational(), y in big_rational()) {
            prop_assert_eq!((x.clone() + y.clone()) - y.clone(), x.clone());
            if !y.is_zero() {
                prop_assert_eq!((x.clone() * y.clone()) / y, x);
            }
        }
    }
}
