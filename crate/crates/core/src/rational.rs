//! Exact rationals and their `p/q` text form.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub type Rational = BigRational;

/// Shorthand for the rational `num/den`. Panics if `den == 0`.
pub fn q(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn half(x: &Rational) -> Rational {
    x / int(2)
}

/// Renders `x` as `p` when integral and `p/q` otherwise (lowest terms,
/// positive denominator).
pub fn render(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Location of a parse failure: `column` is 1-based within the input text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError {
    pub column: usize,
    pub message: &'static str,
}

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: {}", self.column, self.message)
    }
}

impl std::error::Error for ParseRationalError {}

/// Parses `[+-]digits[/digits]`. Surrounding whitespace is not accepted.
pub fn parse(text: &str) -> Result<Rational, ParseRationalError> {
    let bytes = text.as_bytes();
    let err = |column: usize, message| Err(ParseRationalError { column, message });
    if bytes.is_empty() {
        return err(1, "empty number");
    }
    let mut pos = 0;
    let negative = match bytes[0] {
        b'-' => {
            pos = 1;
            true
        }
        b'+' => {
            pos = 1;
            false
        }
        _ => false,
    };
    let num_start = pos;
    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
        pos += 1;
    }
    if pos == num_start {
        return err(pos + 1, "expected a digit");
    }
    let mut numer: BigInt = text[num_start..pos].parse().expect("ascii digits");
    if negative {
        numer = -numer;
    }
    if pos == bytes.len() {
        return Ok(Rational::from_integer(numer));
    }
    if bytes[pos] != b'/' {
        return err(pos + 1, "unexpected character");
    }
    pos += 1;
    let den_start = pos;
    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
        pos += 1;
    }
    if pos == den_start {
        return err(pos + 1, "expected a digit after '/'");
    }
    if pos != bytes.len() {
        return err(pos + 1, "unexpected character");
    }
    let denom: BigInt = text[den_start..pos].parse().expect("ascii digits");
    if denom.is_zero() {
        return err(den_start + 1, "zero denominator");
    }
    Ok(Rational::new(numer, denom))
}

pub(crate) fn is_positive(x: &Rational) -> bool {
    x.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse("7").unwrap(), int(7));
        assert_eq!(parse("-3/6").unwrap(), q(-1, 2));
        assert_eq!(parse("+4/2").unwrap(), int(2));
    }

    #[test]
    fn reports_columns() {
        assert_eq!(parse("1/0").unwrap_err().column, 3);
        assert_eq!(parse("1/0").unwrap_err().message, "zero denominator");
        assert_eq!(parse("12x").unwrap_err().column, 3);
        assert_eq!(parse("-").unwrap_err().column, 2);
        assert_eq!(parse("3/").unwrap_err().column, 3);
        assert_eq!(parse("").unwrap_err().column, 1);
        assert_eq!(parse("1/2/3").unwrap_err().column, 4);
    }

    #[test]
    fn renders_lowest_terms() {
        assert_eq!(render(&q(4, -6)), "-2/3");
        assert_eq!(render(&q(6, 3)), "2");
        assert_eq!(render(&int(0)), "0");
    }

    proptest::proptest! {
        #[test]
        fn render_parse_round_trip(n in -10_000i64..10_000, d in 1i64..500) {
            let x = q(n, d);
            proptest::prop_assert_eq!(parse(&render(&x)).unwrap(), x);
        }
    }
}
