use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

/// Arbitrary precision rational, always kept in lowest terms.
pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Parses `"p/q"` or `"p"`; the result is reduced.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let (numer, denom) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text, "1"),
    };
    let bad = || Error::Domain(format!("not a rational number: {text:?}"));
    let numer: BigInt = numer.parse().map_err(|_| bad())?;
    let denom: BigInt = denom.parse().map_err(|_| bad())?;
    if denom == BigInt::from(0) {
        return Err(Error::Arithmetic(format!("zero denominator in {text:?}")));
    }
    Ok(Rational::new(numer, denom))
}

/// Lowest terms, `"p"` when the denominator is one.
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for s in ["0", "1", "-1/2", "3465/128", "-9009/256"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(parse_rational("4/-6").unwrap(), rat(-2, 3));
        assert_eq!(format_rational(&rat(6, 3)), "2");
    }

    #[test]
    fn rejects_garbage() {
        assert!(matches!(parse_rational("1/0"), Err(Error::Arithmetic(_))));
        assert!(matches!(parse_rational("x"), Err(Error::Domain(_))));
        assert!(parse_rational("").is_err());
    }
}
