use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{parse_rational, Rational};

/// A rational multiple of a single power of `kappa`, or zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Invariant {
    Zero,
    Monomial { coeff: Rational, kappa_exp: i64 },
}

impl Invariant {
    /// `coeff * kappa^kappa_exp`, collapsing to [`Invariant::Zero`].
    pub fn new(coeff: Rational, kappa_exp: i64) -> Self {
        if coeff.is_zero() {
            Invariant::Zero
        } else {
            Invariant::Monomial { coeff, kappa_exp }
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Invariant::Zero)
    }

    pub fn coeff(&self) -> Option<&Rational> {
        match self {
            Invariant::Zero => None,
            Invariant::Monomial { coeff, .. } => Some(coeff),
        }
    }

    pub fn kappa_exp(&self) -> Option<i64> {
        match self {
            Invariant::Zero => None,
            Invariant::Monomial { kappa_exp, .. } => Some(*kappa_exp),
        }
    }

    pub fn scale(&self, s: &Rational) -> Invariant {
        match self {
            Invariant::Zero => Invariant::Zero,
            Invariant::Monomial { coeff, kappa_exp } => Invariant::new(coeff * s, *kappa_exp),
        }
    }

    /// Multiplies by `kappa^e`.
    pub fn shift(&self, e: i64) -> Invariant {
        match self {
            Invariant::Zero => Invariant::Zero,
            Invariant::Monomial { coeff, kappa_exp } => {
                Invariant::Monomial { coeff: coeff.clone(), kappa_exp: kappa_exp + e }
            }
        }
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Invariant::Zero => f.write_str("0"),
            Invariant::Monomial { coeff, kappa_exp } => write!(f, "{coeff} * kappa^{kappa_exp}"),
        }
    }
}

impl FromStr for Invariant {
    type Err = Error;

    /// Accepts the display form, `"0"` or `"p/q * kappa^e"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Invariant::Zero);
        }
        let bad = || Error::Domain(format!("not an invariant: {s:?}"));
        let (c, e) = s.split_once('*').ok_or_else(bad)?;
        let e = e.trim().strip_prefix("kappa^").ok_or_else(bad)?;
        let kappa_exp: i64 = e.trim().parse().map_err(|_| bad())?;
        Ok(Invariant::new(parse_rational(c)?, kappa_exp))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Wire {
    Zero { zero: bool },
    Monomial { coefficient: String, kappa_exponent: i64 },
}

impl Serialize for Invariant {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Invariant::Zero => Wire::Zero { zero: true },
            Invariant::Monomial { coeff, kappa_exp } => {
                Wire::Monomial { coefficient: coeff.to_string(), kappa_exponent: *kappa_exp }
            }
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Invariant {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match Wire::deserialize(d)? {
            Wire::Zero { zero: true } => Ok(Invariant::Zero),
            Wire::Zero { zero: false } => Err(D::Error::custom("\"zero\" must be true")),
            Wire::Monomial { coefficient, kappa_exponent } => {
                let c = parse_rational(&coefficient).map_err(D::Error::custom)?;
                Ok(Invariant::new(c, kappa_exponent))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn text_round_trip() {
        let x = Invariant::new(rat(-1, 2), -3);
        assert_eq!(x.to_string(), "-1/2 * kappa^-3");
        assert_eq!(x.to_string().parse::<Invariant>().unwrap(), x);
        assert_eq!("0".parse::<Invariant>().unwrap(), Invariant::Zero);
    }

    #[test]
    fn json_shape() {
        let x = Invariant::new(rat(1, 1), -1);
        assert_eq!(serde_json::to_string(&x).unwrap(), r#"{"coefficient":"1","kappa_exponent":-1}"#);
        assert_eq!(serde_json::to_string(&Invariant::Zero).unwrap(), r#"{"zero":true}"#);
        let back: Invariant = serde_json::from_str(r#"{"coefficient":"-3/8","kappa_exponent":-7}"#).unwrap();
        assert_eq!(back, Invariant::new(rat(-3, 8), -7));
    }

    #[test]
    fn zero_collapses() {
        assert!(Invariant::new(rat(0, 1), -4).is_zero());
        assert!(Invariant::new(rat(2, 1), -4).scale(&rat(0, 1)).is_zero());
    }
}
