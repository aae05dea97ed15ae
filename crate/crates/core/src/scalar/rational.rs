use num::{BigInt, BigRational, One, Zero};

use super::{Field, Scalar, ScalarKind};
use crate::error::{Error, Result};

/// Arbitrary-precision reduced fraction. Zero is `0/1`, the denominator is
/// always positive.
pub type Rational = BigRational;

/// Small-integer shorthand, mostly for tests and examples.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p"` or `"p/q"` with an integer `p` and a positive integer `q`.
///
/// ```
/// use sympchar::scalar::{parse_rational, rat};
/// assert_eq!(parse_rational("-6/4").unwrap(), rat(-3) / rat(2));
/// assert!(parse_rational("1/0").is_err());
/// assert!(parse_rational("0.5").is_err());
/// ```
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::Parse(format!("'{text}' is not an exact fraction p or p/q"));
    let int = |s: &str, signed: bool| -> Result<BigInt> {
        let digits = if signed { s.strip_prefix(['-', '+']).unwrap_or(s) } else { s };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        s.parse::<BigInt>().map_err(|_| bad())
    };
    match text.split_once('/') {
        None => Ok(Rational::from_integer(int(text, true)?)),
        Some((p, q)) => {
            let num = int(p, true)?;
            let den = int(q, false)?;
            if den.is_zero() {
                return Err(Error::Parse(format!("'{text}' has a zero denominator")));
            }
            Ok(Rational::new(num, den))
        }
    }
}

impl Scalar for Rational {
    const KIND: ScalarKind = ScalarKind::Rational;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Least common multiple of the denominators.
pub(crate) fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    use num::Integer;
    values.into_iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_accepts_integers_and_fractions() {
        assert_eq!(parse_rational("7").unwrap(), rat(7));
        assert_eq!(parse_rational(" -2/6 ").unwrap(), rat(-1) / rat(3));
        assert_eq!(parse_rational("+3").unwrap(), rat(3));
        assert_eq!(parse_rational("0/5").unwrap(), rat(0));
    }

    #[test]
    fn parse_rejects_malformed() {
        for bad in ["", "1/", "/2", "1/-2", "1.5", "a", "1/2/3", "--1"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn zero_is_normalized() {
        let z = parse_rational("0/7").unwrap();
        assert_eq!(z.denom(), &BigInt::one());
    }
}
