use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::One;

use super::unipoly::forward_owned;
use super::{Field, Rational, ScalarKind, UniPoly, Var};
use crate::error::{Error, Result};

/// Element of `ℚ(s)`: a reduced fraction of polynomials in `s` with a monic
/// denominator. Every arithmetic result is renormalized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFun {
    num: UniPoly,
    den: UniPoly,
}

impl RatFun {
    /// Reduces `num / den` to lowest terms with a monic denominator.
    ///
    /// ```
    /// use sympchar::scalar::{RatFun, UniPoly, Var};
    /// let f = RatFun::new(
    ///     UniPoly::from_ints(Var::S, &[-1, 0, 1]),
    ///     UniPoly::from_ints(Var::S, &[-1, 1]),
    /// ).unwrap();
    /// assert_eq!(f.numer(), &UniPoly::from_ints(Var::S, &[1, 1]));
    /// assert!(f.denom().degree() == Some(0));
    /// ```
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let (num, den) = (num.with_var(Var::S), den.with_var(Var::S));
        if num.is_zero() {
            return Ok(Self::from_poly(UniPoly::zero(Var::S)));
        }
        let g = num.gcd(&den)?;
        let num = num.div_exact(&g)?;
        let den = den.div_exact(&g)?;
        let lc = den.leading().recip();
        Ok(RatFun { num: num.scale(&lc), den: den.scale(&lc) })
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RatFun { num: p.with_var(Var::S), den: UniPoly::constant(Var::S, Rational::one()) }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(UniPoly::constant(Var::S, c))
    }

    pub fn numer(&self) -> &UniPoly {
        &self.num
    }

    pub fn denom(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The value when this is a constant function.
    pub fn as_constant(&self) -> Option<Rational> {
        (self.num.is_constant() && self.den.is_constant()).then(|| self.num.coeff(0))
    }

    fn make(num: UniPoly, den: UniPoly) -> Self {
        Self::new(num, den).expect("nonzero denominator by construction")
    }
}

impl super::Scalar for RatFun {
    const KIND: ScalarKind = ScalarKind::RatFun;

    fn zero() -> Self {
        RatFun::from_poly(UniPoly::zero(Var::S))
    }
    fn one() -> Self {
        RatFun::constant(<Rational as One>::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
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
        RatFun::constant(r.clone())
    }
}

impl Field for RatFun {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(RatFun::make(self.den.clone(), self.num.clone()))
        }
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if self.den == rhs.den {
            return RatFun::make(&self.num + &rhs.num, self.den.clone());
        }
        RatFun::make(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::from_poly(UniPoly::zero(Var::S));
        }
        RatFun::make(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatFun {
    type Output = RatFun;
    /// Panics on division by zero.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &RatFun) -> RatFun {
        self * &rhs.inv().expect("division by zero rational function")
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun { num: -&self.num, den: self.den.clone() }
    }
}

forward_owned!(RatFun, Add add, Sub sub, Mul mul, Div div);

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &UniPoly| {
            if p.term_count() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn s(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(Var::S, c)
    }

    #[test]
    fn normalize_examples() {
        let f = RatFun::new(s(&[-1, 0, 1]), s(&[-1, 1])).unwrap();
        assert_eq!((f.numer(), f.denom()), (&s(&[1, 1]), &s(&[1])));
        let f = RatFun::new(s(&[0, 2]), s(&[4])).unwrap();
        assert_eq!(f.numer(), &UniPoly::new(Var::S, vec![rat(0), rat(1) / rat(2)]));
        assert_eq!(f.denom(), &s(&[1]));
        let f = RatFun::new(s(&[0, 1]), s(&[0, 2])).unwrap();
        assert_eq!(f.as_constant(), Some(rat(1) / rat(2)));
        assert_eq!(RatFun::new(s(&[1]), s(&[])), Err(Error::ZeroDenominator));
    }

    #[test]
    fn denominator_is_monic() {
        let f = RatFun::new(s(&[1]), s(&[3, -3])).unwrap();
        assert_eq!(f.denom(), &s(&[-1, 1]));
        assert_eq!(f.numer(), &UniPoly::constant(Var::S, rat(-1) / rat(3)));
    }

    #[test]
    fn arithmetic_stays_reduced() {
        let a = RatFun::new(s(&[1]), s(&[-1, 1])).unwrap(); // 1/(s-1)
        let b = RatFun::new(s(&[1]), s(&[1, 1])).unwrap(); // 1/(s+1)
        let sum = &a + &b; // 2s/(s^2-1)
        assert_eq!(sum.numer(), &s(&[0, 2]));
        assert_eq!(sum.denom(), &s(&[-1, 0, 1]));
        let prod = &sum * &RatFun::from_poly(s(&[-1, 0, 1]));
        assert_eq!(prod, RatFun::from_poly(s(&[0, 2])));
        assert_eq!(&a / &a, RatFun::constant(rat(1)));
        assert!((&a - &a).is_zero());
    }
}
