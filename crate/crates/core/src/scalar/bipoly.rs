use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use super::unipoly::{forward_owned, write_monomial};
use super::{Rational, ScalarKind, UniPoly, Var};
use crate::error::{Error, Result};

/// Polynomial in `(s, t)`, stored densely in `t` with dense `s`-coefficients.
///
/// `coeffs[k]` is the coefficient of `t^k`, itself a [`UniPoly`] in `s`. The
/// highest stored entry is nonzero; the zero polynomial stores nothing.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BiPoly {
    coeffs: Vec<UniPoly>,
}

impl BiPoly {
    pub fn from_t_coeffs(coeffs: Vec<UniPoly>) -> Self {
        let mut coeffs: Vec<UniPoly> = coeffs.into_iter().map(|c| c.with_var(Var::S)).collect();
        while coeffs.last().is_some_and(UniPoly::is_zero) {
            coeffs.pop();
        }
        BiPoly { coeffs }
    }

    pub fn zero() -> Self {
        BiPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_s(UniPoly::constant(Var::S, c))
    }

    /// Embeds a polynomial in `s` (whatever its tag) as the `t^0` coefficient.
    pub fn from_s(p: UniPoly) -> Self {
        Self::from_t_coeffs(vec![p])
    }

    /// Embeds a polynomial in `t`: each coefficient becomes a constant in `s`.
    pub fn from_t(p: &UniPoly) -> Self {
        Self::from_t_coeffs(p.coeffs().iter().map(|c| UniPoly::constant(Var::S, c.clone())).collect())
    }

    pub fn s() -> Self {
        Self::from_s(UniPoly::x(Var::S))
    }

    pub fn t() -> Self {
        Self::from_t_coeffs(vec![UniPoly::zero(Var::S), UniPoly::constant(Var::S, Rational::one())])
    }

    /// `(λ - s)(μ - s) - t`.
    pub fn pair_factor(lambda: &Rational, mu: &Rational) -> Self {
        let q = &UniPoly::new(Var::S, vec![lambda.clone(), -Rational::one()])
            * &UniPoly::new(Var::S, vec![mu.clone(), -Rational::one()]);
        &Self::from_s(q) - &Self::t()
    }

    pub fn t_coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    /// Coefficient of `t^k` as a polynomial in `s`.
    pub fn coeff_t(&self, k: usize) -> UniPoly {
        self.coeffs.get(k).cloned().unwrap_or_else(|| UniPoly::zero(Var::S))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg_t(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg_s(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(UniPoly::degree).max()
    }

    pub fn eval(&self, s: &Rational, t: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * t + c.eval(s))
    }

    /// `p(s, τ)` as a polynomial in `s`.
    pub fn eval_t(&self, t: &Rational) -> UniPoly {
        self.coeffs.iter().rev().fold(UniPoly::zero(Var::S), |acc, c| &acc.scale(t) + c)
    }

    /// `p(σ, t)` as a polynomial in `t`.
    pub fn eval_s(&self, s: &Rational) -> UniPoly {
        UniPoly::new(Var::T, self.coeffs.iter().map(|c| c.eval(s)).collect())
    }

    /// `p(s, q(s))` for a polynomial `q` in `s`.
    pub fn subs_t(&self, q: &UniPoly) -> UniPoly {
        let q = q.clone().with_var(Var::S);
        self.coeffs.iter().rev().fold(UniPoly::zero(Var::S), |acc, c| &(&acc * &q) + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_t_coeffs(self.coeffs.iter().map(|p| p.scale(c)).collect())
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut out = Self::constant(Rational::one());
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Exact quotient `self / divisor` in `ℚ[s][t]`.
    ///
    /// ```
    /// use sympchar::scalar::{BiPoly, rat};
    /// let f = BiPoly::pair_factor(&rat(1), &rat(2));
    /// let g = BiPoly::pair_factor(&rat(3), &rat(4));
    /// assert_eq!((&f * &g).div_exact(&f).unwrap(), g);
    /// assert!(BiPoly::t().div_exact(&BiPoly::s()).is_err());
    /// ```
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let m = divisor.coeffs.len() - 1;
        let lead = &divisor.coeffs[m];
        if self.coeffs.len() <= m {
            return Err(Error::NotAFactor);
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![UniPoly::zero(Var::S); rem.len() - m];
        for k in (0..quot.len()).rev() {
            let c = rem[k + m].div_exact(lead)?;
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] = &rem[k + j] - &(&c * d);
                }
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotAFactor);
        }
        Ok(Self::from_t_coeffs(quot))
    }
}

impl super::Scalar for BiPoly {
    const KIND: ScalarKind = ScalarKind::BiPoly;

    fn zero() -> Self {
        BiPoly::zero()
    }
    fn one() -> Self {
        BiPoly::constant(<Rational as One>::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
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
        BiPoly::constant(r.clone())
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        BiPoly::from_t_coeffs((0..n).map(|k| &self.coeff_t(k) + &rhs.coeff_t(k)).collect())
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        BiPoly::from_t_coeffs((0..n).map(|k| &self.coeff_t(k) - &rhs.coeff_t(k)).collect())
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut out = vec![UniPoly::zero(Var::S); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        BiPoly::from_t_coeffs(out)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

forward_owned!(BiPoly, Add add, Sub sub, Mul mul);

/// Canonical expanded text: descending powers of `t`; each `t`-coefficient in
/// descending powers of `s`. Multi-term coefficients of `t^k`, `k ≥ 1`, are
/// parenthesized; the `t^0` part is written out last.
///
/// ```
/// use sympchar::scalar::{BiPoly, rat};
/// let p = BiPoly::pair_factor(&rat(1), &rat(2));
/// assert_eq!(p.to_string(), "-t + s^2 - 3*s + 2");
/// assert_eq!(p.to_string().parse::<BiPoly>().unwrap(), p);
/// ```
impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, body) = render_t_term(c, k);
            match (first, neg) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Sign and unsigned text of `c(s)·t^k`.
fn render_t_term(c: &UniPoly, k: usize) -> (bool, String) {
    let t_power = match k {
        0 => String::new(),
        1 => "t".to_string(),
        _ => format!("t^{k}"),
    };
    if k == 0 {
        let text = c.to_string();
        return match text.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, text),
        };
    }
    if c.term_count() > 1 {
        return (false, format!("({c})*{t_power}"));
    }
    let (deg, coeff) = c.coeffs().iter().enumerate().find(|(_, a)| !a.is_zero()).expect("nonzero coefficient");
    let neg = coeff.is_negative();
    let coeff = coeff.abs();
    let s_part = Mono(&coeff, deg).to_string();
    let body = match (s_part.as_str(), deg) {
        ("1", 0) => t_power,
        (_, _) => format!("{s_part}*{t_power}"),
    };
    (neg, body)
}

struct Mono<'a>(&'a Rational, usize);

impl fmt::Display for Mono<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_monomial(f, self.0, 's', self.1)
    }
}
