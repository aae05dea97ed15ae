use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigUint, Integer, One, Signed, Zero};

use super::rational::common_denominator;
use super::{Rational, ScalarKind};
use crate::error::{Error, Result};

/// Name of the indeterminate of a [`UniPoly`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Var {
    #[default]
    S,
    T,
}

impl Var {
    pub fn symbol(self) -> char {
        match self {
            Var::S => 's',
            Var::T => 't',
        }
    }
}

/// Dense univariate polynomial with rational coefficients.
///
/// `coeffs[i]` is the coefficient of `x^i`; trailing zeros are stripped, so the
/// zero polynomial has no coefficients at all. Constants compare equal regardless
/// of their variable tag.
#[derive(Clone, Debug, Eq)]
pub struct UniPoly {
    var: Var,
    coeffs: Vec<Rational>,
}

/// Rational roots with multiplicities, plus whether they account for the whole degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSet {
    pub roots: BTreeMap<Rational, usize>,
    pub splits: bool,
}

impl RootSet {
    /// Roots repeated according to multiplicity, ascending.
    pub fn multiset(&self) -> Vec<Rational> {
        self.roots.iter().flat_map(|(r, &m)| std::iter::repeat_n(r.clone(), m)).collect()
    }
}

impl PartialEq for UniPoly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && (self.var == other.var || self.coeffs.len() <= 1)
    }
}

impl UniPoly {
    pub fn new(var: Var, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { var, coeffs }
    }

    /// Convenience constructor from integer coefficients, low degree first.
    pub fn from_ints(var: Var, coeffs: &[i64]) -> Self {
        Self::new(var, coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero(var: Var) -> Self {
        UniPoly { var, coeffs: Vec::new() }
    }

    pub fn constant(var: Var, c: Rational) -> Self {
        Self::new(var, vec![c])
    }

    /// The indeterminate itself.
    pub fn x(var: Var) -> Self {
        Self::new(var, vec![Rational::zero(), Rational::one()])
    }

    /// `c·x^k`.
    pub fn monomial(var: Var, c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(var, coeffs)
    }

    /// `Π (x - r)` over the given roots.
    pub fn from_roots(var: Var, roots: &[Rational]) -> Self {
        roots.iter().fold(Self::constant(var, Rational::one()), |acc, r| {
            &acc * &Self::new(var, vec![-r.clone(), Rational::one()])
        })
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.var, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut out = Self::constant(self.var, Rational::one());
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn derivative(&self) -> Self {
        let coeffs =
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * Rational::from_integer(i.into())).collect();
        Self::new(self.var, coeffs)
    }

    fn joint_var(&self, other: &Self) -> Result<Var> {
        if self.var == other.var || other.is_constant() {
            Ok(self.var)
        } else if self.is_constant() {
            Ok(other.var)
        } else {
            Err(Error::VariableMismatch(self.var.symbol(), other.var.symbol()))
        }
    }

    /// Euclidean division: `self = divisor·q + r` with `deg r < deg divisor`.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        let var = self.joint_var(divisor)?;
        let dd = divisor.coeffs.len() - 1;
        let lc_inv = divisor.leading().recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(var), Self::new(var, rem)));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(var, quot), Self::new(var, rem)))
    }

    /// Quotient when `divisor` divides exactly.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.divrem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotAFactor)
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let var = self.joint_var(other)?;
        let (mut a, mut b) = (self.clone().with_var(var), other.clone().with_var(var));
        while !b.is_zero() {
            let (_, r) = a.divrem(&b)?;
            a = b;
            b = r.monic();
        }
        Ok(a.monic())
    }

    /// Rational roots with multiplicities, via the rational root theorem on the
    /// primitive integer form. Each multiplicity is certified by exact division.
    ///
    /// ```
    /// use sympchar::scalar::{UniPoly, Var, rat};
    /// // 2t^3 - 3t^2 + 1 = (t - 1)^2 (2t + 1)
    /// let p = UniPoly::from_ints(Var::T, &[1, 0, -3, 2]);
    /// let roots = p.rational_roots().unwrap();
    /// assert!(roots.splits);
    /// assert_eq!(roots.roots[&rat(1)], 2);
    /// assert_eq!(roots.roots[&(rat(-1) / rat(2))], 1);
    /// ```
    pub fn rational_roots(&self) -> Result<RootSet> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let degree = self.coeffs.len() - 1;
        let mut roots = BTreeMap::new();
        let mut rest = self.clone();

        let zeros = rest.coeffs.iter().take_while(|c| c.is_zero()).count();
        if zeros > 0 {
            roots.insert(Rational::zero(), zeros);
            rest = Self::new(rest.var, rest.coeffs[zeros..].to_vec());
        }

        if !rest.is_constant() {
            let ints = primitive_integer_form(&rest.coeffs);
            let bound = cauchy_bound(&ints);
            let candidates = candidate_roots(&ints[0], &ints[ints.len() - 1], &ints, &bound);
            for r in candidates {
                if rest.is_constant() {
                    break;
                }
                let lin = Self::new(rest.var, vec![-r.clone(), Rational::one()]);
                let mut mult = 0;
                while !rest.is_constant() && rest.eval(&r).is_zero() {
                    rest = rest.div_exact(&lin)?;
                    mult += 1;
                }
                if mult > 0 {
                    roots.insert(r, mult);
                }
            }
        }
        let total: usize = roots.values().sum();
        Ok(RootSet { roots, splits: total == degree })
    }
}

/// Integer coefficients with content 1 and positive leading coefficient.
fn primitive_integer_form(coeffs: &[Rational]) -> Vec<BigInt> {
    let den = common_denominator(coeffs);
    let mut ints: Vec<BigInt> = coeffs.iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer()).collect();
    let content = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    let sign = if ints.last().is_some_and(|c| c.is_negative()) { -1 } else { 1 };
    for c in ints.iter_mut() {
        *c = &*c / &content * sign;
    }
    ints
}

/// `1 + max |a_i / a_n|`, rounded up.
fn cauchy_bound(ints: &[BigInt]) -> BigInt {
    let lead = ints.last().expect("nonconstant").abs();
    let max = ints[..ints.len() - 1].iter().map(|c| c.abs()).max().unwrap_or_default();
    max.div_ceil(&lead) + 1
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs().to_biguint().expect("absolute value");
    if n.is_one() {
        return vec![BigInt::one()];
    }
    let factors = num_prime::nt_funcs::factorize::<BigUint>(n);
    let mut divs = vec![BigUint::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e + 1));
        for d in &divs {
            let mut pk = d.clone();
            next.push(pk.clone());
            for _ in 0..e {
                pk *= &p;
                next.push(pk.clone());
            }
        }
        divs = next;
    }
    divs.into_iter().map(BigInt::from).collect()
}

/// All `±p/q` with `p | a0`, `q | an` inside the Cauchy bound that pass the
/// `f(1)` / `f(-1)` divisibility filters, in ascending order.
fn candidate_roots(a0: &BigInt, an: &BigInt, ints: &[BigInt], bound: &BigInt) -> Vec<Rational> {
    let f1: BigInt = ints.iter().sum();
    let fm1: BigInt = ints.iter().enumerate().map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c }).sum();
    let ps = divisors(a0);
    let qs = divisors(an);
    let mut out = BTreeSet::new();
    for q in &qs {
        for p in &ps {
            if p > &(bound * q) {
                continue;
            }
            for p in [p.clone(), -p.clone()] {
                let r = Rational::new(p, q.clone());
                let (rp, rq) = (r.numer().clone(), r.denom().clone());
                // r = p/q is a root only if (q - p) | f(1) and (q + p) | f(-1).
                let ok1 = (&rq - &rp).is_zero() || (&f1 % (&rq - &rp)).is_zero();
                let ok2 = (&rq + &rp).is_zero() || (&fm1 % (&rq + &rp)).is_zero();
                if ok1 && ok2 {
                    out.insert(r);
                }
            }
        }
    }
    out.into_iter().collect()
}

impl super::Scalar for UniPoly {
    const KIND: ScalarKind = ScalarKind::UniPoly;

    fn zero() -> Self {
        UniPoly::zero(Var::S)
    }
    fn one() -> Self {
        UniPoly::constant(Var::S, <Rational as One>::one())
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
        UniPoly::constant(Var::S, r.clone())
    }
}

fn result_var(a: &UniPoly, b: &UniPoly) -> Var {
    debug_assert!(a.var == b.var || a.is_constant() || b.is_constant(), "mixing polynomials in different variables");
    if a.is_constant() {
        b.var
    } else {
        a.var
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        UniPoly::new(result_var(self, rhs), coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        UniPoly::new(result_var(self, rhs), coeffs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        let var = result_var(self, rhs);
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(var);
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::new(var, coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly { var: self.var, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty { <&$ty as $tr<&$ty>>::$m(&self, &rhs) }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &$ty) -> $ty { <&$ty as $tr<&$ty>>::$m(&self, rhs) }
        }
    )*
    impl Neg for $ty {
        type Output = $ty;
        fn neg(self) -> $ty { -&self }
    }
    };
}
pub(crate) use forward_owned;

forward_owned!(UniPoly, Add add, Sub sub, Mul mul);

/// Writes `c` as a coefficient in front of `x^k` (`k > 0`), with the sign
/// handled by the caller.
pub(crate) fn write_monomial(f: &mut fmt::Formatter<'_>, c: &Rational, sym: char, k: usize) -> fmt::Result {
    let power = match k {
        0 => String::new(),
        1 => sym.to_string(),
        _ => format!("{sym}^{k}"),
    };
    match (c.is_one(), k) {
        (_, 0) => write!(f, "{c}"),
        (true, _) => write!(f, "{power}"),
        (false, _) => write!(f, "{c}*{power}"),
    }
}

/// Canonical text: descending powers, reduced fractions, e.g. `s^2 - 3/2*s + 1`.
impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let sym = self.var.symbol();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            write_monomial(f, &c.abs(), sym, k)?;
            first = false;
        }
        Ok(())
    }
}

impl UniPoly {
    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}
