//! The exact scalar tower: `Rational ⊂ UniPoly, BiPoly` and the rational function
//! field `RatFun = ℚ(s)`.
//!
//! Every scalar implements [`Scalar`] so that [`Matrix`](crate::Matrix) can be
//! generic over it. The two fields of the tower ([`Rational`] and [`RatFun`])
//! additionally implement [`Field`], which is what elimination needs.

mod bipoly;
mod interp;
mod parse;
mod ratfun;
mod rational;
mod unipoly;

use std::fmt;

pub use bipoly::BiPoly;
pub use interp::{integer_nodes, interpolate, interpolate2d};
pub use ratfun::RatFun;
pub use rational::{parse_rational, rat, Rational};
pub use unipoly::{RootSet, UniPoly, Var};

/// Which member of the tower a matrix is built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScalarKind {
    Rational,
    UniPoly,
    BiPoly,
    RatFun,
}

/// Commutative ring operations needed by dense matrix code.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    const KIND: ScalarKind;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Embeds a rational constant.
    fn from_rational(r: &Rational) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// A [`Scalar`] in which every nonzero element is invertible.
pub trait Field: Scalar {
    /// `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// Panics on division by zero; callers check pivots first.
    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv().expect("division by zero in a field"))
    }
}
