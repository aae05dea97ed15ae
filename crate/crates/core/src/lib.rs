//! Exact symplectic characteristic polynomials, Pfaffians, pair eigenspaces,
//! symplectic diagonalization and the symplectic similarity decision, all over `ℚ`.
//!
//! ```
//! use sympchar::scp::{scp, scp_factor_pairs};
//! use sympchar::symplectic::standard_form;
//! use sympchar::Matrix;
//!
//! let chi = scp(&Matrix::from_diag_ints(&[1, 2, 3, 4]), &standard_form(2)).unwrap();
//! assert_eq!(scp_factor_pairs(&chi).unwrap().to_string(), "{(1, 3):1, (2, 4):1}");
//! ```

pub mod cli;
pub mod diag;
pub mod eigen;
pub mod error;
pub mod matrix;
pub mod pfaffian;
pub mod scalar;
pub mod scp;
pub mod symplectic;

pub use error::{Error, Result};
pub use matrix::{Matrix, Subspace};
pub use scalar::{BiPoly, Field, RatFun, Rational, Scalar, ScalarKind, UniPoly, Var};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    pub mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/scalars.md")]
    pub mod scalars {}
    #[doc = include_str!("../../../book/src/pfaffians.md")]
    pub mod pfaffians {}
    #[doc = include_str!("../../../book/src/symplectic-forms.md")]
    pub mod symplectic_forms {}
    #[doc = include_str!("../../../book/src/characteristic-polynomial.md")]
    pub mod characteristic_polynomial {}
    #[doc = include_str!("../../../book/src/pair-eigenspaces.md")]
    pub mod pair_eigenspaces {}
    #[doc = include_str!("../../../book/src/diagonalization.md")]
    pub mod diagonalization {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
