//! Characteristic polynomials and evaluation of polynomials at matrices.

use rayon::prelude::*;

use super::Matrix;
use crate::error::{Error, Result};
use crate::scalar::{integer_nodes, interpolate, interpolate2d, BiPoly, Rational, Scalar, UniPoly, Var};

impl Matrix<Rational> {
    /// `φ_M(t) = det(M - tE)`, recovered from `dim + 1` integer samples.
    ///
    /// The leading coefficient is `(-1)^dim`.
    pub fn charpoly(&self) -> Result<UniPoly> {
        let n = self.square_dim()?;
        let nodes = integer_nodes(n + 1);
        let values = nodes.iter().map(|c| self.shift(c).det()).collect::<Result<Vec<_>>>()?;
        interpolate(Var::T, &nodes, &values)
    }

    /// Whether `M` is diagonalizable over the rationals.
    ///
    /// A characteristic polynomial with irrational roots is reported as
    /// [`Error::IrrationalSpectrum`].
    pub fn is_diagonalizable(&self) -> Result<bool> {
        let n = self.square_dim()?;
        let roots = self.charpoly()?.rational_roots()?;
        if !roots.splits {
            return Err(Error::IrrationalSpectrum);
        }
        let mut total = 0;
        for lambda in roots.roots.keys() {
            total += self.eigenspace(lambda)?.dim();
        }
        Ok(total == n)
    }
}

/// Horner evaluation of `Σ coeffs[k]·M^k`.
pub fn apply_poly<T: Scalar>(coeffs: &[T], m: &Matrix<T>) -> Result<Matrix<T>> {
    let n = m.square_dim()?;
    let mut acc = Matrix::zeros(n, n);
    for c in coeffs.iter().rev() {
        acc = &acc * m;
        for i in 0..n {
            let v = acc.get(i, i).add(c);
            acc.set(i, i, v);
        }
    }
    Ok(acc)
}

/// `p(M)` for a rational matrix.
pub fn apply_uni(p: &UniPoly, m: &Matrix<Rational>) -> Result<Matrix<Rational>> {
    apply_poly(p.coeffs(), m)
}

/// Substitutes `t ↦ M` in `p(s, t)`, where `M` has entries in `ℚ[s]`.
pub fn apply_bipoly_t(p: &BiPoly, m: &Matrix<UniPoly>) -> Result<Matrix<UniPoly>> {
    apply_poly(p.t_coeffs(), m)
}

/// `φ_{(M-sE)(N-sE)}(t) = det((M-sE)(N-sE) - tE)`.
///
/// Sampled on `{0..=2n} × {0..=n}` and interpolated with degree bounds `(2n, n)`.
pub fn two_endo_charpoly(m: &Matrix<Rational>, n_mat: &Matrix<Rational>) -> Result<BiPoly> {
    let n = m.square_dim()?;
    let other = n_mat.square_dim()?;
    if other != n {
        return Err(Error::SizeMismatch { expected: n, found: other });
    }
    let s_nodes = integer_nodes(2 * n + 1);
    let t_nodes = integer_nodes(n + 1);
    let values = s_nodes
        .par_iter()
        .map(|s| {
            let prod = &m.shift(s) * &n_mat.shift(s);
            t_nodes.iter().map(|t| prod.shift(t).det()).collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    interpolate2d(&s_nodes, &t_nodes, &values, (2 * n, n))
}
