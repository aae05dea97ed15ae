use super::Matrix;
use crate::error::{Error, Result};
use crate::scalar::{Field, Rational};

/// A linear subspace of `K^ambient`, stored by its reduced row echelon basis.
///
/// The basis is canonical, so two subspaces are equal exactly when their
/// stored bases are.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<T> {
    ambient: usize,
    basis: Vec<Vec<T>>,
}

impl<T: Field> Subspace<T> {
    /// Span of arbitrary vectors, which are assumed to have length `ambient`.
    pub(crate) fn spanned_by(ambient: usize, vectors: Vec<Vec<T>>) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient);
        }
        let echelon = Matrix::from_rows(vectors).expect("equal-length vectors").rref();
        let basis = (0..echelon.pivots.len()).map(|i| echelon.reduced.row(i).to_vec()).collect();
        Subspace { ambient, basis }
    }

    /// Span of the given vectors, checking their lengths.
    pub fn span(ambient: usize, vectors: Vec<Vec<T>>) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::SizeMismatch { expected: ambient, found: v.len() });
        }
        Ok(Self::spanned_by(ambient, vectors))
    }

    /// The same span over a larger scalar field.
    pub fn lift(w: &Subspace<Rational>) -> Self {
        let basis = w.basis.iter().map(|v| v.iter().map(T::from_rational).collect()).collect();
        Self::spanned_by(w.ambient, basis)
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::spanned_by(ambient, Matrix::<T>::identity(ambient).columns())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Canonical basis vectors.
    pub fn basis(&self) -> &[Vec<T>] {
        &self.basis
    }

    /// Basis vectors as the columns of an `ambient × dim` matrix.
    pub fn basis_matrix(&self) -> Matrix<T> {
        Matrix::from_columns(self.ambient, &self.basis)
    }

    pub fn contains(&self, v: &[T]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut vectors = self.basis.clone();
        vectors.push(v.to_vec());
        Self::spanned_by(self.ambient, vectors).dim() == self.dim()
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.basis.iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Self) -> Self {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let mut vectors = self.basis.clone();
        vectors.extend(other.basis.iter().cloned());
        Self::spanned_by(self.ambient, vectors)
    }

    /// Intersection through the kernel of `[U | -W]`.
    pub fn intersect(&self, other: &Self) -> Self {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ambient);
        }
        let (k, l) = (self.dim(), other.dim());
        let stacked = Matrix::from_fn(self.ambient, k + l, |i, j| {
            if j < k {
                self.basis[j][i].clone()
            } else {
                other.basis[j - k][i].neg()
            }
        });
        let u = self.basis_matrix();
        let vectors = stacked.kernel_basis().basis().iter().map(|coef| u.mul_vec(&coef[..k])).collect();
        Self::spanned_by(self.ambient, vectors)
    }

    /// Image under a linear map.
    pub fn image_under(&self, m: &Matrix<T>) -> Self {
        Self::spanned_by(m.rows(), self.basis.iter().map(|v| m.mul_vec(v)).collect())
    }

    /// `M(U) ⊆ U`.
    pub fn is_invariant_under(&self, m: &Matrix<T>) -> bool {
        self.basis.iter().all(|v| self.contains(&m.mul_vec(v)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn canonical_basis_makes_equality_structural() {
        let a = Subspace::span(3, vec![v(&[1, 1, 0]), v(&[0, 1, 1])]).unwrap();
        let b = Subspace::span(3, vec![v(&[1, 2, 1]), v(&[1, 0, -1])]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn intersection_and_sum() {
        let xy = Subspace::span(3, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap();
        let yz = Subspace::span(3, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]).unwrap();
        let y = xy.intersect(&yz);
        assert_eq!(y.basis(), &[v(&[0, 1, 0])]);
        assert_eq!(xy.sum(&yz), Subspace::full(3));
        assert!(y.is_subspace_of(&xy));
        assert!(!xy.is_subspace_of(&y));
    }

    #[test]
    fn length_checked() {
        assert!(Subspace::span(2, vec![v(&[1, 2, 3])]).is_err());
    }
}
