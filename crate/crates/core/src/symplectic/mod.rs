//! Symplectic forms, adjoints, orthogonal complements and symplectic bases.

mod basis;
mod random;

use std::fmt;

pub use basis::{lagrangian_complete, pair_complete, symplectic_basis, symplectic_basis_of, SymplecticBasis};
pub use random::{random_symplectic, random_symplectic_for};

use crate::error::{Error, Result};
use crate::matrix::{Matrix, Subspace};
use crate::pfaffian::{is_alternating, pfaffian_bipoly, pfaffian_field};
use crate::scalar::{rat, BiPoly, Rational, Scalar};

/// A nondegenerate alternating bilinear form, given by its Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticForm {
    gram: Matrix<Rational>,
    gram_inv: Matrix<Rational>,
}

impl SymplecticForm {
    /// Validates `gram`: square, of positive even size, alternating and invertible.
    pub fn new(gram: Matrix<Rational>) -> Result<Self> {
        let d = gram.square_dim()?;
        if d % 2 == 1 {
            return Err(Error::OddSize(d));
        }
        if !is_alternating(&gram) {
            return Err(Error::NotAlternating);
        }
        if d == 0 {
            return Err(Error::DegenerateForm);
        }
        let gram_inv = gram.inverse().map_err(|_| Error::DegenerateForm)?;
        Ok(SymplecticForm { gram, gram_inv })
    }

    /// The block form `[[O, E], [-E, O]]` on `ℚ^{2n}`.
    pub fn standard(n: usize) -> Self {
        assert!(n >= 1, "symplectic dimension must be positive");
        let gram = standard_gram(n);
        let gram_inv = -&gram;
        SymplecticForm { gram, gram_inv }
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    /// Half the dimension.
    pub fn n(&self) -> usize {
        self.dim() / 2
    }

    pub fn gram(&self) -> &Matrix<Rational> {
        &self.gram
    }

    pub fn gram_inverse(&self) -> &Matrix<Rational> {
        &self.gram_inv
    }

    pub fn is_standard(&self) -> bool {
        self.gram == standard_gram(self.n())
    }

    /// `ω(v, w) = vᵀ G w`.
    pub fn omega(&self, v: &[Rational], w: &[Rational]) -> Rational {
        let gw = self.gram.mul_vec(w);
        v.iter().zip(&gw).fold(rat(0), |acc, (a, b)| acc + a * b)
    }

    /// Errors unless `m` is a square matrix of the form's size.
    pub fn check_operator<T: Scalar>(&self, m: &Matrix<T>) -> Result<()> {
        let d = m.square_dim()?;
        if d != self.dim() {
            return Err(Error::SizeMismatch { expected: self.dim(), found: d });
        }
        Ok(())
    }

    fn check_subspace(&self, w: &Subspace<Rational>) -> Result<()> {
        if w.ambient() != self.dim() {
            return Err(Error::SizeMismatch { expected: self.dim(), found: w.ambient() });
        }
        Ok(())
    }
}

fn standard_gram(n: usize) -> Matrix<Rational> {
    Matrix::from_fn(2 * n, 2 * n, |i, j| {
        if j == i + n {
            rat(1)
        } else if i == j + n {
            rat(-1)
        } else {
            rat(0)
        }
    })
}

pub fn standard_form(n: usize) -> SymplecticForm {
    SymplecticForm::standard(n)
}

/// `M^{*ω} = G⁻¹ Mᵀ G`, the unique map with `ω(Mv, w) = ω(v, M^{*ω} w)`.
///
/// ```
/// use sympchar::matrix::Matrix;
/// use sympchar::symplectic::{adjoint, standard_form};
/// let m = Matrix::from_ints(&[&[1, 2], &[3, 4]]);
/// let adj = adjoint(&m, &standard_form(1)).unwrap();
/// assert_eq!(adj, Matrix::from_ints(&[&[4, -2], &[-3, 1]]));
/// ```
pub fn adjoint(m: &Matrix<Rational>, form: &SymplecticForm) -> Result<Matrix<Rational>> {
    adjoint_in(m, form)
}

/// The adjoint for matrices over any scalar containing the rationals.
pub fn adjoint_in<T: Scalar>(m: &Matrix<T>, form: &SymplecticForm) -> Result<Matrix<T>> {
    form.check_operator(m)?;
    let g = Matrix::<T>::lift(&form.gram);
    let g_inv = Matrix::<T>::lift(&form.gram_inv);
    Ok(&(&g_inv * &m.transpose()) * &g)
}

/// `W^{⊥ω}`.
pub fn perp(w: &Subspace<Rational>, form: &SymplecticForm) -> Result<Subspace<Rational>> {
    form.check_subspace(w)?;
    if w.is_zero() {
        return Ok(Subspace::full(form.dim()));
    }
    // Rows (G wⱼ)ᵀ: v is in the complement iff each ω(v, wⱼ) = vᵀ G wⱼ vanishes.
    let rows = w.basis().iter().map(|v| form.gram.mul_vec(v)).collect();
    Ok(Matrix::from_rows(rows)?.kernel_basis())
}

/// Position of a subspace relative to its ω-complement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SubspaceKind {
    Lagrangian,
    Symplectic,
    Isotropic,
    Coisotropic,
    Generic,
}

impl fmt::Display for SubspaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            SubspaceKind::Lagrangian => "lagrangian",
            SubspaceKind::Symplectic => "symplectic",
            SubspaceKind::Isotropic => "isotropic",
            SubspaceKind::Coisotropic => "coisotropic",
            SubspaceKind::Generic => "generic",
        };
        f.write_str(name)
    }
}

/// Classifies `W`, reporting the first matching kind in the order
/// Lagrangian, symplectic, isotropic, coisotropic, generic.
pub fn classify_subspace(w: &Subspace<Rational>, form: &SymplecticForm) -> Result<SubspaceKind> {
    let wp = perp(w, form)?;
    let kind = if *w == wp {
        SubspaceKind::Lagrangian
    } else if w.intersect(&wp).is_zero() {
        SubspaceKind::Symplectic
    } else if w.is_subspace_of(&wp) {
        SubspaceKind::Isotropic
    } else if wp.is_subspace_of(w) {
        SubspaceKind::Coisotropic
    } else {
        SubspaceKind::Generic
    };
    Ok(kind)
}

/// `Pᵀ G P = G`.
pub fn is_symplectic_map(p: &Matrix<Rational>, form: &SymplecticForm) -> Result<bool> {
    form.check_operator(p)?;
    Ok(&(&p.transpose() * &form.gram) * p == form.gram)
}

/// `M M^{*ω} = M^{*ω} M`.
pub fn is_symplectically_normal(m: &Matrix<Rational>, form: &SymplecticForm) -> Result<bool> {
    Ok(m.commutes_with(&adjoint(m, form)?))
}

/// `M^{*ω} = M`.
pub fn is_self_adjoint(m: &Matrix<Rational>, form: &SymplecticForm) -> Result<bool> {
    Ok(adjoint(m, form)? == *m)
}

/// Reorders rows and columns from `(e₁..e_n, f₁..f_n)` to `(e₁, f₁, …, e_n, f_n)`.
pub fn interleave<T: Scalar>(m: &Matrix<T>) -> Matrix<T> {
    let n = m.rows() / 2;
    let perm: Vec<usize> = (0..n).flat_map(|i| [i, n + i]).collect();
    m.permute_symmetric(&perm)
}

/// `Bᵀ Γ B` in interleaved order, for the Gram `Γ` of a bilinear form in working coordinates.
pub fn gram_in_basis<T: Scalar>(gram: &Matrix<T>, basis: &SymplecticBasis) -> Matrix<T> {
    let b = Matrix::<T>::lift(&basis.matrix());
    interleave(&(&(&b.transpose() * gram) * &b))
}

/// `Pf_ω(ω_A)` with `ω_A(v, w) = ω(v, Aw)`; requires `A^{*ω} = A`.
///
/// The Gram of `ω_A` is taken in the interleaved order of a symplectic basis,
/// so that `Pf_ω(ω) = 1`.
pub fn pf_omega(a: &Matrix<Rational>, basis: &SymplecticBasis, form: &SymplecticForm) -> Result<Rational> {
    if !is_self_adjoint(a, form)? {
        return Err(Error::NotSelfAdjoint);
    }
    let gram_a = &form.gram * a;
    pfaffian_field(&gram_in_basis(&gram_a, basis))
}

/// `Pf_ω` of the alternating form with Gram `gram` (in working coordinates) over `ℚ[s, t]`.
pub fn pf_omega_bipoly(gram: &Matrix<BiPoly>, basis: &SymplecticBasis, bounds: (usize, usize)) -> Result<BiPoly> {
    pfaffian_bipoly(&gram_in_basis(gram, basis), bounds)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    fn span(vs: &[&[i64]]) -> Subspace<Rational> {
        Subspace::span(vs[0].len(), vs.iter().map(|x| v(x)).collect()).unwrap()
    }

    #[test]
    fn standard_forms() {
        assert_eq!(standard_form(1).gram(), &Matrix::from_ints(&[&[0, 1], &[-1, 0]]));
        let g = standard_form(2);
        assert_eq!(g.gram().get(0, 2), &rat(1));
        assert_eq!(g.gram().get(3, 1), &rat(-1));
        assert_eq!(SymplecticForm::new(g.gram().clone()).unwrap(), g);
    }

    #[test]
    fn invalid_forms() {
        assert_eq!(SymplecticForm::new(Matrix::from_ints(&[&[0, 1], &[1, 0]])), Err(Error::NotAlternating));
        assert_eq!(SymplecticForm::new(Matrix::zeros(2, 2)), Err(Error::DegenerateForm));
        assert_eq!(SymplecticForm::new(Matrix::zeros(3, 3)), Err(Error::OddSize(3)));
    }

    #[test]
    fn adjoint_examples() {
        let f2 = standard_form(2);
        let d = Matrix::from_diag_ints(&[1, 2, 3, 4]);
        assert_eq!(adjoint(&d, &f2).unwrap(), Matrix::from_diag_ints(&[3, 4, 1, 2]));
        assert_eq!(adjoint(&Matrix::identity(4), &f2).unwrap(), Matrix::identity(4));
        assert!(matches!(adjoint(&Matrix::identity(2), &f2), Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn adjoint_identity_holds() {
        let form =
            SymplecticForm::new(Matrix::from_ints(&[&[0, 2, 1, 0], &[-2, 0, 0, 3], &[-1, 0, 0, 1], &[0, -3, -1, 0]]))
                .unwrap();
        let m = Matrix::from_ints(&[&[1, 2, 0, -1], &[0, 3, 1, 1], &[2, 0, -1, 0], &[1, 1, 1, 1]]);
        let adj = adjoint(&m, &form).unwrap();
        let basis = Matrix::<Rational>::identity(4).columns();
        for x in &basis {
            for y in &basis {
                assert_eq!(form.omega(&m.mul_vec(x), y), form.omega(x, &adj.mul_vec(y)));
            }
        }
    }

    #[test]
    fn perp_examples() {
        let f1 = standard_form(1);
        assert_eq!(perp(&span(&[&[1, 0]]), &f1).unwrap(), span(&[&[1, 0]]));
        assert!(perp(&Subspace::full(2), &f1).unwrap().is_zero());
        let f2 = standard_form(2);
        let w = span(&[&[1, 0, 0, 0], &[0, 0, 1, 0]]);
        assert_eq!(perp(&w, &f2).unwrap(), span(&[&[0, 1, 0, 0], &[0, 0, 0, 1]]));
    }

    #[test]
    fn classification() {
        let f2 = standard_form(2);
        let kind = |vs: &[&[i64]]| classify_subspace(&span(vs), &f2).unwrap();
        assert_eq!(kind(&[&[1, 0, 0, 0], &[0, 0, 1, 0]]), SubspaceKind::Symplectic);
        assert_eq!(kind(&[&[1, 0, 0, 0], &[0, 1, 0, 0]]), SubspaceKind::Lagrangian);
        assert_eq!(kind(&[&[1, 0, 0, 0]]), SubspaceKind::Isotropic);
        assert_eq!(kind(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]]), SubspaceKind::Coisotropic);
        let f3 = standard_form(3);
        let w = span(&[&[1, 0, 0, 0, 0, 0], &[0, 0, 0, 1, 0, 0], &[0, 1, 0, 0, 0, 0]]);
        assert_eq!(classify_subspace(&w, &f3).unwrap(), SubspaceKind::Generic);
    }

    #[test]
    fn symplectic_maps() {
        let f1 = standard_form(1);
        assert!(is_symplectic_map(&Matrix::identity(2), &f1).unwrap());
        let d = Matrix::diag(&[rat(2), rat(1) / rat(2)]);
        assert!(is_symplectic_map(&d, &f1).unwrap());
        assert!(!is_symplectic_map(&Matrix::from_diag_ints(&[2, 2]), &f1).unwrap());
    }

    #[test]
    fn normality() {
        let f1 = standard_form(1);
        assert!(is_symplectically_normal(&Matrix::from_diag_ints(&[1, 2]), &f1).unwrap());
        // In dimension two M·M^{*ω} = det(M)·E, so every map is normal.
        assert!(is_symplectically_normal(&Matrix::from_ints(&[&[1, 1], &[0, 1]]), &f1).unwrap());
        let f2 = standard_form(2);
        let m = Matrix::from_ints(&[&[0, 1, 1, 0], &[0, 0, 0, 1], &[0, 0, 0, 0], &[0, 0, 0, 0]]);
        assert!(!is_symplectically_normal(&m, &f2).unwrap());
        assert!(is_symplectically_normal(&Matrix::from_diag_ints(&[1, 2, 3, 4]), &f2).unwrap());
    }

    #[test]
    fn pf_omega_examples() {
        let f1 = standard_form(1);
        let b1 = symplectic_basis(&f1).unwrap();
        assert_eq!(pf_omega(&Matrix::identity(2), &b1, &f1).unwrap(), rat(1));
        assert_eq!(pf_omega(&Matrix::from_diag_ints(&[2, 2]), &b1, &f1).unwrap(), rat(2));
        let f2 = standard_form(2);
        let b2 = symplectic_basis(&f2).unwrap();
        assert_eq!(pf_omega(&Matrix::identity(4), &b2, &f2).unwrap(), rat(1));
        let m = Matrix::from_diag_ints(&[1, 2, 3, 4]);
        let mm = &m * &adjoint(&m, &f2).unwrap();
        assert_eq!(pf_omega(&mm, &b2, &f2).unwrap(), rat(24));
        assert_eq!(pf_omega(&m, &b2, &f2), Err(Error::NotSelfAdjoint));
    }
}
