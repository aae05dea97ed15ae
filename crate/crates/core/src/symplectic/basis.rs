use super::{classify_subspace, SubspaceKind, SymplecticForm};
use crate::error::{Error, Result};
use crate::matrix::{Matrix, Subspace};
use crate::scalar::{rat, Field, Rational};

/// Vectors `e₁..e_k, f₁..f_k` with `ω(eᵢ,eⱼ) = ω(fᵢ,fⱼ) = 0` and `ω(eᵢ,fⱼ) = δᵢⱼ`.
///
/// When `2k` equals the ambient dimension this is a symplectic basis of the
/// whole space; otherwise it is one of the symplectic subspace it spans.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticBasis {
    ambient: usize,
    e: Vec<Vec<Rational>>,
    f: Vec<Vec<Rational>>,
}

impl SymplecticBasis {
    /// Checks the defining relations against `form`.
    pub fn new(form: &SymplecticForm, e: Vec<Vec<Rational>>, f: Vec<Vec<Rational>>) -> Result<Self> {
        let ambient = form.dim();
        if e.len() != f.len() {
            return Err(Error::SizeMismatch { expected: e.len(), found: f.len() });
        }
        if let Some(x) = e.iter().chain(&f).find(|x| x.len() != ambient) {
            return Err(Error::SizeMismatch { expected: ambient, found: x.len() });
        }
        let k = e.len();
        for i in 0..k {
            for j in 0..k {
                let ee = form.omega(&e[i], &e[j]);
                let ff = form.omega(&f[i], &f[j]);
                let ef = form.omega(&e[i], &f[j]);
                let delta = if i == j { rat(1) } else { rat(0) };
                if ee != rat(0) || ff != rat(0) || ef != delta {
                    return Err(Error::NotSymplecticBasis);
                }
            }
        }
        Ok(SymplecticBasis { ambient, e, f })
    }

    /// Splits the columns of `b` into `e` (first half) and `f` (second half).
    pub fn from_matrix(form: &SymplecticForm, b: &Matrix<Rational>) -> Result<Self> {
        if b.cols() % 2 == 1 {
            return Err(Error::OddSize(b.cols()));
        }
        let mut cols = b.columns();
        let f = cols.split_off(b.cols() / 2);
        Self::new(form, cols, f)
    }

    /// Number of `(e, f)` pairs.
    pub fn n(&self) -> usize {
        self.e.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn e(&self) -> &[Vec<Rational>] {
        &self.e
    }

    pub fn f(&self) -> &[Vec<Rational>] {
        &self.f
    }

    pub fn is_full(&self) -> bool {
        2 * self.n() == self.ambient
    }

    /// Columns `(e₁..e_k, f₁..f_k)`.
    pub fn matrix(&self) -> Matrix<Rational> {
        let cols: Vec<Vec<Rational>> = self.e.iter().chain(&self.f).cloned().collect();
        Matrix::from_columns(self.ambient, &cols)
    }

    pub fn span(&self) -> Subspace<Rational> {
        Subspace::spanned_by(self.ambient, self.e.iter().chain(&self.f).cloned().collect())
    }

    /// Concatenates bases of ω-orthogonal pieces.
    pub fn join(form: &SymplecticForm, parts: &[SymplecticBasis]) -> Result<Self> {
        let e = parts.iter().flat_map(|p| p.e.iter().cloned()).collect();
        let f = parts.iter().flat_map(|p| p.f.iter().cloned()).collect();
        Self::new(form, e, f)
    }
}

fn axpy(y: &mut [Rational], a: &Rational, x: &[Rational]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += a * xi;
    }
}

/// Symplectic basis of the whole space.
///
/// Takes the first vector `v` pairing nontrivially with some `w`, sets `e = v`
/// and `f = w / ω(v, w)`, projects the remaining vectors onto the
/// ω-complement of `span{e, f}` and repeats.
pub fn symplectic_basis(form: &SymplecticForm) -> Result<SymplecticBasis> {
    symplectic_basis_of(&Subspace::full(form.dim()), form)
}

/// Symplectic basis of a symplectic subspace, built from its stored basis.
pub fn symplectic_basis_of(w: &Subspace<Rational>, form: &SymplecticForm) -> Result<SymplecticBasis> {
    let mut rest: Vec<Vec<Rational>> = w.basis().to_vec();
    let (mut es, mut fs) = (Vec::new(), Vec::new());
    while !rest.is_empty() {
        let found = (0..rest.len())
            .find_map(|i| (0..rest.len()).find(|&j| form.omega(&rest[i], &rest[j]) != rat(0)).map(|j| (i, j)));
        let Some((i, j)) = found else {
            return Err(Error::DegenerateForm);
        };
        let e = rest[i].clone();
        let scale = form.omega(&e, &rest[j]).inv().expect("nonzero pairing");
        let f: Vec<Rational> = rest[j].iter().map(|x| x * &scale).collect();
        rest = rest
            .into_iter()
            .enumerate()
            .filter(|&(k, _)| k != i && k != j)
            .map(|(_, mut x)| {
                let (xf, xe) = (form.omega(&x, &f), form.omega(&x, &e));
                axpy(&mut x, &-xf, &e);
                axpy(&mut x, &xe, &f);
                x
            })
            .collect();
        es.push(e);
        fs.push(f);
    }
    SymplecticBasis::new(form, es, fs)
}

/// Completes the stored basis `e` of `l1` by `f ⊂ l2` with `ω(eᵢ, fⱼ) = δᵢⱼ`.
///
/// Both subspaces must be isotropic of the same dimension; a degenerate
/// pairing between them is reported as [`Error::NotTransverse`].
pub fn pair_complete(
    l1: &Subspace<Rational>,
    l2: &Subspace<Rational>,
    form: &SymplecticForm,
) -> Result<SymplecticBasis> {
    if l1.dim() != l2.dim() {
        return Err(Error::NotTransverse);
    }
    let e = l1.basis();
    let g = l2.basis();
    let pairing = Matrix::from_fn(e.len(), g.len(), |j, k| form.omega(&e[j], &g[k]));
    let x = pairing.inverse().map_err(|_| Error::NotTransverse)?;
    let f = Matrix::<Rational>::from_columns(form.dim(), g).try_mul(&x)?.columns();
    SymplecticBasis::new(form, e.to_vec(), f)
}

/// Symplectic basis with `e` the stored basis of `l1` and `f` inside `l2`,
/// for transverse Lagrangian subspaces.
pub fn lagrangian_complete(
    l1: &Subspace<Rational>,
    l2: &Subspace<Rational>,
    form: &SymplecticForm,
) -> Result<SymplecticBasis> {
    for l in [l1, l2] {
        if classify_subspace(l, form)? != SubspaceKind::Lagrangian {
            return Err(Error::NotLagrangian);
        }
    }
    if !l1.intersect(l2).is_zero() {
        return Err(Error::NotTransverse);
    }
    pair_complete(l1, l2, form)
}
