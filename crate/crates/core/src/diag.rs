//! Symplectic diagonalization and the symplectic similarity decision.

use crate::eigen::sympl_pair_decomposition;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Rational;
use crate::scp::scp;
use crate::symplectic::{
    adjoint, is_symplectic_map, is_symplectically_normal, pair_complete, symplectic_basis_of, SymplecticBasis,
    SymplecticForm,
};

/// A symplectic basis `(e₁..e_n, f₁..f_n)` with `Meᵢ = λᵢeᵢ` and `Mfᵢ = μᵢfᵢ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticDiagonalization {
    pub basis: SymplecticBasis,
    /// `(λᵢ, μᵢ)` with `λᵢ ≤ μᵢ`, sorted.
    pub pairs: Vec<(Rational, Rational)>,
}

impl SymplecticDiagonalization {
    /// The change of basis `P`, whose columns are the basis vectors.
    pub fn matrix(&self) -> Matrix<Rational> {
        self.basis.matrix()
    }

    /// `diag(λ₁..λ_n, μ₁..μ_n) = P⁻¹MP`.
    pub fn diagonal(&self) -> Matrix<Rational> {
        let entries: Vec<Rational> =
            self.pairs.iter().map(|p| p.0.clone()).chain(self.pairs.iter().map(|p| p.1.clone())).collect();
        Matrix::diag(&entries)
    }
}

/// A symplectic basis adapted to `M M^{*ω}` and `M + M^{*ω}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalPairBasis {
    pub basis: SymplecticBasis,
    pub pairs: Vec<(Rational, Rational)>,
}

fn require_normal(m: &Matrix<Rational>, form: &SymplecticForm) -> Result<Matrix<Rational>> {
    form.check_operator(m)?;
    if !is_symplectically_normal(m, form)? {
        return Err(Error::NotSymplecticallyNormal);
    }
    adjoint(m, form)
}

fn verify_diagonal(m: &Matrix<Rational>, form: &SymplecticForm, d: &SymplecticDiagonalization) -> Result<()> {
    let p = d.matrix();
    // The columns must be a symplectic basis, i.e. PᵀGP = Ω (not G).
    let symplectic = SymplecticBasis::from_matrix(form, &p).is_ok();
    if symplectic && m * &p == &p * &d.diagonal() {
        Ok(())
    } else {
        Err(Error::Internal("diagonalizing basis failed verification".into()))
    }
}

/// Symplectic basis of eigenvectors of a symplectically normal, diagonalizable `M`.
///
/// Each pair space `Ṽ^ω_M(λ, μ)` is handled on its own: for `λ ≠ μ` the
/// `λ`-eigenvectors are completed by `μ`-eigenvectors, for `λ = μ` any
/// symplectic basis of the space will do.
///
/// ```
/// use sympchar::diag::symplectic_diagonalize;
/// use sympchar::matrix::Matrix;
/// use sympchar::symplectic::standard_form;
/// let m = Matrix::from_diag_ints(&[1, 2, 3, 4]);
/// let d = symplectic_diagonalize(&m, &standard_form(2)).unwrap();
/// assert_eq!(d.matrix(), Matrix::identity(4));
/// ```
pub fn symplectic_diagonalize(m: &Matrix<Rational>, form: &SymplecticForm) -> Result<SymplecticDiagonalization> {
    let adj = require_normal(m, form)?;
    if !m.is_diagonalizable()? {
        return Err(Error::NotDiagonalizable);
    }
    let dec = sympl_pair_decomposition(m, form)?;
    let mut blocks = Vec::with_capacity(dec.pairs.len());
    let mut pairs = Vec::new();
    for (p, w) in dec.pairs.iter().zip(&dec.spaces) {
        let block = if p.lambda == p.mu {
            symplectic_basis_of(w, form)?
        } else {
            let l1 = m.eigenspace(&p.lambda)?.intersect(&adj.eigenspace(&p.mu)?);
            let l2 = m.eigenspace(&p.mu)?.intersect(&adj.eigenspace(&p.lambda)?);
            pair_complete(&l1, &l2, form)?
        };
        pairs.extend(std::iter::repeat_n((p.lambda.clone(), p.mu.clone()), p.multiplicity));
        blocks.push(block);
    }
    let out = SymplecticDiagonalization { basis: SymplecticBasis::join(form, &blocks)?, pairs };
    verify_diagonal(m, form, &out)?;
    Ok(out)
}

/// Outcome of [`symplectically_similar`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Similarity {
    pub similar: bool,
    /// A symplectic `P` with `P⁻¹MP = N`, present exactly when `similar`.
    pub witness: Option<Matrix<Rational>>,
}

fn diagonalize_for_similarity(m: &Matrix<Rational>, form: &SymplecticForm) -> Result<SymplecticDiagonalization> {
    symplectic_diagonalize(m, form).map_err(|e| match e {
        Error::NotSymplecticallyNormal | Error::NotDiagonalizable | Error::FactorizationFailed => {
            Error::NotSymplecticallyDiagonalizable
        }
        other => other,
    })
}

/// Decides symplectic similarity of two symplectically diagonalizable maps.
///
/// They are similar exactly when their symplectic characteristic polynomials
/// agree. The witness is `P_M · P_N⁻¹` for the canonical diagonalizing bases.
pub fn symplectically_similar(m: &Matrix<Rational>, n: &Matrix<Rational>, form: &SymplecticForm) -> Result<Similarity> {
    let dm = diagonalize_for_similarity(m, form)?;
    let dn = diagonalize_for_similarity(n, form)?;
    if scp(m, form)? != scp(n, form)? {
        return Ok(Similarity { similar: false, witness: None });
    }
    if dm.pairs != dn.pairs {
        return Err(Error::Internal("equal polynomials with different pair lists".into()));
    }
    let p = &dm.matrix() * &dn.matrix().inverse()?;
    let verified = is_symplectic_map(&p, form)? && m * &p == &p * n;
    if !verified {
        return Err(Error::Internal("similarity witness failed verification".into()));
    }
    Ok(Similarity { similar: true, witness: Some(p) })
}

fn distinct_pairs(m: &Matrix<Rational>, form: &SymplecticForm) -> Result<crate::eigen::PairDecomposition> {
    require_normal(m, form)?;
    let dec = sympl_pair_decomposition(m, form)?;
    if dec.pairs.iter().any(|p| p.multiplicity > 1) {
        return Err(Error::RepeatedPairFactor);
    }
    Ok(dec)
}

/// Symplectic basis with `MM^{*ω}eᵢ = λᵢμᵢeᵢ` and `(M + M^{*ω})eᵢ = (λᵢ + μᵢ)eᵢ`,
/// and the same on `fᵢ`, when the pair factors of `χ` are pairwise distinct.
///
/// `M` need not be diagonalizable.
pub fn normal_pair_basis(m: &Matrix<Rational>, form: &SymplecticForm) -> Result<NormalPairBasis> {
    let dec = distinct_pairs(m, form)?;
    let blocks = dec.spaces.iter().map(|w| symplectic_basis_of(w, form)).collect::<Result<Vec<_>>>()?;
    let basis = SymplecticBasis::join(form, &blocks)?;
    let pairs: Vec<(Rational, Rational)> = dec.pairs.iter().map(|p| (p.lambda.clone(), p.mu.clone())).collect();

    let adj = adjoint(m, form)?;
    let (prod, sum) = (m * &adj, m + &adj);
    for (i, (l, u)) in pairs.iter().enumerate() {
        for v in [&basis.e()[i], &basis.f()[i]] {
            let scaled = |c: Rational| v.iter().map(|x| x * &c).collect::<Vec<_>>();
            if prod.mul_vec(v) != scaled(l * u) || sum.mul_vec(v) != scaled(l + u) {
                return Err(Error::Internal("pair basis failed verification".into()));
            }
        }
    }
    Ok(NormalPairBasis { basis, pairs })
}

/// Symplectic basis with `Meᵢ = λᵢeᵢ`, `M^{*ω}eᵢ = μᵢeᵢ`, `Mfᵢ = μᵢfᵢ` and
/// `M^{*ω}fᵢ = λᵢfᵢ`, when the pair factors are distinct and every `λᵢ ≠ μᵢ`.
pub fn distinct_pair_eigenbasis(m: &Matrix<Rational>, form: &SymplecticForm) -> Result<SymplecticDiagonalization> {
    let dec = distinct_pairs(m, form)?;
    if dec.pairs.iter().any(|p| p.lambda == p.mu) {
        return Err(Error::EqualPairValues);
    }
    let adj = adjoint(m, form)?;
    let mut blocks = Vec::with_capacity(dec.pairs.len());
    for p in &dec.pairs {
        let e_line = m.eigenspace(&p.lambda)?.intersect(&adj.eigenspace(&p.mu)?);
        let f_line = m.eigenspace(&p.mu)?.intersect(&adj.eigenspace(&p.lambda)?);
        if e_line.dim() != 1 || f_line.dim() != 1 {
            return Err(Error::Internal("eigenline of a distinct pair is not one-dimensional".into()));
        }
        blocks.push(pair_complete(&e_line, &f_line, form)?);
    }
    let pairs = dec.pairs.iter().map(|p| (p.lambda.clone(), p.mu.clone())).collect();
    let out = SymplecticDiagonalization { basis: SymplecticBasis::join(form, &blocks)?, pairs };
    verify_diagonal(m, form, &out)?;
    let p = out.matrix();
    let swapped: Vec<Rational> =
        out.pairs.iter().map(|q| q.1.clone()).chain(out.pairs.iter().map(|q| q.0.clone())).collect();
    if &adj * &p != &p * &Matrix::diag(&swapped) {
        return Err(Error::Internal("adjoint eigen-relations failed verification".into()));
    }
    Ok(out)
}
