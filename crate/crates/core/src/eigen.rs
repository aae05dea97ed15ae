//! Pair eigenspaces of two endomorphisms and the decompositions they induce.

use crate::error::{Error, Result};
use crate::matrix::{two_endo_charpoly, Matrix, Subspace};
use crate::scalar::{BiPoly, Field, RatFun, Rational, Scalar, UniPoly, Var};
use crate::scp::{factor_pair_product, scp, scp_factor_pairs, PairFactor};
use crate::symplectic::{adjoint, is_symplectically_normal, SymplecticForm};

/// Largest ambient dimension accepted by computations over `ℚ(s)` by default.
pub const DEFAULT_MAX_RATFUN_DIM: usize = 6;

/// Limits for the computations over `ℚ(s)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RatfunOptions {
    pub max_ratfun_dim: usize,
}

impl Default for RatfunOptions {
    fn default() -> Self {
        RatfunOptions { max_ratfun_dim: DEFAULT_MAX_RATFUN_DIM }
    }
}

impl RatfunOptions {
    fn check(&self, dim: usize) -> Result<()> {
        if dim > self.max_ratfun_dim {
            return Err(Error::RatfunDimensionExceeded { dim, limit: self.max_ratfun_dim });
        }
        Ok(())
    }
}

/// Pair spaces `Ṽ(λᵢ, μᵢ)` forming a direct sum of the whole space, with
/// the projections `Pᵢ` along that sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairDecomposition {
    pub pairs: Vec<PairFactor>,
    pub spaces: Vec<Subspace<Rational>>,
    pub projections: Vec<Matrix<Rational>>,
}

fn same_size(m: &Matrix<Rational>, n: &Matrix<Rational>) -> Result<usize> {
    let d = m.square_dim()?;
    let e = n.square_dim()?;
    if d != e {
        return Err(Error::SizeMismatch { expected: d, found: e });
    }
    Ok(d)
}

fn commuting(m: &Matrix<Rational>, n: &Matrix<Rational>) -> Result<usize> {
    let d = same_size(m, n)?;
    if !m.commutes_with(n) {
        return Err(Error::NotCommuting);
    }
    Ok(d)
}

/// `(Ṽ_M(λ) ∩ Ṽ_N(μ)) + (Ṽ_M(μ) ∩ Ṽ_N(λ))`.
pub fn pair_space(
    m: &Matrix<Rational>,
    n: &Matrix<Rational>,
    lambda: &Rational,
    mu: &Rational,
) -> Result<Subspace<Rational>> {
    same_size(m, n)?;
    let first = m.generalized_eigenspace(lambda)?.intersect(&n.generalized_eigenspace(mu)?);
    if lambda == mu {
        return Ok(first);
    }
    let second = m.generalized_eigenspace(mu)?.intersect(&n.generalized_eigenspace(lambda)?);
    Ok(first.sum(&second))
}

/// `Ṽ_{MN}(λμ) ∩ Ṽ_{M+N}(λ+μ)` for commuting `M, N`.
pub fn product_sum_pair_space(
    m: &Matrix<Rational>,
    n: &Matrix<Rational>,
    lambda: &Rational,
    mu: &Rational,
) -> Result<Subspace<Rational>> {
    commuting(m, n)?;
    let prod = (m * n).generalized_eigenspace(&(lambda * mu))?;
    let sum = (m + n).generalized_eigenspace(&(lambda + mu))?;
    Ok(prod.intersect(&sum))
}

/// `(M - sE)(N - sE)` over `ℚ(s)`.
fn ratfun_product(m: &Matrix<Rational>, n: &Matrix<Rational>) -> Matrix<RatFun> {
    let s = RatFun::from_poly(UniPoly::x(Var::S));
    &Matrix::<RatFun>::lift(m).shift(&s) * &Matrix::<RatFun>::lift(n).shift(&s)
}

fn pair_value(lambda: &Rational, mu: &Rational) -> RatFun {
    let q = BiPoly::pair_factor(lambda, mu).eval_t(&Rational::from_integer(0.into()));
    RatFun::from_poly(q)
}

/// Generalized eigenspace of `(M - sE)(N - sE)` at `(λ - s)(μ - s)`, over `ℚ(s)`.
pub fn ratfun_pair_space(
    m: &Matrix<Rational>,
    n: &Matrix<Rational>,
    lambda: &Rational,
    mu: &Rational,
    options: RatfunOptions,
) -> Result<Subspace<RatFun>> {
    let d = commuting(m, n)?;
    options.check(d)?;
    ratfun_product(m, n).generalized_eigenspace(&pair_value(lambda, mu))
}

/// Projections along a direct sum given by bases of its summands.
fn projections_from<T: Field>(dim: usize, parts: &[Vec<Vec<T>>]) -> Result<Vec<Matrix<T>>> {
    let columns: Vec<Vec<T>> = parts.iter().flatten().cloned().collect();
    if columns.len() != dim {
        return Err(Error::Internal(format!("summands have total dimension {} in {dim}", columns.len())));
    }
    let b = Matrix::from_columns(dim, &columns);
    let b_inv = b.inverse().map_err(|_| Error::Internal("summands are not independent".into()))?;
    let mut start = 0;
    let mut out = Vec::with_capacity(parts.len());
    for part in parts {
        let end = start + part.len();
        let select =
            Matrix::from_fn(dim, dim, |i, j| if i == j && (start..end).contains(&i) { T::one() } else { T::zero() });
        out.push(&(&b * &select) * &b_inv);
        start = end;
    }
    Ok(out)
}

fn decomposition(dim: usize, pairs: Vec<PairFactor>, spaces: Vec<Subspace<Rational>>) -> Result<PairDecomposition> {
    let bases: Vec<Vec<Vec<Rational>>> = spaces.iter().map(|w| w.basis().to_vec()).collect();
    let projections = projections_from(dim, &bases)?;
    Ok(PairDecomposition { pairs, spaces, projections })
}

/// Splits the space into the pair spaces of commuting `M, N`.
///
/// The pairs are read off the factorization of `φ_{(M-sE)(N-sE)}(t)`.
pub fn pair_decomposition(m: &Matrix<Rational>, n: &Matrix<Rational>) -> Result<PairDecomposition> {
    let d = commuting(m, n)?;
    let factored = factor_pair_product(&two_endo_charpoly(m, n)?)?;
    let pairs = factored.factors().to_vec();
    let mut spaces = Vec::with_capacity(pairs.len());
    for p in &pairs {
        let w = pair_space(m, n, &p.lambda, &p.mu)?;
        if w.dim() != p.multiplicity {
            return Err(Error::Internal(format!(
                "pair ({}, {}) has multiplicity {} but its space has dimension {}",
                p.lambda,
                p.mu,
                p.multiplicity,
                w.dim()
            )));
        }
        spaces.push(w);
    }
    decomposition(d, pairs, spaces)
}

/// The projections of [`pair_decomposition`], rebuilt from the generalized
/// eigenspaces of `(M - sE)(N - sE)` over `ℚ(s)`.
///
/// Every entry is checked to be a constant function.
pub fn ratfun_projections(
    m: &Matrix<Rational>,
    n: &Matrix<Rational>,
    options: RatfunOptions,
) -> Result<Vec<Matrix<RatFun>>> {
    let d = commuting(m, n)?;
    options.check(d)?;
    let factored = factor_pair_product(&two_endo_charpoly(m, n)?)?;
    let x = ratfun_product(m, n);
    let mut bases = Vec::new();
    for p in factored.factors() {
        bases.push(x.generalized_eigenspace(&pair_value(&p.lambda, &p.mu))?.basis().to_vec());
    }
    let qs = projections_from(d, &bases)?;
    if qs.iter().any(|q| constant_part(q).is_none()) {
        return Err(Error::Internal("projection over Q(s) is not constant".into()));
    }
    Ok(qs)
}

/// The rational matrix of a matrix whose entries are constant functions.
pub fn constant_part(q: &Matrix<RatFun>) -> Option<Matrix<Rational>> {
    let rows = (0..q.rows())
        .map(|i| q.row(i).iter().map(RatFun::as_constant).collect::<Option<Vec<_>>>())
        .collect::<Option<Vec<_>>>()?;
    Matrix::from_rows(rows).ok()
}

/// Symplectically orthogonal splitting into `Ṽ^ω_M(λᵢ, μᵢ) = Ṽ_{M, M^{*ω}}(λᵢ, μᵢ)`,
/// for symplectically normal `M` whose `χ` is a product of rational pair factors.
///
/// Each space has dimension `2mᵢ`, is symplectic, and is ω-orthogonal to the others.
pub fn sympl_pair_decomposition(m: &Matrix<Rational>, form: &SymplecticForm) -> Result<PairDecomposition> {
    form.check_operator(m)?;
    if !is_symplectically_normal(m, form)? {
        return Err(Error::NotSymplecticallyNormal);
    }
    let adj = adjoint(m, form)?;
    let pairs = scp_factor_pairs(&scp(m, form)?)?.factors().to_vec();
    let mut spaces = Vec::with_capacity(pairs.len());
    for p in &pairs {
        let w = pair_space(m, &adj, &p.lambda, &p.mu)?;
        if w.dim() != 2 * p.multiplicity {
            return Err(Error::Internal(format!(
                "pair space ({}, {}) has dimension {}, expected {}",
                p.lambda,
                p.mu,
                w.dim(),
                2 * p.multiplicity
            )));
        }
        spaces.push(w);
    }
    for (i, a) in spaces.iter().enumerate() {
        for b in &spaces[i + 1..] {
            let orthogonal = a.basis().iter().all(|v| b.basis().iter().all(|w| form.omega(v, w).is_zero()));
            if !orthogonal {
                return Err(Error::Internal("pair spaces are not ω-orthogonal".into()));
            }
        }
    }
    decomposition(form.dim(), pairs, spaces)
}

/// A nonzero `v` with `Mv = λv` and `M^{*ω}v = μv`, when `χ(s, (λ-s)(μ-s))` vanishes.
pub fn eigen_pair_witness(
    m: &Matrix<Rational>,
    form: &SymplecticForm,
    lambda: &Rational,
    mu: &Rational,
) -> Result<Option<Vec<Rational>>> {
    form.check_operator(m)?;
    if !is_symplectically_normal(m, form)? {
        return Err(Error::NotSymplecticallyNormal);
    }
    let chi = scp(m, form)?;
    let q = BiPoly::pair_factor(lambda, mu).eval_t(&Rational::from_integer(0.into()));
    if !chi.value().subs_t(&q).is_zero() {
        return Ok(None);
    }
    let adj = adjoint(m, form)?;
    let common = m.eigenspace(lambda)?.intersect(&adj.eigenspace(mu)?);
    match common.basis().first() {
        Some(v) => Ok(Some(v.clone())),
        None => Err(Error::Internal("vanishing pair value without a common eigenvector".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use crate::symplectic::standard_form;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    fn span(vs: &[&[i64]]) -> Subspace<Rational> {
        Subspace::span(vs[0].len(), vs.iter().map(|x| v(x)).collect()).unwrap()
    }

    fn diag_pair() -> (Matrix<Rational>, Matrix<Rational>) {
        (Matrix::from_diag_ints(&[1, 2, 3, 4]), Matrix::from_diag_ints(&[3, 4, 1, 2]))
    }

    #[test]
    fn pair_space_examples() {
        let (m, n) = diag_pair();
        let e1f1 = span(&[&[1, 0, 0, 0], &[0, 0, 1, 0]]);
        assert_eq!(pair_space(&m, &n, &rat(1), &rat(3)).unwrap(), e1f1);
        assert!(pair_space(&m, &n, &rat(1), &rat(4)).unwrap().is_zero());
        let e = Matrix::identity(4);
        assert_eq!(pair_space(&e, &e, &rat(1), &rat(1)).unwrap(), Subspace::full(4));
        assert_eq!(product_sum_pair_space(&m, &n, &rat(1), &rat(3)).unwrap(), e1f1);
        assert_eq!(product_sum_pair_space(&e, &e, &rat(1), &rat(1)).unwrap(), Subspace::full(4));
    }

    #[test]
    fn non_commuting_rejected() {
        let m = Matrix::from_ints(&[&[0, 1], &[0, 0]]);
        let n = Matrix::from_ints(&[&[0, 0], &[1, 0]]);
        assert_eq!(product_sum_pair_space(&m, &n, &rat(0), &rat(0)), Err(Error::NotCommuting));
        let opts = RatfunOptions::default();
        assert_eq!(ratfun_pair_space(&m, &n, &rat(0), &rat(0), opts), Err(Error::NotCommuting));
    }

    #[test]
    fn ratfun_examples() {
        let (m, n) = diag_pair();
        let opts = RatfunOptions::default();
        let w = ratfun_pair_space(&m, &n, &rat(1), &rat(3), opts).unwrap();
        let e1f1 = span(&[&[1, 0, 0, 0], &[0, 0, 1, 0]]);
        assert_eq!(w, Subspace::lift(&e1f1));
        assert!(ratfun_pair_space(&m, &n, &rat(1), &rat(4), opts).unwrap().is_zero());
        let e = Matrix::identity(4);
        assert_eq!(ratfun_pair_space(&e, &e, &rat(1), &rat(1), opts).unwrap().dim(), 4);
        let tight = RatfunOptions { max_ratfun_dim: 2 };
        assert_eq!(
            ratfun_pair_space(&m, &n, &rat(1), &rat(3), tight),
            Err(Error::RatfunDimensionExceeded { dim: 4, limit: 2 })
        );
    }

    #[test]
    fn ratfun_nilpotent_generalized_eigenspace() {
        let m = Matrix::from_ints(&[&[0, 1], &[0, 0]]);
        let n = Matrix::from_ints(&[&[0, 0], &[1, 0]]);
        let s2 = pair_value(&rat(0), &rat(0));
        assert!(ratfun_product(&m, &n).generalized_eigenspace(&s2).unwrap().is_zero());
    }

    #[test]
    fn decomposition_examples() {
        let (m, n) = diag_pair();
        let dec = pair_decomposition(&m, &n).unwrap();
        assert_eq!(dec.spaces, vec![span(&[&[1, 0, 0, 0], &[0, 0, 1, 0]]), span(&[&[0, 1, 0, 0], &[0, 0, 0, 1]])]);
        assert_eq!(dec.projections[0], Matrix::from_diag_ints(&[1, 0, 1, 0]));
        assert_eq!(&dec.projections[0] + &dec.projections[1], Matrix::identity(4));

        let e = Matrix::<Rational>::identity(2);
        let dec = pair_decomposition(&e, &e).unwrap();
        assert_eq!(dec.projections, vec![Matrix::identity(2)]);
        assert_eq!((dec.pairs[0].lambda.clone(), dec.pairs[0].multiplicity), (rat(1), 2));
    }

    #[test]
    fn ratfun_projections_match() {
        let (m, n) = diag_pair();
        let qs = ratfun_projections(&m, &n, RatfunOptions::default()).unwrap();
        let ps = pair_decomposition(&m, &n).unwrap().projections;
        let qs: Vec<Matrix<Rational>> = qs.iter().map(|q| constant_part(q).unwrap()).collect();
        assert_eq!(qs, ps);
    }

    #[test]
    fn symplectic_decomposition() {
        let f2 = standard_form(2);
        let dec = sympl_pair_decomposition(&Matrix::from_diag_ints(&[1, 2, 3, 4]), &f2).unwrap();
        let pairs: Vec<(Rational, Rational)> = dec.pairs.iter().map(|p| (p.lambda.clone(), p.mu.clone())).collect();
        assert_eq!(pairs, vec![(rat(1), rat(3)), (rat(2), rat(4))]);
        assert_eq!(dec.spaces[1], span(&[&[0, 1, 0, 0], &[0, 0, 0, 1]]));

        let dec = sympl_pair_decomposition(&Matrix::identity(4), &f2).unwrap();
        assert_eq!(dec.spaces, vec![Subspace::full(4)]);
        assert_eq!(dec.pairs[0].multiplicity, 2);

        let bad = Matrix::from_ints(&[&[0, 1, 1, 0], &[0, 0, 0, 1], &[0, 0, 0, 0], &[0, 0, 0, 0]]);
        assert_eq!(sympl_pair_decomposition(&bad, &f2), Err(Error::NotSymplecticallyNormal));
    }

    #[test]
    fn witnesses() {
        let f2 = standard_form(2);
        let m = Matrix::from_diag_ints(&[1, 2, 3, 4]);
        assert_eq!(eigen_pair_witness(&m, &f2, &rat(1), &rat(3)).unwrap(), Some(v(&[1, 0, 0, 0])));
        assert_eq!(eigen_pair_witness(&m, &f2, &rat(1), &rat(2)).unwrap(), None);
        let e = Matrix::identity(4);
        assert!(eigen_pair_witness(&e, &f2, &rat(1), &rat(1)).unwrap().is_some());
    }
}
