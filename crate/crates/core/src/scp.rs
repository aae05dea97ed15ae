//! The root polynomial `ψ_A(t)` and the symplectic characteristic polynomial `χ^ω_M(s, t)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{rat, BiPoly, Rational, UniPoly, Var};
use crate::symplectic::{adjoint, is_self_adjoint, pf_omega_bipoly, symplectic_basis, SymplecticForm};

/// A validated `χ^ω_M(s, t)`: `deg_t = n`, `deg_s ≤ 2n` and the `tⁿ` coefficient is `(-1)ⁿ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScpPolynomial {
    value: BiPoly,
    n: usize,
}

impl ScpPolynomial {
    pub fn new(value: BiPoly, n: usize) -> Result<Self> {
        if value.deg_t() != Some(n) {
            return Err(Error::InvalidScp(format!("degree in t must be {n}")));
        }
        let sign = if n.is_multiple_of(2) { rat(1) } else { rat(-1) };
        if value.coeff_t(n) != UniPoly::constant(Var::S, sign) {
            return Err(Error::InvalidScp(format!("coefficient of t^{n} must be (-1)^{n}")));
        }
        if value.deg_s().is_some_and(|d| d > 2 * n) {
            return Err(Error::InvalidScp(format!("degree in s must be at most {}", 2 * n)));
        }
        Ok(ScpPolynomial { value, n })
    }

    /// Infers `n` from the degree in `t`.
    pub fn from_bipoly(value: BiPoly) -> Result<Self> {
        let n = value.deg_t().ok_or_else(|| Error::InvalidScp("zero polynomial".into()))?;
        Self::new(value, n)
    }

    pub fn value(&self) -> &BiPoly {
        &self.value
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `a_k(s)`, the coefficient of `t^k`.
    pub fn coeff(&self, k: usize) -> UniPoly {
        self.value.coeff_t(k)
    }
}

impl FromStr for ScpPolynomial {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self> {
        Self::from_bipoly(text.parse()?)
    }
}

impl fmt::Display for ScpPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}

/// One factor `{(λ - s)(μ - s) - t}^m` with `λ ≤ μ`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PairFactor {
    pub lambda: Rational,
    pub mu: Rational,
    pub multiplicity: usize,
}

impl PairFactor {
    pub fn polynomial(&self) -> BiPoly {
        BiPoly::pair_factor(&self.lambda, &self.mu)
    }
}

/// `χ = Π {(λᵢ - s)(μᵢ - s) - t}^{mᵢ}`, sorted by `(λ, μ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairFactorization {
    factors: Vec<PairFactor>,
}

impl PairFactorization {
    pub fn factors(&self) -> &[PairFactor] {
        &self.factors
    }

    pub fn product(&self) -> BiPoly {
        self.factors.iter().fold(BiPoly::constant(rat(1)), |acc, f| &acc * &f.polynomial().pow(f.multiplicity))
    }

    /// Total multiplicity, which equals `n`.
    pub fn degree(&self) -> usize {
        self.factors.iter().map(|f| f.multiplicity).sum()
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.factors.iter().all(|f| f.multiplicity == 1)
    }
}

impl fmt::Display for PairFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.factors.iter().map(|p| format!("({}, {}):{}", p.lambda, p.mu, p.multiplicity)).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Gram of `ω_{A - tE}` in working coordinates, as a matrix over `ℚ[s, t]` free of `s`.
fn shifted_gram(a: &Matrix<Rational>, form: &SymplecticForm) -> Matrix<BiPoly> {
    let ga = Matrix::<BiPoly>::lift(&(form.gram() * a));
    let g = Matrix::<BiPoly>::lift(form.gram());
    &ga - &g.scale(&BiPoly::t())
}

/// `ψ_A(t) = Pf_ω(ω_{A - tE})` for `A^{*ω} = A`.
///
/// ```
/// use sympchar::matrix::Matrix;
/// use sympchar::scp::psi;
/// use sympchar::scalar::{UniPoly, Var};
/// use sympchar::symplectic::standard_form;
/// let a = Matrix::from_diag_ints(&[2, 2]);
/// assert_eq!(psi(&a, &standard_form(1)).unwrap(), UniPoly::from_ints(Var::T, &[2, -1]));
/// ```
pub fn psi(a: &Matrix<Rational>, form: &SymplecticForm) -> Result<UniPoly> {
    if !is_self_adjoint(a, form)? {
        return Err(Error::NotSelfAdjoint);
    }
    let basis = symplectic_basis(form)?;
    let pf = pf_omega_bipoly(&shifted_gram(a, form), &basis, (0, 1))?;
    Ok(pf.eval_s(&rat(0)))
}

/// Gram of `ω_{(M - sE)^{*ω}(M - sE) - tE}`, which is `(M - sE)ᵀ G (M - sE) - tG`.
pub fn scp_gram(m: &Matrix<Rational>, form: &SymplecticForm) -> Result<Matrix<BiPoly>> {
    form.check_operator(m)?;
    let x = Matrix::<BiPoly>::lift(m).shift(&BiPoly::s());
    let g = Matrix::<BiPoly>::lift(form.gram());
    Ok(&(&(&x.transpose() * &g) * &x) - &g.scale(&BiPoly::t()))
}

/// `χ^ω_M(s, t)`, by Pfaffian interpolation with degree bounds `(2n, n)`.
///
/// ```
/// use sympchar::matrix::Matrix;
/// use sympchar::scalar::{rat, BiPoly};
/// use sympchar::scp::scp;
/// use sympchar::symplectic::standard_form;
/// let chi = scp(&Matrix::from_diag_ints(&[1, 2]), &standard_form(1)).unwrap();
/// assert_eq!(chi.value(), &BiPoly::pair_factor(&rat(1), &rat(2)));
/// ```
pub fn scp(m: &Matrix<Rational>, form: &SymplecticForm) -> Result<ScpPolynomial> {
    let gram = scp_gram(m, form)?;
    let basis = symplectic_basis(form)?;
    let value = pf_omega_bipoly(&gram, &basis, (2, 1))?;
    ScpPolynomial::new(value, form.n())
}

/// Splits `χ` into pair factors `(λ - s)(μ - s) - t` with rational `λ ≤ μ`.
///
/// Candidate pairs come from the rational roots of `χ(s, 0)` and are peeled
/// off by exact division in ascending `(λ, μ)` order.
pub fn scp_factor_pairs(chi: &ScpPolynomial) -> Result<PairFactorization> {
    factor_pair_product(chi.value())
}

/// The peeling behind [`scp_factor_pairs`], for any polynomial whose `t`-leading
/// coefficient is `±1` and whose pair values are roots of its `t⁰` coefficient.
pub fn factor_pair_product(p: &BiPoly) -> Result<PairFactorization> {
    let roots = p.coeff_t(0).rational_roots()?;
    if !roots.splits {
        return Err(Error::NonSplitSpectrum);
    }
    let distinct: Vec<&Rational> = roots.roots.keys().collect();
    let mut rest = p.clone();
    let mut factors = Vec::new();
    for (i, lambda) in distinct.iter().enumerate() {
        for mu in &distinct[i..] {
            let candidate = BiPoly::pair_factor(lambda, mu);
            let mut multiplicity = 0;
            while let Ok(q) = rest.div_exact(&candidate) {
                rest = q;
                multiplicity += 1;
            }
            if multiplicity > 0 {
                factors.push(PairFactor { lambda: (*lambda).clone(), mu: (*mu).clone(), multiplicity });
            }
        }
    }
    if rest != BiPoly::constant(rat(1)) {
        return Err(Error::FactorizationFailed);
    }
    Ok(PairFactorization { factors })
}

/// Relation between `M` and `M^{*ω}` that yields a closed form for `χ²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialKind {
    /// `M^{*ω} = M`.
    SelfAdjoint,
    /// `M^{*ω} = -M`.
    AntiSelfAdjoint,
    /// `M^{*ω} = M⁻¹`.
    Symplectic,
}

impl FromStr for SpecialKind {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self> {
        match text {
            "self-adjoint" => Ok(SpecialKind::SelfAdjoint),
            "anti-self-adjoint" => Ok(SpecialKind::AntiSelfAdjoint),
            "symplectic" => Ok(SpecialKind::Symplectic),
            other => Err(Error::Parse(format!("unknown relation '{other}'"))),
        }
    }
}

/// `Σ cₖ qᵏ` for `p = Σ cₖ xᵏ`.
fn compose(p: &UniPoly, q: &BiPoly) -> BiPoly {
    p.coeffs().iter().rev().fold(BiPoly::zero(), |acc, c| &(&acc * q) + &BiPoly::constant(c.clone()))
}

/// Closed form of `χ²` when `M` satisfies the relation `kind`.
///
/// Self-adjoint: `φ_M(s - u)·φ_M(s + u)` with `u² ↦ t`. Anti-self-adjoint:
/// `φ_{M²}(s² - t)`. Symplectic: `Σ cₖ (s² - t + 1)ᵏ s^{2n-k}` where
/// `φ_{M + M⁻¹}(x) = Σ cₖ xᵏ`.
pub fn scp_special_square(m: &Matrix<Rational>, form: &SymplecticForm, kind: SpecialKind) -> Result<BiPoly> {
    let adj = adjoint(m, form)?;
    let s = BiPoly::s();
    let t = BiPoly::t();
    match kind {
        SpecialKind::SelfAdjoint => {
            if adj != *m {
                return Err(Error::RelationNotSatisfied);
            }
            // Here t stands for u until the final substitution.
            let phi = m.charpoly()?;
            let prod = &compose(&phi, &(&s - &t)) * &compose(&phi, &(&s + &t));
            let coeffs = prod.t_coeffs();
            if coeffs.iter().skip(1).step_by(2).any(|c| !c.is_zero()) {
                return Err(Error::Internal("odd power of u in a self-adjoint closed form".into()));
            }
            Ok(BiPoly::from_t_coeffs(coeffs.iter().step_by(2).cloned().collect()))
        }
        SpecialKind::AntiSelfAdjoint => {
            if adj != -m {
                return Err(Error::RelationNotSatisfied);
            }
            let phi = (m * m).charpoly()?;
            Ok(compose(&phi, &(&(&s * &s) - &t)))
        }
        SpecialKind::Symplectic => {
            let d = form.dim();
            if &adj * m != Matrix::identity(d) {
                return Err(Error::RelationNotSatisfied);
            }
            let phi = (m + &adj).charpoly()?;
            let x = &(&(&s * &s) - &t) + &BiPoly::constant(rat(1));
            let mut out = BiPoly::zero();
            for (k, c) in phi.coeffs().iter().enumerate() {
                let term = &x.pow(k) * &s.pow(d - k);
                out = &out + &term.scale(c);
            }
            Ok(out)
        }
    }
}
