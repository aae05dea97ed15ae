//! Random generators and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sympchar::scalar::rat;
use sympchar::symplectic::SymplecticForm;
use sympchar::{Matrix, Rational, Scalar};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Mostly small integers, sometimes a half or a third.
pub fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    let p = rat(rng.random_range(-3..=3));
    match rng.random_range(0..6) {
        0 => p / rat(2),
        1 => p / rat(3),
        _ => p,
    }
}

pub fn small_int(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Rational {
    rat(rng.random_range(lo..=hi))
}

pub fn random_matrix(rng: &mut ChaCha8Rng, d: usize) -> Matrix<Rational> {
    Matrix::from_fn(d, d, |_, _| small_rational(rng))
}

/// Unit lower times unit upper triangular, so the determinant is 1.
pub fn random_unimodular(rng: &mut ChaCha8Rng, d: usize) -> Matrix<Rational> {
    let l = Matrix::from_fn(d, d, |i, j| {
        if i == j {
            rat(1)
        } else if i > j {
            small_int(rng, -2, 2)
        } else {
            rat(0)
        }
    });
    let u = Matrix::from_fn(d, d, |i, j| {
        if i == j {
            rat(1)
        } else if i < j {
            small_int(rng, -2, 2)
        } else {
            rat(0)
        }
    });
    &l * &u
}

/// `[[O, E], [-E, O]]`, written out independently of the library.
pub fn omega(n: usize) -> Matrix<Rational> {
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

/// `Bᵀ Ω B` for a random unimodular `B`.
pub fn random_form(rng: &mut ChaCha8Rng, n: usize) -> SymplecticForm {
    random_form_with_basis(rng, n).0
}

/// A random form together with a symplectic basis for it (as columns `e₁..eₙ, f₁..fₙ`).
///
/// With `G = BᵀΩB` the columns of `B⁻¹` are symplectic.
pub fn random_form_with_basis(rng: &mut ChaCha8Rng, n: usize) -> (SymplecticForm, Matrix<Rational>) {
    let b = random_unimodular(rng, 2 * n);
    let form = SymplecticForm::new(&(&b.transpose() * &omega(n)) * &b).expect("congruent to the standard form");
    (form, b.inverse().expect("unimodular"))
}

/// Standard form with the identity basis half the time, a random pair otherwise.
pub fn some_form_with_basis(rng: &mut ChaCha8Rng, n: usize) -> (SymplecticForm, Matrix<Rational>) {
    if rng.random_bool(0.5) {
        (SymplecticForm::standard(n), Matrix::identity(2 * n))
    } else {
        random_form_with_basis(rng, n)
    }
}

/// `B · diag(λ₁..λₙ, μ₁..μₙ) · B⁻¹` for a symplectic basis `B`: `eᵢ ↦ λᵢeᵢ`, `fᵢ ↦ μᵢfᵢ`.
pub fn planted(basis: &Matrix<Rational>, lambdas: &[Rational], mus: &[Rational]) -> Matrix<Rational> {
    let entries: Vec<Rational> = lambdas.iter().chain(mus).cloned().collect();
    &(basis * &Matrix::diag(&entries)) * &basis.inverse().expect("basis")
}

/// Standard form half the time, a random one otherwise.
pub fn some_form(rng: &mut ChaCha8Rng, n: usize) -> SymplecticForm {
    if rng.random_bool(0.5) {
        SymplecticForm::standard(n)
    } else {
        random_form(rng, n)
    }
}

pub fn random_alternating(rng: &mut ChaCha8Rng, d: usize) -> Matrix<Rational> {
    let mut a = Matrix::zeros(d, d);
    for i in 0..d {
        for j in i + 1..d {
            let x = small_rational(rng);
            a.set(j, i, -x.clone());
            a.set(i, j, x);
        }
    }
    a
}

fn minor<T: Scalar>(m: &Matrix<T>, skip_rows: &[usize], skip_cols: &[usize]) -> Matrix<T> {
    let rows: Vec<usize> = (0..m.rows()).filter(|i| !skip_rows.contains(i)).collect();
    let cols: Vec<usize> = (0..m.cols()).filter(|j| !skip_cols.contains(j)).collect();
    Matrix::from_fn(rows.len(), cols.len(), |i, j| m.get(rows[i], cols[j]).clone())
}

/// Laplace expansion along the first row.
pub fn det_oracle<T: Scalar>(m: &Matrix<T>) -> T {
    let d = m.rows();
    if d == 0 {
        return T::one();
    }
    let mut acc = T::zero();
    for j in 0..d {
        let a = m.get(0, j);
        if a.is_zero() {
            continue;
        }
        let term = a.mul(&det_oracle(&minor(m, &[0], &[j])));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// Expansion along the first row: `Pf A = Σⱼ (-1)^{j+1} a₀ⱼ Pf A₀̂ⱼ̂`.
pub fn pf_oracle<T: Scalar>(a: &Matrix<T>) -> T {
    let d = a.rows();
    if d == 0 {
        return T::one();
    }
    if d % 2 == 1 {
        return T::zero();
    }
    let mut acc = T::zero();
    for j in 1..d {
        let x = a.get(0, j);
        if x.is_zero() {
            continue;
        }
        let term = x.mul(&pf_oracle(&minor(a, &[0, j], &[0, j])));
        acc = if j % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// `PᵀGP = G`, checked directly.
pub fn preserves(p: &Matrix<Rational>, form: &SymplecticForm) -> bool {
    &(&p.transpose() * form.gram()) * p == *form.gram()
}

/// `G⁻¹MᵀG`, from the defining identity `ω(Mv, w) = ω(v, M*w)`.
pub fn adjoint_oracle(m: &Matrix<Rational>, form: &SymplecticForm) -> Matrix<Rational> {
    let g = form.gram();
    let g_inv = g.inverse().expect("nondegenerate");
    &(&g_inv * &m.transpose()) * g
}
