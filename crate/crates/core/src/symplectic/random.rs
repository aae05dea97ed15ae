use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{symplectic_basis, SymplecticForm};
use crate::matrix::Matrix;
use crate::scalar::{rat, Rational};

const ENTRY_BOUND: i64 = 3;

fn small(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.random_range(-ENTRY_BOUND..=ENTRY_BOUND))
}

fn random_symmetric(n: usize, rng: &mut ChaCha8Rng) -> Matrix<Rational> {
    let mut s = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let x = small(rng);
            s.set(i, j, x.clone());
            s.set(j, i, x);
        }
    }
    s
}

/// `L·U` with unit triangular factors, so determinant one.
fn random_unimodular(n: usize, rng: &mut ChaCha8Rng) -> Matrix<Rational> {
    let mut tri = |upper: bool| {
        Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Equal => rat(1),
            std::cmp::Ordering::Less if upper => small(rng),
            std::cmp::Ordering::Greater if !upper => small(rng),
            _ => rat(0),
        })
    };
    let l = tri(false);
    let u = tri(true);
    &l * &u
}

fn blocks(a: &Matrix<Rational>, b: &Matrix<Rational>, c: &Matrix<Rational>, d: &Matrix<Rational>) -> Matrix<Rational> {
    let n = a.rows();
    Matrix::from_fn(2 * n, 2 * n, |i, j| {
        let m = match (i < n, j < n) {
            (true, true) => a,
            (true, false) => b,
            (false, true) => c,
            (false, false) => d,
        };
        m.get(i % n, j % n).clone()
    })
}

/// A random element of `Sp(2n, ℚ)` for the standard form, reproducible per seed.
///
/// The product of `[[E, S₁], [O, E]]`, `[[E, O], [S₂, E]]` and
/// `[[A, O], [O, A⁻ᵀ]]` with `S₁, S₂` symmetric and `A` unimodular, all with
/// entries in `-3..=3` before multiplication.
pub fn random_symplectic(n: usize, seed: u64) -> Matrix<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let e = Matrix::identity(n);
    let o = Matrix::zeros(n, n);
    let s1 = random_symmetric(n, &mut rng);
    let s2 = random_symmetric(n, &mut rng);
    let a = random_unimodular(n, &mut rng);
    let a_inv_t = a.inverse().expect("unimodular").transpose();
    let upper = blocks(&e, &s1, &o, &e);
    let lower = blocks(&e, &o, &s2, &e);
    let diag = blocks(&a, &o, &o, &a_inv_t);
    &(&upper * &lower) * &diag
}

/// A random symplectic map of an arbitrary form: `B P B⁻¹` for a symplectic basis `B`.
pub fn random_symplectic_for(form: &SymplecticForm, seed: u64) -> Matrix<Rational> {
    let p = random_symplectic(form.n(), seed);
    if form.is_standard() {
        return p;
    }
    let b = symplectic_basis(form).expect("valid form").matrix();
    let b_inv = b.inverse().expect("basis matrix is invertible");
    &(&b * &p) * &b_inv
}
