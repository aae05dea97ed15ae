mod common;

use proptest::prelude::*;
use sympchar::matrix::{apply_uni, two_endo_charpoly};
use sympchar::pfaffian::{is_alternating, pfaffian_field};
use sympchar::scalar::{integer_nodes, interpolate, rat};
use sympchar::scp::scp;
use sympchar::symplectic::{
    adjoint, is_self_adjoint, perp, random_symplectic, random_symplectic_for, symplectic_basis, symplectic_basis_of,
    SymplecticForm,
};
use sympchar::{BiPoly, Field, Matrix, RatFun, Rational, Scalar, Subspace, UniPoly, Var};

use common::*;

fn small() -> impl Strategy<Value = i64> {
    -4i64..=4
}

fn upoly(var: Var) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(small(), 0..5).prop_map(move |c| UniPoly::from_ints(var, &c))
}

fn bipoly() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec(upoly(Var::S), 0..4).prop_map(BiPoly::from_t_coeffs)
}

fn int_matrix(d: usize) -> impl Strategy<Value = Matrix<Rational>> {
    prop::collection::vec(small(), d * d).prop_map(move |v| Matrix::from_fn(d, d, |i, j| rat(v[i * d + j])))
}

fn alternating(d: usize) -> impl Strategy<Value = Matrix<Rational>> {
    prop::collection::vec(small(), d * d).prop_map(move |v| {
        Matrix::from_fn(d, d, |i, j| {
            if i < j {
                rat(v[i * d + j])
            } else if i > j {
                -rat(v[j * d + i])
            } else {
                rat(0)
            }
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn unipoly_ring_laws(a in upoly(Var::S), b in upoly(Var::S), c in upoly(Var::S)) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert!((&a + &(-&a)).is_zero());
    }

    #[test]
    fn unipoly_division(a in upoly(Var::T), b in upoly(Var::T)) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.divrem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a.clone());
        prop_assert!(r.degree() < b.degree() || r.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a.clone());
        let g = a.gcd(&b).unwrap();
        prop_assert!(a.divrem(&g).unwrap().1.is_zero());
        prop_assert!(b.divrem(&g).unwrap().1.is_zero());
    }

    #[test]
    fn bipoly_ring_and_parse(a in bipoly(), b in bipoly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        let text = a.to_string();
        prop_assert_eq!(text.parse::<BiPoly>().unwrap(), a.clone(), "{}", text);
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn bipoly_eval_is_a_homomorphism(a in bipoly(), b in bipoly(), s in small(), t in small()) {
        let (s, t) = (rat(s), rat(t));
        prop_assert_eq!((&a * &b).eval(&s, &t), a.eval(&s, &t) * b.eval(&s, &t));
        prop_assert_eq!((&a + &b).eval(&s, &t), a.eval(&s, &t) + b.eval(&s, &t));
    }

    #[test]
    fn ratfun_field_laws(a in upoly(Var::S), b in upoly(Var::S), c in upoly(Var::S)) {
        prop_assume!(!b.is_zero() && !c.is_zero());
        let x = RatFun::new(a.clone(), b.clone()).unwrap();
        let y = RatFun::new(b, c).unwrap();
        prop_assert_eq!(&(&x * &y) / &y, x.clone());
        if !x.is_zero() {
            prop_assert!(x.mul(&x.inv().unwrap()).is_one());
        }
        prop_assert_eq!(&(&x + &y) - &y, x);
    }

    #[test]
    fn interpolation_recovers_polynomials(p in upoly(Var::T)) {
        let nodes = integer_nodes(6);
        let values: Vec<Rational> = nodes.iter().map(|x| p.eval(x)).collect();
        prop_assert_eq!(interpolate(Var::T, &nodes, &values).unwrap(), p);
    }

    #[test]
    fn pfaffian_matches_expansion(a in (1usize..=3).prop_flat_map(|h| alternating(2 * h))) {
        prop_assert!(is_alternating(&a));
        prop_assert_eq!(pfaffian_field(&a).unwrap(), pf_oracle(&a));
    }

    #[test]
    fn pfaffian_squares_to_det(a in (1usize..=4).prop_flat_map(|h| alternating(2 * h))) {
        let pf = pfaffian_field(&a).unwrap();
        prop_assert_eq!(&pf * &pf, a.det().unwrap());
    }

    #[test]
    fn pfaffian_congruence((a, b) in (1usize..=3).prop_flat_map(|h| (alternating(2 * h), int_matrix(2 * h)))) {
        let congruent = &(&b.transpose() * &a) * &b;
        let lhs = pfaffian_field(&congruent).unwrap();
        prop_assert_eq!(lhs, b.det().unwrap() * pfaffian_field(&a).unwrap());
    }

    #[test]
    fn charpoly_basics(m in (1usize..=4).prop_flat_map(int_matrix)) {
        let phi = m.charpoly().unwrap();
        prop_assert_eq!(phi.coeff(0), m.det().unwrap());
        prop_assert_eq!(phi.eval(&rat(0)), det_oracle(&m));
        prop_assert!(apply_uni(&phi, &m).unwrap().is_zero());
        let d = m.rows();
        prop_assert_eq!(phi.leading(), if d % 2 == 0 { rat(1) } else { rat(-1) });
    }

    #[test]
    fn inverse_and_rank(m in (1usize..=4).prop_flat_map(int_matrix)) {
        let d = m.rows();
        prop_assert_eq!(m.rank() + m.kernel_basis().dim(), d);
        for v in m.kernel_basis().basis() {
            prop_assert!(m.mul_vec(v).iter().all(|x| *x == rat(0)));
        }
        match m.inverse() {
            Ok(inv) => prop_assert_eq!(&m * &inv, Matrix::identity(d)),
            Err(_) => prop_assert_eq!(m.det().unwrap(), rat(0)),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn adjoint_laws(seed in any::<u64>(), n in 1usize..=3) {
        let mut g = rng(seed);
        let form = some_form(&mut g, n);
        let m = random_matrix(&mut g, 2 * n);
        let k = random_matrix(&mut g, 2 * n);
        let adj = adjoint(&m, &form).unwrap();
        prop_assert_eq!(&adj, &adjoint_oracle(&m, &form));
        prop_assert_eq!(adjoint(&adj, &form).unwrap(), m.clone());
        prop_assert_eq!(adjoint(&(&m * &k), &form).unwrap(), &adjoint(&k, &form).unwrap() * &adj);
        prop_assert!(is_self_adjoint(&(&m * &adj), &form).unwrap());
        prop_assert!(is_self_adjoint(&(&m + &adj), &form).unwrap());
        let v = g_vector(&mut g, 2 * n);
        let w = g_vector(&mut g, 2 * n);
        prop_assert_eq!(form.omega(&m.mul_vec(&v), &w), form.omega(&v, &adj.mul_vec(&w)));
    }

    #[test]
    fn perp_laws(seed in any::<u64>(), n in 1usize..=3, k in 0usize..=4) {
        let mut g = rng(seed);
        let form = some_form(&mut g, n);
        let vectors: Vec<Vec<Rational>> = (0..k).map(|_| g_vector(&mut g, 2 * n)).collect();
        let w = Subspace::span(2 * n, vectors).unwrap();
        let wp = perp(&w, &form).unwrap();
        prop_assert_eq!(w.dim() + wp.dim(), 2 * n);
        prop_assert_eq!(perp(&wp, &form).unwrap(), w.clone());
        for a in w.basis() {
            for b in wp.basis() {
                prop_assert_eq!(form.omega(a, b), rat(0));
            }
        }
    }

    #[test]
    fn symplectic_bases(seed in any::<u64>(), n in 1usize..=3) {
        let mut g = rng(seed);
        let form = random_form(&mut g, n);
        let b = symplectic_basis(&form).unwrap().matrix();
        prop_assert_eq!(&(&b.transpose() * form.gram()) * &b, omega(n));
        let p = random_symplectic_for(&form, seed);
        prop_assert!(preserves(&p, &form));
        prop_assert!(preserves(&random_symplectic(n, seed), &SymplecticForm::standard(n)));
        // A symplectic subspace: the span of the first k basis pairs, moved by p.
        let k = 1 + (seed as usize) % n;
        let cols: Vec<Vec<Rational>> = (0..k).flat_map(|i| [b.column(i), b.column(n + i)]).map(|c| p.mul_vec(&c)).collect();
        let w = Subspace::span(2 * n, cols).unwrap();
        let sb = symplectic_basis_of(&w, &form).unwrap();
        prop_assert_eq!(sb.n(), k);
        prop_assert_eq!(sb.span(), w);
    }

    #[test]
    fn scp_invariants(seed in any::<u64>(), n in 1usize..=2) {
        let mut g = rng(seed);
        let form = some_form(&mut g, n);
        let m = random_matrix(&mut g, 2 * n);
        let chi = scp(&m, &form).unwrap();
        let p = random_symplectic_for(&form, seed ^ 0x5eed);
        let conj = &(&p.inverse().unwrap() * &m) * &p;
        prop_assert_eq!(&scp(&conj, &form).unwrap(), &chi);
        prop_assert_eq!(&scp(&adjoint(&m, &form).unwrap(), &form).unwrap(), &chi);
        let adj = adjoint(&m, &form).unwrap();
        prop_assert_eq!(chi.value().pow(2), two_endo_charpoly(&m, &adj).unwrap());
        // Pf_ω is normalized by ω itself, so rescaling the form leaves chi unchanged.
        let c = rat(2);
        let scaled = SymplecticForm::new(form.gram().scale(&c)).unwrap();
        let chi_scaled = scp(&m, &scaled).unwrap();
        prop_assert_eq!(chi_scaled.value(), chi.value());
    }
}

fn g_vector(g: &mut rand_chacha::ChaCha8Rng, d: usize) -> Vec<Rational> {
    (0..d).map(|_| small_rational(g)).collect()
}
