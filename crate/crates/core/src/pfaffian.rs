//! Pfaffians of alternating matrices.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{integer_nodes, interpolate2d, BiPoly, Field, Rational, Scalar};

/// `Aᵀ = -A` with a zero diagonal.
pub fn is_alternating<T: Scalar>(a: &Matrix<T>) -> bool {
    a.is_square()
        && (0..a.rows())
            .all(|i| a.get(i, i).is_zero() && (i + 1..a.rows()).all(|j| a.get(i, j).add(a.get(j, i)).is_zero()))
}

fn check_alternating<T: Scalar>(a: &Matrix<T>) -> Result<usize> {
    let n = a.square_dim()?;
    if n % 2 == 1 {
        return Err(Error::OddSize(n));
    }
    if !is_alternating(a) {
        return Err(Error::NotAlternating);
    }
    Ok(n)
}

/// Pfaffian by skew elimination.
///
/// The pivot for the leading pair is the first nonzero entry of its row;
/// bringing it next to the diagonal is a simultaneous row and column swap,
/// which flips the sign.
///
/// ```
/// use sympchar::matrix::Matrix;
/// use sympchar::pfaffian::pfaffian_field;
/// use sympchar::scalar::rat;
/// let a = Matrix::from_ints(&[&[0, 1], &[-1, 0]]);
/// assert_eq!(pfaffian_field(&a).unwrap(), rat(1));
/// ```
pub fn pfaffian_field<T: Field>(a: &Matrix<T>) -> Result<T> {
    let n = check_alternating(a)?;
    let mut m = a.clone();
    let mut pf = T::one();
    for k in (0..n).step_by(2) {
        let Some(j) = (k + 1..n).find(|&j| !m.get(k, j).is_zero()) else {
            return Ok(T::zero());
        };
        if j != k + 1 {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.swap(k + 1, j);
            m = m.permute_symmetric(&perm);
            pf = pf.neg();
        }
        let p = m.get(k, k + 1).clone();
        pf = pf.mul(&p);
        let inv = p.inv().expect("nonzero pivot");
        for i in k + 2..n {
            for j in k + 2..n {
                let cross = m.get(k + 1, i).mul(m.get(k, j)).sub(&m.get(k, i).mul(m.get(k + 1, j)));
                let v = m.get(i, j).add(&cross.mul(&inv));
                m.set(i, j, v);
            }
        }
    }
    Ok(pf)
}

fn check_entry_bounds(a: &Matrix<BiPoly>, bounds: (usize, usize)) -> Result<()> {
    let over =
        a.entries().iter().any(|e| e.deg_s().is_some_and(|d| d > bounds.0) || e.deg_t().is_some_and(|d| d > bounds.1));
    if over {
        Err(Error::DegreeBoundExceeded)
    } else {
        Ok(())
    }
}

/// Evaluates `f` on every grid point of `{0..=ds} × {0..=dt}` and interpolates.
fn grid_interpolate(
    a: &Matrix<BiPoly>,
    result_bounds: (usize, usize),
    f: impl Fn(&Matrix<Rational>) -> Result<Rational> + Sync,
) -> Result<BiPoly> {
    let s_nodes = integer_nodes(result_bounds.0 + 1);
    let t_nodes = integer_nodes(result_bounds.1 + 1);
    let values = s_nodes
        .par_iter()
        .map(|s| t_nodes.iter().map(|t| f(&a.map(|e| e.eval(s, t)))).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    interpolate2d(&s_nodes, &t_nodes, &values, result_bounds)
}

/// Pfaffian of an alternating matrix over `ℚ[s, t]` whose entries have
/// `deg_s ≤ bounds.0` and `deg_t ≤ bounds.1`.
///
/// The result has degrees at most `bounds · size/2` and is recovered from
/// exact samples on an integer grid of that size.
pub fn pfaffian_bipoly(a: &Matrix<BiPoly>, bounds: (usize, usize)) -> Result<BiPoly> {
    let n = check_alternating(a)?;
    check_entry_bounds(a, bounds)?;
    let half = n / 2;
    grid_interpolate(a, (bounds.0 * half, bounds.1 * half), pfaffian_field)
}

/// Determinant over `ℚ[s, t]` by the same evaluation and interpolation scheme.
pub fn det_bipoly(a: &Matrix<BiPoly>, bounds: (usize, usize)) -> Result<BiPoly> {
    let n = a.square_dim()?;
    check_entry_bounds(a, bounds)?;
    grid_interpolate(a, (bounds.0 * n, bounds.1 * n), Matrix::det)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, UniPoly, Var};

    /// Expansion along the first row.
    fn pf_expand(a: &Matrix<Rational>) -> Rational {
        let n = a.rows();
        if n == 0 {
            return rat(1);
        }
        (1..n).fold(rat(0), |acc, j| {
            let keep: Vec<usize> = (1..n).filter(|&i| i != j).collect();
            let term = a.get(0, j) * pf_expand(&a.permute_symmetric(&keep));
            if j % 2 == 1 {
                acc + term
            } else {
                acc - term
            }
        })
    }

    fn alternating(upper: &[i64], n: usize) -> Matrix<Rational> {
        let mut it = upper.iter();
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i + 1..n {
                let v = rat(*it.next().unwrap());
                m.set(j, i, -v.clone());
                m.set(i, j, v);
            }
        }
        m
    }

    #[test]
    fn small_examples() {
        assert_eq!(pfaffian_field(&alternating(&[1], 2)).unwrap(), rat(1));
        let std4 = alternating(&[1, 0, 0, 0, 0, 1], 4);
        assert_eq!(pfaffian_field(&std4).unwrap(), rat(1));
        // a..f = 2,3,5,7,11,13: af - be + cd = 26 - 33 + 35.
        let generic = alternating(&[2, 3, 5, 7, 11, 13], 4);
        assert_eq!(pfaffian_field(&generic).unwrap(), rat(28));
        assert_eq!(pf_expand(&generic), rat(28));
    }

    #[test]
    fn pivot_swap_sign() {
        // a = 0 forces a swap; af - be + cd = -be + cd.
        let m = alternating(&[0, 3, 5, 7, 11, 13], 4);
        assert_eq!(pfaffian_field(&m).unwrap(), pf_expand(&m));
        let six = alternating(&[0, 0, 2, -1, 4, 3, 0, 5, 1, -2, 0, 6, 1, 0, 7], 6);
        assert_eq!(pfaffian_field(&six).unwrap(), pf_expand(&six));
        assert_eq!(pfaffian_field(&six).unwrap().pow(2), six.det().unwrap());
    }

    #[test]
    fn singular_gives_zero() {
        let m = alternating(&[0, 0, 0, 0, 0, 1], 4);
        assert_eq!(pfaffian_field(&m).unwrap(), rat(0));
    }

    #[test]
    fn errors() {
        assert_eq!(pfaffian_field(&Matrix::<Rational>::zeros(3, 3)), Err(Error::OddSize(3)));
        let sym = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
        assert_eq!(pfaffian_field(&sym), Err(Error::NotAlternating));
        let diag = Matrix::from_ints(&[&[1, 1], &[-1, 0]]);
        assert_eq!(pfaffian_field(&diag), Err(Error::NotAlternating));
    }

    #[test]
    fn bipoly_two_by_two() {
        // Gram of ω_{2E - tE} at n = 1.
        let two_minus_t = BiPoly::from_t(&UniPoly::from_ints(Var::T, &[2, -1]));
        let a = Matrix::from_fn(2, 2, |i, j| match (i, j) {
            (0, 1) => two_minus_t.clone(),
            (1, 0) => -&two_minus_t,
            _ => BiPoly::zero(),
        });
        assert_eq!(pfaffian_bipoly(&a, (0, 1)).unwrap(), two_minus_t);
        let det = det_bipoly(&a, (0, 1)).unwrap();
        assert_eq!(det, two_minus_t.pow(2));
    }

    #[test]
    fn bipoly_bounds_checked() {
        let s2 = BiPoly::s().pow(2);
        let a = Matrix::from_fn(2, 2, |i, j| match (i, j) {
            (0, 1) => s2.clone(),
            (1, 0) => -&s2,
            _ => BiPoly::zero(),
        });
        assert_eq!(pfaffian_bipoly(&a, (1, 1)), Err(Error::DegreeBoundExceeded));
        assert_eq!(pfaffian_bipoly(&a, (2, 0)).unwrap(), s2);
    }
}
