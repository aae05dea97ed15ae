use std::collections::BTreeSet;

use num::{One, Zero};

use super::{BiPoly, Rational, UniPoly, Var};
use crate::error::{Error, Result};

/// The default interpolation nodes `0, 1, …, count-1`.
pub fn integer_nodes(count: usize) -> Vec<Rational> {
    (0..count).map(|i| Rational::from_integer(i.into())).collect()
}

fn check_distinct(nodes: &[Rational]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for x in nodes {
        if !seen.insert(x) {
            return Err(Error::DuplicateNode(x.to_string()));
        }
    }
    Ok(())
}

/// The unique polynomial of degree `< nodes.len()` through `(nodes[i], values[i])`.
///
/// Newton divided differences, then expansion into the monomial basis.
pub fn interpolate(var: Var, nodes: &[Rational], values: &[Rational]) -> Result<UniPoly> {
    if nodes.len() != values.len() {
        return Err(Error::SizeMismatch { expected: nodes.len(), found: values.len() });
    }
    check_distinct(nodes)?;
    let n = nodes.len();
    let mut dd = values.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&nodes[i] - &nodes[i - level]);
        }
    }
    // Horner on the Newton form: p = dd0 + (x-x0)(dd1 + (x-x1)(dd2 + ...)).
    let mut p = UniPoly::zero(var);
    for i in (0..n).rev() {
        let shift = UniPoly::new(var, vec![-nodes[i].clone(), Rational::one()]);
        p = &(&p * &shift) + &UniPoly::constant(var, dd[i].clone());
    }
    Ok(p)
}

/// Recovers a bivariate polynomial from its values on a tensor grid.
///
/// `values[i][j]` is the value at `(s_nodes[i], t_nodes[j])`. Each axis needs at
/// least `bound + 1` distinct nodes; extra nodes are used as well, and a result
/// whose degree then exceeds the bounds is reported as
/// [`Error::DegreeBoundExceeded`].
pub fn interpolate2d(
    s_nodes: &[Rational],
    t_nodes: &[Rational],
    values: &[Vec<Rational>],
    bounds: (usize, usize),
) -> Result<BiPoly> {
    let (ds, dt) = bounds;
    if s_nodes.len() < ds + 1 {
        return Err(Error::InsufficientNodes { axis: 's', needed: ds + 1, got: s_nodes.len() });
    }
    if t_nodes.len() < dt + 1 {
        return Err(Error::InsufficientNodes { axis: 't', needed: dt + 1, got: t_nodes.len() });
    }
    check_distinct(s_nodes)?;
    check_distinct(t_nodes)?;
    if values.len() != s_nodes.len() {
        return Err(Error::SizeMismatch { expected: s_nodes.len(), found: values.len() });
    }
    if let Some(row) = values.iter().find(|row| row.len() != t_nodes.len()) {
        return Err(Error::SizeMismatch { expected: t_nodes.len(), found: row.len() });
    }

    // Interpolate along s for every fixed t_j.
    let along_s: Vec<UniPoly> = (0..t_nodes.len())
        .map(|j| {
            let col: Vec<Rational> = values.iter().map(|row| row[j].clone()).collect();
            interpolate(Var::S, s_nodes, &col)
        })
        .collect::<Result<_>>()?;

    // Then along t for every power of s.
    let s_len = along_s.iter().map(|p| p.coeffs().len()).max().unwrap_or(0);
    let mut grid = vec![vec![Rational::zero(); s_len]; t_nodes.len()];
    #[allow(clippy::needless_range_loop)]
    for k in 0..s_len {
        let col: Vec<Rational> = along_s.iter().map(|p| p.coeff(k)).collect();
        let in_t = interpolate(Var::T, t_nodes, &col)?;
        for (tp, c) in in_t.coeffs().iter().enumerate() {
            grid[tp][k] = c.clone();
        }
    }
    let result = BiPoly::from_t_coeffs(grid.into_iter().map(|row| UniPoly::new(Var::S, row)).collect());
    let over_s = result.deg_s().is_some_and(|d| d > ds);
    let over_t = result.deg_t().is_some_and(|d| d > dt);
    if over_s || over_t {
        return Err(Error::DegreeBoundExceeded);
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn eval_grid(p: &BiPoly, s: &[Rational], t: &[Rational]) -> Vec<Vec<Rational>> {
        s.iter().map(|x| t.iter().map(|y| p.eval(x, y)).collect()).collect()
    }

    #[test]
    fn univariate_through_points() {
        let nodes = integer_nodes(3);
        let p = interpolate(Var::T, &nodes, &[rat(2), rat(0), rat(0)]).unwrap();
        assert_eq!(p, UniPoly::from_ints(Var::T, &[2, -3, 1]));
    }

    #[test]
    fn st_on_unit_square() {
        let n = integer_nodes(2);
        let st = &BiPoly::s() * &BiPoly::t();
        let got = interpolate2d(&n, &n, &eval_grid(&st, &n, &n), (1, 1)).unwrap();
        assert_eq!(got, st);
    }

    #[test]
    fn constant_one() {
        let s = integer_nodes(4);
        let t = [rat(-1), rat(5)];
        let one = BiPoly::constant(rat(1));
        assert_eq!(interpolate2d(&s, &t, &eval_grid(&one, &s, &t), (3, 1)).unwrap(), one);
    }

    #[test]
    fn pair_factor_round_trip() {
        // (1-s)(2-s) - t on {0,1,2} x {0,1}; values computed by hand:
        // s=0: 2, 1; s=1: 0, -1; s=2: 0, -1.
        let values = vec![vec![rat(2), rat(1)], vec![rat(0), rat(-1)], vec![rat(0), rat(-1)]];
        let got = interpolate2d(&integer_nodes(3), &integer_nodes(2), &values, (2, 1)).unwrap();
        assert_eq!(got, BiPoly::pair_factor(&rat(1), &rat(2)));
    }

    #[test]
    fn errors() {
        let n = integer_nodes(2);
        let v = vec![vec![rat(0); 2]; 2];
        assert!(matches!(interpolate2d(&n, &n, &v, (2, 1)), Err(Error::InsufficientNodes { axis: 's', .. })));
        let dup = [rat(1), rat(1)];
        assert!(matches!(interpolate2d(&dup, &n, &v, (1, 1)), Err(Error::DuplicateNode(_))));
        // s^2 sampled on three nodes but declared linear.
        let s3 = integer_nodes(3);
        let sq = &BiPoly::s() * &BiPoly::s();
        assert_eq!(interpolate2d(&s3, &n, &eval_grid(&sq, &s3, &n), (1, 1)), Err(Error::DegreeBoundExceeded));
    }
}
