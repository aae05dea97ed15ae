use std::fmt::Write as _;

use serde_json::{json, Value};

use super::file::matrix_json;
use crate::diag::{Similarity, SymplecticDiagonalization};
use crate::eigen::PairDecomposition;
use crate::matrix::Matrix;
use crate::scalar::{Rational, UniPoly};
use crate::scp::{PairFactorization, ScpPolynomial};
use crate::symplectic::SubspaceKind;

/// Outcome of the cross-check of projections over `ℚ(s)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RatfunCheck {
    Verified,
    Skipped { dim: usize, limit: usize },
}

/// Answers of `check`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub dim: usize,
    pub symplectic_map: bool,
    pub self_adjoint: bool,
    pub symplectically_normal: bool,
    /// `None` when the spectrum is not rational.
    pub diagonalizable: Option<bool>,
}

/// Everything a command can print. Text and JSON are both rendered from this value.
#[derive(Clone, Debug)]
pub enum Report {
    Matrix(Matrix<Rational>),
    Value(Rational),
    UniPoly(UniPoly),
    Scp(ScpPolynomial),
    Check(CheckReport),
    Factors(PairFactorization),
    Decomposition { dec: PairDecomposition, kinds: Vec<SubspaceKind>, ratfun: RatfunCheck },
    Diagonalization(SymplecticDiagonalization),
    Similarity(Similarity),
}

fn vectors_json(vs: &[Vec<Rational>]) -> Value {
    json!(vs.iter().map(|v| v.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn vector_text(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

const SIMILAR: &str = "symplectically-similar";
const NOT_SIMILAR: &str = "not-symplectically-similar";

impl Report {
    pub fn to_json(&self) -> Value {
        match self {
            Report::Matrix(m) => json!({ "dim": m.rows(), "matrix": matrix_json(m) }),
            Report::Value(x) => json!({ "value": x.to_string() }),
            Report::UniPoly(p) => json!({
                "polynomial": p.to_string(),
                "variable": p.var().symbol().to_string(),
                "coefficients": p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            }),
            Report::Scp(chi) => json!({
                "polynomial": chi.to_string(),
                "n": chi.n(),
                "t_coefficients": (0..=chi.n()).map(|k| chi.coeff(k).to_string()).collect::<Vec<_>>(),
            }),
            Report::Check(c) => json!({
                "dim": c.dim,
                "symplectic_map": c.symplectic_map,
                "self_adjoint": c.self_adjoint,
                "symplectically_normal": c.symplectically_normal,
                "diagonalizable": c.diagonalizable,
                "rational_spectrum": c.diagonalizable.is_some(),
            }),
            Report::Factors(f) => json!({
                "polynomial": f.product().to_string(),
                "factors": f.factors().iter().map(|p| json!({
                    "lambda": p.lambda.to_string(),
                    "mu": p.mu.to_string(),
                    "multiplicity": p.multiplicity,
                })).collect::<Vec<_>>(),
            }),
            Report::Decomposition { dec, kinds, ratfun } => json!({
                "spaces": dec.pairs.iter().zip(&dec.spaces).zip(&dec.projections).zip(kinds).map(|(((p, w), proj), kind)| json!({
                    "lambda": p.lambda.to_string(),
                    "mu": p.mu.to_string(),
                    "multiplicity": p.multiplicity,
                    "dim": w.dim(),
                    "kind": kind,
                    "basis": vectors_json(w.basis()),
                    "projection": matrix_json(proj),
                })).collect::<Vec<_>>(),
                "ratfun_projections": match ratfun {
                    RatfunCheck::Verified => json!("verified"),
                    RatfunCheck::Skipped { .. } => json!("skipped"),
                },
            }),
            Report::Diagonalization(d) => json!({
                "pairs": d.pairs.iter().map(|(l, m)| json!([l.to_string(), m.to_string()])).collect::<Vec<_>>(),
                "basis": matrix_json(&d.matrix()),
                "diagonal": matrix_json(&d.diagonal()),
            }),
            Report::Similarity(s) => json!({
                "verdict": if s.similar { SIMILAR } else { NOT_SIMILAR },
                "witness": s.witness.as_ref().map(matrix_json),
            }),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self {
            Report::Matrix(m) => out.push_str(&m.to_string()),
            Report::Value(x) => writeln!(out, "{x}").unwrap(),
            Report::UniPoly(p) => writeln!(out, "{p}").unwrap(),
            Report::Scp(chi) => writeln!(out, "{chi}").unwrap(),
            Report::Check(c) => {
                writeln!(out, "dimension: {}", c.dim).unwrap();
                writeln!(out, "symplectic map: {}", yes_no(c.symplectic_map)).unwrap();
                writeln!(out, "self-adjoint: {}", yes_no(c.self_adjoint)).unwrap();
                writeln!(out, "symplectically normal: {}", yes_no(c.symplectically_normal)).unwrap();
                let diag = match c.diagonalizable {
                    Some(b) => yes_no(b),
                    None => "undecided (irrational spectrum)",
                };
                writeln!(out, "diagonalizable over Q: {diag}").unwrap();
            }
            Report::Factors(f) => {
                for p in f.factors() {
                    let factor = format!("(({} - s)*({} - s) - t)", p.lambda, p.mu);
                    if p.multiplicity == 1 {
                        writeln!(out, "{factor}").unwrap();
                    } else {
                        writeln!(out, "{factor}^{}", p.multiplicity).unwrap();
                    }
                }
            }
            Report::Decomposition { dec, kinds, ratfun } => {
                for (((p, w), proj), kind) in dec.pairs.iter().zip(&dec.spaces).zip(&dec.projections).zip(kinds) {
                    writeln!(
                        out,
                        "pair ({}, {}) multiplicity {}: {kind} subspace of dimension {}",
                        p.lambda,
                        p.mu,
                        p.multiplicity,
                        w.dim()
                    )
                    .unwrap();
                    for v in w.basis() {
                        writeln!(out, "  {}", vector_text(v)).unwrap();
                    }
                    writeln!(out, "  projection:").unwrap();
                    for line in proj.to_string().lines() {
                        writeln!(out, "  {line}").unwrap();
                    }
                }
                match ratfun {
                    RatfunCheck::Verified => writeln!(out, "projections over Q(s): verified").unwrap(),
                    RatfunCheck::Skipped { dim, limit } => {
                        writeln!(out, "projections over Q(s): skipped (dimension {dim} exceeds {limit})").unwrap()
                    }
                }
            }
            Report::Diagonalization(d) => {
                let pairs: Vec<String> = d.pairs.iter().map(|(l, m)| format!("({l}, {m})")).collect();
                writeln!(out, "pairs: {}", pairs.join(", ")).unwrap();
                writeln!(out, "basis (columns e1..en, f1..fn):").unwrap();
                out.push_str(&d.matrix().to_string());
            }
            Report::Similarity(s) => {
                writeln!(out, "{}", if s.similar { SIMILAR } else { NOT_SIMILAR }).unwrap();
                if let Some(p) = &s.witness {
                    writeln!(out, "witness:").unwrap();
                    out.push_str(&p.to_string());
                }
            }
        }
        out
    }
}
