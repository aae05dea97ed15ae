use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{parse_rational, Rational};
use crate::symplectic::SymplecticForm;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMatrixFile {
    dim: usize,
    matrix: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    form: Option<Vec<Vec<String>>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFormFile {
    dim: usize,
    form: Vec<Vec<String>>,
}

/// A matrix of even size with an optional Gram matrix, as stored on disk.
///
/// Entries are strings `"p"` or `"p/q"` so that no value passes through floating point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFile {
    pub matrix: Matrix<Rational>,
    pub form: Option<Matrix<Rational>>,
}

fn parse_entries(dim: usize, rows: &[Vec<String>], what: &str) -> Result<Matrix<Rational>> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(Error::Parse(format!("{what} must be {dim}x{dim}")));
    }
    let parsed = rows
        .iter()
        .map(|r| r.iter().map(|x| parse_rational(x)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(parsed)
}

fn check_dim(dim: usize) -> Result<()> {
    if dim == 0 || dim % 2 == 1 {
        return Err(Error::Parse(format!("dim must be a positive even integer, got {dim}")));
    }
    Ok(())
}

fn render_entries(m: &Matrix<Rational>) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(|x| x.to_string()).collect()).collect()
}

impl MatrixFile {
    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawMatrixFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        check_dim(raw.dim)?;
        let matrix = parse_entries(raw.dim, &raw.matrix, "matrix")?;
        let form = raw.form.as_deref().map(|f| parse_entries(raw.dim, f, "form")).transpose()?;
        Ok(MatrixFile { matrix, form })
    }

    pub fn read(path: &Path) -> Result<Self> {
        Self::parse(&read_text(path)?)
    }

    pub fn render(&self) -> String {
        let raw = RawMatrixFile {
            dim: self.matrix.rows(),
            matrix: render_entries(&self.matrix),
            form: self.form.as_ref().map(render_entries),
        };
        serde_json::to_string_pretty(&raw).expect("serializable")
    }

    /// The stored form, or the standard one.
    pub fn symplectic_form(&self) -> Result<SymplecticForm> {
        match &self.form {
            Some(g) => SymplecticForm::new(g.clone()),
            None => Ok(SymplecticForm::standard(self.matrix.rows() / 2)),
        }
    }
}

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

/// Reads a `{"dim": .., "form": [[..]]}` file.
pub fn read_form(path: &Path) -> Result<SymplecticForm> {
    let raw: RawFormFile = serde_json::from_str(&read_text(path)?).map_err(|e| Error::Parse(e.to_string()))?;
    check_dim(raw.dim)?;
    SymplecticForm::new(parse_entries(raw.dim, &raw.form, "form")?)
}

/// JSON rows of strings.
pub fn matrix_json(m: &Matrix<Rational>) -> serde_json::Value {
    serde_json::json!(render_entries(m))
}
