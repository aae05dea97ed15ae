//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on a domain error, 2 on unreadable input.
//! Errors are printed to stderr as one line `TOKEN: message`.

mod file;
mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Parser, Subcommand};

pub use file::{read_form, MatrixFile};
pub use report::{CheckReport, RatfunCheck, Report};

use crate::diag::{symplectic_diagonalize, symplectically_similar};
use crate::eigen::{
    constant_part, ratfun_projections, sympl_pair_decomposition, RatfunOptions, DEFAULT_MAX_RATFUN_DIM,
};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::pfaffian::pfaffian_field;
use crate::scalar::{BiPoly, Rational};
use crate::scp::{factor_pair_product, psi, scp, scp_factor_pairs};
use crate::symplectic::{
    adjoint, classify_subspace, is_self_adjoint, is_symplectic_map, is_symplectically_normal, random_symplectic_for,
    SymplecticForm,
};

#[derive(Parser, Debug)]
#[command(name = "sympchar", version, about = "Exact symplectic characteristic polynomials and symplectic similarity")]
pub struct Cli {
    /// Print structured JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Gram matrix file `{"dim": .., "form": [[..]]}` overriding the input's form.
    #[arg(long, global = true, value_name = "FILE")]
    form: Option<PathBuf>,
    /// Seed for `random-symplectic`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest dimension for computations over Q(s).
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_RATFUN_DIM)]
    max_ratfun_dim: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report symplecticity, self-adjointness, normality and diagonalizability.
    Check { file: PathBuf },
    /// The symplectic adjoint.
    Adjoint { file: PathBuf },
    /// det(M - tE).
    Charpoly { file: PathBuf },
    /// Pfaffian of an alternating matrix.
    Pfaffian { file: PathBuf },
    /// psi_A(t) of a self-adjoint map.
    Psi { file: PathBuf },
    /// The symplectic characteristic polynomial chi(s, t).
    Scp { file: PathBuf },
    /// Pair factors of chi, from a matrix file or a polynomial.
    #[command(group(ArgGroup::new("input").required(true).args(["file", "poly"])))]
    Factor {
        file: Option<PathBuf>,
        /// A polynomial in s and t, e.g. "s^4 - (1+2*s^2)*t + t^2".
        #[arg(long)]
        poly: Option<String>,
    },
    /// Symplectically orthogonal decomposition into pair spaces.
    Decompose { file: PathBuf },
    /// Symplectic basis of eigenvectors.
    Diagonalize { file: PathBuf },
    /// Decide symplectic similarity of two maps.
    Similar { first: PathBuf, second: PathBuf },
    /// A random symplectic matrix of size 2n for the given form.
    RandomSymplectic {
        #[arg(long)]
        n: usize,
    },
}

struct Input {
    matrix: Matrix<Rational>,
    form: SymplecticForm,
}

impl Cli {
    fn load(&self, path: &Path) -> Result<Input> {
        let file = MatrixFile::read(path)?;
        let form = match &self.form {
            Some(f) => read_form(f)?,
            None => file.symplectic_form()?,
        };
        form.check_operator(&file.matrix)?;
        Ok(Input { matrix: file.matrix, form })
    }

    fn execute(&self) -> Result<Report> {
        match &self.command {
            Command::Check { file } => {
                let Input { matrix, form } = self.load(file)?;
                let diagonalizable = match matrix.is_diagonalizable() {
                    Ok(b) => Some(b),
                    Err(Error::IrrationalSpectrum) => None,
                    Err(e) => return Err(e),
                };
                Ok(Report::Check(CheckReport {
                    dim: form.dim(),
                    symplectic_map: is_symplectic_map(&matrix, &form)?,
                    self_adjoint: is_self_adjoint(&matrix, &form)?,
                    symplectically_normal: is_symplectically_normal(&matrix, &form)?,
                    diagonalizable,
                }))
            }
            Command::Adjoint { file } => {
                let Input { matrix, form } = self.load(file)?;
                Ok(Report::Matrix(adjoint(&matrix, &form)?))
            }
            Command::Charpoly { file } => Ok(Report::UniPoly(MatrixFile::read(file)?.matrix.charpoly()?)),
            Command::Pfaffian { file } => Ok(Report::Value(pfaffian_field(&MatrixFile::read(file)?.matrix)?)),
            Command::Psi { file } => {
                let Input { matrix, form } = self.load(file)?;
                Ok(Report::UniPoly(psi(&matrix, &form)?))
            }
            Command::Scp { file } => {
                let Input { matrix, form } = self.load(file)?;
                Ok(Report::Scp(scp(&matrix, &form)?))
            }
            Command::Factor { file, poly } => match (file, poly) {
                (Some(file), _) => {
                    let Input { matrix, form } = self.load(file)?;
                    Ok(Report::Factors(scp_factor_pairs(&scp(&matrix, &form)?)?))
                }
                (None, Some(text)) => {
                    let p: BiPoly = text.parse()?;
                    Ok(Report::Factors(factor_pair_product(&p)?))
                }
                (None, None) => Err(Error::Parse("factor needs a file or --poly".into())),
            },
            Command::Decompose { file } => {
                let Input { matrix, form } = self.load(file)?;
                let dec = sympl_pair_decomposition(&matrix, &form)?;
                let kinds = dec.spaces.iter().map(|w| classify_subspace(w, &form)).collect::<Result<_>>()?;
                let ratfun = self.ratfun_check(&matrix, &form, &dec.projections)?;
                Ok(Report::Decomposition { dec, kinds, ratfun })
            }
            Command::Diagonalize { file } => {
                let Input { matrix, form } = self.load(file)?;
                Ok(Report::Diagonalization(symplectic_diagonalize(&matrix, &form)?))
            }
            Command::Similar { first, second } => {
                let a = self.load(first)?;
                let b = self.load(second)?;
                let form = match &self.form {
                    Some(_) => a.form,
                    None if a.form == b.form => a.form,
                    None => return Err(Error::Parse("the two files declare different forms".into())),
                };
                Ok(Report::Similarity(symplectically_similar(&a.matrix, &b.matrix, &form)?))
            }
            Command::RandomSymplectic { n } => {
                let form = match &self.form {
                    Some(f) => read_form(f)?,
                    None if *n >= 1 => SymplecticForm::standard(*n),
                    None => return Err(Error::Parse("n must be positive".into())),
                };
                if form.n() != *n {
                    return Err(Error::SizeMismatch { expected: 2 * n, found: form.dim() });
                }
                Ok(Report::Matrix(random_symplectic_for(&form, self.seed)))
            }
        }
    }

    /// Rebuilds the projections over `ℚ(s)` from `(M, M^{*ω})` and compares.
    fn ratfun_check(
        &self,
        m: &Matrix<Rational>,
        form: &SymplecticForm,
        projections: &[Matrix<Rational>],
    ) -> Result<RatfunCheck> {
        let limit = self.max_ratfun_dim;
        if form.dim() > limit {
            return Ok(RatfunCheck::Skipped { dim: form.dim(), limit });
        }
        let qs = ratfun_projections(m, &adjoint(m, form)?, RatfunOptions { max_ratfun_dim: limit })?;
        let qs: Option<Vec<Matrix<Rational>>> = qs.iter().map(constant_part).collect();
        if qs.as_deref() != Some(projections) {
            return Err(Error::Internal("projections over Q(s) disagree".into()));
        }
        Ok(RatfunCheck::Verified)
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => 2,
        _ => 1,
    }
}

/// Parses `args` (including the program name), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
                return 0;
            }
            let _ = write!(err, "{text}");
            return 2;
        }
    };
    match cli.execute() {
        Ok(report) => {
            let text = if cli.json {
                format!("{}\n", serde_json::to_string_pretty(&report.to_json()).expect("serializable"))
            } else {
                report.to_text()
            };
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "{}: {e}", e.token());
            exit_code(&e)
        }
    }
}
