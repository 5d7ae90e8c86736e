//! Lie algebras given by structure equations `(de^1, ..., de^n)`.
//!
//! The bracket is tied to the differential by `de^i(X, Y) = -e^i([X, Y])`, so
//! `de^4 = e^{12}` means `[e_1, e_2] = -e_4`. The differential on arbitrary forms is the
//! Chevalley-Eilenberg differential with trivial coefficients, extended from the
//! coframe as a degree +1 antiderivation.

use num_traits::Zero;
use thiserror::Error;

use crate::exterior::{ExteriorError, Form, Vector};
use crate::linsolve::{nullspace, rref, Matrix};
use crate::notation::{format_form, parse_structure_equations, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("syntax error {0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
    #[error("the Jacobi identity has not been verified for this algebra")]
    Unvalidated,
    #[error("Jacobi identity fails: d(de^{index}) = {witness}")]
    JacobiViolation { index: usize, witness: String },
    #[error("expected a {expected}-dimensional algebra, got dimension {found}")]
    WrongDimension { expected: usize, found: usize },
    #[error("unknown catalog entry {0:?}")]
    UnknownCatalogName(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Validation {
    Unknown,
    Valid,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JacobiOutcome {
    Holds,
    /// `d(de^index)` is the nonzero 3-form `witness`.
    Fails {
        index: usize,
        witness: Form,
    },
}

impl JacobiOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, Self::Holds)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    differentials: Vec<Form>,
    validation: Validation,
}

impl LieAlgebra {
    /// Builds an algebra from `de^1, ..., de^n`; each must be a 2-form in dimension `n`.
    pub fn from_differentials(differentials: Vec<Form>) -> Result<Self, LieError> {
        let dim = differentials.len();
        for de in &differentials {
            if de.dim() != dim {
                return Err(ExteriorError::DimensionMismatch {
                    left: dim,
                    right: de.dim(),
                }
                .into());
            }
            if de.degree() != 2 {
                return Err(ExteriorError::DegreeMismatch {
                    left: 2,
                    right: de.degree(),
                }
                .into());
            }
        }
        Ok(Self {
            differentials,
            validation: Validation::Unknown,
        })
    }

    pub fn abelian(dim: usize) -> Self {
        Self {
            differentials: vec![Form::zero(dim, 2); dim],
            validation: Validation::Valid,
        }
    }

    /// Parses Salamon notation such as `(0,0,0,e^{12},e^{13},e^{23})`. The Jacobi
    /// identity is not checked.
    pub fn parse(text: &str) -> Result<Self, LieError> {
        let differentials = parse_structure_equations(text)?;
        if differentials.is_empty() {
            return Err(ParseError {
                position: 0,
                message: "no entries".into(),
            }
            .into());
        }
        Self::from_differentials(differentials)
    }

    /// Canonical Salamon notation, e.g. `(0,0,0,e^{12},e^{13},e^{23})`.
    pub fn to_salamon(&self) -> String {
        let entries: Vec<String> = self.differentials.iter().map(format_form).collect();
        format!("({})", entries.join(","))
    }

    pub fn dim(&self) -> usize {
        self.differentials.len()
    }

    pub fn validation(&self) -> Validation {
        self.validation
    }

    pub fn is_validated(&self) -> bool {
        self.validation == Validation::Valid
    }

    /// `de^index`, 1-based.
    pub fn differential_of(&self, index: usize) -> &Form {
        &self.differentials[index - 1]
    }

    pub fn differentials(&self) -> &[Form] {
        &self.differentials
    }

    fn require_valid(&self) -> Result<(), LieError> {
        if self.is_validated() {
            Ok(())
        } else {
            Err(LieError::Unvalidated)
        }
    }

    fn check_dim(&self, dim: usize) -> Result<(), LieError> {
        if dim != self.dim() {
            return Err(ExteriorError::DimensionMismatch {
                left: self.dim(),
                right: dim,
            }
            .into());
        }
        Ok(())
    }

    /// `[X, Y]` with components `-de^i(X, Y)`.
    pub fn bracket(&self, x: &Vector, y: &Vector) -> Result<Vector, LieError> {
        self.check_dim(x.dim())?;
        self.check_dim(y.dim())?;
        let coords = self
            .differentials
            .iter()
            .map(|de| de.evaluate(&[x, y]).map(|v| -v))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Vector::new(coords)?)
    }

    /// Chevalley-Eilenberg differential.
    pub fn d(&self, form: &Form) -> Result<Form, LieError> {
        self.check_dim(form.dim())?;
        let dim = self.dim();
        let degree = form.degree() + 1;
        if degree > dim {
            return Ok(Form::zero(dim, dim));
        }
        let mut out = Form::zero(dim, degree);
        let mut raw = Vec::with_capacity(degree);
        for (tuple, coeff) in form.terms() {
            let indices = tuple.indices();
            for (pos, &index) in indices.iter().enumerate() {
                let sign_negative = pos % 2 == 1;
                for (pair, c) in self.differential_of(index as usize).terms() {
                    raw.clear();
                    raw.extend_from_slice(&indices[..pos]);
                    raw.extend_from_slice(pair.indices());
                    raw.extend_from_slice(&indices[pos + 1..]);
                    let value = coeff * c;
                    out.add_monomial(&raw, if sign_negative { -value } else { value });
                }
            }
        }
        Ok(out)
    }

    /// `d d e^i = 0` for every `i`, equivalent to the Jacobi identity.
    pub fn check_jacobi(&self) -> JacobiOutcome {
        for (i, de) in self.differentials.iter().enumerate() {
            let dd = self.d(de).expect("dimension matches by construction");
            if !dd.is_zero() {
                return JacobiOutcome::Fails {
                    index: i + 1,
                    witness: dd,
                };
            }
        }
        JacobiOutcome::Holds
    }

    /// Returns the algebra flagged as validated, or the Jacobi violation.
    pub fn validated(mut self) -> Result<Self, LieError> {
        match self.check_jacobi() {
            JacobiOutcome::Holds => {
                self.validation = Validation::Valid;
                Ok(self)
            }
            JacobiOutcome::Fails { index, witness } => Err(LieError::JacobiViolation {
                index,
                witness: format_form(&witness),
            }),
        }
    }

    /// `g^0 = g`, `g^{j+1} = [g, g^j]`, stopping once the dimension no longer drops.
    /// The algebra is nilpotent iff the last term is zero.
    pub fn lower_central_series(&self) -> Result<Vec<Subspace>, LieError> {
        self.require_valid()?;
        let dim = self.dim();
        let mut series = vec![Subspace::whole(dim)];
        loop {
            let last = series.last().expect("series is nonempty");
            if last.dim() == 0 {
                break;
            }
            let mut spanning = Vec::new();
            for i in 1..=dim {
                let ei = Vector::basis(dim, i);
                for v in last.basis() {
                    spanning.push(self.bracket(&ei, v)?);
                }
            }
            let next = Subspace::span(dim, &spanning);
            if next.dim() == last.dim() {
                break;
            }
            series.push(next);
        }
        Ok(series)
    }

    pub fn is_nilpotent(&self) -> Result<bool, LieError> {
        Ok(self
            .lower_central_series()?
            .last()
            .is_some_and(|s| s.dim() == 0))
    }

    /// Kernel of `X -> ([X, e_j])_j`.
    pub fn center(&self) -> Result<Subspace, LieError> {
        self.require_valid()?;
        let dim = self.dim();
        let frame: Vec<Vector> = (1..=dim).map(|i| Vector::basis(dim, i)).collect();
        let mut matrix: Matrix = Vec::with_capacity(dim * dim);
        for ej in &frame {
            let images = frame
                .iter()
                .map(|em| self.bracket(em, ej))
                .collect::<Result<Vec<_>, _>>()?;
            for i in 1..=dim {
                matrix.push(images.iter().map(|v| v.component(i).clone()).collect());
            }
        }
        let kernel = nullspace(&matrix, dim)
            .into_iter()
            .map(Vector::new)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Subspace::span(dim, &kernel))
    }

    /// Cartan formula `L_X a = i_X da + d(i_X a)`.
    pub fn lie_derivative(&self, x: &Vector, form: &Form) -> Result<Form, LieError> {
        self.require_valid()?;
        self.check_dim(x.dim())?;
        if form.degree() == self.dim() {
            return self.d(&form.contract(x)?);
        }
        let first = self.d(form)?.contract(x)?;
        if form.degree() == 0 {
            return Ok(first);
        }
        let second = self.d(&form.contract(x)?)?;
        Ok(first.checked_add(&second)?)
    }

    /// `h + R e_{n+1}` with `de^{n+1} = 0`, making `e_{n+1}` central.
    pub fn extend_central(&self) -> Result<Self, LieError> {
        self.require_valid()?;
        let dim = self.dim() + 1;
        let mut differentials = self
            .differentials
            .iter()
            .map(|de| de.embed(dim))
            .collect::<Result<Vec<_>, _>>()?;
        differentials.push(Form::zero(dim, 2));
        Ok(Self {
            differentials,
            validation: Validation::Valid,
        })
    }
}

/// Linear subspace held as the nonzero rows of a reduced row echelon basis, which is
/// unique, so equal subspaces compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn span(ambient: usize, vectors: &[Vector]) -> Self {
        let mut matrix: Matrix = vectors.iter().map(|v| v.coords().to_vec()).collect();
        let pivots = rref(&mut matrix, ambient);
        matrix.truncate(pivots.len());
        let basis = matrix
            .into_iter()
            .map(|row| Vector::new(row).expect("ambient dim"))
            .collect();
        Self { ambient, basis }
    }

    pub fn whole(ambient: usize) -> Self {
        Self {
            ambient,
            basis: (1..=ambient).map(|i| Vector::basis(ambient, i)).collect(),
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn contains(&self, v: &Vector) -> bool {
        let mut extended = self.basis.clone();
        extended.push(v.clone());
        Subspace::span(self.ambient, &extended).dim() == self.dim()
    }

    /// True when the subspace is spanned by frame vectors; returns their indices.
    pub fn frame_indices(&self) -> Option<Vec<usize>> {
        self.basis
            .iter()
            .map(|v| {
                let nonzero: Vec<usize> = (1..=self.ambient)
                    .filter(|&i| !v.component(i).is_zero())
                    .collect();
                match nonzero.as_slice() {
                    [i] => Some(*i),
                    _ => None,
                }
            })
            .collect()
    }
}

/// Literal structure equations of the six algebras claimed to carry the construction.
/// The strings are kept verbatim, including the five-entry `2B`.
pub const CATALOG: [(&str, &str); 6] = [
    ("1A", "(0, 0, 0, e^{12}, e^{13}, e^{23})"),
    ("1B", "(0, 0, e^{12}, e^{13}, e^{23}, e^{14})"),
    ("1C", "(0, 0, e^{12}, e^{13}, e^{23}, e^{14+25})"),
    ("2B", "(0, 0, e^{12}, e^{23}, e^{14+35})"),
    ("2C", "(0, 0, e^{12}, e^{13}, e^{23}, e^{14-25})"),
    ("3A", "(0, 0, 0, 0, e^{12}, e^{15+34})"),
];

pub const CATALOG_DIM: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogStatus {
    Valid(LieAlgebra),
    /// The literal parses but is not a usable six-dimensional Lie algebra.
    Flagged {
        parsed: Option<LieAlgebra>,
        diagnostics: Vec<String>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub literal: &'static str,
    pub status: CatalogStatus,
}

impl CatalogEntry {
    pub fn algebra(&self) -> Option<&LieAlgebra> {
        match &self.status {
            CatalogStatus::Valid(algebra) => Some(algebra),
            CatalogStatus::Flagged { .. } => None,
        }
    }

    pub fn is_flagged(&self) -> bool {
        matches!(self.status, CatalogStatus::Flagged { .. })
    }
}

fn load_entry(name: &'static str, literal: &'static str) -> CatalogEntry {
    let status = match LieAlgebra::parse(literal) {
        Err(err) => CatalogStatus::Flagged {
            parsed: None,
            diagnostics: vec![err.to_string()],
        },
        Ok(algebra) => {
            let mut diagnostics = Vec::new();
            if algebra.dim() != CATALOG_DIM {
                diagnostics.push(format!(
                    "entry count {}, expected {CATALOG_DIM}",
                    algebra.dim()
                ));
            }
            if let JacobiOutcome::Fails { index, witness } = algebra.check_jacobi() {
                diagnostics.push(format!(
                    "as a {}-dimensional algebra the Jacobi identity fails: d(de^{index}) = {}",
                    algebra.dim(),
                    format_form(&witness)
                ));
            }
            if diagnostics.is_empty() {
                CatalogStatus::Valid(algebra.validated().expect("Jacobi checked above"))
            } else {
                CatalogStatus::Flagged {
                    parsed: Some(algebra),
                    diagnostics,
                }
            }
        }
    };
    CatalogEntry {
        name,
        literal,
        status,
    }
}

pub fn catalog(name: &str) -> Result<CatalogEntry, LieError> {
    CATALOG
        .iter()
        .find(|(n, _)| n.eq_ignore_ascii_case(name))
        .map(|&(n, literal)| load_entry(n, literal))
        .ok_or_else(|| LieError::UnknownCatalogName(name.to_string()))
}

pub fn catalog_entries() -> Vec<CatalogEntry> {
    CATALOG
        .iter()
        .map(|&(n, literal)| load_entry(n, literal))
        .collect()
}
