//! Argument resolution: `@path` substitution, catalog names and literal parsing.

use std::fs;

use cocal7_core::liealg::CatalogStatus;
use cocal7_core::{
    catalog, parse_form, parse_vector, Form, G2Error, LieAlgebra, LieError, ParseError, Vector,
};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("{what}: syntax error {source}")]
    Syntax {
        what: &'static str,
        source: ParseError,
    },
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    G2(#[from] G2Error),
    #[error("{0}")]
    Precondition(String),
}

/// Replaces `@path` by the trimmed contents of the file.
pub fn resolve(arg: &str) -> Result<String, CliError> {
    match arg.strip_prefix('@') {
        Some(path) => fs::read_to_string(path)
            .map(|text| text.trim().to_string())
            .map_err(|e| CliError::Io {
                path: path.to_string(),
                message: e.to_string(),
            }),
        None => Ok(arg.to_string()),
    }
}

pub fn resolve_opt(arg: Option<&String>) -> Result<Option<String>, CliError> {
    arg.map(|a| resolve(a)).transpose()
}

/// An algebra named by catalog entry or given as a structure-equation literal.
pub struct AlgebraInput {
    pub name: Option<&'static str>,
    pub algebra: LieAlgebra,
    /// Catalog flags, empty for literals.
    pub flags: Vec<String>,
}

pub fn algebra(text: &str) -> Result<AlgebraInput, CliError> {
    let text = text.trim();
    if text.starts_with('(') {
        let algebra = LieAlgebra::parse(text).map_err(|e| match e {
            LieError::Parse(source) => CliError::Syntax {
                what: "algebra",
                source,
            },
            other => other.into(),
        })?;
        return Ok(AlgebraInput {
            name: None,
            algebra,
            flags: Vec::new(),
        });
    }
    let entry = catalog(text)?;
    match entry.status {
        CatalogStatus::Valid(algebra) => Ok(AlgebraInput {
            name: Some(entry.name),
            algebra,
            flags: Vec::new(),
        }),
        CatalogStatus::Flagged {
            parsed: Some(algebra),
            diagnostics,
        } => Ok(AlgebraInput {
            name: Some(entry.name),
            algebra,
            flags: diagnostics,
        }),
        CatalogStatus::Flagged {
            parsed: None,
            diagnostics,
        } => Err(CliError::Precondition(format!(
            "catalog entry {} does not parse: {}",
            entry.name,
            diagnostics.join("; ")
        ))),
    }
}

impl AlgebraInput {
    /// The algebra with the Jacobi identity checked, refusing flagged catalog entries.
    pub fn into_validated(self) -> Result<LieAlgebra, CliError> {
        if !self.flags.is_empty() {
            return Err(CliError::Precondition(format!(
                "catalog entry {} is flagged: {}",
                self.name.unwrap_or("?"),
                self.flags.join("; ")
            )));
        }
        Ok(self.algebra.validated()?)
    }
}

pub fn form(what: &'static str, text: &str, dim: usize, degree: usize) -> Result<Form, CliError> {
    let form =
        parse_form(text, dim, Some(degree)).map_err(|source| CliError::Syntax { what, source })?;
    if form.degree() != degree {
        return Err(CliError::Precondition(format!(
            "{what} must be a {degree}-form, got degree {}",
            form.degree()
        )));
    }
    Ok(form)
}

pub fn vector(what: &'static str, text: &str, dim: usize) -> Result<Vector, CliError> {
    parse_vector(text, dim).map_err(|source| CliError::Syntax { what, source })
}
