//! Linear systems over the coefficients of a generic form.
//!
//! With the structure data held fixed, both `d psi = 1/2 omega^2` (unknown 3-form `psi`
//! on a six-dimensional algebra) and `d phi = theta ^ phi` (unknown 4-form `phi` on a
//! seven-dimensional algebra) are linear in the unknown coefficients.

use num_traits::{One, Zero};

use super::{solve, LinearSystem, SolutionSpace};
use crate::exterior::{basis_forms, Form, IndexTuple};
use crate::liealg::{LieAlgebra, LieError};
use crate::scalar::{ratio, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericSystem {
    pub system: LinearSystem,
    /// Monomial multiplying each unknown, in column order.
    pub unknowns: Vec<IndexTuple>,
    /// Monomial whose coefficient each row equates, in row order.
    pub equations: Vec<IndexTuple>,
    pub dim: usize,
    pub degree: usize,
}

impl GenericSystem {
    /// The form with the given coefficients.
    pub fn assemble(&self, values: &[Scalar]) -> Form {
        Form::from_coordinates(self.dim, self.degree, &self.unknowns, values)
    }

    pub fn solve(&self) -> SolutionSpace {
        solve(&self.system)
    }

    /// Particular solution as a form, if the system is consistent.
    pub fn particular_form(&self, space: &SolutionSpace) -> Option<Form> {
        space.particular.as_ref().map(|v| self.assemble(v))
    }

    pub fn basis_forms(&self, space: &SolutionSpace) -> Vec<Form> {
        space.basis.iter().map(|v| self.assemble(v)).collect()
    }
}

fn label(prefix: &str, tuple: &IndexTuple) -> String {
    format!("{prefix}_{}", tuple.digits())
}

/// Builds a system whose column `c` is the image of the `c`-th monomial under `image`.
fn build(
    dim: usize,
    degree: usize,
    prefix: &str,
    rhs: &Form,
    mut image: impl FnMut(&Form) -> Result<Form, LieError>,
) -> Result<GenericSystem, LieError> {
    let unknowns = basis_forms(dim, degree)?;
    let equations = basis_forms(dim, degree + 1)?;
    let mut matrix = vec![vec![Scalar::zero(); unknowns.len()]; equations.len()];
    for (col, tuple) in unknowns.iter().enumerate() {
        let monomial =
            Form::from_coordinates(dim, degree, std::slice::from_ref(tuple), &[Scalar::one()]);
        let column = image(&monomial)?;
        for (row, eq) in equations.iter().enumerate() {
            matrix[row][col] = column.coefficient(eq);
        }
    }
    let labels = unknowns.iter().map(|t| label(prefix, t)).collect();
    let system = LinearSystem::new(matrix, rhs.coordinates(&equations), labels)
        .expect("system shape is consistent by construction");
    Ok(GenericSystem {
        system,
        unknowns,
        equations,
        dim,
        degree,
    })
}

/// `d psi = 1/2 omega ^ omega` over the 20 coefficients `psi_ijk` of a 3-form.
pub fn generic_psi_system(h: &LieAlgebra, omega: &Form) -> Result<GenericSystem, LieError> {
    if h.dim() != 6 {
        return Err(LieError::WrongDimension {
            expected: 6,
            found: h.dim(),
        });
    }
    if !h.is_validated() {
        return Err(LieError::Unvalidated);
    }
    if omega.dim() != 6 || omega.degree() != 2 {
        return Err(LieError::WrongDimension {
            expected: 6,
            found: omega.dim(),
        });
    }
    let rhs = omega.wedge(omega)?.scale(&ratio(1, 2));
    build(6, 3, "psi", &rhs, |m| h.d(m))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PhiSystemError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("the Lee form is not closed: d theta = {0}")]
    LeeFormNotClosed(String),
    #[error("theta must be a 1-form on the algebra")]
    NotAOneForm,
}

/// `d phi - theta ^ phi = 0` over the 35 coefficients `phi_ijkl` of a 4-form.
pub fn generic_phi_system(g: &LieAlgebra, theta: &Form) -> Result<GenericSystem, PhiSystemError> {
    if g.dim() != 7 {
        return Err(LieError::WrongDimension {
            expected: 7,
            found: g.dim(),
        }
        .into());
    }
    if !g.is_validated() {
        return Err(LieError::Unvalidated.into());
    }
    if theta.dim() != 7 || theta.degree() != 1 {
        return Err(PhiSystemError::NotAOneForm);
    }
    let d_theta = g.d(theta)?;
    if !d_theta.is_zero() {
        return Err(PhiSystemError::LeeFormNotClosed(d_theta.to_string()));
    }
    Ok(build(7, 4, "phi", &Form::zero(7, 5), |m| {
        Ok(g.d(m)?.checked_sub(&theta.wedge(m)?)?)
    })?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::parse_form;

    #[test]
    fn abelian_psi_systems() {
        let h = LieAlgebra::abelian(6);
        let omega = parse_form("e^{12}+e^{34}+e^{56}", 6, None).unwrap();
        let sys = generic_psi_system(&h, &omega).unwrap();
        assert_eq!(sys.system.num_columns(), 20);
        assert_eq!(sys.system.num_rows(), 15);
        assert_eq!(sys.system.labels()[0], "psi_123");
        assert!(!sys.solve().is_consistent());

        let degenerate = parse_form("e^{12}", 6, None).unwrap();
        let space = generic_psi_system(&h, &degenerate).unwrap().solve();
        assert!(space.is_consistent());
        assert_eq!(space.nullity(), 20);
    }

    #[test]
    fn abelian_phi_system() {
        let g = LieAlgebra::abelian(7);
        let theta = Form::coframe(7, 7);
        let sys = generic_phi_system(&g, &theta).unwrap();
        assert_eq!(sys.system.num_columns(), 35);
        assert_eq!(sys.system.num_rows(), 21);
        let space = sys.solve();
        assert_eq!(space.nullity(), 20);
        for phi in sys.basis_forms(&space) {
            assert!(theta.wedge(&phi).unwrap().is_zero());
        }
    }

    #[test]
    fn preconditions() {
        let h = LieAlgebra::abelian(6);
        let omega = Form::zero(6, 2);
        assert!(generic_phi_system(&h, &Form::coframe(6, 1)).is_err());
        assert!(generic_psi_system(&LieAlgebra::abelian(7), &Form::zero(7, 2)).is_err());
        assert!(generic_psi_system(&h, &Form::zero(6, 3)).is_err());
        let unvalidated = LieAlgebra::parse("(0,0,0,e^{12},e^{13},e^{23})").unwrap();
        assert_eq!(
            generic_psi_system(&unvalidated, &omega),
            Err(LieError::Unvalidated)
        );

        let g = LieAlgebra::parse("(0,0,0,e^{12},e^{13},e^{23},0)")
            .unwrap()
            .validated()
            .unwrap();
        assert!(matches!(
            generic_phi_system(&g, &Form::coframe(7, 4)),
            Err(PhiSystemError::LeeFormNotClosed(_))
        ));
        assert!(generic_phi_system(&g, &Form::zero(7, 1)).is_ok());
    }
}
