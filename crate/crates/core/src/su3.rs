//! SU(3)-structure data `(omega, psi_-, psi_+)` on six-dimensional algebras.

use num_traits::Zero;
use thiserror::Error;

use crate::exterior::{ExteriorError, Form, Vector};
use crate::liealg::{LieAlgebra, LieError};
use crate::linsolve::{determinant, inertia, Matrix};
use crate::scalar::{int, ratio, Scalar};

pub const SU3_DIM: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Su3Error {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
    #[error("SU(3) data lives in dimension 6, got {0}")]
    WrongDimension(usize),
    #[error("{name} must have degree {expected}, got {found}")]
    WrongDegree {
        name: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("omega is degenerate: omega^3 = 0")]
    DegenerateOmega,
    #[error("psi_+ is required")]
    MissingPsiPlus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Su3Data {
    omega: Form,
    psi_minus: Form,
    psi_plus: Option<Form>,
}

fn check_shape(name: &'static str, form: &Form, degree: usize) -> Result<(), Su3Error> {
    if form.dim() != SU3_DIM {
        return Err(Su3Error::WrongDimension(form.dim()));
    }
    if form.degree() != degree {
        return Err(Su3Error::WrongDegree {
            name,
            expected: degree,
            found: form.degree(),
        });
    }
    Ok(())
}

impl Su3Data {
    pub fn new(omega: Form, psi_minus: Form, psi_plus: Option<Form>) -> Result<Self, Su3Error> {
        check_shape("omega", &omega, 2)?;
        check_shape("psi_-", &psi_minus, 3)?;
        if let Some(plus) = &psi_plus {
            check_shape("psi_+", plus, 3)?;
        }
        Ok(Self {
            omega,
            psi_minus,
            psi_plus,
        })
    }

    pub fn omega(&self) -> &Form {
        &self.omega
    }

    pub fn psi_minus(&self) -> &Form {
        &self.psi_minus
    }

    pub fn psi_plus(&self) -> Option<&Form> {
        self.psi_plus.as_ref()
    }

    fn omega_cubed_top(&self) -> Result<Scalar, Su3Error> {
        let cube = self.omega.wedge(&self.omega)?.wedge(&self.omega)?;
        let top = cube.top_coefficient();
        if top.is_zero() {
            return Err(Su3Error::DegenerateOmega);
        }
        Ok(top)
    }
}

/// Outcome of comparing `d psi_-` with `omega ^ omega`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HalfFlatScalar {
    /// `d psi_- = k omega^2` with `k != 0`.
    Proportional(Scalar),
    /// `d psi_- = 0`: the relation holds only with `k = 0`, which is excluded.
    Degenerate,
    /// No scalar relates the two forms.
    Unrelated,
}

impl HalfFlatScalar {
    pub fn scalar(&self) -> Option<&Scalar> {
        match self {
            Self::Proportional(k) => Some(k),
            _ => None,
        }
    }

    /// Classifies `d psi` against `omega2`, both of degree 4.
    pub fn classify(d_psi: &Form, omega2: &Form) -> Self {
        if d_psi.is_zero() {
            return Self::Degenerate;
        }
        match d_psi.ratio_to(omega2) {
            Some(k) => Self::Proportional(k),
            None => Self::Unrelated,
        }
    }
}

/// Finds `k` with `d psi_- = k omega^2`.
pub fn nearly_half_flat_scalar(h: &LieAlgebra, s: &Su3Data) -> Result<HalfFlatScalar, Su3Error> {
    if h.dim() != SU3_DIM {
        return Err(Su3Error::WrongDimension(h.dim()));
    }
    let d_psi = h.d(&s.psi_minus)?;
    let omega2 = s.omega.wedge(&s.omega)?;
    Ok(HalfFlatScalar::classify(&d_psi, &omega2))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricReport {
    /// Entry-wise values, not symmetrized.
    pub metric: Matrix,
    /// `g - g^T`.
    pub symmetry_defect: Matrix,
    pub symmetric: bool,
    /// Determinant of the symmetrized matrix.
    pub determinant: Scalar,
    pub degenerate: bool,
    /// `(positive, negative, zero)` eigenvalue counts of the symmetrized matrix.
    pub signature: (usize, usize, usize),
}

impl MetricReport {
    pub fn is_positive_definite(&self) -> bool {
        self.signature == (SU3_DIM, 0, 0)
    }
}

/// Metric defined by `g(X, Y) omega^3 = -3 i_X omega ^ i_Y psi_- ^ psi_-`, evaluated on
/// frame pairs.
pub fn induced_metric(s: &Su3Data) -> Result<MetricReport, Su3Error> {
    let volume = s.omega_cubed_top()?;
    let frame: Vec<Vector> = (1..=SU3_DIM).map(|i| Vector::basis(SU3_DIM, i)).collect();
    let contracted_omega = frame
        .iter()
        .map(|e| s.omega.contract(e))
        .collect::<Result<Vec<_>, _>>()?;
    let contracted_psi = frame
        .iter()
        .map(|e| s.psi_minus.contract(e)?.wedge(&s.psi_minus))
        .collect::<Result<Vec<_>, _>>()?;
    let factor = int(-3) / &volume;
    let metric: Matrix = contracted_omega
        .iter()
        .map(|w| {
            contracted_psi
                .iter()
                .map(|p| Ok(w.wedge(p)?.top_coefficient() * &factor))
                .collect::<Result<Vec<_>, ExteriorError>>()
        })
        .collect::<Result<_, _>>()?;
    let symmetry_defect: Matrix = (0..SU3_DIM)
        .map(|i| {
            (0..SU3_DIM)
                .map(|j| &metric[i][j] - &metric[j][i])
                .collect()
        })
        .collect();
    let symmetric = symmetry_defect.iter().flatten().all(Zero::is_zero);
    let half = ratio(1, 2);
    let symmetrized: Matrix = (0..SU3_DIM)
        .map(|i| {
            (0..SU3_DIM)
                .map(|j| (&metric[i][j] + &metric[j][i]) * &half)
                .collect()
        })
        .collect();
    let det = determinant(&symmetrized);
    Ok(MetricReport {
        degenerate: det.is_zero(),
        determinant: det,
        signature: inertia(&symmetrized),
        metric,
        symmetry_defect,
        symmetric,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VolumeDiagnostic {
    /// `(psi_+ ^ psi_-) / omega^3` as top-degree coefficients.
    pub ratio: Scalar,
    /// Whether the ratio equals the adopted normalization `2/3`.
    pub normalized: bool,
}

pub fn normalization_target() -> Scalar {
    ratio(2, 3)
}

pub fn volume_compatibility(s: &Su3Data) -> Result<VolumeDiagnostic, Su3Error> {
    let plus = s.psi_plus.as_ref().ok_or(Su3Error::MissingPsiPlus)?;
    let volume = s.omega_cubed_top()?;
    let value = plus.wedge(&s.psi_minus)?.top_coefficient() / volume;
    Ok(VolumeDiagnostic {
        normalized: value == normalization_target(),
        ratio: value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::parse_form;

    fn f(text: &str) -> Form {
        parse_form(text, 6, None).unwrap()
    }

    fn flat() -> Su3Data {
        Su3Data::new(
            f("e^{12}+e^{34}+e^{56}"),
            f("e^{136}+e^{145}+e^{235}-e^{246}"),
            Some(f("e^{135}-e^{146}-e^{236}-e^{245}")),
        )
        .unwrap()
    }

    #[test]
    fn shape_checks() {
        assert!(Su3Data::new(f("e^{123}"), f("e^{123}"), None).is_err());
        assert!(Su3Data::new(parse_form("e^{12}", 7, None).unwrap(), f("e^{123}"), None).is_err());
    }

    #[test]
    fn abelian_is_degenerate() {
        let h = LieAlgebra::abelian(6);
        assert_eq!(
            nearly_half_flat_scalar(&h, &flat()).unwrap(),
            HalfFlatScalar::Degenerate
        );
        assert!(nearly_half_flat_scalar(&LieAlgebra::abelian(7), &flat()).is_err());
    }

    #[test]
    fn half_flat_scalar_on_one_a() {
        let h = LieAlgebra::parse("(0,0,0,e^{12},e^{13},e^{23})")
            .unwrap()
            .validated()
            .unwrap();
        // d(e^{456}) = e^{1256} - e^{1346} + e^{2345}; omega^2 for e^{16}-e^{25}+e^{34}
        // is -2e^{1256} + 2e^{1346} - 2e^{2345}
        let s = Su3Data::new(f("e^{16}-e^{25}+e^{34}"), f("e^{456}"), None).unwrap();
        assert_eq!(
            nearly_half_flat_scalar(&h, &s).unwrap(),
            HalfFlatScalar::Proportional(ratio(-1, 2))
        );
        let s = Su3Data::new(f("e^{16}-e^{25}+e^{34}"), f("-e^{456}"), None).unwrap();
        assert_eq!(
            nearly_half_flat_scalar(&h, &s).unwrap().scalar(),
            Some(&ratio(1, 2))
        );
        let s = Su3Data::new(f("e^{12}+e^{34}+e^{56}"), f("e^{456}"), None).unwrap();
        assert_eq!(
            nearly_half_flat_scalar(&h, &s).unwrap(),
            HalfFlatScalar::Unrelated
        );
    }

    #[test]
    fn flat_metric_is_identity() {
        let report = induced_metric(&flat()).unwrap();
        for (i, row) in report.metric.iter().enumerate() {
            for (j, g) in row.iter().enumerate() {
                assert_eq!(*g, if i == j { int(1) } else { int(0) });
            }
        }
        assert!(report.symmetric);
        assert_eq!(report.determinant, int(1));
        assert!(report.is_positive_definite());
    }

    #[test]
    fn metric_edge_cases() {
        let degenerate = Su3Data::new(f("e^{12}"), f("e^{136}"), None).unwrap();
        assert_eq!(induced_metric(&degenerate), Err(Su3Error::DegenerateOmega));
        let zero_psi = Su3Data::new(f("e^{12}+e^{34}+e^{56}"), Form::zero(6, 3), None).unwrap();
        let report = induced_metric(&zero_psi).unwrap();
        assert!(report.metric.iter().flatten().all(Zero::is_zero));
        assert!(report.degenerate);
        assert_eq!(report.signature, (0, 0, 6));
    }

    #[test]
    fn volume_ratio() {
        let diag = volume_compatibility(&flat()).unwrap();
        assert_eq!(diag.ratio, ratio(2, 3));
        assert!(diag.normalized);
        let s = Su3Data::new(
            f("e^{12}+e^{34}+e^{56}"),
            f("e^{136}"),
            Some(Form::zero(6, 3)),
        )
        .unwrap();
        assert_eq!(volume_compatibility(&s).unwrap().ratio, int(0));
        let s = Su3Data::new(f("e^{12}+e^{34}+e^{56}"), f("e^{136}"), None).unwrap();
        assert_eq!(volume_compatibility(&s), Err(Su3Error::MissingPsiPlus));
    }
}
