//! Four-forms on seven-dimensional algebras and the locally conformally cocalibrated
//! condition `d phi = theta ^ phi` with a closed, nonzero Lee form `theta`.
//!
//! A 4-form is built from a six-dimensional pair `(omega, psi_-)` as
//! `phi = 1/2 omega^2 + psi_- ^ e^7` on the central extension, and a given `phi` splits
//! back along a direction `X` with `theta(X) = 1` as `psi_- = -i_X phi`,
//! `sigma = phi - psi_- ^ theta`.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exterior::{ExteriorError, Form, Vector};
use crate::liealg::{LieAlgebra, LieError};
use crate::linsolve::{generic_phi_system, GenericSystem, PhiSystemError, SolutionSpace};
use crate::scalar::{ratio, Scalar};
use crate::su3::{HalfFlatScalar, Su3Data, SU3_DIM};

pub const G2_DIM: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum G2Error {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
    #[error(transparent)]
    System(#[from] PhiSystemError),
    #[error("G2 data lives in dimension 7, got {0}")]
    WrongDimension(usize),
    #[error("{name} must have degree {expected}, got {found}")]
    WrongDegree {
        name: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("phi vanishes: both omega^2 and psi_- are zero")]
    ZeroPhi,
    #[error("theta(X) = {0}, expected 1")]
    NotNormalized(String),
    #[error("theta(X) = 0, so X cannot be rescaled to theta(X) = 1")]
    CannotNormalize,
}

/// `(algebra, phi, theta, X)`. Only shapes are checked on construction; the conditions
/// `d theta = 0`, `theta(X) = 1`, `phi != 0` are what [`verify_lcc`] reports on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct G2Data {
    algebra: LieAlgebra,
    phi: Form,
    theta: Form,
    x: Vector,
}

impl G2Data {
    pub fn new(algebra: LieAlgebra, phi: Form, theta: Form, x: Vector) -> Result<Self, G2Error> {
        if algebra.dim() != G2_DIM {
            return Err(G2Error::WrongDimension(algebra.dim()));
        }
        for (name, form, degree) in [("phi", &phi, 4), ("theta", &theta, 1)] {
            if form.dim() != G2_DIM {
                return Err(G2Error::WrongDimension(form.dim()));
            }
            if form.degree() != degree {
                return Err(G2Error::WrongDegree {
                    name,
                    expected: degree,
                    found: form.degree(),
                });
            }
        }
        if x.dim() != G2_DIM {
            return Err(G2Error::WrongDimension(x.dim()));
        }
        Ok(Self {
            algebra,
            phi,
            theta,
            x,
        })
    }

    /// Uses `X = theta^sharp / |theta|^2` so that `theta(X) = 1`.
    pub fn with_dual_direction(
        algebra: LieAlgebra,
        phi: Form,
        theta: Form,
    ) -> Result<Self, G2Error> {
        let x = normalize_direction(&theta, &theta.sharp()?)?;
        Self::new(algebra, phi, theta, x)
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn phi(&self) -> &Form {
        &self.phi
    }

    pub fn theta(&self) -> &Form {
        &self.theta
    }

    pub fn x(&self) -> &Vector {
        &self.x
    }

    pub fn theta_of_x(&self) -> Scalar {
        self.theta
            .evaluate(&[&self.x])
            .expect("shapes checked on construction")
    }
}

/// Rescales `x` so that `theta(x) = 1`.
pub fn normalize_direction(theta: &Form, x: &Vector) -> Result<Vector, G2Error> {
    let value = theta.evaluate(&[x])?;
    if value.is_zero() {
        return Err(G2Error::CannotNormalize);
    }
    Ok(x.scale(&(Scalar::one() / value)))
}

/// `phi = 1/2 omega^2 + psi_- ^ e^7` on `h + R e_7`, with `theta = e^7` and `X = e_7`.
pub fn build_phi(h: &LieAlgebra, s: &Su3Data) -> Result<G2Data, G2Error> {
    if h.dim() != SU3_DIM {
        return Err(G2Error::WrongDimension(h.dim()));
    }
    let algebra = h.extend_central()?;
    let omega = s.omega().embed(G2_DIM)?;
    let psi = s.psi_minus().embed(G2_DIM)?;
    let theta = Form::coframe(G2_DIM, G2_DIM as u8);
    let phi = omega
        .wedge(&omega)?
        .scale(&ratio(1, 2))
        .checked_add(&psi.wedge(&theta)?)?;
    if phi.is_zero() {
        return Err(G2Error::ZeroPhi);
    }
    Ok(G2Data {
        algebra,
        phi,
        theta,
        x: Vector::basis(G2_DIM, G2_DIM),
    })
}

/// The scalar `lambda` with `d phi = lambda theta ^ phi`, if one exists. When
/// `theta ^ phi = 0` the answer is `0` if `phi` is closed and `None` otherwise.
pub fn conformal_factor(d: &G2Data) -> Result<Option<Scalar>, G2Error> {
    let d_phi = d.algebra.d(&d.phi)?;
    let theta_phi = d.theta.wedge(&d.phi)?;
    if d_phi.is_zero() {
        return Ok(Some(Scalar::zero()));
    }
    Ok(d_phi.ratio_to(&theta_phi))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub psi_minus: Form,
    pub sigma: Form,
    /// `i_X psi_- = 0`.
    pub contraction_psi_vanishes: bool,
    /// `i_X sigma = 0`.
    pub contraction_sigma_vanishes: bool,
    pub conformal_factor: Option<Scalar>,
    /// `d psi_- = sigma`; evaluated only when the conformal factor is 1.
    pub d_psi_equals_sigma: Option<bool>,
    /// `d sigma = 0`; evaluated only when the conformal factor is 1.
    pub d_sigma_vanishes: Option<bool>,
    /// `theta ^ (phi + sigma) = 0`.
    pub theta_phi_plus_sigma_vanishes: bool,
    /// `L_X phi = 0`.
    pub lie_derivative_vanishes: bool,
    /// `d psi_- = kappa sigma` compared as forms.
    pub d_psi_over_sigma: HalfFlatScalar,
    /// `k` with `sigma = k omega^2`, when `omega` is supplied.
    pub sigma_over_omega_squared: Option<Scalar>,
}

/// Splits `phi` along `X`. Fails unless `theta(X) = 1`. `omega`, when given, is a 2-form
/// on the seven-dimensional algebra.
pub fn decompose(d: &G2Data, omega: Option<&Form>) -> Result<Decomposition, G2Error> {
    let theta_x = d.theta_of_x();
    if !theta_x.is_one() {
        return Err(G2Error::NotNormalized(theta_x.to_string()));
    }
    let alg = &d.algebra;
    let psi = -&d.phi.contract(&d.x)?;
    let sigma = d.phi.checked_sub(&psi.wedge(&d.theta)?)?;
    let lambda = conformal_factor(d)?;
    let is_one = lambda.as_ref().is_some_and(One::is_one);
    let d_psi = alg.d(&psi)?;
    let d_psi_equals_sigma = is_one.then(|| d_psi == sigma);
    let d_sigma_vanishes = if is_one {
        Some(alg.d(&sigma)?.is_zero())
    } else {
        None
    };
    let theta_phi_plus_sigma_vanishes = d.theta.wedge(&d.phi.checked_add(&sigma)?)?.is_zero();
    let lie_derivative_vanishes = if alg.is_validated() {
        alg.lie_derivative(&d.x, &d.phi)?.is_zero()
    } else {
        let first = alg.d(&d.phi)?.contract(&d.x)?;
        first
            .checked_add(&alg.d(&d.phi.contract(&d.x)?)?)?
            .is_zero()
    };
    let sigma_over_omega_squared = match omega {
        Some(w) => {
            let square = w.wedge(w)?;
            sigma.ratio_to(&square)
        }
        None => None,
    };
    Ok(Decomposition {
        contraction_psi_vanishes: psi.contract(&d.x)?.is_zero(),
        contraction_sigma_vanishes: sigma.contract(&d.x)?.is_zero(),
        conformal_factor: lambda,
        d_psi_equals_sigma,
        d_sigma_vanishes,
        theta_phi_plus_sigma_vanishes,
        lie_derivative_vanishes,
        d_psi_over_sigma: HalfFlatScalar::classify(&d_psi, &sigma),
        sigma_over_omega_squared,
        psi_minus: psi,
        sigma,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// `d phi = theta ^ phi`, `d theta = 0`, `theta ^ phi != 0`.
    Lcc,
    /// `d phi = -theta ^ phi` with the other conditions as for [`Verdict::Lcc`].
    LccOppositeSign,
    /// `d phi = 0`.
    Cocalibrated,
    /// `d phi = lambda theta ^ phi` for some other `lambda`.
    Conformal(Scalar),
    NotConformal,
    VanishingLeeForm,
    LeeFormNotClosed,
    ZeroPhi,
}

impl Verdict {
    pub fn label(&self) -> String {
        match self {
            Self::Lcc => "L.C.CC".into(),
            Self::LccOppositeSign => "L.C.CC (d phi = -theta ^ phi)".into(),
            Self::Cocalibrated => "cocalibrated".into(),
            Self::Conformal(l) => format!("conformal with lambda = {l}"),
            Self::NotConformal => "not conformal".into(),
            Self::VanishingLeeForm => "rejected: vanishing Lee form".into(),
            Self::LeeFormNotClosed => "rejected: Lee form not closed".into(),
            Self::ZeroPhi => "rejected: phi vanishes".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LccReport {
    pub d_theta: Form,
    pub theta_nonzero: bool,
    pub theta_wedge_phi_nonzero: bool,
    pub theta_of_x: Scalar,
    pub conformal_factor: Option<Scalar>,
    /// Present when `theta(X) = 1`.
    pub decomposition: Option<Decomposition>,
    /// `k` in `d psi_- = k omega^2`, reading `sigma` as `1/2 omega^2` unless `omega` was
    /// supplied, in which case `omega^2` is used directly.
    pub half_flat_scalar: Option<HalfFlatScalar>,
    pub verdict: Verdict,
}

impl LccReport {
    pub fn is_lcc(&self) -> bool {
        self.verdict == Verdict::Lcc
    }
}

/// Recomputes every condition for `d` from scratch.
pub fn verify_lcc(d: &G2Data, omega: Option<&Form>) -> Result<LccReport, G2Error> {
    let d_theta = d.algebra.d(&d.theta)?;
    let theta_nonzero = !d.theta.is_zero();
    let theta_wedge_phi_nonzero = !d.theta.wedge(&d.phi)?.is_zero();
    let lambda = conformal_factor(d)?;
    let theta_of_x = d.theta_of_x();
    let decomposition = if theta_of_x.is_one() {
        Some(decompose(d, omega)?)
    } else {
        None
    };
    let half_flat_scalar = match (&decomposition, omega) {
        (Some(dec), Some(w)) => Some(HalfFlatScalar::classify(
            &d.algebra.d(&dec.psi_minus)?,
            &w.wedge(w)?,
        )),
        (Some(dec), None) => Some(match &dec.d_psi_over_sigma {
            HalfFlatScalar::Proportional(kappa) => {
                HalfFlatScalar::Proportional(kappa * ratio(1, 2))
            }
            other => other.clone(),
        }),
        (None, _) => None,
    };
    let verdict = if !theta_nonzero {
        Verdict::VanishingLeeForm
    } else if d.phi.is_zero() {
        Verdict::ZeroPhi
    } else if !d_theta.is_zero() {
        Verdict::LeeFormNotClosed
    } else {
        match &lambda {
            None => Verdict::NotConformal,
            Some(l) if l.is_zero() => Verdict::Cocalibrated,
            Some(l) if l.is_one() => Verdict::Lcc,
            Some(l) if *l == -Scalar::one() => Verdict::LccOppositeSign,
            Some(l) => Verdict::Conformal(l.clone()),
        }
    };
    Ok(LccReport {
        d_theta,
        theta_nonzero,
        theta_wedge_phi_nonzero,
        theta_of_x,
        conformal_factor: lambda,
        decomposition,
        half_flat_scalar,
        verdict,
    })
}

/// Solution space of `d phi = theta ^ phi` with a nondegeneracy flag per basis element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LccSearch {
    pub system: GenericSystem,
    pub space: SolutionSpace,
    pub solutions: Vec<Form>,
    /// `theta ^ phi != 0` for each basis element.
    pub nondegenerate: Vec<bool>,
}

impl LccSearch {
    /// Whether some solution has `theta ^ phi != 0`. The set of solutions with
    /// `theta ^ phi = 0` is a subspace, so checking basis elements suffices.
    pub fn nondegenerate_solution_exists(&self) -> bool {
        self.nondegenerate.iter().any(|&b| b)
    }
}

pub fn lcc_search(g: &LieAlgebra, theta: &Form) -> Result<LccSearch, G2Error> {
    let system = generic_phi_system(g, theta)?;
    let space = system.solve();
    let solutions = system.basis_forms(&space);
    let nondegenerate = solutions
        .iter()
        .map(|phi| Ok(!theta.wedge(phi)?.is_zero()))
        .collect::<Result<_, ExteriorError>>()?;
    Ok(LccSearch {
        system,
        space,
        solutions,
        nondegenerate,
    })
}
