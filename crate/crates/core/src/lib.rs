//! Exact exterior calculus on Lie algebras given by structure equations, aimed at
//! constructing and checking locally conformally cocalibrated G2-structures
//! (`d phi = theta ^ phi`) from nearly half-flat SU(3)-structures
//! (`d psi_- = 1/2 omega ^ omega`).
//!
//! All arithmetic is over exact rationals; every identity is checked by equality.

pub mod exterior;
pub mod g2;
pub mod liealg;
pub mod linsolve;
pub mod notation;
pub mod scalar;
pub mod su3;

pub use exterior::{basis_forms, ExteriorError, Form, IndexTuple, Orientation, Vector, MAX_DIM};
pub use g2::{
    build_phi, conformal_factor, decompose, lcc_search, verify_lcc, Decomposition, G2Data, G2Error,
    LccReport, LccSearch, Verdict,
};
pub use liealg::{
    catalog, catalog_entries, CatalogEntry, CatalogStatus, JacobiOutcome, LieAlgebra, LieError,
    Subspace,
};
pub use linsolve::{solve, LinearSystem, SolutionSpace};
pub use notation::{format_form, format_vector, parse_form, parse_vector, ParseError};
pub use scalar::Scalar;
pub use su3::{
    induced_metric, nearly_half_flat_scalar, volume_compatibility, HalfFlatScalar, Su3Data,
};
