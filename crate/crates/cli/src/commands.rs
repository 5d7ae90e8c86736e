//! Payloads for each subcommand.

use cocal7_core::g2::normalize_direction;
use cocal7_core::linsolve::{generic_psi_system, GenericSystem, SolutionSpace};
use cocal7_core::scalar::{ratio, render};
use cocal7_core::{
    catalog_entries, format_form, format_vector, lcc_search, verify_lcc, CatalogStatus, G2Data,
    HalfFlatScalar, JacobiOutcome, LieAlgebra, Scalar, Vector,
};
use num_traits::One;
use serde_json::{json, Value};

use crate::input::{self, AlgebraInput, CliError};
use crate::report::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    Psi,
    Phi,
}

fn rational(value: &Scalar) -> Value {
    Value::String(render(value))
}

fn half_flat(value: &HalfFlatScalar) -> Value {
    match value {
        HalfFlatScalar::Proportional(k) => rational(k),
        HalfFlatScalar::Degenerate => "degenerate (d psi_- = 0)".into(),
        HalfFlatScalar::Unrelated => Value::Null,
    }
}

/// Dimension, canonical form, Jacobi verdict, and for valid algebras the lower central
/// series and center. Returns the validated algebra when Jacobi holds.
fn describe_algebra(
    report: &mut Report,
    algebra: &LieAlgebra,
) -> Result<Option<LieAlgebra>, CliError> {
    report.set("dimension", algebra.dim());
    report.set("structure_equations", algebra.to_salamon());
    if let JacobiOutcome::Fails { index, witness } = algebra.check_jacobi() {
        report.set("jacobi", false);
        report.set(
            "jacobi_witness",
            json!({ "index": index, "d(de^i)": format_form(&witness) }),
        );
        return Ok(None);
    }
    report.set("jacobi", true);
    let valid = algebra.clone().validated()?;
    let series: Vec<usize> = valid
        .lower_central_series()?
        .iter()
        .map(|s| s.dim())
        .collect();
    let nilpotent = series.last() == Some(&0);
    report.set("lower_central_series", series.clone());
    report.set("nilpotent", nilpotent);
    report.set(
        "nilpotency_steps",
        if nilpotent {
            json!(series.len() - 1)
        } else {
            Value::Null
        },
    );
    if !nilpotent {
        report.diagnose(format!(
            "not nilpotent: the lower central series stalls at dimension {}",
            series.last().unwrap()
        ));
    }
    let center = valid.center()?;
    report.set("center_dimension", center.dim());
    report.set(
        "center",
        center.basis().iter().map(format_vector).collect::<Vec<_>>(),
    );
    report.set("abelian", center.dim() == valid.dim());
    Ok(Some(valid))
}

pub fn parse(report: &mut Report, text: &str) -> Result<(), CliError> {
    let input = input::algebra(text)?;
    if let Some(name) = input.name {
        report.set("name", name);
    }
    for flag in &input.flags {
        report.diagnose(format!("{}: {flag}", input.name.unwrap_or("?")));
    }
    let flagged = !input.flags.is_empty();
    if describe_algebra(report, &input.algebra)?.is_none() && !flagged {
        if let JacobiOutcome::Fails { index, witness } = input.algebra.check_jacobi() {
            report.diagnose(format!(
                "Jacobi identity fails: d(de^{index}) = {}",
                format_form(&witness)
            ));
        }
    }
    Ok(())
}

pub fn catalog(report: &mut Report, name: Option<&str>) -> Result<(), CliError> {
    if let Some(name) = name {
        let entry = cocal7_core::catalog(name)?;
        report.set("name", entry.name);
        report.set("literal", entry.literal);
        report.set(
            "status",
            if entry.is_flagged() {
                "flagged"
            } else {
                "valid"
            },
        );
        return parse(report, entry.name);
    }
    let mut rows = Vec::new();
    for entry in catalog_entries() {
        let mut row = serde_json::Map::new();
        row.insert("name".into(), entry.name.into());
        row.insert("literal".into(), entry.literal.into());
        match &entry.status {
            CatalogStatus::Valid(algebra) => {
                let series: Vec<usize> = algebra
                    .lower_central_series()?
                    .iter()
                    .map(|s| s.dim())
                    .collect();
                row.insert("status".into(), "valid".into());
                row.insert("dimension".into(), algebra.dim().into());
                row.insert("jacobi".into(), true.into());
                row.insert("lower_central_series".into(), series.into());
            }
            CatalogStatus::Flagged {
                parsed,
                diagnostics,
            } => {
                row.insert("status".into(), "flagged".into());
                row.insert(
                    "dimension".into(),
                    parsed.as_ref().map(LieAlgebra::dim).into(),
                );
                row.insert(
                    "jacobi".into(),
                    parsed.as_ref().map(|a| a.check_jacobi().holds()).into(),
                );
                row.insert("flags".into(), diagnostics.clone().into());
                for d in diagnostics {
                    report.diagnose(format!("{}: {d}", entry.name));
                }
            }
        }
        rows.push(Value::Object(row));
    }
    report.set("entries", rows);
    Ok(())
}

/// Unknown-by-unknown table of the particular solution and homogeneous basis.
fn solution_table(system: &GenericSystem, space: &SolutionSpace, with_particular: bool) -> Value {
    let mut columns = vec![json!("unknown")];
    if with_particular {
        columns.push(json!("particular"));
    }
    columns.extend((1..=space.basis.len()).map(|i| json!(format!("b{i}"))));
    let rows: Vec<Value> = system
        .system
        .labels()
        .iter()
        .enumerate()
        .map(|(c, label)| {
            let mut row = vec![json!(label)];
            if with_particular {
                row.push(match &space.particular {
                    Some(p) => rational(&p[c]),
                    None => Value::Null,
                });
            }
            row.extend(space.basis.iter().map(|b| rational(&b[c])));
            Value::Array(row)
        })
        .collect();
    json!({ "columns": columns, "rows": rows })
}

pub struct SolveArgs {
    pub algebra: String,
    pub mode: Mode,
    pub omega: Option<String>,
    pub theta: Option<String>,
    pub extend: bool,
}

pub fn solve(report: &mut Report, args: &SolveArgs) -> Result<(), CliError> {
    let input = input::algebra(&args.algebra)?;
    if let Some(name) = input.name {
        report.set("name", name);
    }
    let algebra = input.into_validated()?;
    report.set("algebra", algebra.to_salamon());
    match args.mode {
        Mode::Psi => solve_psi(report, algebra, args),
        Mode::Phi => solve_phi(report, algebra, args),
    }
}

fn solve_psi(report: &mut Report, h: LieAlgebra, args: &SolveArgs) -> Result<(), CliError> {
    if args.extend {
        return Err(CliError::Precondition(
            "--extend applies to phi mode only".into(),
        ));
    }
    if args.theta.is_some() {
        return Err(CliError::Precondition(
            "--theta applies to phi mode only".into(),
        ));
    }
    if h.dim() != 6 {
        return Err(CliError::Precondition(format!(
            "psi mode needs a 6-dimensional algebra, got dimension {}",
            h.dim()
        )));
    }
    let omega_text = args
        .omega
        .as_deref()
        .ok_or_else(|| CliError::Precondition("psi mode requires --omega".into()))?;
    let omega = input::form("omega", omega_text, 6, 2)?;
    let omega2 = omega.wedge(&omega).expect("same dimension");
    let system = generic_psi_system(&h, &omega)?;
    let space = system.solve();

    report.set("mode", "psi");
    report.set("equation", "d psi = 1/2 omega ^ omega");
    report.set("omega", format_form(&omega));
    if omega2.wedge(&omega).expect("same dimension").is_zero() {
        report.diagnose("omega is degenerate: omega^3 = 0");
    }
    let residual = h.d(&omega)?.wedge(&omega).expect("same dimension");
    report.set("d_omega_wedge_omega", format_form(&residual));
    if !residual.is_zero() {
        report.diagnose(format!(
            "d omega ^ omega = {} is nonzero, so no solution extends to d phi = theta ^ phi",
            format_form(&residual)
        ));
    }
    report.set("unknowns", system.system.num_columns());
    report.set("equations", system.system.num_rows());
    report.set("rank", space.rank);
    report.set("nullity", space.nullity());
    report.set("consistent", space.is_consistent());
    let rhs = omega2.scale(&ratio(1, 2));
    match system.particular_form(&space) {
        Some(psi) => {
            let d_psi = h.d(&psi)?;
            report.set("particular_solution", format_form(&psi));
            report.set("particular_verified", d_psi == rhs);
            report.set(
                "half_flat_scalar",
                half_flat(&HalfFlatScalar::classify(&d_psi, &omega2)),
            );
        }
        None => {
            report.set("particular_solution", Value::Null);
            report.diagnose("inconsistent: no 3-form satisfies d psi = 1/2 omega ^ omega");
        }
    }
    let basis = system.basis_forms(&space);
    let closed = basis
        .iter()
        .map(|b| h.d(b).map(|f| f.is_zero()))
        .collect::<Result<Vec<_>, _>>()?;
    report.set(
        "homogeneous_basis",
        basis.iter().map(format_form).collect::<Vec<_>>(),
    );
    report.set("homogeneous_basis_verified", closed.iter().all(|&c| c));
    report.set("solution_table", solution_table(&system, &space, true));
    Ok(())
}

fn solve_phi(report: &mut Report, algebra: LieAlgebra, args: &SolveArgs) -> Result<(), CliError> {
    if args.omega.is_some() {
        return Err(CliError::Precondition(
            "--omega applies to psi mode only".into(),
        ));
    }
    let g = if args.extend {
        if algebra.dim() != 6 {
            return Err(CliError::Precondition(format!(
                "--extend needs a 6-dimensional algebra, got dimension {}",
                algebra.dim()
            )));
        }
        let g = algebra.extend_central()?;
        report.set("extended_algebra", g.to_salamon());
        g
    } else {
        algebra
    };
    if g.dim() != 7 {
        return Err(CliError::Precondition(format!(
            "phi mode needs a 7-dimensional algebra (or --extend on a 6-dimensional one), got dimension {}",
            g.dim()
        )));
    }
    let theta_text = args
        .theta
        .as_deref()
        .ok_or_else(|| CliError::Precondition("phi mode requires --theta".into()))?;
    let theta = input::form("theta", theta_text, 7, 1)?;
    let search = lcc_search(&g, &theta)?;

    report.set("mode", "phi");
    report.set("equation", "d phi = theta ^ phi");
    report.set("theta", format_form(&theta));
    if theta.is_zero() {
        report.diagnose("theta = 0: every solution is cocalibrated and none is L.C.CC");
    }
    report.set("unknowns", search.system.system.num_columns());
    report.set("equations", search.system.system.num_rows());
    report.set("rank", search.space.rank);
    report.set("nullity", search.space.nullity());
    let mut solutions = Vec::new();
    for (phi, nondegenerate) in search.solutions.iter().zip(&search.nondegenerate) {
        let verified = g.d(phi)? == theta.wedge(phi).expect("same dimension");
        solutions.push(json!({
            "phi": format_form(phi),
            "theta_wedge_phi_nonzero": nondegenerate,
            "substitution_verified": verified,
        }));
    }
    report.set("solutions", solutions);
    report.set(
        "solution_table",
        solution_table(&search.system, &search.space, false),
    );
    let exists = search.nondegenerate_solution_exists();
    let verdict = if exists { "yes" } else { "no" };
    report.set("claim_verdict", verdict);
    report.set(
        "claim",
        format!("non-degenerate L.C.CC solution exists: {verdict}"),
    );
    if !exists {
        report.diagnose("claim not confirmed: every solution has theta ^ phi = 0");
    }
    Ok(())
}

pub struct VerifyArgs {
    pub algebra: String,
    pub phi: String,
    pub theta: String,
    pub x: Option<String>,
    pub omega: Option<String>,
    pub extend: bool,
}

pub fn verify(report: &mut Report, args: &VerifyArgs) -> Result<(), CliError> {
    let input: AlgebraInput = input::algebra(&args.algebra)?;
    if let Some(name) = input.name {
        report.set("name", name);
    }
    let mut g = input.into_validated()?;
    if args.extend {
        if g.dim() != 6 {
            return Err(CliError::Precondition(format!(
                "--extend needs a 6-dimensional algebra, got dimension {}",
                g.dim()
            )));
        }
        g = g.extend_central()?;
    }
    if g.dim() != 7 {
        return Err(CliError::Precondition(format!(
            "verify needs a 7-dimensional algebra, got dimension {}",
            g.dim()
        )));
    }
    let phi = input::form("phi", &args.phi, 7, 4)?;
    let theta = input::form("theta", &args.theta, 7, 1)?;
    let omega = args
        .omega
        .as_deref()
        .map(|w| input::form("omega", w, 7, 2))
        .transpose()?;
    let given_x = args
        .x
        .as_deref()
        .map(|x| input::vector("X", x, 7))
        .transpose()?;

    let x = if theta.is_zero() {
        given_x.unwrap_or_else(|| Vector::basis(7, 7))
    } else {
        let raw = match given_x {
            Some(x) => x,
            None => theta.sharp().expect("theta is a 1-form"),
        };
        let value = theta.evaluate(&[&raw]).expect("same dimension");
        let x = normalize_direction(&theta, &raw)?;
        if args.x.is_some() && !value.is_one() {
            report.diagnose(format!(
                "X rescaled by 1/theta(X) = {} to {}",
                render(&(Scalar::one() / &value)),
                format_vector(&x)
            ));
        }
        x
    };
    let data = G2Data::new(g.clone(), phi.clone(), theta.clone(), x.clone())?;
    let lcc = verify_lcc(&data, omega.as_ref())?;

    report.set("algebra", g.to_salamon());
    report.set("phi", format_form(&phi));
    report.set("theta", format_form(&theta));
    report.set("x", format_vector(&x));
    if let Some(w) = &omega {
        report.set("omega", format_form(w));
    }
    report.set("theta_of_x", rational(&lcc.theta_of_x));
    report.set("d_theta", format_form(&lcc.d_theta));
    report.set("lee_form_closed", lcc.d_theta.is_zero());
    report.set("theta_nonzero", lcc.theta_nonzero);
    report.set("theta_wedge_phi_nonzero", lcc.theta_wedge_phi_nonzero);
    report.set(
        "conformal_factor",
        lcc.conformal_factor.as_ref().map_or(Value::Null, rational),
    );
    if let Some(dec) = &lcc.decomposition {
        let flag = |b: Option<bool>| b.map_or(Value::Null, Value::Bool);
        report.set(
            "decomposition",
            json!({
                "psi_minus": format_form(&dec.psi_minus),
                "sigma": format_form(&dec.sigma),
                "i_X psi_minus = 0": dec.contraction_psi_vanishes,
                "i_X sigma = 0": dec.contraction_sigma_vanishes,
                "d psi_minus = sigma": flag(dec.d_psi_equals_sigma),
                "d sigma = 0": flag(dec.d_sigma_vanishes),
                "theta ^ (phi + sigma) = 0": dec.theta_phi_plus_sigma_vanishes,
                "L_X phi = 0": dec.lie_derivative_vanishes,
                "sigma / omega^2": dec.sigma_over_omega_squared.as_ref().map_or(Value::Null, rational),
            }),
        );
        if dec.psi_minus.is_zero() {
            report.diagnose("psi_- = -i_X phi vanishes: phi = sigma has no psi_- part");
        }
    }
    report.set(
        "half_flat_scalar",
        lcc.half_flat_scalar.as_ref().map_or(Value::Null, half_flat),
    );
    report.set("verdict", lcc.verdict.label());
    if !lcc.is_lcc() {
        report.diagnose(format!("not L.C.CC: {}", lcc.verdict.label()));
    }
    Ok(())
}
