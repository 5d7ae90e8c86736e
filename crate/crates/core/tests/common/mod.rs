//! Seeded generators and independent oracles shared by the integration suites.
#![allow(dead_code)]

use cocal7_core::exterior::{basis_forms, Form, Vector};
use cocal7_core::scalar::{ratio, Scalar};
use cocal7_core::LieAlgebra;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Small rationals `p/q` with `|p| <= 5`, `1 <= q <= 3`.
pub fn random_scalar(rng: &mut StdRng) -> Scalar {
    ratio(rng.gen_range(-5..=5), rng.gen_range(1..=3))
}

/// Random form where each basis monomial is present with probability `density`.
pub fn random_form(rng: &mut StdRng, dim: usize, degree: usize, density: f64) -> Form {
    let basis = basis_forms(dim, degree).unwrap();
    let values: Vec<Scalar> = basis
        .iter()
        .map(|_| {
            if rng.gen_bool(density) {
                random_scalar(rng)
            } else {
                Scalar::zero()
            }
        })
        .collect();
    Form::from_coordinates(dim, degree, &basis, &values)
}

pub fn random_vector(rng: &mut StdRng, dim: usize) -> Vector {
    Vector::new((0..dim).map(|_| random_scalar(rng)).collect()).unwrap()
}

/// Valid catalog algebras, by name.
pub fn catalog_algebras() -> Vec<(&'static str, LieAlgebra)> {
    cocal7_core::catalog_entries()
        .into_iter()
        .filter_map(|e| e.algebra().cloned().map(|a| (e.name, a)))
        .collect()
}

/// Value of a form on vectors computed as `sum_I c_I det(v_j[i_k])` by cofactor
/// expansion. Independent of the contraction code path.
pub fn evaluate_by_determinant(form: &Form, vectors: &[&Vector]) -> Scalar {
    fn det(m: &[Vec<Scalar>]) -> Scalar {
        match m.len() {
            0 => Scalar::from_integer(1.into()),
            n => (0..n)
                .map(|col| {
                    let minor: Vec<Vec<Scalar>> = m[1..]
                        .iter()
                        .map(|row| {
                            row.iter()
                                .enumerate()
                                .filter(|(c, _)| *c != col)
                                .map(|(_, v)| v.clone())
                                .collect()
                        })
                        .collect();
                    let term = &m[0][col] * det(&minor);
                    if col % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum(),
        }
    }
    form.terms()
        .map(|(tuple, coeff)| {
            let m: Vec<Vec<Scalar>> = tuple
                .indices()
                .iter()
                .map(|&i| {
                    vectors
                        .iter()
                        .map(|v| v.component(i as usize).clone())
                        .collect()
                })
                .collect();
            coeff * det(&m)
        })
        .sum()
}

/// `(a ^ b)(v_1..v_{k+l}) = sum over (k,l)-shuffles of sign * a(..) b(..)`.
pub fn wedge_by_shuffles(a: &Form, b: &Form, vectors: &[&Vector]) -> Scalar {
    let k = a.degree();
    let n = vectors.len();
    let mut total = Scalar::zero();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let left: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let right: Vec<usize> = (0..n).filter(|i| mask & (1 << i) == 0).collect();
        let inversions: usize = left
            .iter()
            .map(|&l| right.iter().filter(|&&r| r < l).count())
            .sum();
        let lv: Vec<&Vector> = left.iter().map(|&i| vectors[i]).collect();
        let rv: Vec<&Vector> = right.iter().map(|&i| vectors[i]).collect();
        let term = evaluate_by_determinant(a, &lv) * evaluate_by_determinant(b, &rv);
        total += if inversions.is_multiple_of(2) {
            term
        } else {
            -term
        };
    }
    total
}

/// Rank by fraction-free (Bareiss) elimination over the integers after clearing
/// denominators row by row, scanning columns from the right and pivoting on the
/// last available row. Shares no code with the library's solver.
pub fn naive_rank(matrix: &[Vec<Scalar>]) -> usize {
    let mut rows: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::from(1), |acc, v| {
                let d = v.denom().clone();
                let g = gcd(&acc, &d);
                &acc * &d / g
            });
            row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect()
        })
        .collect();
    let columns = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in (0..columns).rev() {
        let available = rows.len() - rank;
        let Some(p) = (0..available).rev().find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        let last = available - 1;
        rows.swap(p, last);
        let pivot_row = rows[last].clone();
        for row in rows.iter_mut().take(last) {
            let factor = row[col].clone();
            for c in 0..columns {
                row[c] = (&row[c] * &pivot_row[col] - &factor * &pivot_row[c]) / &prev;
            }
        }
        prev = pivot_row[col].abs();
        // the pivot row is retired by moving it past the active block
        let retired = rows.remove(last);
        rows.push(retired);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut a, mut b) = (a.abs(), b.abs());
    while !b.is_zero() {
        let t = &a % &b;
        a = b;
        b = t;
    }
    a
}

/// Relabels frame indices: `e^i -> e^{perm[i-1]}`.
pub fn permute_form(form: &Form, perm: &[u8]) -> Form {
    let mut out = Form::zero(form.dim(), form.degree());
    for (tuple, coeff) in form.terms() {
        let raw: Vec<u8> = tuple
            .indices()
            .iter()
            .map(|&i| perm[i as usize - 1])
            .collect();
        out = &out + &Form::monomial(form.dim(), &raw, coeff.clone()).unwrap();
    }
    out
}

pub fn permute_vector(v: &Vector, perm: &[u8]) -> Vector {
    let mut coords = vec![Scalar::zero(); v.dim()];
    for (i, c) in v.coords().iter().enumerate() {
        coords[perm[i] as usize - 1] = c.clone();
    }
    Vector::new(coords).unwrap()
}

pub fn permute_algebra(algebra: &LieAlgebra, perm: &[u8]) -> LieAlgebra {
    let mut differentials = vec![Form::zero(algebra.dim(), 2); algebra.dim()];
    for (i, de) in algebra.differentials().iter().enumerate() {
        differentials[perm[i] as usize - 1] = permute_form(de, perm);
    }
    LieAlgebra::from_differentials(differentials)
        .unwrap()
        .validated()
        .unwrap()
}

pub fn random_permutation(rng: &mut StdRng, dim: usize) -> Vec<u8> {
    let mut perm: Vec<u8> = (1..=dim as u8).collect();
    for i in (1..dim).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    perm
}
