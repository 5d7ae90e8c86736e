//! Homogeneous exterior forms with exact coefficients over an orthonormal coframe
//! `e^1, ..., e^n` of a real vector space of dimension at most [`MAX_DIM`].

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::scalar::Scalar;

/// Largest supported dimension. Indices are single digits in the literal syntax.
pub const MAX_DIM: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExteriorError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("dimension {0} outside 0..={MAX_DIM}")]
    DimensionTooLarge(usize),
    #[error("degree {degree} out of range for dimension {dim}")]
    DegreeOutOfRange { degree: usize, dim: usize },
    #[error("index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: u8, dim: usize },
    #[error("indices {0:?} are not strictly increasing")]
    NotStrictlyIncreasing(Vec<u8>),
}

fn check_dim(dim: usize) -> Result<(), ExteriorError> {
    if dim > MAX_DIM {
        return Err(ExteriorError::DimensionTooLarge(dim));
    }
    Ok(())
}

/// Strictly increasing list of 1-based frame indices naming the monomial `e^{i_1 ... i_k}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexTuple(Vec<u8>);

impl IndexTuple {
    pub fn new(indices: Vec<u8>) -> Result<Self, ExteriorError> {
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(ExteriorError::NotStrictlyIncreasing(indices));
        }
        if indices.first() == Some(&0) {
            return Err(ExteriorError::IndexOutOfRange {
                index: 0,
                dim: MAX_DIM,
            });
        }
        Ok(Self(indices))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Sorts an arbitrary index list, returning the canonical tuple together with the
    /// sign of the sorting permutation, or `None` when an index repeats.
    pub fn canonicalize(raw: &[u8]) -> Option<(Self, bool)> {
        let mut sorted = raw.to_vec();
        let mut negative = false;
        // insertion sort, counting transpositions
        for i in 1..sorted.len() {
            let mut j = i;
            while j > 0 && sorted[j - 1] > sorted[j] {
                sorted.swap(j - 1, j);
                negative = !negative;
                j -= 1;
            }
        }
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some((Self(sorted), negative))
    }

    pub fn indices(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, index: u8) -> bool {
        self.0.binary_search(&index).is_ok()
    }

    pub fn max_index(&self) -> Option<u8> {
        self.0.last().copied()
    }

    /// Complement in `1..=dim`.
    pub fn complement(&self, dim: usize) -> Self {
        Self((1..=dim as u8).filter(|i| !self.contains(*i)).collect())
    }

    /// The tuple written as a digit string, e.g. `135`.
    pub fn digits(&self) -> String {
        self.0.iter().map(|i| char::from(b'0' + i)).collect()
    }
}

impl fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e^{{{}}}", self.digits())
    }
}

/// Sign of the permutation sorting `left ++ right`, or `None` if they share an index.
fn merge_sign(left: &IndexTuple, right: &IndexTuple) -> Option<bool> {
    let mut negative = false;
    for a in &left.0 {
        for b in &right.0 {
            if a == b {
                return None;
            }
            if a > b {
                negative = !negative;
            }
        }
    }
    Some(negative)
}

/// All strictly increasing `degree`-tuples over `1..=dim` in lexicographic order.
pub fn basis_forms(dim: usize, degree: usize) -> Result<Vec<IndexTuple>, ExteriorError> {
    check_dim(dim)?;
    if degree > dim {
        return Err(ExteriorError::DegreeOutOfRange { degree, dim });
    }
    let mut out = Vec::new();
    let mut current: Vec<u8> = (1..=degree as u8).collect();
    loop {
        out.push(IndexTuple(current.clone()));
        // advance to the next combination
        let mut pos = degree;
        while pos > 0 && current[pos - 1] as usize == dim - degree + pos {
            pos -= 1;
        }
        if pos == 0 {
            break;
        }
        current[pos - 1] += 1;
        for j in pos..degree {
            current[j] = current[j - 1] + 1;
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Positive,
    Negative,
}

/// Tangent vector `sum_i c_i e_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vector {
    coords: Vec<Scalar>,
}

impl Vector {
    pub fn new(coords: Vec<Scalar>) -> Result<Self, ExteriorError> {
        check_dim(coords.len())?;
        Ok(Self { coords })
    }

    pub fn zero(dim: usize) -> Self {
        Self {
            coords: vec![Scalar::zero(); dim],
        }
    }

    /// Frame vector `e_index`, 1-based.
    pub fn basis(dim: usize, index: usize) -> Self {
        assert!(
            (1..=dim).contains(&index),
            "frame index {index} out of range 1..={dim}"
        );
        let mut v = Self::zero(dim);
        v.coords[index - 1] = Scalar::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    /// Component along `e_index`, 1-based.
    pub fn component(&self, index: usize) -> &Scalar {
        &self.coords[index - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, factor: &Scalar) -> Self {
        Self {
            coords: self.coords.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ExteriorError> {
        same_dim(self.dim(), other.dim())?;
        Ok(Self {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Euclidean inner product in the orthonormal frame.
    pub fn dot(&self, other: &Self) -> Result<Scalar, ExteriorError> {
        same_dim(self.dim(), other.dim())?;
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum())
    }

    /// Zero-pads to a larger dimension.
    pub fn embed(&self, dim: usize) -> Result<Self, ExteriorError> {
        check_dim(dim)?;
        if dim < self.dim() {
            return Err(ExteriorError::DimensionMismatch {
                left: self.dim(),
                right: dim,
            });
        }
        let mut coords = self.coords.clone();
        coords.resize(dim, Scalar::zero());
        Ok(Self { coords })
    }

    /// The 1-form `v^flat` under the orthonormal-frame identification.
    pub fn flat(&self) -> Form {
        let terms = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (IndexTuple(vec![i as u8 + 1]), c.clone()))
            .collect();
        Form {
            dim: self.dim(),
            degree: 1,
            terms,
        }
    }
}

fn same_dim(left: usize, right: usize) -> Result<(), ExteriorError> {
    if left != right {
        return Err(ExteriorError::DimensionMismatch { left, right });
    }
    Ok(())
}

/// Homogeneous `k`-form in dimension `n`. Zero coefficients are never stored, so two
/// forms are equal exactly when their coefficient maps are.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Form {
    dim: usize,
    degree: usize,
    terms: BTreeMap<IndexTuple, Scalar>,
}

impl Form {
    /// Panics if `degree > dim` or `dim > MAX_DIM`.
    pub fn zero(dim: usize, degree: usize) -> Self {
        assert!(
            dim <= MAX_DIM && degree <= dim,
            "invalid form shape ({dim}, {degree})"
        );
        Self {
            dim,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The constant 0-form `1`.
    pub fn one(dim: usize) -> Self {
        Self::constant(dim, Scalar::one())
    }

    pub fn constant(dim: usize, value: Scalar) -> Self {
        let mut form = Self::zero(dim, 0);
        form.accumulate(IndexTuple::empty(), value);
        form
    }

    /// `coeff * e^{raw}`, where `raw` may be unsorted; the sorting sign is absorbed
    /// into the coefficient and repeated indices give the zero form.
    pub fn monomial(dim: usize, raw: &[u8], coeff: Scalar) -> Result<Self, ExteriorError> {
        check_dim(dim)?;
        if raw.len() > dim {
            return Err(ExteriorError::DegreeOutOfRange {
                degree: raw.len(),
                dim,
            });
        }
        if let Some(&index) = raw.iter().find(|&&i| i == 0 || i as usize > dim) {
            return Err(ExteriorError::IndexOutOfRange { index, dim });
        }
        let mut form = Self::zero(dim, raw.len());
        if let Some((tuple, negative)) = IndexTuple::canonicalize(raw) {
            form.accumulate(tuple, if negative { -coeff } else { coeff });
        }
        Ok(form)
    }

    /// Frame coform `e^index`.
    pub fn coframe(dim: usize, index: u8) -> Self {
        Self::monomial(dim, &[index], Scalar::one()).expect("coframe index in range")
    }

    /// Builds a form from `(raw indices, coefficient)` pairs, summing duplicates.
    pub fn from_terms<I>(dim: usize, degree: usize, terms: I) -> Result<Self, ExteriorError>
    where
        I: IntoIterator<Item = (Vec<u8>, Scalar)>,
    {
        check_dim(dim)?;
        if degree > dim {
            return Err(ExteriorError::DegreeOutOfRange { degree, dim });
        }
        let mut form = Self::zero(dim, degree);
        for (raw, coeff) in terms {
            if raw.len() != degree {
                return Err(ExteriorError::DegreeMismatch {
                    left: degree,
                    right: raw.len(),
                });
            }
            form = form.checked_add(&Self::monomial(dim, &raw, coeff)?)?;
        }
        Ok(form)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms in lexicographic order of their index tuples.
    pub fn terms(&self) -> impl Iterator<Item = (&IndexTuple, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, tuple: &IndexTuple) -> Scalar {
        self.terms.get(tuple).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Coefficient of `e^{1...n}`; zero unless the form is of top degree.
    pub fn top_coefficient(&self) -> Scalar {
        if self.degree != self.dim {
            return Scalar::zero();
        }
        self.coefficient(&IndexTuple((1..=self.dim as u8).collect()))
    }

    /// Largest index appearing in any term.
    pub fn max_index(&self) -> Option<u8> {
        self.terms.keys().filter_map(IndexTuple::max_index).max()
    }

    fn accumulate(&mut self, tuple: IndexTuple, value: Scalar) {
        if value.is_zero() {
            return;
        }
        match self.terms.entry(tuple) {
            Entry::Vacant(slot) => {
                slot.insert(value);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += value;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Adds `coeff * e^{raw}` in place; `raw` must have length `degree` and valid indices.
    pub(crate) fn add_monomial(&mut self, raw: &[u8], coeff: Scalar) {
        debug_assert_eq!(raw.len(), self.degree);
        if let Some((tuple, negative)) = IndexTuple::canonicalize(raw) {
            self.accumulate(tuple, if negative { -coeff } else { coeff });
        }
    }

    fn same_shape(&self, other: &Self) -> Result<(), ExteriorError> {
        same_dim(self.dim, other.dim)?;
        if self.degree != other.degree {
            return Err(ExteriorError::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ExteriorError> {
        self.same_shape(other)?;
        let mut out = self.clone();
        for (tuple, coeff) in &other.terms {
            out.accumulate(tuple.clone(), coeff.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, ExteriorError> {
        self.checked_add(&-other)
    }

    pub fn scale(&self, factor: &Scalar) -> Self {
        if factor.is_zero() {
            return Self::zero(self.dim, self.degree);
        }
        Self {
            dim: self.dim,
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.clone(), c * factor))
                .collect(),
        }
    }

    /// Exterior product. A degree above the dimension yields the zero form of degree `n`.
    pub fn wedge(&self, other: &Self) -> Result<Self, ExteriorError> {
        same_dim(self.dim, other.dim)?;
        let degree = self.degree + other.degree;
        if degree > self.dim {
            return Ok(Self::zero(self.dim, self.dim));
        }
        let mut out = Self::zero(self.dim, degree);
        for (left, a) in &self.terms {
            for (right, b) in &other.terms {
                let Some(negative) = merge_sign(left, right) else {
                    continue;
                };
                let mut merged: Vec<u8> = left.0.iter().chain(&right.0).copied().collect();
                merged.sort_unstable();
                let product = a * b;
                out.accumulate(
                    IndexTuple(merged),
                    if negative { -product } else { product },
                );
            }
        }
        Ok(out)
    }

    /// Interior product `i_X`. Contracting a 0-form gives the zero 0-form.
    pub fn contract(&self, vector: &Vector) -> Result<Self, ExteriorError> {
        same_dim(self.dim, vector.dim())?;
        if self.degree == 0 {
            return Ok(Self::zero(self.dim, 0));
        }
        let mut out = Self::zero(self.dim, self.degree - 1);
        for (tuple, coeff) in &self.terms {
            for (pos, &index) in tuple.0.iter().enumerate() {
                let component = vector.component(index as usize);
                if component.is_zero() {
                    continue;
                }
                let mut rest = tuple.0.clone();
                rest.remove(pos);
                let value = coeff * component;
                out.accumulate(IndexTuple(rest), if pos % 2 == 1 { -value } else { value });
            }
        }
        Ok(out)
    }

    /// Evaluates the form on `degree` vectors, `a(v_1, ..., v_k)`.
    pub fn evaluate(&self, vectors: &[&Vector]) -> Result<Scalar, ExteriorError> {
        if vectors.len() != self.degree {
            return Err(ExteriorError::DegreeMismatch {
                left: self.degree,
                right: vectors.len(),
            });
        }
        let mut current = self.clone();
        for v in vectors {
            current = current.contract(v)?;
        }
        Ok(current.coefficient(&IndexTuple::empty()))
    }

    /// Hodge star for the metric making the frame orthonormal.
    pub fn hodge_star(&self, orientation: Orientation) -> Self {
        let mut out = Self::zero(self.dim, self.dim - self.degree);
        for (tuple, coeff) in &self.terms {
            let complement = tuple.complement(self.dim);
            let mut negative = merge_sign(tuple, &complement).expect("disjoint complement");
            if orientation == Orientation::Negative {
                negative = !negative;
            }
            out.accumulate(
                complement,
                if negative {
                    -coeff.clone()
                } else {
                    coeff.clone()
                },
            );
        }
        out
    }

    /// Re-embeds into a larger dimension via the inclusion of the first `n` frame indices.
    pub fn embed(&self, dim: usize) -> Result<Self, ExteriorError> {
        check_dim(dim)?;
        if dim < self.dim {
            return Err(ExteriorError::DimensionMismatch {
                left: self.dim,
                right: dim,
            });
        }
        Ok(Self {
            dim,
            degree: self.degree,
            terms: self.terms.clone(),
        })
    }

    /// Drops to a smaller dimension; fails if some term uses an index above `dim`.
    pub fn restrict(&self, dim: usize) -> Result<Self, ExteriorError> {
        if let Some(index) = self.max_index().filter(|&i| i as usize > dim) {
            return Err(ExteriorError::IndexOutOfRange { index, dim });
        }
        if self.degree > dim {
            return Err(ExteriorError::DegreeOutOfRange {
                degree: self.degree,
                dim,
            });
        }
        Ok(Self {
            dim,
            degree: self.degree,
            terms: self.terms.clone(),
        })
    }

    /// The vector dual to a 1-form under the orthonormal-frame identification.
    pub fn sharp(&self) -> Result<Vector, ExteriorError> {
        if self.degree != 1 {
            return Err(ExteriorError::DegreeMismatch {
                left: 1,
                right: self.degree,
            });
        }
        let mut coords = vec![Scalar::zero(); self.dim];
        for (tuple, coeff) in &self.terms {
            coords[tuple.0[0] as usize - 1] = coeff.clone();
        }
        Ok(Vector { coords })
    }

    /// Coefficients along `basis`, in order.
    pub fn coordinates(&self, basis: &[IndexTuple]) -> Vec<Scalar> {
        basis.iter().map(|t| self.coefficient(t)).collect()
    }

    /// Inverse of [`Form::coordinates`].
    pub fn from_coordinates(
        dim: usize,
        degree: usize,
        basis: &[IndexTuple],
        values: &[Scalar],
    ) -> Self {
        let mut out = Self::zero(dim, degree);
        for (tuple, value) in basis.iter().zip(values) {
            debug_assert_eq!(tuple.len(), degree);
            out.accumulate(tuple.clone(), value.clone());
        }
        out
    }

    /// If `self = factor * other` for a unique scalar, returns it. A zero `other` gives
    /// `None` since the factor is then undetermined.
    pub fn ratio_to(&self, other: &Self) -> Option<Scalar> {
        if self.dim != other.dim || self.degree != other.degree {
            return None;
        }
        let (tuple, base) = other.terms.iter().next()?;
        let factor = self.coefficient(tuple) / base;
        (other.scale(&factor) == *self).then_some(factor)
    }
}

impl Add for &Form {
    type Output = Form;

    /// Panics on shape mismatch; use [`Form::checked_add`] for untrusted input.
    fn add(self, rhs: &Form) -> Form {
        self.checked_add(rhs)
            .expect("form addition requires equal shape")
    }
}

impl Sub for &Form {
    type Output = Form;

    fn sub(self, rhs: &Form) -> Form {
        self.checked_sub(rhs)
            .expect("form subtraction requires equal shape")
    }
}

impl Neg for &Form {
    type Output = Form;

    fn neg(self) -> Form {
        Form {
            dim: self.dim,
            degree: self.degree,
            terms: self.terms.iter().map(|(t, c)| (t.clone(), -c)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    fn e(dim: usize, raw: &[u8]) -> Form {
        Form::monomial(dim, raw, int(1)).unwrap()
    }

    #[test]
    fn wedge_disjoint_and_repeated() {
        assert_eq!(
            e(6, &[1, 2]).wedge(&e(6, &[3, 4])).unwrap(),
            e(6, &[1, 2, 3, 4])
        );
        assert!(e(6, &[1, 2]).wedge(&e(6, &[1, 2])).unwrap().is_zero());
        assert_eq!(e(6, &[3]).wedge(&e(6, &[1, 2])).unwrap(), e(6, &[1, 2, 3]));
        assert_eq!(e(6, &[2]).wedge(&e(6, &[1])).unwrap(), -&e(6, &[1, 2]));
    }

    #[test]
    fn wedge_square_of_standard_two_form() {
        let omega = &(&e(6, &[1, 2]) + &e(6, &[3, 4])) + &e(6, &[5, 6]);
        let expected = Form::from_terms(
            6,
            4,
            [
                (vec![1, 2, 3, 4], int(2)),
                (vec![1, 2, 5, 6], int(2)),
                (vec![3, 4, 5, 6], int(2)),
            ],
        )
        .unwrap();
        assert_eq!(omega.wedge(&omega).unwrap(), expected);
    }

    #[test]
    fn wedge_overflowing_degree_is_zero() {
        let top = e(3, &[1, 2, 3]);
        let w = top.wedge(&e(3, &[1])).unwrap();
        assert!(w.is_zero());
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        assert_eq!(
            e(6, &[1]).wedge(&e(7, &[1])),
            Err(ExteriorError::DimensionMismatch { left: 6, right: 7 })
        );
        assert!(e(6, &[1]).contract(&Vector::basis(7, 1)).is_err());
        assert!(e(6, &[1]).checked_add(&e(6, &[1, 2])).is_err());
    }

    #[test]
    fn contraction_signs() {
        let f = e(7, &[1, 2, 3]);
        assert_eq!(f.contract(&Vector::basis(7, 1)).unwrap(), e(7, &[2, 3]));
        assert_eq!(f.contract(&Vector::basis(7, 2)).unwrap(), -&e(7, &[1, 3]));
        assert_eq!(f.contract(&Vector::basis(7, 3)).unwrap(), e(7, &[1, 2]));
        assert!(f.contract(&Vector::basis(7, 4)).unwrap().is_zero());
        assert!(Form::one(7)
            .contract(&Vector::basis(7, 4))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn contracting_last_factor() {
        // i_{e7}(psi ^ e^7) = -psi for a 3-form on the first six indices
        let psi = Form::from_terms(
            7,
            3,
            [
                (vec![1, 3, 6], int(1)),
                (vec![1, 4, 5], ratio(2, 3)),
                (vec![2, 4, 6], int(-1)),
            ],
        )
        .unwrap();
        let phi = psi.wedge(&Form::coframe(7, 7)).unwrap();
        assert_eq!(phi.contract(&Vector::basis(7, 7)).unwrap(), -&psi);
    }

    #[test]
    fn basis_counts_and_order() {
        let b = basis_forms(6, 3).unwrap();
        assert_eq!(b.len(), 20);
        assert_eq!(b[0].indices(), &[1, 2, 3]);
        assert_eq!(b[19].indices(), &[4, 5, 6]);
        let b = basis_forms(7, 4).unwrap();
        assert_eq!(b.len(), 35);
        assert_eq!(b[0].indices(), &[1, 2, 3, 4]);
        assert_eq!(b[34].indices(), &[4, 5, 6, 7]);
        assert_eq!(basis_forms(5, 0).unwrap(), vec![IndexTuple::empty()]);
        assert!(basis_forms(3, 4).is_err());
        assert!(basis_forms(10, 1).is_err());
        assert!(b.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn hodge_star_examples() {
        assert_eq!(
            e(7, &[1, 2, 3]).hodge_star(Orientation::Positive),
            e(7, &[4, 5, 6, 7])
        );
        assert_eq!(
            Form::one(7).hodge_star(Orientation::Positive),
            e(7, &[1, 2, 3, 4, 5, 6, 7])
        );
        assert_eq!(
            e(7, &[1, 2, 3]).hodge_star(Orientation::Negative),
            -&e(7, &[4, 5, 6, 7])
        );
        // *e^2 in dimension 3: e^2 ^ e^{13} = -e^{123}
        assert_eq!(
            e(3, &[2]).hodge_star(Orientation::Positive),
            -&e(3, &[1, 3])
        );
        // a ^ *a = |a|^2 vol
        let a = e(5, &[2, 4]);
        assert_eq!(
            a.wedge(&a.hodge_star(Orientation::Positive)).unwrap(),
            e(5, &[1, 2, 3, 4, 5])
        );
    }

    #[test]
    fn monomial_canonicalizes() {
        assert_eq!(
            Form::monomial(4, &[2, 1], int(3)).unwrap(),
            e(4, &[1, 2]).scale(&int(-3))
        );
        assert!(Form::monomial(4, &[2, 2], int(3)).unwrap().is_zero());
        assert!(Form::monomial(4, &[5], int(1)).is_err());
        assert!(IndexTuple::new(vec![2, 1]).is_err());
    }

    #[test]
    fn evaluate_two_form() {
        let f = e(3, &[1, 2]);
        let x = Vector::new(vec![int(1), int(2), int(0)]).unwrap();
        let y = Vector::new(vec![int(3), int(5), int(1)]).unwrap();
        assert_eq!(f.evaluate(&[&x, &y]).unwrap(), int(5 - 6));
        assert_eq!(f.evaluate(&[&y, &x]).unwrap(), int(1));
    }

    #[test]
    fn ratio_detection() {
        let a = e(4, &[1, 2]);
        let b = &a + &e(4, &[3, 4]);
        assert_eq!(b.scale(&ratio(1, 2)).ratio_to(&b), Some(ratio(1, 2)));
        assert_eq!(a.ratio_to(&b), None);
        assert_eq!(Form::zero(4, 2).ratio_to(&b), Some(int(0)));
        assert_eq!(a.ratio_to(&Form::zero(4, 2)), None);
    }
}
