//! Multivariate polynomials over a cyclotomic field, with the canonical
//! term order used throughout the crate.
//!
//! Terms are kept in a `BTreeMap` keyed by monomial, ordered so that
//! iteration visits terms canonically: total degree descending, then
//! exponent vectors lexicographically descending with the first variable
//! weighted heaviest.  The first entry of the map is always the leading
//! term.

use alloc::borrow::ToOwned;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::cyclotomic::{CycloField, CycloNum};
use crate::algebra::matrix::ExactMatrix;
use crate::algebra::traits::Scalar;
use crate::error::Error;

/// Exponent vector of a single monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mono {
    exps: Vec<u32>,
}

impl Mono {
    pub fn new(exps: Vec<u32>) -> Self {
        Mono { exps }
    }

    pub fn unit(nvars: usize) -> Self {
        Mono {
            exps: vec![0; nvars],
        }
    }

    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Mono { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Mono {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Whether `self` divides `other` componentwise.
    pub fn divides(&self, other: &Mono) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Mono {
    /// Canonically earlier compares as `Less`, so ascending map iteration
    /// is canonical order: higher total degree first; within a degree,
    /// lexicographically larger exponent vectors (first variable heaviest)
    /// first.
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        match self.total_degree().cmp(&other.total_degree()) {
            core::cmp::Ordering::Less => core::cmp::Ordering::Greater,
            core::cmp::Ordering::Greater => core::cmp::Ordering::Less,
            core::cmp::Ordering::Equal => other.exps.cmp(&self.exps),
        }
    }
}

/// All monomials in `nvars` variables of total degree exactly `d`, in
/// canonical order.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Mono> {
    fn rec(nvars: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Mono>) {
        if prefix.len() + 1 == nvars {
            prefix.push(d);
            out.push(Mono::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(nvars, d - e, prefix, out);
            prefix.pop();
        }
    }
    if nvars == 0 {
        return if d == 0 { vec![Mono::new(vec![])] } else { vec![] };
    }
    let mut out = Vec::new();
    rec(nvars, d, &mut Vec::new(), &mut out);
    out
}

/// A polynomial in `nvars` variables over one cyclotomic field.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiPoly {
    nvars: usize,
    field: CycloField,
    terms: BTreeMap<Mono, CycloNum>,
}

impl MultiPoly {
    pub fn zero(field: &CycloField, nvars: usize) -> Self {
        MultiPoly {
            nvars,
            field: field.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: &CycloField, nvars: usize, value: CycloNum) -> Self {
        let mut p = Self::zero(field, nvars);
        p.add_term(Mono::unit(nvars), value);
        p
    }

    pub fn one(field: &CycloField, nvars: usize) -> Self {
        Self::constant(field, nvars, field.one())
    }

    /// The variable `x_i` as a polynomial.
    pub fn variable(field: &CycloField, nvars: usize, i: usize) -> Self {
        let mut p = Self::zero(field, nvars);
        p.add_term(Mono::variable(nvars, i), field.one());
        p
    }

    pub fn monomial(field: &CycloField, mono: Mono, coeff: CycloNum) -> Self {
        let mut p = Self::zero(field, mono.nvars());
        p.add_term(mono, coeff);
        p
    }

    pub fn from_terms(
        field: &CycloField,
        nvars: usize,
        terms: impl IntoIterator<Item = (Mono, CycloNum)>,
    ) -> Self {
        let mut p = Self::zero(field, nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Adds `coeff * mono` into this polynomial.
    pub fn add_term(&mut self, mono: Mono, coeff: CycloNum) {
        debug_assert_eq!(mono.nvars(), self.nvars);
        debug_assert_eq!(coeff.field(), &self.field);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add_ref(&coeff);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> &CycloField {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &CycloNum)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading_term(&self) -> Option<(&Mono, &CycloNum)> {
        self.terms.first_key_value()
    }

    pub fn coefficient(&self, mono: &Mono) -> CycloNum {
        self.terms
            .get(mono)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    /// Largest total degree among the terms; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Mono::total_degree).max()
    }

    /// Smallest total degree among the terms (the multiplicity at the
    /// origin once the point of interest is translated there).
    pub fn min_total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Mono::total_degree).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.total_degree() == self.min_total_degree()
    }

    /// Degree when homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let top = self.total_degree()?;
        if self.min_total_degree() == Some(top) {
            Some(top)
        } else {
            None
        }
    }

    /// Largest exponent of variable `i` appearing in any term.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(i)).max().unwrap_or(0)
    }

    pub fn uses_variable(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.exp(i) > 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        assert_eq!(self.field, other.field, "coefficient field mismatch");
        let mut out = self.clone();
        for (m, c) in other.terms.iter() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            nvars: self.nvars,
            field: self.field.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg_ref()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        assert_eq!(self.field, other.field, "coefficient field mismatch");
        let mut out = Self::zero(&self.field, self.nvars);
        for (ma, ca) in self.terms.iter() {
            for (mb, cb) in other.terms.iter() {
                out.add_term(ma.mul(mb), ca.mul_ref(cb));
            }
        }
        out
    }

    pub fn scale(&self, factor: &CycloNum) -> Self {
        if factor.is_zero() {
            return Self::zero(&self.field, self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            field: self.field.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.mul_ref(factor)))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.field, self.nvars);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn partial_derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(&self.field, self.nvars);
        for (m, c) in self.terms.iter() {
            let e = m.exp(i);
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_owned();
            exps[i] -= 1;
            out.add_term(Mono::new(exps), c.mul_ref(&self.field.from_int(e as i64)));
        }
        out
    }

    pub fn eval(&self, point: &[CycloNum]) -> Result<CycloNum, Error> {
        if point.len() != self.nvars {
            return Err(Error::Assertion("evaluation point length mismatch".into()));
        }
        let mut acc = self.field.zero();
        for (m, c) in self.terms.iter() {
            let mut term = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    term = term.mul_ref(&point[i].pow(e as i64)?);
                }
            }
            acc = acc.add_ref(&term);
        }
        Ok(acc)
    }

    /// Substitutes `x_i := images[i]`; the images must all live in one
    /// variable set over the same field.
    pub fn compose(&self, images: &[MultiPoly]) -> Result<MultiPoly, Error> {
        if images.len() != self.nvars {
            return Err(Error::Assertion(
                "composition needs one image per variable".into(),
            ));
        }
        let target_nvars = images.first().map_or(self.nvars, MultiPoly::nvars);
        for img in images {
            if img.nvars() != target_nvars {
                return Err(Error::Assertion("image variable counts differ".into()));
            }
            if img.field() != &self.field {
                return Err(Error::FieldMismatch {
                    left: self.field.conductor(),
                    right: img.field().conductor(),
                });
            }
        }
        let mut acc = MultiPoly::zero(&self.field, target_nvars);
        for (m, c) in self.terms.iter() {
            let mut term = MultiPoly::constant(&self.field, target_nvars, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    term = term.mul(&images[i].pow(e));
                }
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// Invertible change of coordinates `x = M y`: returns `f(M y)`.
    /// A singular matrix is rejected, since the result would not describe
    /// the same hypersurface.
    pub fn substitute_linear(&self, m: &ExactMatrix<CycloNum>) -> Result<MultiPoly, Error> {
        if m.rows() != self.nvars || m.cols() != self.nvars {
            return Err(Error::Assertion(
                "coordinate change must be square in the variable count".into(),
            ));
        }
        if m.determinant()?.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let images: Vec<MultiPoly> = (0..self.nvars)
            .map(|i| {
                let mut img = MultiPoly::zero(&self.field, self.nvars);
                for j in 0..self.nvars {
                    img.add_term(Mono::variable(self.nvars, j), m.get(i, j).clone());
                }
                img
            })
            .collect();
        self.compose(&images)
    }

    /// Substitutes a polynomial for the single variable `i`, leaving the
    /// other variables untouched.
    pub fn substitute_variable(&self, i: usize, value: &MultiPoly) -> Result<MultiPoly, Error> {
        let images: Vec<MultiPoly> = (0..self.nvars)
            .map(|j| {
                if j == i {
                    value.clone()
                } else {
                    MultiPoly::variable(&self.field, self.nvars, j)
                }
            })
            .collect();
        self.compose(&images)
    }

    /// Sets variable `i` to one (dehomogenization in that variable).
    pub fn set_variable_to_one(&self, i: usize) -> MultiPoly {
        let mut out = Self::zero(&self.field, self.nvars);
        for (m, c) in self.terms.iter() {
            let mut exps = m.exps().to_owned();
            exps[i] = 0;
            out.add_term(Mono::new(exps), c.clone());
        }
        out
    }

    /// Removes variable `i`, which must not occur, relabeling later
    /// variables down by one.
    pub fn remove_variable(&self, i: usize) -> Result<MultiPoly, Error> {
        if self.uses_variable(i) {
            return Err(Error::Assertion(
                "cannot drop a variable that still occurs".into(),
            ));
        }
        let mut out = Self::zero(&self.field, self.nvars - 1);
        for (m, c) in self.terms.iter() {
            let mut exps = m.exps().to_owned();
            exps.remove(i);
            out.add_term(Mono::new(exps), c.clone());
        }
        Ok(out)
    }

    /// Inserts a fresh unused variable at position `i`.
    pub fn insert_variable(&self, i: usize) -> MultiPoly {
        let mut out = Self::zero(&self.field, self.nvars + 1);
        for (m, c) in self.terms.iter() {
            let mut exps = m.exps().to_owned();
            exps.insert(i, 0);
            out.add_term(Mono::new(exps), c.clone());
        }
        out
    }

    /// Exact polynomial division; `None` when the divisor does not divide
    /// exactly.  Deterministic leading-term reduction in canonical order.
    pub fn exact_div(&self, divisor: &Self) -> Option<MultiPoly> {
        if divisor.is_zero() {
            return None;
        }
        let (dlm, dlc) = divisor.leading_term()?;
        let dlm = dlm.clone();
        let dlc = dlc.clone();
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(&self.field, self.nvars);
        while let Some((rlm, rlc)) = rem.leading_term() {
            if !dlm.divides(rlm) {
                return None;
            }
            let qm = Mono::new(
                rlm.exps()
                    .iter()
                    .zip(dlm.exps())
                    .map(|(a, b)| a - b)
                    .collect(),
            );
            let qc = rlc.exact_div(&dlc)?;
            let qterm = MultiPoly::monomial(&self.field, qm, qc);
            rem = rem.sub(&qterm.mul(divisor));
            quot = quot.add(&qterm);
        }
        Some(quot)
    }

    /// Coefficient vector with respect to a monomial basis; `None` when a
    /// term falls outside the basis.
    pub fn coeff_vector(&self, basis: &[Mono]) -> Option<Vec<CycloNum>> {
        let mut out = vec![self.field.zero(); basis.len()];
        let index: BTreeMap<&Mono, usize> =
            basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        for (m, c) in self.terms.iter() {
            let &i = index.get(m)?;
            out[i] = c.clone();
        }
        Some(out)
    }

    pub fn from_coeff_vector(
        field: &CycloField,
        nvars: usize,
        basis: &[Mono],
        coeffs: &[CycloNum],
    ) -> Result<MultiPoly, Error> {
        if basis.len() != coeffs.len() {
            return Err(Error::Assertion("basis and coefficient lengths differ".into()));
        }
        Ok(Self::from_terms(
            field,
            nvars,
            basis.iter().cloned().zip(coeffs.iter().cloned()),
        ))
    }

    /// Canonical plain-text rendering with variables `X0, X1, ...`.
    ///
    /// Terms appear in the canonical monomial order and join with ` + ` or
    /// ` - `; negative rational coefficients fold their sign into the join.
    /// A coefficient that is exactly `z^k` prints bare; any other
    /// non-rational coefficient is parenthesized.
    pub fn to_text(&self) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        let mut first = true;
        for (m, c) in self.terms.iter() {
            let (negative, magnitude) = match c.as_rational() {
                Some(q) if q.is_negative() => (true, c.neg_ref()),
                _ => (false, c.clone()),
            };
            let coeff_text = magnitude.to_text();
            let is_plain_one = magnitude.is_rational() && coeff_text == "1";
            let needs_parens =
                !magnitude.is_rational() && magnitude.unit_zeta_power().is_none();
            let mut var_part = String::new();
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !var_part.is_empty() {
                    var_part.push('*');
                }
                let _ = write!(var_part, "X{i}");
                if e > 1 {
                    let _ = write!(var_part, "^{e}");
                }
            }
            if first {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            first = false;
            if var_part.is_empty() {
                if needs_parens {
                    let _ = write!(out, "({coeff_text})");
                } else {
                    out.push_str(&coeff_text);
                }
            } else if is_plain_one {
                out.push_str(&var_part);
            } else if needs_parens {
                let _ = write!(out, "({coeff_text})*{var_part}");
            } else {
                let _ = write!(out, "{coeff_text}*{var_part}");
            }
        }
        out
    }
}

impl core::fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::binomial;
    use crate::algebra::rational::Rational;

    fn f6() -> CycloField {
        CycloField::new(6).unwrap()
    }

    fn var(field: &CycloField, n: usize, i: usize) -> MultiPoly {
        MultiPoly::variable(field, n, i)
    }

    #[test]
    fn canonical_monomial_order() {
        let ms = monomials_of_degree(3, 2);
        let exps: Vec<&[u32]> = ms.iter().map(Mono::exps).collect();
        assert_eq!(
            exps,
            alloc::vec![
                &[2, 0, 0][..],
                &[1, 1, 0],
                &[1, 0, 1],
                &[0, 2, 0],
                &[0, 1, 1],
                &[0, 0, 2],
            ]
        );
        assert_eq!(
            monomials_of_degree(4, 3).len() as u64,
            binomial(3 + 3, 3)
        );
        // sorted sequence is already canonical
        let mut sorted = ms.clone();
        sorted.sort();
        assert_eq!(sorted, ms);
    }

    #[test]
    fn leading_term_is_first_map_entry() {
        let f = f6();
        // x1^2 + x0*x2 : leading term must be x0*x2 (degree tie, x0 heavier)
        let p = var(&f, 3, 1).pow(2).add(&var(&f, 3, 0).mul(&var(&f, 3, 2)));
        let (m, _) = p.leading_term().unwrap();
        assert_eq!(m.exps(), &[1, 0, 1]);
        // adding a cubic term promotes it to the lead
        let q = p.add(&var(&f, 3, 2).pow(3));
        let (m, _) = q.leading_term().unwrap();
        assert_eq!(m.exps(), &[0, 0, 3]);
    }

    #[test]
    fn arithmetic_and_cancellation() {
        let f = f6();
        let x = var(&f, 2, 0);
        let y = var(&f, 2, 1);
        let p = x.add(&y).mul(&x.sub(&y));
        let expected = x.pow(2).sub(&y.pow(2));
        assert_eq!(p, expected);
        assert!(p.sub(&expected).is_zero());
        assert_eq!(p.num_terms(), 2);
    }

    #[test]
    fn euler_relation_for_homogeneous_polynomials() {
        let f = f6();
        // simple deterministic pseudo-random coefficient stream
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % 17) as i64 - 8
        };
        for nvars in [2usize, 3, 4] {
            for d in [2u32, 3, 5] {
                let basis = monomials_of_degree(nvars, d);
                let mut p = MultiPoly::zero(&f, nvars);
                for m in &basis {
                    let c = next();
                    let coeff = f.from_int(c).add_ref(&f.zeta().mul_ref(&f.from_int(next())));
                    p.add_term(m.clone(), coeff);
                }
                if p.is_zero() {
                    continue;
                }
                assert!(p.is_homogeneous());
                let mut euler = MultiPoly::zero(&f, nvars);
                for i in 0..nvars {
                    euler = euler.add(&var(&f, nvars, i).mul(&p.partial_derivative(i)));
                }
                assert_eq!(euler, p.scale(&f.from_int(d as i64)));
            }
        }
    }

    #[test]
    fn evaluation_scales_homogeneously() {
        let f = f6();
        let x = var(&f, 3, 0);
        let y = var(&f, 3, 1);
        let z = var(&f, 3, 2);
        let p = x.pow(3).add(&y.pow(2).mul(&z)).sub(&x.mul(&y).mul(&z));
        let pt = [f.from_int(2), f.zeta(), f.from_int(-1)];
        let lambda = f.from_int(3);
        let scaled: Vec<CycloNum> = pt.iter().map(|c| c.mul_ref(&lambda)).collect();
        let v1 = p.eval(&scaled).unwrap();
        let v2 = p.eval(&pt).unwrap().mul_ref(&lambda.pow(3).unwrap());
        assert_eq!(v1, v2);
    }

    #[test]
    fn linear_substitution_round_trip() {
        let f = f6();
        let x = var(&f, 3, 0);
        let y = var(&f, 3, 1);
        let z = var(&f, 3, 2);
        let p = x.pow(2).mul(&y).add(&z.pow(3)).sub(&x.mul(&y).mul(&z));
        let m = ExactMatrix::from_rows(
            &f.zero(),
            alloc::vec![
                alloc::vec![f.from_int(1), f.from_int(2), f.from_int(0)],
                alloc::vec![f.from_int(0), f.from_int(1), f.zeta()],
                alloc::vec![f.from_int(1), f.from_int(0), f.from_int(1)],
            ],
        )
        .unwrap();
        let inv = m.inverse().unwrap();
        let q = p.substitute_linear(&m).unwrap();
        let back = q.substitute_linear(&inv).unwrap();
        assert_eq!(back, p);
        let sing = ExactMatrix::from_rows(
            &f.zero(),
            alloc::vec![
                alloc::vec![f.from_int(1), f.from_int(1), f.from_int(0)],
                alloc::vec![f.from_int(1), f.from_int(1), f.from_int(0)],
                alloc::vec![f.from_int(0), f.from_int(0), f.from_int(1)],
            ],
        )
        .unwrap();
        assert_eq!(p.substitute_linear(&sing), Err(Error::SingularMatrix));
    }

    #[test]
    fn composition_expands_binomials() {
        let f = f6();
        // p(u, v) = u^2, compose u := x + y, v := anything
        let p = var(&f, 2, 0).pow(2);
        let image = var(&f, 2, 0).add(&var(&f, 2, 1));
        let other = var(&f, 2, 1);
        let q = p.compose(&[image, other]).unwrap();
        let x = var(&f, 2, 0);
        let y = var(&f, 2, 1);
        let expected = x
            .pow(2)
            .add(&x.mul(&y).scale(&f.from_int(2)))
            .add(&y.pow(2));
        assert_eq!(q, expected);
    }

    #[test]
    fn exact_division_of_polynomials() {
        let f = f6();
        let x = var(&f, 2, 0);
        let y = var(&f, 2, 1);
        let p = x.pow(2).sub(&y.pow(2));
        let d = x.sub(&y);
        let q = p.exact_div(&d).unwrap();
        assert_eq!(q, x.add(&y));
        assert!(p.exact_div(&x.add(&y.scale(&f.from_int(2)))).is_none());
        // dividing by a scaled divisor still works over the field
        let q2 = p.exact_div(&d.scale(&f.zeta())).unwrap();
        assert_eq!(q2.mul(&d.scale(&f.zeta())), p);
    }

    #[test]
    fn variable_management() {
        let f = f6();
        let p = var(&f, 3, 0).pow(2).add(&var(&f, 3, 2).pow(2));
        assert!(!p.uses_variable(1));
        let dropped = p.remove_variable(1).unwrap();
        assert_eq!(dropped.nvars(), 2);
        let restored = dropped.insert_variable(1);
        assert_eq!(restored, p);
        assert!(p.remove_variable(0).is_err());
        let dehom = p.set_variable_to_one(2);
        assert_eq!(
            dehom,
            var(&f, 3, 0).pow(2).add(&MultiPoly::one(&f, 3))
        );
    }

    #[test]
    fn coefficient_vectors_round_trip() {
        let f = f6();
        let basis = monomials_of_degree(3, 2);
        let p = var(&f, 3, 0)
            .mul(&var(&f, 3, 1))
            .scale(&f.from_int(5))
            .add(&var(&f, 3, 2).pow(2).scale(&f.zeta()));
        let vec = p.coeff_vector(&basis).unwrap();
        assert_eq!(vec.len(), basis.len());
        let q = MultiPoly::from_coeff_vector(&f, 3, &basis, &vec).unwrap();
        assert_eq!(p, q);
        // a cubic term cannot be expressed in the quadratic basis
        let bad = p.add(&var(&f, 3, 0).pow(3));
        assert!(bad.coeff_vector(&basis).is_none());
    }

    #[test]
    fn text_rendering_is_canonical() {
        let f1 = CycloField::new(1).unwrap();
        let x = var(&f1, 3, 0);
        let y = var(&f1, 3, 1);
        let z = var(&f1, 3, 2);
        let p = y
            .pow(2)
            .sub(&x.mul(&z).scale(&f1.from_int(2)))
            .add(&x.pow(2).scale(&f1.from_rational(Rational::new(1, 2).unwrap())));
        assert_eq!(p.to_text(), "1/2*X0^2 - 2*X0*X2 + X1^2");
        let f4 = CycloField::new(4).unwrap();
        let q = MultiPoly::variable(&f4, 2, 0)
            .scale(&f4.zeta())
            .add(&MultiPoly::one(&f4, 2));
        assert_eq!(q.to_text(), "z*X0 + 1");
        let r = MultiPoly::variable(&f4, 2, 1)
            .scale(&f4.zeta().checked_add(&f4.from_int(1)).unwrap())
            .sub(&MultiPoly::variable(&f4, 2, 0));
        assert_eq!(r.to_text(), "-X0 + (1 + z)*X1");
    }
}
