//! Dense univariate polynomials over any exact coefficient ring.
//!
//! Coefficients are stored lowest degree first with no trailing zeros.
//! The type is generic over [`Scalar`], and is itself a [`Scalar`], so
//! polynomial rings nest: `UniPoly<UniPoly<CycloNum>>` gives exact
//! bivariate arithmetic, which the geometry layer uses for resultants.

use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::traits::{FieldScalar, Scalar};
use crate::error::Error;

/// A univariate polynomial; `proto` is the zero of the coefficient ring,
/// kept so the zero polynomial still knows its ring.
#[derive(Clone, Debug)]
pub struct UniPoly<K: Scalar> {
    proto: K,
    coeffs: Vec<K>,
}

impl<K: Scalar> PartialEq for UniPoly<K> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<K: Scalar> UniPoly<K> {
    /// Builds a polynomial from coefficients (lowest degree first),
    /// trimming trailing zeros.  `exemplar` supplies the coefficient ring.
    pub fn new(exemplar: &K, coeffs: Vec<K>) -> Self {
        let mut p = UniPoly {
            proto: exemplar.zero_like(),
            coeffs,
        };
        p.trim();
        p
    }

    pub fn zero(exemplar: &K) -> Self {
        UniPoly {
            proto: exemplar.zero_like(),
            coeffs: Vec::new(),
        }
    }

    pub fn constant(value: K) -> Self {
        let proto = value.zero_like();
        let coeffs = if value.is_zero() { vec![] } else { vec![value] };
        UniPoly { proto, coeffs }
    }

    /// `coeff * x^k`.
    pub fn monomial(coeff: K, k: usize) -> Self {
        let proto = coeff.zero_like();
        if coeff.is_zero() {
            return UniPoly {
                proto,
                coeffs: vec![],
            };
        }
        let mut coeffs = vec![proto.clone(); k];
        coeffs.push(coeff);
        UniPoly { proto, coeffs }
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&K> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> K {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.proto.clone())
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn ring_zero(&self) -> K {
        self.proto.clone()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k).add_ref(&other.coeff(k)));
        }
        UniPoly::new(&self.proto, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k).sub_ref(&other.coeff(k)));
        }
        UniPoly::new(&self.proto, coeffs)
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            proto: self.proto.clone(),
            coeffs: self.coeffs.iter().map(K::neg_ref).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::zero(&self.proto);
        }
        let mut coeffs = vec![self.proto.clone(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add_ref(&a.mul_ref(b));
            }
        }
        UniPoly::new(&self.proto, coeffs)
    }

    pub fn scale(&self, factor: &K) -> Self {
        UniPoly::new(
            &self.proto,
            self.coeffs.iter().map(|c| c.mul_ref(factor)).collect(),
        )
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::constant(self.proto.one_like());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero(&self.proto);
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() - 1);
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            // multiply by the integer k via repeated addition-free scaling
            let mut factor = self.proto.clone();
            let one = self.proto.one_like();
            for _ in 0..k {
                factor = factor.add_ref(&one);
            }
            coeffs.push(c.mul_ref(&factor));
        }
        UniPoly::new(&self.proto, coeffs)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &K) -> K {
        let mut acc = self.proto.clone();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x).add_ref(c);
        }
        acc
    }

    /// Long division that only uses exact coefficient division; returns
    /// `None` when some step is inexact in the coefficient ring.
    pub fn div_rem_exact(&self, divisor: &Self) -> Option<(Self, Self)> {
        let dd = divisor.degree()?;
        let lead = divisor.leading().expect("nonzero divisor");
        let mut rem = self.clone();
        let mut quot = vec![self.proto.clone(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let q = rem.leading().expect("nonzero remainder").exact_div(lead)?;
            let shift = rd - dd;
            // rem -= q * x^shift * divisor
            let mut coeffs = rem.coeffs;
            for (j, c) in divisor.coeffs.iter().enumerate() {
                coeffs[shift + j] = coeffs[shift + j].sub_ref(&q.mul_ref(c));
            }
            rem = UniPoly::new(&self.proto, coeffs);
            quot[shift] = q;
        }
        Some((UniPoly::new(&self.proto, quot), rem))
    }

    /// Whether this polynomial uses its variable at all.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }
}

impl<K: FieldScalar> UniPoly<K> {
    /// Division with remainder over a coefficient field.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), Error> {
        if divisor.coeffs.is_empty() {
            return Err(Error::DivisionByZero);
        }
        self.div_rem_exact(divisor)
            .ok_or_else(|| Error::Assertion("field division step failed".into()))
    }

    /// Monic scaling of a nonzero polynomial.
    pub fn monic(&self) -> Result<Self, Error> {
        let lead = self.leading().ok_or(Error::ZeroPolynomial)?;
        let inv = lead.inv_ref()?;
        Ok(self.scale(&inv))
    }

    /// Monic greatest common divisor by the Euclidean algorithm; the zero
    /// polynomial is the gcd of two zeros.
    pub fn gcd(&self, other: &Self) -> Result<Self, Error> {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.coeffs.is_empty() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        if a.coeffs.is_empty() {
            Ok(a)
        } else {
            a.monic()
        }
    }
}

impl<K: Scalar> Scalar for UniPoly<K> {
    fn zero_like(&self) -> Self {
        Self::zero(&self.proto)
    }

    fn one_like(&self) -> Self {
        Self::constant(self.proto.one_like())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_ref(&self, other: &Self) -> Self {
        self.add(other)
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.sub(other)
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.mul(other)
    }

    fn neg_ref(&self) -> Self {
        self.neg()
    }

    fn exact_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem_exact(other)?;
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }
}

/// Renders a polynomial over a textual coefficient writer, used by display
/// code; coefficients print via `K: core::fmt::Display`.
pub fn render<K: Scalar + core::fmt::Display>(p: &UniPoly<K>, var: &str) -> alloc::string::String {
    use core::fmt::Write;
    let mut out = alloc::string::String::new();
    if p.is_zero() {
        return "0".into();
    }
    let mut first = true;
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if !first {
            out.push_str(" + ");
        }
        first = false;
        if k == 0 {
            let _ = write!(out, "({c})");
        } else if k == 1 {
            let _ = write!(out, "({c})*{var}");
        } else {
            let _ = write!(out, "({c})*{var}^{k}");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::Rational;

    fn poly(coeffs: &[i64]) -> UniPoly<Rational> {
        UniPoly::new(
            &Rational::zero(),
            coeffs.iter().map(|&c| Rational::from_int(c)).collect(),
        )
    }

    #[test]
    fn arithmetic_and_trim() {
        let p = poly(&[1, 2, 1]); // 1 + 2x + x^2
        let q = poly(&[-1, 0, -1]); // -1 - x^2
        assert_eq!(p.add(&q), poly(&[0, 2]));
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.add(&q).degree(), Some(1));
        assert_eq!(p.mul(&q), poly(&[-1, -2, -2, -2, -1]));
    }

    #[test]
    fn division_with_remainder() {
        // (x^2 - 1) = (x - 1)(x + 1)
        let p = poly(&[-1, 0, 1]);
        let d = poly(&[-1, 1]);
        let (q, r) = p.div_rem(&d).unwrap();
        assert_eq!(q, poly(&[1, 1]));
        assert!(r.is_zero());

        // x^2 + 1 by x - 1 leaves remainder 2
        let p = poly(&[1, 0, 1]);
        let (q, r) = p.div_rem(&d).unwrap();
        assert_eq!(q, poly(&[1, 1]));
        assert_eq!(r, poly(&[2]));
    }

    #[test]
    fn gcd_detects_common_roots() {
        // gcd(x^2 - 1, x^2 - 2x + 1) = x - 1
        let a = poly(&[-1, 0, 1]);
        let b = poly(&[1, -2, 1]);
        assert_eq!(a.gcd(&b).unwrap(), poly(&[-1, 1]));
        // coprime pair
        let c = poly(&[1, 0, 1]);
        assert_eq!(a.gcd(&c).unwrap(), poly(&[1]));
    }

    #[test]
    fn exact_division_scalar_impl() {
        let a = poly(&[-1, 0, 1]);
        let d = poly(&[-1, 1]);
        assert_eq!(a.exact_div(&d), Some(poly(&[1, 1])));
        let c = poly(&[1, 0, 1]);
        assert_eq!(c.exact_div(&d), None);
    }

    #[test]
    fn derivative_and_eval() {
        let p = poly(&[5, 0, 3]); // 5 + 3x^2
        assert_eq!(p.derivative(), poly(&[0, 6]));
        assert_eq!(p.eval(&Rational::from_int(2)), Rational::from_int(17));
    }

    #[test]
    fn nested_polynomials_are_scalars() {
        // (x + t) * (x - t) = x^2 - t^2 over Q[t][x]
        let t = UniPoly::monomial(Rational::one(), 1);
        let zero_t = UniPoly::zero(&Rational::zero());
        let x_plus_t = UniPoly::new(&zero_t, vec![t.clone(), t.one_like()]);
        let x_minus_t = UniPoly::new(&zero_t, vec![t.neg(), t.one_like()]);
        let prod = x_plus_t.mul(&x_minus_t);
        let t_squared_neg = t.mul(&t).neg();
        assert_eq!(prod.coeff(0), t_squared_neg);
        assert!(prod.coeff(1).is_zero());
        assert_eq!(prod.coeff(2), t.one_like());
    }
}
