//! Cyclotomic number fields `Q(zeta_n)` with exact arithmetic.
//!
//! Elements are polynomials in the primitive root `zeta_n`, reduced modulo
//! the n-th cyclotomic polynomial.  All operations are exact; nothing is
//! ever rounded.  Mixing elements of different conductors is rejected by
//! the checked operations with [`Error::FieldMismatch`].

use alloc::rc::Rc;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::euler_phi;
use crate::algebra::rational::Rational;
use crate::algebra::traits::{FieldScalar, Scalar};
use crate::algebra::unipoly::UniPoly;
use crate::error::Error;

#[derive(Debug)]
struct FieldData {
    conductor: u32,
    degree: usize,
    modulus: UniPoly<Rational>,
}

/// The field `Q(zeta_n)`; cheap to clone, compared by conductor.
#[derive(Clone, Debug)]
pub struct CycloField(Rc<FieldData>);

impl PartialEq for CycloField {
    fn eq(&self, other: &Self) -> bool {
        self.0.conductor == other.0.conductor
    }
}
impl Eq for CycloField {}

/// Computes the n-th cyclotomic polynomial by dividing `x^n - 1` by the
/// cyclotomic polynomials of the proper divisors of n.
fn cyclotomic_polynomial(n: u32) -> UniPoly<Rational> {
    let zero = Rational::zero();
    let mut memo: Vec<Option<UniPoly<Rational>>> = vec![None; (n + 1) as usize];
    for m in 1..=n {
        if n % m != 0 {
            continue;
        }
        // x^m - 1
        let mut coeffs = vec![zero.clone(); (m + 1) as usize];
        coeffs[0] = Rational::from_int(-1);
        coeffs[m as usize] = Rational::one();
        let mut poly = UniPoly::new(&zero, coeffs);
        for div in 1..m {
            if m % div == 0 {
                let phi_div = memo[div as usize].as_ref().expect("divisors precede m");
                let (q, r) = poly.div_rem(phi_div).expect("cyclotomic division is exact");
                assert!(r.is_zero(), "cyclotomic polynomials divide x^m - 1");
                poly = q;
            }
        }
        memo[m as usize] = Some(poly);
    }
    memo[n as usize].take().expect("n divides n")
}

impl CycloField {
    /// Builds `Q(zeta_n)`.  Conductor 1 is the rational field itself.
    pub fn new(conductor: u32) -> Result<Self, Error> {
        if conductor == 0 {
            return Err(Error::Assertion("conductor must be positive".into()));
        }
        let modulus = cyclotomic_polynomial(conductor);
        let degree = euler_phi(conductor as u64) as usize;
        assert_eq!(modulus.degree(), Some(degree));
        Ok(CycloField(Rc::new(FieldData {
            conductor,
            degree,
            modulus,
        })))
    }

    pub fn conductor(&self) -> u32 {
        self.0.conductor
    }

    /// Degree of the field over the rationals.
    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn modulus(&self) -> &UniPoly<Rational> {
        &self.0.modulus
    }

    pub fn zero(&self) -> CycloNum {
        CycloNum {
            field: self.clone(),
            rep: UniPoly::zero(&Rational::zero()),
        }
    }

    pub fn one(&self) -> CycloNum {
        self.from_rational(Rational::one())
    }

    pub fn from_rational(&self, value: Rational) -> CycloNum {
        CycloNum {
            field: self.clone(),
            rep: UniPoly::constant(value),
        }
    }

    pub fn from_int(&self, value: i64) -> CycloNum {
        self.from_rational(Rational::from_int(value))
    }

    /// The primitive root `zeta_n` itself.
    pub fn zeta(&self) -> CycloNum {
        self.reduce(UniPoly::monomial(Rational::one(), 1))
    }

    /// `zeta_n^k` for any integer k.
    pub fn zeta_pow(&self, k: i64) -> CycloNum {
        let n = self.0.conductor as i64;
        let k = k.rem_euclid(n) as usize;
        self.reduce(UniPoly::monomial(Rational::one(), k))
    }

    /// Interprets a polynomial in `zeta_n`, reducing modulo the minimal
    /// polynomial.
    pub fn from_unipoly(&self, rep: UniPoly<Rational>) -> CycloNum {
        self.reduce(rep)
    }

    fn reduce(&self, rep: UniPoly<Rational>) -> CycloNum {
        let rep = match rep.degree() {
            Some(d) if d >= self.0.degree => {
                let (_, r) = rep.div_rem(&self.0.modulus).expect("monic modulus");
                r
            }
            _ => rep,
        };
        CycloNum {
            field: self.clone(),
            rep,
        }
    }
}

/// An element of a cyclotomic field, stored as its reduced representative
/// polynomial in the primitive root.
#[derive(Clone, Debug)]
pub struct CycloNum {
    field: CycloField,
    rep: UniPoly<Rational>,
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.rep == other.rep
    }
}
impl Eq for CycloNum {}

impl CycloNum {
    pub fn field(&self) -> &CycloField {
        &self.field
    }

    pub fn conductor(&self) -> u32 {
        self.field.conductor()
    }

    /// Coefficients of the reduced representative, lowest power first.
    pub fn rep(&self) -> &UniPoly<Rational> {
        &self.rep
    }

    pub fn is_rational(&self) -> bool {
        self.rep.is_constant()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.rep.is_constant() {
            Some(self.rep.coeff(0))
        } else {
            None
        }
    }

    /// `Some(k)` when the element is exactly the basis power `z^k` with
    /// coefficient one and `k >= 1`; used for compact text rendering.
    pub fn unit_zeta_power(&self) -> Option<usize> {
        let mut found: Option<usize> = None;
        for (k, c) in self.rep.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if found.is_some() || k == 0 || *c != Rational::one() {
                return None;
            }
            found = Some(k);
        }
        found
    }

    fn same_field(&self, other: &Self) -> Result<(), Error> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: self.conductor(),
                right: other.conductor(),
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, Error> {
        self.same_field(other)?;
        Ok(self.add_ref(other))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, Error> {
        self.same_field(other)?;
        Ok(self.sub_ref(other))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, Error> {
        self.same_field(other)?;
        Ok(self.mul_ref(other))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, Error> {
        self.same_field(other)?;
        self.div_ref(other)
    }

    /// Integer powers, with negative exponents via the inverse.
    pub fn pow(&self, e: i64) -> Result<Self, Error> {
        let base = if e < 0 { self.inv_ref()? } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut acc = self.field.one();
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_ref(&sq);
            }
            sq = sq.mul_ref(&sq);
            exp >>= 1;
        }
        Ok(acc)
    }

    /// Multiplicative order when finite and at most `cap`; `None` otherwise.
    pub fn multiplicative_order(&self, cap: u32) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let one = self.field.one();
        let mut acc = self.clone();
        for k in 1..=cap {
            if acc == one {
                return Some(k);
            }
            acc = acc.mul_ref(self);
        }
        None
    }

    /// Plain-text rendering using `z` for the primitive root.
    pub fn to_text(&self) -> String {
        use core::fmt::Write;
        if self.rep.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        let mut first = true;
        for (k, c) in self.rep.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    out.push('-');
                }
                first = false;
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let show_coeff = k == 0 || mag != Rational::one();
            if show_coeff {
                let _ = write!(out, "{mag}");
            }
            if k > 0 {
                if show_coeff {
                    out.push('*');
                }
                out.push('z');
                if k > 1 {
                    let _ = write!(out, "^{k}");
                }
            }
        }
        out
    }
}

impl core::fmt::Display for CycloNum {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Scalar for CycloNum {
    fn zero_like(&self) -> Self {
        self.field.zero()
    }

    fn one_like(&self) -> Self {
        self.field.one()
    }

    fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    fn add_ref(&self, other: &Self) -> Self {
        debug_assert_eq!(self.field, other.field, "conductor mismatch");
        CycloNum {
            field: self.field.clone(),
            rep: self.rep.add(&other.rep),
        }
    }

    fn sub_ref(&self, other: &Self) -> Self {
        debug_assert_eq!(self.field, other.field, "conductor mismatch");
        CycloNum {
            field: self.field.clone(),
            rep: self.rep.sub(&other.rep),
        }
    }

    fn mul_ref(&self, other: &Self) -> Self {
        debug_assert_eq!(self.field, other.field, "conductor mismatch");
        self.field.reduce(self.rep.mul(&other.rep))
    }

    fn neg_ref(&self) -> Self {
        CycloNum {
            field: self.field.clone(),
            rep: self.rep.neg(),
        }
    }

    fn exact_div(&self, other: &Self) -> Option<Self> {
        self.div_ref(other).ok()
    }
}

impl FieldScalar for CycloNum {
    /// Inverse by the extended Euclidean algorithm against the minimal
    /// polynomial: the representative is coprime to it, so Bezout gives
    /// `u * rep + v * modulus = 1` and `u` is the inverse.
    fn inv_ref(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(self.field.from_rational(&Rational::one() / &q));
        }
        let modulus = self.field.modulus().clone();
        // Extended Euclid over Q[x] tracking the cofactor of `rep` only.
        let mut r0 = self.rep.clone();
        let mut r1 = modulus;
        let mut u0 = UniPoly::constant(Rational::one());
        let mut u1 = UniPoly::zero(&Rational::zero());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let u = u0.sub(&q.mul(&u1));
            r0 = r1;
            r1 = r;
            u0 = u1;
            u1 = u;
        }
        // r0 is a nonzero constant: the element and the irreducible modulus
        // are coprime.
        let c = r0
            .degree()
            .and_then(|d| if d == 0 { Some(r0.coeff(0)) } else { None })
            .ok_or_else(|| Error::Assertion("element not invertible in its field".into()))?;
        let scaled = u0.scale(&(&Rational::one() / &c));
        Ok(self.field.reduce(scaled))
    }
}
