//! Root extraction for binary forms over cyclotomic fields.
//!
//! Roots are searched exactly: linear factors split directly, roots of
//! unity and small rationals are tried as candidates, quadratics with
//! rational coefficients split when the discriminant is a rational square.
//! Whatever cannot be split exactly is returned as an unresolved cofactor
//! with its degree — never silently dropped.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::algebra::cyclotomic::{CycloField, CycloNum};
use crate::algebra::rational::Rational;
use crate::algebra::traits::{FieldScalar, Scalar};
use crate::algebra::unipoly::UniPoly;
use crate::error::Error;

/// Outcome of factoring a binary form of a declared degree.
///
/// A binary form `F(s, u)` of degree `d` vanishes at points `(s : u)` of
/// the projective line.  Finite roots are reported as `t` with the point
/// being `(t : 1)`; the point `(1 : 0)` accounts for the degree drop of
/// the dehomogenized polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct BinaryRootReport {
    /// Finite roots `(t, multiplicity)`, in discovery order.
    pub finite: Vec<(CycloNum, usize)>,
    /// Multiplicity of the root at infinity `(1 : 0)`.
    pub infinity: usize,
    /// Monic cofactor (degree at least two) whose roots do not lie in the
    /// working field or were not found by the exact searches.
    pub unresolved: Option<UniPoly<CycloNum>>,
}

impl BinaryRootReport {
    /// Total multiplicity accounted for, including the unresolved part.
    pub fn total_degree(&self) -> usize {
        let found: usize = self.finite.iter().map(|(_, m)| m).sum();
        let open = self
            .unresolved
            .as_ref()
            .and_then(UniPoly::degree)
            .unwrap_or(0);
        found + self.infinity + open
    }
}

/// Divisors of `|n|` when `|n|` is small enough to enumerate; `None` for
/// zero or for magnitudes past the cap.
fn small_divisors(n: &BigInt) -> Option<Vec<i64>> {
    if n.is_zero() {
        return None;
    }
    let n = n.abs().to_i64().filter(|&v| v <= 1_000_000_000)?;
    let mut divs = Vec::new();
    let mut i = 1i64;
    while i * i <= n {
        if n % i == 0 {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    Some(divs)
}

fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let num = q.numer();
    let den = q.denom();
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &sn * &sn == *num && &sd * &sd == *den {
        Some(Rational::from_big(sn, sd).expect("square root of positive denominator"))
    } else {
        None
    }
}

/// Rational root candidates by the rational root theorem, for polynomials
/// with all-rational coefficients; `None` when coefficients are irrational
/// or the bound blow-up makes enumeration pointless.
fn rational_candidates(field: &CycloField, p: &UniPoly<CycloNum>) -> Option<Vec<CycloNum>> {
    let rationals: Option<Vec<Rational>> =
        p.coeffs().iter().map(CycloNum::as_rational).collect();
    let rationals = rationals?;
    // clear denominators
    let lcm = crate::algebra::rational::denominator_lcm(&rationals);
    let ints: Vec<BigInt> = rationals
        .iter()
        .map(|q| q.numer() * (&lcm / q.denom()))
        .collect();
    let c0 = ints.first()?;
    let cl = ints.last()?;
    let num_divs = small_divisors(c0)?;
    let den_divs = small_divisors(cl)?;
    let mut out = Vec::new();
    for &p_ in &num_divs {
        for &q_ in &den_divs {
            if num_integer::gcd(p_, q_) != 1 {
                continue;
            }
            let r = Rational::new(p_, q_).expect("nonzero divisor");
            out.push(field.from_rational(r.clone()));
            out.push(field.from_rational(Rational::zero() - r));
        }
    }
    Some(out)
}

/// Tries to split a monic rational quadratic by its discriminant.
fn quadratic_roots(field: &CycloField, p: &UniPoly<CycloNum>) -> Option<(CycloNum, CycloNum)> {
    debug_assert_eq!(p.degree(), Some(2));
    let b = p.coeff(1).as_rational()?;
    let c = p.coeff(0).as_rational()?;
    let disc = b.mul_ref(&b).sub_ref(&c.mul_ref(&Rational::from_int(4)));
    let s = rational_sqrt(&disc)?;
    let half = Rational::new(1, 2).expect("two is nonzero");
    let r1 = (s.sub_ref(&b)).mul_ref(&half);
    let r2 = (Rational::zero().sub_ref(&s).sub_ref(&b)).mul_ref(&half);
    Some((field.from_rational(r1), field.from_rational(r2)))
}

/// Finds one root of `p` in the field, or `None`.
fn find_one_root(field: &CycloField, p: &UniPoly<CycloNum>) -> Option<CycloNum> {
    let deg = p.degree()?;
    if deg == 1 {
        // monic after scaling: root = -c0 / c1
        let c1 = p.coeff(1);
        let c0 = p.coeff(0);
        return Some(c0.neg_ref().div_ref(&c1).ok()?);
    }
    // roots of unity and their negatives
    let n = field.conductor() as i64;
    for k in 0..n {
        let z = field.zeta_pow(k);
        if p.eval(&z).is_zero() {
            return Some(z);
        }
        let nz = z.neg_ref();
        if p.eval(&nz).is_zero() {
            return Some(nz);
        }
    }
    if let Some(cands) = rational_candidates(field, p) {
        for c in cands {
            if p.eval(&c).is_zero() {
                return Some(c);
            }
        }
    }
    if deg == 2 {
        let monic = p.monic().ok()?;
        if let Some((r1, _)) = quadratic_roots(field, &monic) {
            if p.eval(&r1).is_zero() {
                return Some(r1);
            }
        }
    }
    None
}

/// Factors the binary form with coefficient `coeffs[k]` on `s^k u^(d-k)`.
/// Missing trailing coefficients are zeros.  The all-zero form is an
/// error: it does not cut out finitely many points.
pub fn binary_form_roots(
    field: &CycloField,
    coeffs: &[CycloNum],
    degree: usize,
) -> Result<BinaryRootReport, Error> {
    if coeffs.len() > degree + 1 {
        return Err(Error::WrongDegree {
            expected: degree,
            found: coeffs.len() - 1,
        });
    }
    let p = UniPoly::new(&field.zero(), coeffs.to_vec());
    let Some(actual) = p.degree() else {
        return Err(Error::ZeroPolynomial);
    };
    let infinity = degree - actual;
    let mut report = BinaryRootReport {
        finite: Vec::new(),
        infinity,
        unresolved: None,
    };
    let mut rem = p;
    // strip roots at zero first
    let mut zero_mult = 0;
    while rem.degree().is_some() && rem.coeff(0).is_zero() {
        let t = UniPoly::monomial(field.one(), 1);
        rem = rem.exact_div(&t).expect("s divides a form without constant term");
        zero_mult += 1;
    }
    if zero_mult > 0 {
        report.finite.push((field.zero(), zero_mult));
    }
    while rem.degree().map_or(false, |d| d >= 1) {
        let Some(root) = find_one_root(field, &rem) else {
            report.unresolved = Some(rem.monic()?);
            break;
        };
        let factor = UniPoly::new(&field.zero(), vec![root.neg_ref(), field.one()]);
        let mut mult = 0;
        while let Some(q) = rem.exact_div(&factor) {
            rem = q;
            mult += 1;
        }
        debug_assert!(mult > 0);
        report.finite.push((root, mult));
    }
    debug_assert_eq!(report.total_degree(), degree);
    Ok(report)
}
