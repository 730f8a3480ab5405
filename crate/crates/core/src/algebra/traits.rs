//! Coefficient abstractions used by the polynomial and matrix kernels.
//!
//! Elements of `Q(zeta_n)` only make sense relative to their field, so the
//! traits are *exemplar based*: `zero_like`/`one_like` derive constants from
//! an existing value instead of a nullary constructor.  This lets one
//! generic kernel serve `Q`, `Q(zeta_n)`, and polynomial rings over either.

use crate::error::Error;

/// An element of a commutative integral domain with exact arithmetic.
pub trait Scalar: Clone + PartialEq + core::fmt::Debug {
    /// The additive identity of the ring this value belongs to.
    fn zero_like(&self) -> Self;
    /// The multiplicative identity of the ring this value belongs to.
    fn one_like(&self) -> Self;
    /// Whether this value is the additive identity.
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Exact division: returns `Some(q)` with `q * other == self` when such
    /// a `q` exists in the ring, `None` otherwise (including `other == 0`).
    fn exact_div(&self, other: &Self) -> Option<Self>;
}

/// A [`Scalar`] whose nonzero elements are invertible.
pub trait FieldScalar: Scalar {
    /// Multiplicative inverse; fails with `DivisionByZero` on zero.
    fn inv_ref(&self) -> Result<Self, Error>;

    /// Exact quotient `self / other`; fails with `DivisionByZero` on zero.
    fn div_ref(&self, other: &Self) -> Result<Self, Error> {
        Ok(self.mul_ref(&other.inv_ref()?))
    }
}
