//! Exact coefficient arithmetic: rationals, cyclotomic fields, univariate
//! and sparse multivariate polynomials, and fraction-free linear algebra.

pub mod cyclotomic;
pub mod matrix;
pub mod multipoly;
pub mod rational;
pub mod roots;
pub mod traits;
pub mod unipoly;

pub use cyclotomic::{CycloField, CycloNum};
pub use matrix::ExactMatrix;
pub use multipoly::{Mono, MultiPoly};
pub use rational::Rational;
pub use traits::{FieldScalar, Scalar};
pub use unipoly::UniPoly;

/// Binomial coefficient with the convention `C(n, k) = 0` for `k < 0`,
/// `n < 0`, or `n < k`, as used by every dimension formula in this crate.
pub fn binomial(n: i64, k: i64) -> u64 {
    if k < 0 || n < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// Euler's totient by trial factorization.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "totient needs n >= 1");
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}
