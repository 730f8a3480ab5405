//! Deterministic seeded randomness for probes and sample generation.
//!
//! Every randomized search in the crate draws from this wrapper, so a
//! fixed seed reproduces runs bit for bit.

use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::algebra::cyclotomic::{CycloField, CycloNum};
use crate::algebra::rational::Rational;
use crate::algebra::traits::Scalar;

/// Seeded deterministic generator.
pub struct DetRng(ChaCha8Rng);

impl DetRng {
    pub fn new(seed: u64) -> Self {
        DetRng(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform-ish integer in `lo..=hi` (modulo bias is irrelevant for
    /// probe points).
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        debug_assert!(lo <= hi);
        let span = (hi - lo + 1) as u64;
        lo + (self.next_u64() % span) as i64
    }

    /// Nonzero integer in `-bound..=bound`.
    pub fn nonzero_int(&mut self, bound: i64) -> i64 {
        loop {
            let v = self.int_in(-bound, bound);
            if v != 0 {
                return v;
            }
        }
    }

    /// Small rational with numerator and denominator up to `bound`.
    pub fn rational(&mut self, bound: i64) -> Rational {
        let num = self.int_in(-bound, bound);
        let den = self.int_in(1, bound);
        Rational::new(num, den).expect("positive denominator")
    }

    /// Field element with small integer coordinates in the power basis.
    pub fn cyclo(&mut self, field: &CycloField, bound: i64) -> CycloNum {
        let mut acc = field.zero();
        for k in 0..field.degree() {
            let c = field.from_int(self.int_in(-bound, bound));
            acc = acc.add_ref(&c.mul_ref(&field.zeta_pow(k as i64)));
        }
        acc
    }

    /// Vector of small integer field elements, not all zero.
    pub fn nonzero_int_vector(&mut self, field: &CycloField, len: usize, bound: i64) -> Vec<CycloNum> {
        loop {
            let v: Vec<CycloNum> = (0..len)
                .map(|_| field.from_int(self.int_in(-bound, bound)))
                .collect();
            if v.iter().any(|c| !c.is_zero()) {
                return v;
            }
        }
    }
}
