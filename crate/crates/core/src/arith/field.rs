//! Coefficient fields.

use alloc::format;
use alloc::string::{String, ToString};
use core::fmt::Debug;
use core::hash::Hash;

use rand_core::RngCore;

use super::rational::Rational;
use crate::error::ArithError;

/// A field with explicit element operations.
///
/// Elements are plain values; the field object carries any parameters
/// (such as the prime for `F_p`).
pub trait Field: Clone + Debug + PartialEq + Eq + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync + 'static;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn characteristic(&self) -> u64;
    /// `Q` or `F<p>`.
    fn name(&self) -> String;
    fn parse_elem(&self, s: &str) -> Option<Self::Elem>;
    fn format_elem(&self, a: &Self::Elem) -> String;
    /// A random element; over `Q` an integer in `[-range, range]`.
    fn random_elem(&self, rng: &mut dyn RngCore, range: u64) -> Self::Elem;
    /// Smaller is simpler; used for pivot choice only.
    fn height(&self, _a: &Self::Elem) -> u64 {
        0
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    /// `acc += a * b`.
    fn add_mul_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        if self.is_zero(a) || self.is_zero(b) {
            return;
        }
        *acc = self.add(acc, &self.mul(a, b));
    }
}

/// The field of rational numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::ZERO
    }
    fn one(&self) -> Rational {
        Rational::ONE
    }
    fn from_i64(&self, v: i64) -> Rational {
        Rational::from_int(v)
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a.add(b)
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a.sub(b)
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a.mul(b)
    }
    fn neg(&self, a: &Rational) -> Rational {
        a.neg()
    }
    fn inv(&self, a: &Rational) -> Option<Rational> {
        a.inv()
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &Rational) -> bool {
        a.is_one()
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn name(&self) -> String {
        "Q".to_string()
    }
    fn parse_elem(&self, s: &str) -> Option<Rational> {
        Rational::parse(s)
    }
    fn format_elem(&self, a: &Rational) -> String {
        a.to_string()
    }
    fn random_elem(&self, rng: &mut dyn RngCore, range: u64) -> Rational {
        let span = 2 * range + 1;
        let v = (rng.next_u64() % span) as i64 - range as i64;
        Rational::from_int(v)
    }
    fn height(&self, a: &Rational) -> u64 {
        a.height()
    }
}

/// The prime field `F_q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    q: u64,
}

impl PrimeField {
    /// Accepts primes below `2^31`.
    pub fn new(q: u64) -> Result<Self, ArithError> {
        if !(2..1 << 31).contains(&q) || !is_prime(q) {
            return Err(ArithError::NotPrime(q));
        }
        Ok(PrimeField { q })
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut r = 1u64;
        b %= self.q;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % self.q;
            }
            b = b * b % self.q;
            e >>= 1;
        }
        r
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.q as i64) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.q
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.q - b) % self.q
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.q
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.q - a) % self.q
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(*a, self.q - 2))
        }
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn characteristic(&self) -> u64 {
        self.q
    }
    fn name(&self) -> String {
        format!("F{}", self.q)
    }
    fn parse_elem(&self, s: &str) -> Option<u64> {
        let r = Rational::parse(s)?;
        let b = r.to_big();
        let q = num_bigint::BigInt::from(self.q);
        let n = (b.numer() % &q + &q) % &q;
        let d = (b.denom() % &q + &q) % &q;
        let n: u64 = num_traits::ToPrimitive::to_u64(&n)?;
        let d: u64 = num_traits::ToPrimitive::to_u64(&d)?;
        self.div(&n, &d)
    }
    fn format_elem(&self, a: &u64) -> String {
        a.to_string()
    }
    fn random_elem(&self, rng: &mut dyn RngCore, _range: u64) -> u64 {
        rng.next_u64() % self.q
    }
    fn add_mul_assign(&self, acc: &mut u64, a: &u64, b: &u64) {
        *acc = (*acc + a * b) % self.q;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_inverse() {
        let f = PrimeField::new(7).unwrap();
        for a in 1..7 {
            assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
        }
        assert_eq!(f.parse_elem("1/2"), Some(4));
        assert_eq!(f.parse_elem("-1"), Some(6));
        assert_eq!(f.parse_elem("1/7"), None);
        assert!(PrimeField::new(9).is_err());
    }
}
