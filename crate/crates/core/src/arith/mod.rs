//! Exact arithmetic: rationals, prime fields and dense linear algebra.

mod field;
mod mat;
mod rational;

pub use field::{Field, PrimeField, Rationals};
pub use mat::{Echelon, Mat, Rref};
pub use rational::Rational;

use alloc::vec::Vec;

pub fn unit_vector<K: Field>(field: &K, n: usize, i: usize) -> Vec<K::Elem> {
    let mut v = alloc::vec![field.zero(); n];
    v[i] = field.one();
    v
}

pub fn is_zero_vec<K: Field>(field: &K, v: &[K::Elem]) -> bool {
    v.iter().all(|x| field.is_zero(x))
}

pub fn add_vec<K: Field>(field: &K, a: &[K::Elem], b: &[K::Elem]) -> Vec<K::Elem> {
    a.iter().zip(b).map(|(x, y)| field.add(x, y)).collect()
}

pub fn scale_vec<K: Field>(field: &K, c: &K::Elem, a: &[K::Elem]) -> Vec<K::Elem> {
    a.iter().map(|x| field.mul(c, x)).collect()
}

/// `acc += c * v`.
pub fn axpy<K: Field>(field: &K, acc: &mut [K::Elem], c: &K::Elem, v: &[K::Elem]) {
    if field.is_zero(c) {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        field.add_mul_assign(a, c, x);
    }
}

/// Kronecker product of two vectors.
pub fn kron_vec<K: Field>(field: &K, a: &[K::Elem], b: &[K::Elem]) -> Vec<K::Elem> {
    let mut out = alloc::vec![field.zero(); a.len() * b.len()];
    for (i, x) in a.iter().enumerate() {
        if field.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i * b.len() + j] = field.mul(x, y);
        }
    }
    out
}
