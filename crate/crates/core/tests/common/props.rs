//! Property bodies shared by the property tests and the acceptance report.
//! Each entry point runs `cases` random cases from a fixed seed.

use std::fmt::Debug;
use std::sync::Arc;

use homex_core::algebra::AlgebraTable;
use homex_core::extensions::*;
use homex_core::homology::{minimal_resolution, tor, tor_resolving_left};
use homex_core::{Field, Mat, PrimeField, Rationals, Status};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed, TestRunner};

use super::random::*;

pub const SEED: u64 = 0x5eed;

pub fn config(cases: u32) -> Config {
    Config { cases, rng_seed: RngSeed::Fixed(SEED), failure_persistence: None, ..Config::default() }
}

pub fn run<S>(cases: u32, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String>
where
    S: Strategy,
    S::Value: Debug,
{
    TestRunner::new(config(cases)).run(&strategy, test).map_err(|e| e.to_string())
}

fn matrix<K: Field>(field: K, rows: usize, cols: usize, entries: &[i64]) -> Mat<K> {
    let mut m = Mat::zeros(&field, rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            m.set(r, c, field.from_i64(entries[(r * cols + c) % entries.len()] * ((r + 2 * c) as i64 % 3 - 1)));
        }
    }
    m
}

fn check_rank_nullity<K: Field>(m: &Mat<K>) {
    let k = m.kernel_basis();
    assert_eq!(m.rank() + k.cols(), m.cols());
    assert!(m.mul(&k).is_zero());
    assert_eq!(k.rank(), k.cols());
    assert_eq!(m.transpose().rank(), m.rank());
}

/// Associativity on all basis triples, orthogonal idempotents summing to
/// the unit.
pub fn check_axioms<K: Field>(a: &AlgebraTable<K>) {
    let d = a.dim();
    let f = a.field();
    for i in 0..d {
        for j in 0..d {
            let ij = a.mul(&a.basis_vector(i), &a.basis_vector(j));
            for k in 0..d {
                let bk = a.basis_vector(k);
                assert_eq!(a.mul(&ij, &bk), a.mul(&a.basis_vector(i), &a.mul(&a.basis_vector(j), &bk)));
            }
        }
    }
    let mut sum = vec![f.zero(); d];
    for (s, e) in a.idempotents().iter().enumerate() {
        sum = homex_core::arith::add_vec(f, &sum, e);
        for (t, e2) in a.idempotents().iter().enumerate() {
            let p = a.mul(e, e2);
            if s == t {
                assert_eq!(&p, e);
            } else {
                assert!(p.iter().all(|x| f.is_zero(x)));
            }
        }
    }
    assert_eq!(sum, a.unit());
    for x in 0..d {
        assert_eq!(a.mul(a.unit(), &a.basis_vector(x)), a.basis_vector(x));
    }
}

pub fn rank_nullity(cases: u32) -> Result<(), String> {
    let s = (1..=8usize, 1..=8usize, proptest::collection::vec(-3i64..=3, 1..16));
    run(cases, s, |(rows, cols, entries)| {
        check_rank_nullity(&matrix(Rationals, rows, cols, &entries));
        check_rank_nullity(&matrix(PrimeField::new(7).unwrap(), rows, cols, &entries));
        Ok(())
    })
}

pub fn constructor_axioms(cases: u32) -> Result<(), String> {
    let s = (quiver_spec(3, 3, false), quiver_spec(2, 2, false), any::<u64>());
    run(cases, s, |(spec, spec2, seed)| {
        let a = q_spec_algebra(&spec, 8);
        let b = q_spec_algebra(&spec2, 4);
        check_axioms(&a);
        check_axioms(&a.opposite());
        check_axioms(&a.product(&b));
        if a.dim() * b.dim() <= 24 {
            check_axioms(&a.tensor(&b).unwrap());
        }
        if a.dim() <= 4 {
            check_axioms(&a.enveloping().unwrap());
        }
        let env = Arc::new(b.enveloping().unwrap());
        let m = random_bimodule(&b, &env, seed, 4);
        let e = trivial_extension(b.clone(), &m).unwrap();
        check_axioms(e.big());
        prop_assert_eq!(e.big().dim(), b.dim() + m.dim());
        Ok(())
    })
}

pub fn resolution_minimality(cases: u32) -> Result<(), String> {
    run(cases, (quiver_spec(3, 3, false), any::<u64>()), |(spec, seed)| {
        let a = q_spec_algebra(&spec, 8);
        let m = random_module(&a, seed, 8);
        let res = minimal_resolution(&m, 4);
        prop_assert!(res.is_minimal());
        prop_assert!(res.is_exact());
        Ok(())
    })
}

pub fn tor_balance(cases: u32) -> Result<(), String> {
    run(cases, (quiver_spec(3, 3, false), any::<u64>(), any::<u64>()), |(spec, s1, s2)| {
        let a = q_spec_algebra(&spec, 8);
        let op = Arc::new(a.opposite());
        let m = random_module(&a, s1, 6);
        let y = random_module(&op, s2, 6);
        let r = tor(&y, &m, 0..=3, 8).unwrap();
        let l = tor_resolving_left(&y, &m, 0..=3, 8).unwrap();
        for n in 0..=3 {
            if let (Some(x), Some(z)) = (r.get(n), l.get(n)) {
                prop_assert_eq!(x, z, "degree {}", n);
            }
        }
        Ok(())
    })
}

pub fn tor_side_symmetry(cases: u32) -> Result<(), String> {
    run(cases, (quiver_spec(2, 2, false), any::<u64>()), |(spec, seed)| {
        let b = q_spec_algebra(&spec, 5);
        let env = Arc::new(b.enveloping().unwrap());
        let m = random_bimodule(&b, &env, seed, 4);
        let e = trivial_extension(b, &m).unwrap();
        let cfg = BoundedConfig { nil_cap: 4, pd_cutoff: 6, tor_side: TorSide::Left };
        let left = check_bounded(&e, cfg);
        let right = check_bounded(&e, BoundedConfig { tor_side: TorSide::Right, ..cfg });
        prop_assert_eq!(left.status(), right.status());
        Ok(())
    })
}

pub fn cutoff_monotonicity(cases: u32) -> Result<(), String> {
    let s = (quiver_spec(2, 2, false), any::<u64>(), 1..=3usize, 1..=4usize);
    run(cases, s, |(spec, seed, nil, pd)| {
        let b = q_spec_algebra(&spec, 5);
        let env = Arc::new(b.enveloping().unwrap());
        let m = random_bimodule(&b, &env, seed, 4);
        let e = trivial_extension(b, &m).unwrap();
        let small = check_bounded(&e, BoundedConfig { nil_cap: nil, pd_cutoff: pd, tor_side: TorSide::Left });
        let big = check_bounded(&e, BoundedConfig { nil_cap: nil + 2, pd_cutoff: pd + 4, tor_side: TorSide::Left });
        if small.status() != Status::Inconclusive {
            prop_assert_eq!(small.status(), big.status());
            prop_assert_eq!(small.p(), big.p());
        }
        Ok(())
    })
}

/// Trivial extensions by `B e_i ⊗ e_j B` on acyclic quivers.
pub fn consequences_on_projective_bimodules(cases: u32) -> Result<(), String> {
    run(cases, (quiver_spec(3, 3, true), any::<u64>()), |(spec, pick)| {
        let b = q_spec_algebra(&spec, 5);
        let n = b.num_vertices();
        // paths only go from lower to higher vertices, so e_j B e_i = 0 for i > j
        let m = if n < 2 {
            projective_bimodule(&b, 0, 0)
        } else {
            let i = 1 + (pick as usize) % (n - 1);
            let j = (pick as usize / 7) % i;
            projective_bimodule(&b, i, j)
        };
        let e = trivial_extension(b, &m).unwrap();
        let r = check_bounded(&e, BoundedConfig::default());
        if n >= 2 {
            prop_assert!(r.overall.is_certified(), "{:?}", r.overall);
            prop_assert_eq!(r.bimodule_pd.certified().copied(), Some(0));
        }
        if r.overall.is_certified() {
            prop_assert!(verify_tor_consequences(&e, &r, 16).is_certified());
            prop_assert!(verify_sandwich_pd(&e, &r, 16).is_certified());
            prop_assert!(relative_bar_exactness(&e, &r).unwrap().is_certified());
        }
        Ok(())
    })
}
