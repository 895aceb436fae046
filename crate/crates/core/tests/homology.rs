mod common;

use std::sync::Arc;

use common::*;
use homex_core::homology::*;
use homex_core::module::{hom_space, Bimodule, FdModule};
use homex_core::Verdict;

#[test]
fn dual_numbers_simple() {
    let a = dual_numbers();
    let s = FdModule::simple(a.clone(), 0).unwrap();
    let res = minimal_resolution(&s, 20);
    assert!(!res.is_complete());
    assert_eq!(res.num_terms(), 21);
    for n in 0..21 {
        assert_eq!(res.projective(n).dim(), 2);
    }
    assert!(res.is_minimal());
    assert!(res.is_exact());
    assert_eq!(projective_dimension(&s, 20), Verdict::Inconclusive(20));

    let ext_dims = ext(&s, &s, 0..=10, 32).unwrap();
    assert!(ext_dims.dims.iter().all(|d| *d == Some(1)));
    let op = Arc::new(a.opposite());
    let s_op = FdModule::simple(op, 0).unwrap();
    let tor_dims = tor(&s_op, &s, 0..=10, 32).unwrap();
    assert!(tor_dims.dims.iter().all(|d| *d == Some(1)));
}

#[test]
fn hereditary_a4() {
    let a = a4();
    for v in 0..4 {
        let s = FdModule::simple(a.clone(), v).unwrap();
        let expect = if v == 3 { 0 } else { 1 };
        match projective_dimension(&s, 10) {
            Verdict::Certified(p) => assert_eq!(p.value, expect),
            other => panic!("{other:?}"),
        }
    }
    let s1 = FdModule::simple(a.clone(), 0).unwrap();
    let s2 = FdModule::simple(a.clone(), 1).unwrap();
    let e = ext(&s1, &s2, 0..=3, 10).unwrap();
    assert_eq!(e.dims, vec![Some(0), Some(1), Some(0), Some(0)]);
}

#[test]
fn ext_zero_is_hom() {
    let l = lambda64();
    let mods: Vec<_> = (0..2)
        .flat_map(|v| [FdModule::simple(l.clone(), v).unwrap(), FdModule::projective(l.clone(), v).unwrap()])
        .collect();
    for x in &mods {
        for y in &mods {
            let e = ext(x, y, 0..=0, 8).unwrap();
            assert_eq!(e.get(0), Some(hom_space(x, y).unwrap().len()));
        }
    }
}

#[test]
fn bimodule_resolutions() {
    // a path algebra without relations has bimodule pd 1
    let b = a4();
    let be = Arc::new(b.enveloping().unwrap());
    let env = Bimodule::regular(b.clone()).to_enveloping(be).unwrap();
    let res = minimal_resolution(&env, 8);
    assert!(res.is_exact() && res.is_minimal());
    assert_eq!(res.length(), Some(1));

    // a loop with square zero gives an infinite resolution
    let g = gamma64();
    let ge = Arc::new(g.enveloping().unwrap());
    let env = Bimodule::regular(g.clone()).to_enveloping(ge).unwrap();
    let res = minimal_resolution(&env, 6);
    assert!(res.is_exact() && res.is_minimal());
    assert_eq!(res.length(), None);
}

#[test]
fn tor_balanced_on_lambda() {
    let l = lambda64();
    let op = Arc::new(l.opposite());
    for i in 0..2 {
        for j in 0..2 {
            let y = FdModule::simple(op.clone(), i).unwrap();
            let m = FdModule::simple(l.clone(), j).unwrap();
            let a = tor(&y, &m, 0..=5, 16).unwrap();
            let b = tor_resolving_left(&y, &m, 0..=5, 16).unwrap();
            assert_eq!(a, b, "Tor({i},{j})");
        }
    }
}
