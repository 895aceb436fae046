mod common;

use std::sync::Arc;

use common::*;
use homex_core::error::GorensteinError;
use homex_core::gorenstein::*;
use homex_core::homology::{ext, projective_dimension, syzygy, tor};
use homex_core::module::{Bimodule, FdModule};
use homex_core::Verdict;

#[test]
fn dual_numbers_suite() {
    let a = dual_numbers();
    assert_eq!(gorenstein_check(&a, 8), Verdict::Certified((0, 0)));
    let s = FdModule::simple(a.clone(), 0).unwrap();
    let reg = FdModule::regular(a.clone());
    for x in [&s, &reg] {
        let w = gproj_check(x, 6);
        assert!(w.is_certified(), "{:?}", w.verdict());
        assert!(perp_check(x, 6).is_certified());
    }
    let op = Arc::new(a.opposite());
    let s_op = FdModule::simple(op, 0).unwrap();
    let t = tor(&s_op, &s, 0..=10, 32).unwrap();
    let e = ext(&s, &s, 0..=10, 32).unwrap();
    assert_eq!(t.dims, vec![Some(1); 11]);
    assert_eq!(e.dims, vec![Some(1); 11]);

    assert_eq!(gproj_perp_check(&s, std::slice::from_ref(&s), 4).unwrap(), Verdict::Refuted((0, 1)));
    assert_eq!(gproj_perp_check(&s, &[], 4).unwrap(), Verdict::Certified(()));
    assert!(gproj_perp_check(&reg, std::slice::from_ref(&s), 4).unwrap().is_certified());
}

#[test]
fn a4_suite() {
    let a = a4();
    match gorenstein_check(&a, 8) {
        Verdict::Certified((l, r)) => assert!(l <= 1 && r <= 1),
        other => panic!("{other:?}"),
    }
    for v in 0..4 {
        let s = FdModule::simple(a.clone(), v).unwrap();
        let proj = matches!(projective_dimension(&s, 8), Verdict::Certified(p) if p.value == 0);
        assert_eq!(gproj_check(&s, 4).is_certified(), proj, "vertex {v}");
        let p = FdModule::projective(a.clone(), v).unwrap();
        assert!(gproj_check(&p, 4).is_certified());
    }
    let s1 = FdModule::simple(a.clone(), 0).unwrap();
    let s2 = FdModule::simple(a.clone(), 1).unwrap();
    assert_eq!(ext(&s1, &s2, 1..=1, 8).unwrap().get(1), Some(1));
    assert_eq!(perp_check(&s1, 4), Verdict::Refuted(1));
    assert!(gproj_check(&FdModule::zero(a.clone()), 3).is_certified());

    let err = gproj_perp_check(&s2, std::slice::from_ref(&s1), 3).unwrap_err();
    assert_eq!(err, GorensteinError::TestsetNotCertified(0));
}

#[test]
fn lambda_gorenstein_and_syzygy_closure() {
    let a = lambda64();
    let v = gorenstein_check(&a, 10);
    assert!(!v.is_refuted());
    for s in FdModule::simples(&a) {
        let om = syzygy(&s, 1);
        if gproj_check(&s, 4).is_certified() {
            assert!(gproj_check(&om, 4).is_certified());
            assert!(perp_check(&s, 4).status() != homex_core::Status::Refuted);
        }
    }
}

#[test]
fn omega_condition() {
    let a = dual_numbers();
    let reg = Bimodule::regular(a.clone());
    let s = FdModule::simple(a.clone(), 0).unwrap();
    assert!(omega_condition_check(&reg, 0, std::slice::from_ref(&s), 4).is_certified());
    assert!(omega_condition_check(&reg, 2, &[s], 4).is_certified());
    assert!(omega_condition_check(&reg, 0, &[], 4).is_certified());

    let b = a4();
    let breg = Bimodule::regular(b.clone());
    let s1 = FdModule::simple(b.clone(), 0).unwrap();
    assert_eq!(omega_condition_check(&breg, 0, std::slice::from_ref(&s1), 4), Verdict::Refuted((0, 1)));
    assert!(omega_condition_check(&breg, 1, &[s1], 4).is_certified());
}

#[test]
fn smt_certificates() {
    for a in [ground(), dual_numbers(), a4(), gamma64()] {
        let reg = Bimodule::regular(a.clone());
        let v = smt_level_verify(&a, &a, &reg, &reg, 0, 5).unwrap();
        assert!(v.is_certified(), "{v:?}");
    }
    let a = a4();
    let op = Arc::new(a.opposite());
    let m = Bimodule::outer(&FdModule::simple(a.clone(), 0).unwrap(), &FdModule::simple(op, 0).unwrap(), a.clone())
        .unwrap();
    assert_eq!(smt_level_verify(&a, &a, &m, &m, 0, 5).unwrap(), Verdict::Refuted(SmtClause::MLeft));

    // over k[x]/x^2, Omega^2 of A over A^e is A again and Omega^1 is not
    let d = dual_numbers();
    let reg = Bimodule::regular(d.clone());
    let l2 = smt_level_verify(&d, &d, &reg, &reg, 2, 5).unwrap();
    assert!(l2.is_certified(), "{l2:?}");
    let l1 = smt_level_verify(&d, &d, &reg, &reg, 1, 5).unwrap();
    assert!(l1.is_refuted(), "{l1:?}");
}
