mod common;

use std::sync::Arc;

use common::*;
use homex_core::extensions::*;
use homex_core::homology::{projective_cover, syzygy};
use homex_core::module::{random_iso_test, Bimodule, FdModule};
use homex_core::{Field, Mat, Rationals, Status, Verdict};

fn example64() -> Extension<Rationals> {
    let (l, g) = (lambda64(), gamma64());
    let emb = embedding_by_names(&g, &l).unwrap();
    make_extension(g, l, emb, None).unwrap()
}

fn example24() -> Extension<Rationals> {
    let b = a4();
    let op = Arc::new(b.opposite());
    let s3 = FdModule::simple(b.clone(), 2).unwrap();
    let t2 = FdModule::simple(op, 1).unwrap();
    let m = Bimodule::outer(&s3, &t2, b.clone()).unwrap();
    trivial_extension(b, &m).unwrap()
}

#[test]
fn example64_structure() {
    let e = example64();
    assert!(e.is_split());
    assert_eq!(e.quotient_dim(), 4);
    let m = e.quotient_bimodule().module;
    let g = e.small().clone();
    let p1 = FdModule::projective(g.clone(), 0).unwrap();
    assert!(random_iso_test(&m.left_module(), &p1, 20, 7).unwrap().is_certified());

    let op = Arc::new(g.opposite());
    let top = FdModule::simple(op.clone(), 1).unwrap();
    let four = FdModule::direct_sum(op.clone(), &[top.clone(), top.clone(), top.clone(), top]);
    assert!(random_iso_test(&m.right_module(op).unwrap(), &four, 20, 7).unwrap().is_certified());

    let (model, iso) = split_model(&e).unwrap();
    assert!(iso);
    assert_eq!(model.big().dim(), 9);
}

#[test]
fn example64_bounded() {
    let e = example64();
    let r = check_bounded(&e, BoundedConfig::default());
    assert_eq!(r.power_dims, vec![4, 0]);
    assert_eq!(r.nilpotency, Verdict::Certified(2));
    assert_eq!(r.bimodule_pd, Verdict::Certified(1));
    assert!(r.tor_table.iter().flatten().all(|d| *d == Some(0)));
    assert_eq!(r.overall, Verdict::Certified(BoundedWitness { p: 2, bimodule_pd: 1 }));
    let r2 = check_bounded(&e, BoundedConfig { tor_side: TorSide::Right, ..Default::default() });
    assert_eq!(r2.overall, r.overall);

    assert!(verify_tor_consequences(&e, &r, 16).is_certified());
    assert!(verify_sandwich_pd(&e, &r, 16).is_certified());
    assert!(relative_bar_exactness(&e, &r).unwrap().is_certified());
    let pairs = simple_pairs(e.big());
    assert!(ehi_dimension_test(&e, &r, &pairs, 5).is_certified());
}

#[test]
fn example64_syzygy_over_enveloping() {
    let e = example64();
    let g = e.small().clone();
    let env = Arc::new(g.enveloping().unwrap());
    let m = e.quotient_bimodule().module.to_enveloping(env.clone()).unwrap();
    let (verts, _, _) = projective_cover(&m);
    // vertex (s, t) of the enveloping algebra has index s * 2 + t
    assert_eq!(verts, vec![1]);
    let om = syzygy(&m, 1);
    let p = FdModule::projective(env, 0).unwrap();
    assert!(random_iso_test(&om, &p, 20, 1).unwrap().is_certified());
}

#[test]
fn example24_bounded() {
    let e = example24();
    assert_eq!(e.small().dim(), 10);
    assert_eq!(e.big().dim(), 11);
    let r = check_bounded(&e, BoundedConfig::default());
    assert_eq!(r.power_dims, vec![1, 0]);
    assert_eq!(r.overall, Verdict::Certified(BoundedWitness { p: 2, bimodule_pd: 2 }));
    let m = e.quotient_bimodule().module;
    let op = Arc::new(e.small().opposite());
    for side in [m.left_module(), m.right_module(op).unwrap()] {
        let (_, cover, _) = projective_cover(&side);
        assert!(cover.dim() > side.dim());
    }
    assert!(verify_tor_consequences(&e, &r, 16).is_certified());
    assert!(verify_sandwich_pd(&e, &r, 16).is_certified());
    assert!(relative_bar_exactness(&e, &r).unwrap().is_certified());
    assert!(ehi_dimension_test(&e, &r, &simple_pairs(e.big()), 5).is_certified());
}

#[test]
fn identity_extension() {
    let e = Extension::identity(lambda64());
    assert_eq!(e.quotient_dim(), 0);
    let r = check_bounded(&e, BoundedConfig::default());
    assert_eq!(r.nilpotency, Verdict::Certified(1));
    assert!(r.tor_table.is_empty());
    assert!(r.overall.is_certified());
    assert!(verify_tor_consequences(&e, &r, 8).is_certified());
    assert_eq!(verify_sandwich_pd(&e, &r, 8), Verdict::Certified(vec![]));
    assert!(relative_bar_exactness(&e, &r).unwrap().is_certified());
    assert!(ehi_dimension_test(&e, &r, &simple_pairs(e.big()), 3).is_certified());
}

#[test]
fn bad_embeddings() {
    let (l, g) = (lambda64(), gamma64());
    let mut emb = embedding_by_names(&g, &l).unwrap();
    let c = emb.get(2, 2).clone();
    emb.set(2, 2, Rationals.add(&c, &Rationals.one()));
    let err = make_extension(g.clone(), l.clone(), emb, None).unwrap_err();
    assert!(matches!(err, homex_core::error::ExtensionError::NotMultiplicative(..)), "{err:?}");
    let zero = Mat::zeros(&Rationals, 9, 5);
    assert!(make_extension(g, l, zero, None).is_err());
}

#[test]
fn arrow_removal_kronecker() {
    let p = presentation(Rationals, &["1", "2"], &[("alpha", "1", "2"), ("delta", "1", "2")], &[]);
    let r = arrow_removal(&p, "alpha", BoundedConfig::default()).unwrap();
    assert_eq!(r.small.dim(), 3);
    assert_eq!(r.extension.quotient_dim(), 1);
    assert_eq!(r.report.bimodule_pd, Verdict::Certified(0));
    assert_eq!(r.report.nilpotency, Verdict::Certified(2));
    assert_eq!(r.report.status(), Status::Certified);
    assert!(r.model_isomorphic && r.square_zero);
}

#[test]
fn arrow_removal_errors_and_a4() {
    let p = presentation(
        Rationals,
        &["1", "2"],
        &[("gamma", "1", "1"), ("beta", "1", "2"), ("alpha", "2", "1")],
        &[&[(1, "gamma*gamma")], &[(1, "alpha*beta")]],
    );
    let err = arrow_removal(&p, "alpha", BoundedConfig::default()).unwrap_err();
    assert_eq!(err, homex_core::error::ExtensionError::ArrowInRelations("alpha".into()));

    let p = presentation(
        Rationals,
        &["1", "2", "3", "4"],
        &[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "4")],
        &[],
    );
    let r = arrow_removal(&p, "b", BoundedConfig::default()).unwrap();
    assert_eq!(r.small.dim(), 6);
    assert_eq!(r.extension.quotient_dim(), 4);
    assert_eq!(r.report.bimodule_pd, Verdict::Certified(0));
    assert!(r.report.overall.is_certified());
}

#[test]
fn triangular_examples() {
    let (l, g) = (a4(), dual_numbers());
    let op = Arc::new(l.opposite());
    let x = FdModule::projective(g.clone(), 0).unwrap();
    let y = FdModule::simple(op, 0).unwrap();
    let w = Bimodule::outer(&x, &y, l.clone()).unwrap();
    let t = triangular_algebra(l.clone(), g.clone(), &w).unwrap();
    assert_eq!(t.algebra.dim(), 10 + 2 + 2);
    assert!(t.trivial_model_isomorphic);
    let r = check_bounded(&t.extension, BoundedConfig::default());
    assert_eq!(r.nilpotency, Verdict::Certified(2));
    assert!(r.overall.is_certified(), "{:?}", r.overall);

    let zero = Bimodule::outer(&FdModule::zero(g.clone()), &y, l.clone()).unwrap();
    let t0 = triangular_algebra(l.clone(), g.clone(), &zero).unwrap();
    let prod = l.product(&g);
    assert!(t0.algebra.is_isomorphism(&prod, &Mat::identity(&Rationals, 12)) || t0.trivial_model_isomorphic);
}

#[test]
fn split_product_checks() {
    let b = ground();
    let k = FdModule::simple(b.clone(), 0).unwrap();
    let two = FdModule::direct_sum(b.clone(), &[k.clone(), k.clone()]);
    let m = Bimodule::from_left(&two);
    let m = m.rebase(b.clone(), b.clone()).unwrap();
    // m0 m0 = m1, everything else zero: k[x]/x^3 over k
    let mut pr = Mat::zeros(&Rationals, 2, 4);
    pr.set(1, 0, Rationals.one());
    let e = split_extension(b.clone(), &m, &pr).unwrap();
    assert_eq!(e.big().dim(), 3);
    let r = check_bounded(&e, BoundedConfig::default());
    assert!(r.nilpotency.is_certified() || r.overall.status() != Status::Certified);

    let mut bad = Mat::zeros(&Rationals, 2, 4);
    bad.set(0, 0, Rationals.one());
    assert_eq!(split_extension(b.clone(), &m, &bad).unwrap_err(), homex_core::error::ExtensionError::ProductNotNilpotent);
    let mut nonassoc = Mat::zeros(&Rationals, 2, 4);
    nonassoc.set(1, 0, Rationals.one());
    nonassoc.set(0, 1, Rationals.one());
    assert!(matches!(split_extension(b, &m, &nonassoc).unwrap_err(), homex_core::error::ExtensionError::BadProduct(_)));
}
