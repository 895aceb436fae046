//! Randomized invariants over small algebras, with a fixed seed.

mod common;

use common::props;

#[test]
fn rank_nullity() {
    props::rank_nullity(256).unwrap();
}

#[test]
fn constructor_axioms() {
    props::constructor_axioms(256).unwrap();
}

#[test]
fn resolution_minimality() {
    props::resolution_minimality(256).unwrap();
}

#[test]
fn tor_balance() {
    props::tor_balance(256).unwrap();
}

#[test]
fn tor_side_symmetry() {
    props::tor_side_symmetry(200).unwrap();
}

#[test]
fn cutoff_monotonicity() {
    props::cutoff_monotonicity(200).unwrap();
}

#[test]
fn consequences_on_projective_bimodules() {
    props::consequences_on_projective_bimodules(20).unwrap();
}
