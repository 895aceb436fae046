mod common;

use common::*;
use homex_core::algebra::AlgebraTable;
use homex_core::module::FdModule;
use homex_core::{Field, Rationals};

#[test]
fn presentation_dimensions() {
    let l = lambda64();
    assert_eq!(l.dim(), 9);
    assert_eq!(l.projective_dim(0), 4);
    assert_eq!(l.projective_dim(1), 5);
    let g = gamma64();
    assert_eq!(g.dim(), 5);
    assert_eq!(g.projective_dim(0), 4);
    assert_eq!(g.projective_dim(1), 1);
    assert_eq!(a4().dim(), 10);
    assert_eq!(dual_numbers().dim(), 2);
}

#[test]
fn enveloping_dimensions() {
    let g = gamma64();
    let ge = g.enveloping().unwrap();
    assert_eq!(ge.dim(), 25);
    assert_eq!(ge.num_vertices(), 4);
    let b = a4();
    assert_eq!(b.enveloping().unwrap().dim(), 100);
}

#[test]
fn opposite_is_involutive() {
    let l = lambda64();
    assert!(l.opposite().opposite().same_as(&l));
    assert!(!l.opposite().same_as(&l));
    let l_op = l.opposite();
    // e_1 L has dimension 4 and e_2 L dimension 5
    assert_eq!(l_op.projective_dim(0), 4);
    assert_eq!(l_op.projective_dim(1), 5);
}

#[test]
fn cartan_matrix_lambda() {
    let c = lambda64().cartan_matrix();
    // rows: target vertex, columns: source vertex
    assert_eq!(c, vec![vec![2, 2], vec![2, 3]]);
}

#[test]
fn regular_module_is_sum_of_projectives() {
    let l = lambda64();
    let reg = FdModule::regular(l.clone());
    assert_eq!(reg.dimension_vector(), vec![4, 5]);
    let k = AlgebraTable::ground(&Rationals);
    assert_eq!(k.dim(), 1);
    assert!(Rationals.is_one(&k.unit()[0]));
}
