#![allow(dead_code)]

pub mod props;
pub mod random;

use std::sync::Arc;

use homex_core::algebra::{Arrow, Presentation, Quiver, Relation};
use homex_core::{AlgRef, AlgebraTable, Field, Rationals};

/// `arrows` are `(name, source, target)`; relations are lists of
/// `(coefficient, "b*a")`.
pub fn presentation<K: Field>(
    field: K,
    vertices: &[&str],
    arrows: &[(&str, &str, &str)],
    relations: &[&[(i64, &str)]],
) -> Presentation<K> {
    let quiver = Quiver {
        vertices: vertices.iter().map(|v| v.to_string()).collect(),
        arrows: arrows
            .iter()
            .map(|(n, s, t)| Arrow {
                name: n.to_string(),
                source: vertices.iter().position(|v| v == s).unwrap(),
                target: vertices.iter().position(|v| v == t).unwrap(),
            })
            .collect(),
    };
    let relations = relations
        .iter()
        .map(|r| Relation {
            terms: r
                .iter()
                .map(|(c, w)| (field.from_i64(*c), quiver.parse_path(w).expect("valid path")))
                .collect(),
        })
        .collect();
    Presentation::new(field, quiver, relations).unwrap()
}

pub fn q_algebra(
    vertices: &[&str],
    arrows: &[(&str, &str, &str)],
    relations: &[&[(i64, &str)]],
) -> AlgRef<Rationals> {
    Arc::new(presentation(Rationals, vertices, arrows, relations).algebra().unwrap())
}

/// Loop `gamma` at 1, `beta: 1 -> 2`, `alpha: 2 -> 1`, with `gamma^2` and
/// `alpha*beta` (a 9-dimensional algebra).
pub fn lambda64() -> AlgRef<Rationals> {
    q_algebra(
        &["1", "2"],
        &[("gamma", "1", "1"), ("beta", "1", "2"), ("alpha", "2", "1")],
        &[&[(1, "gamma*gamma")], &[(1, "alpha*beta")]],
    )
}

/// The subalgebra without `alpha` (5-dimensional).
pub fn gamma64() -> AlgRef<Rationals> {
    q_algebra(&["1", "2"], &[("gamma", "1", "1"), ("beta", "1", "2")], &[&[(1, "gamma*gamma")]])
}

/// Linear `A_4`: `1 -> 2 -> 3 -> 4`, no relations.
pub fn a4() -> AlgRef<Rationals> {
    q_algebra(
        &["1", "2", "3", "4"],
        &[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "4")],
        &[],
    )
}

/// `k[x]/(x^2)`.
pub fn dual_numbers() -> AlgRef<Rationals> {
    q_algebra(&["1"], &[("x", "1", "1")], &[&[(1, "x*x")]])
}

pub fn ground() -> AlgRef<Rationals> {
    Arc::new(AlgebraTable::ground(&Rationals))
}
