//! Small random algebras, modules and bimodules for property tests.

use std::sync::Arc;

use homex_core::algebra::{Arrow, Presentation, Quiver, Relation};
use homex_core::arith::Echelon;
use homex_core::module::{Bimodule, FdModule};
use homex_core::{AlgRef, Field, Mat, Rationals};
use proptest::prelude::*;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// A quiver on `vertices` vertices with arrows `(source, target)`, truncated
/// at path length `depth`, plus optional commutativity relations.
#[derive(Clone, Debug)]
pub struct QuiverSpec {
    pub vertices: usize,
    pub arrows: Vec<(usize, usize)>,
    pub depth: usize,
    pub commute: bool,
}

pub fn quiver_spec(max_vertices: usize, max_arrows: usize, acyclic: bool) -> impl Strategy<Value = QuiverSpec> {
    (1..=max_vertices).prop_flat_map(move |n| {
        let arrow = (0..n, 0..n);
        (proptest::collection::vec(arrow, 0..=max_arrows), 2..=3usize, any::<bool>()).prop_map(
            move |(arrows, depth, commute)| {
                let arrows = arrows
                    .into_iter()
                    .filter_map(|(s, t)| match (acyclic, s.cmp(&t)) {
                        (false, _) | (true, std::cmp::Ordering::Less) => Some((s, t)),
                        (true, std::cmp::Ordering::Greater) => Some((t, s)),
                        (true, std::cmp::Ordering::Equal) => None,
                    })
                    .collect();
                QuiverSpec { vertices: n, arrows, depth, commute }
            },
        )
    })
}

fn paths_of_length(arrows: &[(usize, usize)], len: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0..arrows.len()).map(|a| vec![a]).collect();
    for _ in 1..len {
        let mut next = Vec::new();
        for p in &out {
            let end = arrows[*p.last().unwrap()].1;
            for (a, &(s, _)) in arrows.iter().enumerate() {
                if s == end {
                    let mut q = p.clone();
                    q.push(a);
                    next.push(q);
                }
            }
        }
        out = next;
    }
    out
}

pub fn build_presentation<K: Field>(field: K, spec: &QuiverSpec, depth: usize) -> Presentation<K> {
    let quiver = Quiver {
        vertices: (1..=spec.vertices).map(|v| v.to_string()).collect(),
        arrows: spec
            .arrows
            .iter()
            .enumerate()
            .map(|(i, &(s, t))| Arrow { name: format!("a{i}"), source: s, target: t })
            .collect(),
    };
    let mut relations: Vec<Relation<K>> = paths_of_length(&spec.arrows, depth)
        .into_iter()
        .map(|p| Relation { terms: vec![(field.one(), p)] })
        .collect();
    if spec.commute && depth > 2 {
        let twos = paths_of_length(&spec.arrows, 2);
        let ends = |p: &Vec<usize>| (spec.arrows[p[0]].0, spec.arrows[p[1]].1);
        'find: for (i, p) in twos.iter().enumerate() {
            for q in &twos[i + 1..] {
                if ends(p) == ends(q) {
                    relations.push(Relation { terms: vec![(field.one(), p.clone()), (field.neg(&field.one()), q.clone())] });
                    break 'find;
                }
            }
        }
    }
    Presentation::new(field, quiver, relations).expect("valid presentation")
}

/// The algebra of `spec`, falling back to depth 2 when it exceeds `max_dim`.
pub fn build_algebra<K: Field>(field: K, spec: &QuiverSpec, max_dim: usize) -> AlgRef<K> {
    let a = build_presentation(field.clone(), spec, spec.depth).algebra().unwrap();
    if a.dim() <= max_dim || spec.depth == 2 {
        return Arc::new(a);
    }
    Arc::new(build_presentation(field, &QuiverSpec { commute: false, ..spec.clone() }, 2).algebra().unwrap())
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Basis of the submodule generated by the columns of `vecs`.
pub fn generated<K: Field>(m: &FdModule<K>, vecs: &[Vec<K::Elem>]) -> Mat<K> {
    let f = m.field().clone();
    let mut ech = Echelon::new(&f, m.dim());
    let mut basis = Vec::new();
    let mut queue: Vec<Vec<K::Elem>> = vecs.to_vec();
    while let Some(v) = queue.pop() {
        if !ech.insert(&v) {
            continue;
        }
        for g in m.generator_actions().iter().chain(m.idempotent_actions()) {
            queue.push(g.mul_vec(&v));
        }
        basis.push(v);
    }
    Mat::from_cols(&f, m.dim(), &basis)
}

/// A quotient of a sum of indecomposable projectives by a random cyclic
/// submodule, of dimension at most `max_dim`.
pub fn random_module<K: Field>(a: &AlgRef<K>, seed: u64, max_dim: usize) -> FdModule<K> {
    let f = a.field().clone();
    let mut r = rng(seed);
    let n = a.num_vertices();
    let mut verts = Vec::new();
    let mut total = 0;
    for _ in 0..1 + r.next_u64() % 2 {
        let v = (r.next_u64() % n as u64) as usize;
        let d = a.projective_dim(v);
        if total + d <= max_dim {
            verts.push(v);
            total += d;
        }
    }
    if verts.is_empty() {
        return FdModule::simple(a.clone(), (r.next_u64() % n as u64) as usize).unwrap();
    }
    let p = FdModule::free(a.clone(), &verts);
    if r.next_u64().is_multiple_of(4) {
        return p;
    }
    let split: Vec<usize> = (0..n).collect();
    let v = split[(r.next_u64() % n as u64) as usize];
    let ev = p.idempotent_action(v);
    let mut x = vec![f.zero(); p.dim()];
    for c in 0..p.dim() {
        if r.next_u64().is_multiple_of(2) {
            x = homex_core::arith::add_vec(&f, &x, &homex_core::arith::scale_vec(&f, &f.random_elem(&mut r, 2), &ev.col(c)));
        }
    }
    let sub = generated(&p, &[x]);
    if sub.cols() == 0 {
        return p;
    }
    p.quotient(&sub).unwrap().0
}

/// A random `B`-`B` bimodule of dimension at most `max_dim`.
pub fn random_bimodule<K: Field>(b: &AlgRef<K>, env: &AlgRef<K>, seed: u64, max_dim: usize) -> Bimodule<K> {
    let m = random_module(env, seed, max_dim);
    Bimodule::from_enveloping(&m, b.clone(), b.clone()).unwrap()
}

/// `B e_i (x) e_j B`, projective over `B^e`.
pub fn projective_bimodule<K: Field>(b: &AlgRef<K>, i: usize, j: usize) -> Bimodule<K> {
    let op = Arc::new(b.opposite());
    let x = FdModule::projective(b.clone(), i).unwrap();
    let y = FdModule::projective(op, j).unwrap();
    Bimodule::outer(&x, &y, b.clone()).unwrap()
}

pub fn q_spec_algebra(spec: &QuiverSpec, max_dim: usize) -> AlgRef<Rationals> {
    build_algebra(Rationals, spec, max_dim)
}
