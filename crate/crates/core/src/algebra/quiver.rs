//! Quivers with homogeneous relations and their path algebras.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{AlgebraTable, Check, Generator, TableData};
use crate::arith::{unit_vector, Field, Mat};
use crate::error::AlgebraError;

/// Path lengths beyond this are treated as a failure of admissibility.
pub const DEFAULT_DEGREE_CAP: usize = 64;
const MAX_PATHS: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

/// Arrow indices in the order they are traversed. The algebra product
/// writes paths right to left, so `[a, b]` is the element `b * a`.
pub type Path = Vec<usize>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation<K: Field> {
    pub terms: Vec<(K::Elem, Path)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation<K: Field> {
    pub field: K,
    pub quiver: Quiver,
    pub relations: Vec<Relation<K>>,
}

impl Quiver {
    pub fn vertex(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn path_source(&self, p: &[usize]) -> usize {
        self.arrows[p[0]].source
    }

    pub fn path_target(&self, p: &[usize]) -> usize {
        self.arrows[p[p.len() - 1]].target
    }

    pub fn is_composable(&self, p: &[usize]) -> bool {
        p.windows(2).all(|w| self.arrows[w[0]].target == self.arrows[w[1]].source)
    }

    /// Right-to-left product notation, `b*a` for `[a, b]`.
    pub fn path_label(&self, p: &[usize]) -> String {
        let names: Vec<&str> = p.iter().rev().map(|&a| self.arrows[a].name.as_str()).collect();
        names.join("*")
    }

    /// Parses `b*a` (right to left) into a path; `None` for unknown arrows
    /// or non-composable words.
    pub fn parse_path(&self, word: &str) -> Option<Path> {
        let mut p = Vec::new();
        for name in word.split('*').rev() {
            p.push(self.arrow(name.trim())?);
        }
        self.is_composable(&p).then_some(p)
    }

    pub fn vertex_label(&self, v: usize) -> String {
        format!("e{}", self.vertices[v])
    }
}

struct Degree<K: Field> {
    index: BTreeMap<Path, usize>,
    forms: Vec<Vec<(usize, K::Elem)>>,
    ideal: Vec<Vec<(K::Elem, Path)>>,
}

impl<K: Field> Presentation<K> {
    pub fn new(field: K, quiver: Quiver, relations: Vec<Relation<K>>) -> Result<Self, AlgebraError> {
        let p = Presentation { field, quiver, relations };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<(), AlgebraError> {
        let q = &self.quiver;
        let nv = q.vertices.len();
        for (i, v) in q.vertices.iter().enumerate() {
            if q.vertices[..i].contains(v) {
                return Err(AlgebraError::Malformed(format!("repeated vertex '{v}'")));
            }
        }
        for (i, a) in q.arrows.iter().enumerate() {
            if a.source >= nv || a.target >= nv {
                return Err(AlgebraError::Malformed(format!("arrow '{}' has a bad endpoint", a.name)));
            }
            if q.arrows[..i].iter().any(|b| b.name == a.name) {
                return Err(AlgebraError::Malformed(format!("repeated arrow '{}'", a.name)));
            }
        }
        for (index, r) in self.relations.iter().enumerate() {
            let bad = |reason: &str| AlgebraError::BadRelation { index, reason: reason.into() };
            let Some((_, first)) = r.terms.first() else {
                return Err(bad("empty relation"));
            };
            if first.len() < 2 {
                return Err(bad("paths in relations must have length at least 2"));
            }
            for (c, p) in &r.terms {
                if p.iter().any(|&a| a >= q.arrows.len()) {
                    return Err(bad("unknown arrow"));
                }
                if p.len() != first.len() {
                    return Err(bad("relation is not homogeneous"));
                }
                if !q.is_composable(p) {
                    return Err(bad("path is not composable"));
                }
                if q.path_source(p) != q.path_source(first) || q.path_target(p) != q.path_target(first) {
                    return Err(bad("paths have different endpoints"));
                }
                if self.field.is_zero(c) {
                    return Err(bad("zero coefficient"));
                }
            }
        }
        Ok(())
    }

    /// The presentation with one arrow deleted; fails if it occurs in a
    /// relation.
    pub fn without_arrow(&self, arrow: usize) -> Option<Self> {
        if self.relations.iter().any(|r| r.terms.iter().any(|(_, p)| p.contains(&arrow))) {
            return None;
        }
        let mut quiver = self.quiver.clone();
        quiver.arrows.remove(arrow);
        let shift = |a: usize| if a > arrow { a - 1 } else { a };
        let relations = self
            .relations
            .iter()
            .map(|r| Relation {
                terms: r.terms.iter().map(|(c, p)| (c.clone(), p.iter().map(|&a| shift(a)).collect())).collect(),
            })
            .collect();
        Some(Presentation { field: self.field.clone(), quiver, relations })
    }

    pub fn algebra(&self) -> Result<AlgebraTable<K>, AlgebraError> {
        self.algebra_with_cap(DEFAULT_DEGREE_CAP)
    }

    /// Builds the quotient path algebra degree by degree, stopping at the
    /// first vanishing graded piece.
    pub fn algebra_with_cap(&self, cap: usize) -> Result<AlgebraTable<K>, AlgebraError> {
        self.validate()?;
        let f = &self.field;
        let q = &self.quiver;
        let nv = q.vertices.len();
        let mut labels: Vec<String> = (0..nv).map(|v| q.vertex_label(v)).collect();
        let mut basis_paths: Vec<Path> = vec![Vec::new(); nv];
        let mut degrees: Vec<Degree<K>> = Vec::new();
        degrees.push(Degree { index: BTreeMap::new(), forms: Vec::new(), ideal: Vec::new() });

        let mut level: Vec<Path> = (0..q.arrows.len()).map(|a| vec![a]).collect();
        let mut d = 1;
        loop {
            if level.len() > MAX_PATHS {
                return Err(AlgebraError::TooLarge { what: "number of paths".into(), limit: MAX_PATHS });
            }
            let index: BTreeMap<Path, usize> =
                level.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
            let mut rows: Vec<Vec<(K::Elem, Path)>> = Vec::new();
            for r in &self.relations {
                if r.terms[0].1.len() == d {
                    rows.push(r.terms.clone());
                }
            }
            if d >= 2 {
                for row in &degrees[d - 1].ideal {
                    for a in 0..q.arrows.len() {
                        let after: Vec<_> = row
                            .iter()
                            .filter(|(_, p)| q.path_target(p) == q.arrows[a].source)
                            .map(|(c, p)| {
                                let mut p2 = p.clone();
                                p2.push(a);
                                (c.clone(), p2)
                            })
                            .collect();
                        let before: Vec<_> = row
                            .iter()
                            .filter(|(_, p)| q.path_source(p) == q.arrows[a].target)
                            .map(|(c, p)| {
                                let mut p2 = vec![a];
                                p2.extend(p);
                                (c.clone(), p2)
                            })
                            .collect();
                        if !after.is_empty() {
                            rows.push(after);
                        }
                        if !before.is_empty() {
                            rows.push(before);
                        }
                    }
                }
            }
            let ncols = level.len();
            let mut m = Mat::zeros(f, rows.len(), ncols);
            for (i, row) in rows.iter().enumerate() {
                for (c, p) in row {
                    let j = index[p];
                    let v = f.add(m.get(i, j), c);
                    m.set(i, j, v);
                }
            }
            let e = m.rref();
            let mut pivot_row = vec![None; ncols];
            for (r, &p) in e.pivots.iter().enumerate() {
                pivot_row[p] = Some(r);
            }
            let mut forms: Vec<Vec<(usize, K::Elem)>> = vec![Vec::new(); ncols];
            let mut survivors = 0;
            for j in 0..ncols {
                if pivot_row[j].is_none() {
                    forms[j] = vec![(labels.len(), f.one())];
                    labels.push(q.path_label(&level[j]));
                    basis_paths.push(level[j].clone());
                    survivors += 1;
                }
            }
            for j in 0..ncols {
                if let Some(r) = pivot_row[j] {
                    let mut form = Vec::new();
                    for j2 in 0..ncols {
                        let c = e.reduced.get(r, j2);
                        if j2 != j && !f.is_zero(c) {
                            let Some((b, _)) = forms[j2].first() else { continue };
                            form.push((*b, f.neg(c)));
                        }
                    }
                    forms[j] = form;
                }
            }
            let ideal = (0..e.rank())
                .map(|r| {
                    (0..ncols)
                        .filter(|&j| !f.is_zero(e.reduced.get(r, j)))
                        .map(|j| (e.reduced.get(r, j).clone(), level[j].clone()))
                        .collect()
                })
                .collect();
            degrees.push(Degree { index, forms, ideal });
            if survivors == 0 {
                break;
            }
            if d >= cap {
                return Err(AlgebraError::NonAdmissible(d));
            }
            let mut next = Vec::new();
            for p in &level {
                for (a, arr) in q.arrows.iter().enumerate() {
                    if arr.source == q.path_target(p) {
                        let mut p2 = p.clone();
                        p2.push(a);
                        next.push(p2);
                    }
                }
            }
            level = next;
            d += 1;
        }
        let top_degree = degrees.len() - 1;
        let dim = labels.len();
        let mut mult = Vec::with_capacity(dim * dim);
        for x in 0..dim {
            for y in 0..dim {
                let (px, py) = (&basis_paths[x], &basis_paths[y]);
                let entry = match (px.is_empty(), py.is_empty()) {
                    (true, true) => {
                        if x == y {
                            vec![(x, f.one())]
                        } else {
                            Vec::new()
                        }
                    }
                    (true, false) => {
                        if q.path_target(py) == x {
                            vec![(y, f.one())]
                        } else {
                            Vec::new()
                        }
                    }
                    (false, true) => {
                        if q.path_source(px) == y {
                            vec![(x, f.one())]
                        } else {
                            Vec::new()
                        }
                    }
                    (false, false) => {
                        let len = px.len() + py.len();
                        if q.path_target(py) != q.path_source(px) || len >= top_degree {
                            Vec::new()
                        } else {
                            let mut p = py.clone();
                            p.extend(px);
                            let deg = &degrees[len];
                            deg.forms[deg.index[&p]].clone()
                        }
                    }
                };
                mult.push(entry);
            }
        }
        let idempotents = (0..nv).map(|v| unit_vector(f, dim, v)).collect();
        let rad_cols: Vec<_> = (nv..dim).map(|k| unit_vector(f, dim, k)).collect();
        let generators = q
            .arrows
            .iter()
            .enumerate()
            .map(|(i, a)| Generator {
                label: a.name.clone(),
                source: a.source,
                target: a.target,
                vector: unit_vector(f, dim, nv + i),
            })
            .collect();
        AlgebraTable::assemble(
            TableData {
                field: f.clone(),
                labels,
                vertex_labels: q.vertices.clone(),
                mult,
                idempotents,
                radical: Some(Mat::from_cols(f, dim, &rad_cols)),
                generators: Some(generators),
            },
            Check::Light,
        )
    }
}
