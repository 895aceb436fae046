//! Opposite, tensor, enveloping and product algebras.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use super::{AlgebraTable, Check, Generator, TableData};
use crate::arith::{kron_vec, unit_vector, Field, Mat};
use crate::error::AlgebraError;

impl<K: Field> AlgebraTable<K> {
    /// The ground field as a one-dimensional algebra.
    pub fn ground(field: &K) -> Self {
        AlgebraTable::assemble(
            TableData {
                field: field.clone(),
                labels: vec!["1".to_string()],
                vertex_labels: vec!["*".to_string()],
                mult: vec![vec![(0, field.one())]],
                idempotents: vec![vec![field.one()]],
                radical: Some(Mat::zeros(field, 1, 0)),
                generators: Some(Vec::new()),
            },
            Check::Light,
        )
        .expect("ground field is an algebra")
    }

    pub fn opposite(&self) -> Self {
        let d = self.dim;
        let mut mult = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                mult.push(self.mult[j * d + i].clone());
            }
        }
        let generators = self
            .generators
            .iter()
            .map(|g| Generator { label: g.label.clone(), source: g.target, target: g.source, vector: g.vector.clone() })
            .collect();
        AlgebraTable::assemble(
            TableData {
                field: self.field.clone(),
                labels: self.labels.clone(),
                vertex_labels: self.vertex_labels.clone(),
                mult,
                idempotents: self.idempotents.clone(),
                radical: Some(self.radical.clone()),
                generators: Some(generators),
            },
            Check::Light,
        )
        .expect("opposite of a valid algebra is valid")
    }

    /// `self (x) other`; basis element `(i, j)` has index `i * other.dim + j`
    /// and vertex `(s, t)` has index `s * other.num_vertices() + t`.
    pub fn tensor(&self, other: &Self) -> Result<Self, AlgebraError> {
        let f = &self.field;
        let (da, db) = (self.dim, other.dim);
        let d = da * db;
        if d > super::MAX_DIM {
            return Err(AlgebraError::TooLarge { what: "algebra dimension".into(), limit: super::MAX_DIM });
        }
        let mut mult = Vec::with_capacity(d * d);
        for i in 0..da {
            for j in 0..db {
                for k in 0..da {
                    let ik = &self.mult[i * da + k];
                    for l in 0..db {
                        let jl = &other.mult[j * db + l];
                        let mut e = Vec::with_capacity(ik.len() * jl.len());
                        for (m, c) in ik {
                            for (n, c2) in jl {
                                e.push((m * db + n, f.mul(c, c2)));
                            }
                        }
                        mult.push(e);
                    }
                }
            }
        }
        let mut labels = Vec::with_capacity(d);
        for a in &self.labels {
            for b in &other.labels {
                labels.push(format!("{a}|{b}"));
            }
        }
        let (na, nb) = (self.num_vertices(), other.num_vertices());
        let mut vertex_labels = Vec::new();
        let mut idempotents = Vec::new();
        for s in 0..na {
            for t in 0..nb {
                vertex_labels.push(format!("{}|{}", self.vertex_labels[s], other.vertex_labels[t]));
                idempotents.push(kron_vec(f, &self.idempotents[s], &other.idempotents[t]));
            }
        }
        let mut rad = Vec::new();
        for r in self.radical.to_cols() {
            for j in 0..db {
                rad.push(kron_vec(f, &r, &unit_vector(f, db, j)));
            }
        }
        for e in &self.idempotents {
            for r in other.radical.to_cols() {
                rad.push(kron_vec(f, e, &r));
            }
        }
        let mut generators = Vec::new();
        for g in &self.generators {
            for t in 0..nb {
                generators.push(Generator {
                    label: format!("{}|{}", g.label, other.vertex_labels[t]),
                    source: g.source * nb + t,
                    target: g.target * nb + t,
                    vector: kron_vec(f, &g.vector, &other.idempotents[t]),
                });
            }
        }
        for s in 0..na {
            for h in &other.generators {
                generators.push(Generator {
                    label: format!("{}|{}", self.vertex_labels[s], h.label),
                    source: s * nb + h.source,
                    target: s * nb + h.target,
                    vector: kron_vec(f, &self.idempotents[s], &h.vector),
                });
            }
        }
        AlgebraTable::assemble(
            TableData {
                field: f.clone(),
                labels,
                vertex_labels,
                mult,
                idempotents,
                radical: Some(Mat::from_cols(f, d, &rad)),
                generators: Some(generators),
            },
            Check::Light,
        )
    }

    /// `self (x) self^op`.
    pub fn enveloping(&self) -> Result<Self, AlgebraError> {
        self.tensor(&self.opposite())
    }

    /// Direct product; basis and vertices of `self` come first.
    pub fn product(&self, other: &Self) -> Self {
        let f = &self.field;
        let (da, db) = (self.dim, other.dim);
        let d = da + db;
        let mut mult = vec![Vec::new(); d * d];
        for i in 0..da {
            for j in 0..da {
                mult[i * d + j] = self.mult[i * da + j].clone();
            }
        }
        for i in 0..db {
            for j in 0..db {
                mult[(da + i) * d + da + j] =
                    other.mult[i * db + j].iter().map(|(k, c)| (k + da, c.clone())).collect();
            }
        }
        let pad_a = |v: &[K::Elem]| {
            let mut w = v.to_vec();
            w.extend(vec![f.zero(); db]);
            w
        };
        let pad_b = |v: &[K::Elem]| {
            let mut w = vec![f.zero(); da];
            w.extend_from_slice(v);
            w
        };
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let mut vertex_labels = self.vertex_labels.clone();
        vertex_labels.extend(other.vertex_labels.iter().cloned());
        let mut idempotents: Vec<_> = self.idempotents.iter().map(|e| pad_a(e)).collect();
        idempotents.extend(other.idempotents.iter().map(|e| pad_b(e)));
        let mut rad: Vec<_> = self.radical.to_cols().iter().map(|c| pad_a(c)).collect();
        rad.extend(other.radical.to_cols().iter().map(|c| pad_b(c)));
        let na = self.num_vertices();
        let mut generators: Vec<_> = self
            .generators
            .iter()
            .map(|g| Generator { vector: pad_a(&g.vector), ..g.clone() })
            .collect();
        generators.extend(other.generators.iter().map(|g| Generator {
            label: g.label.clone(),
            source: g.source + na,
            target: g.target + na,
            vector: pad_b(&g.vector),
        }));
        AlgebraTable::assemble(
            TableData {
                field: f.clone(),
                labels,
                vertex_labels,
                mult,
                idempotents,
                radical: Some(Mat::from_cols(f, d, &rad)),
                generators: Some(generators),
            },
            Check::Light,
        )
        .expect("product of valid algebras is valid")
    }
}
