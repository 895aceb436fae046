//! Finite-dimensional basic algebras given by structure constants.

mod constructions;
mod quiver;

pub use quiver::{Arrow, Path, Presentation, Quiver, Relation, DEFAULT_DEGREE_CAP};

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{axpy, is_zero_vec, unit_vector, Echelon, Field, Mat};
use crate::error::AlgebraError;

pub type AlgRef<K> = Arc<AlgebraTable<K>>;

/// Largest accepted algebra dimension.
pub const MAX_DIM: usize = 2048;

/// An element of the form `e_target * g * e_source` lifting part of a basis
/// of `rad / rad^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator<K: Field> {
    pub label: String,
    pub source: usize,
    pub target: usize,
    pub vector: Vec<K::Elem>,
}

/// One element of the word basis: a product of generators applied to a
/// primitive idempotent, built breadth first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    pub root: usize,
    /// Vertex `t` with `e_t w = w`.
    pub target: usize,
    pub parent: Option<usize>,
    pub generator: Option<usize>,
    /// Position among the words with the same root.
    pub local: usize,
}

#[derive(Clone, Debug)]
pub(crate) struct ProjActions<K: Field> {
    pub gens: Vec<Mat<K>>,
}

/// How much of the input is re-verified at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    /// Everything, including radical closure, nilpotency and generators.
    Full,
    /// Structure constants, unit and idempotents only; used by closed-form
    /// constructions whose radical and generators are known.
    Light,
}

/// A basic split algebra over `K` with a chosen complete set of primitive
/// orthogonal idempotents and its Jacobson radical.
#[derive(Clone, Debug)]
pub struct AlgebraTable<K: Field> {
    field: K,
    dim: usize,
    labels: Vec<String>,
    vertex_labels: Vec<String>,
    mult: Vec<Vec<(usize, K::Elem)>>,
    unit: Vec<K::Elem>,
    idempotents: Vec<Vec<K::Elem>>,
    radical: Mat<K>,
    generators: Vec<Generator<K>>,
    words: Vec<Word>,
    root_words: Vec<Vec<usize>>,
    to_words: Mat<K>,
    word_vectors: Vec<Vec<K::Elem>>,
    top: Mat<K>,
    proj: Vec<ProjActions<K>>,
}

/// Raw input for [`AlgebraTable::assemble`].
#[derive(Clone, Debug)]
pub struct TableData<K: Field> {
    pub field: K,
    pub labels: Vec<String>,
    pub vertex_labels: Vec<String>,
    /// `mult[i * dim + j]` is the sparse expansion of `b_i * b_j`.
    pub mult: Vec<Vec<(usize, K::Elem)>>,
    pub idempotents: Vec<Vec<K::Elem>>,
    /// Columns form a basis of the radical; `None` derives it (char 0 only).
    pub radical: Option<Mat<K>>,
    /// `None` derives generators from `rad / rad^2`.
    pub generators: Option<Vec<Generator<K>>>,
}

impl<K: Field> AlgebraTable<K> {
    /// Validates the data and builds the word basis and projectives.
    pub fn assemble(data: TableData<K>, check: Check) -> Result<Self, AlgebraError> {
        let TableData { field, labels, vertex_labels, mut mult, idempotents, radical, generators } =
            data;
        let dim = labels.len();
        if dim > MAX_DIM {
            return Err(AlgebraError::TooLarge { what: "algebra dimension".into(), limit: MAX_DIM });
        }
        if mult.len() != dim * dim {
            return Err(AlgebraError::Malformed(format!(
                "expected {} products, found {}",
                dim * dim,
                mult.len()
            )));
        }
        for entry in mult.iter_mut() {
            if entry.iter().any(|(k, _)| *k >= dim) {
                return Err(AlgebraError::Malformed("basis index out of range".into()));
            }
            entry.retain(|(_, c)| !field.is_zero(c));
            entry.sort_by_key(|(k, _)| *k);
            for w in entry.windows(2) {
                if w[0].0 == w[1].0 {
                    return Err(AlgebraError::Malformed("repeated basis index in a product".into()));
                }
            }
        }
        if vertex_labels.len() != idempotents.len() {
            return Err(AlgebraError::BadIdempotents("vertex label count".into()));
        }
        if idempotents.iter().any(|e| e.len() != dim) {
            return Err(AlgebraError::BadIdempotents("idempotent length".into()));
        }
        let mut alg = AlgebraTable {
            field: field.clone(),
            dim,
            labels,
            vertex_labels,
            mult,
            unit: vec![field.zero(); dim],
            idempotents,
            radical: Mat::zeros(&field, dim, 0),
            generators: Vec::new(),
            words: Vec::new(),
            root_words: Vec::new(),
            to_words: Mat::zeros(&field, dim, dim),
            word_vectors: Vec::new(),
            top: Mat::zeros(&field, 0, dim),
            proj: Vec::new(),
        };
        alg.check_associative()?;
        alg.check_idempotents()?;
        let radical = match radical {
            Some(r) => r,
            None => alg.trace_radical()?,
        };
        if radical.rows() != dim {
            return Err(AlgebraError::BadRadical("wrong ambient dimension".into()));
        }
        let radical = radical.column_basis();
        let n = alg.idempotents.len();
        if n + radical.cols() != dim {
            return Err(AlgebraError::NotElementary { dim, idempotents: n, radical: radical.cols() });
        }
        alg.radical = radical;
        if check == Check::Full {
            alg.check_radical()?;
        }
        let gens = match generators {
            Some(g) => g,
            None => alg.derive_generators(),
        };
        alg.check_generators(&gens, check)?;
        alg.generators = gens;
        alg.build_top()?;
        alg.build_words()?;
        alg.build_projectives();
        Ok(alg)
    }

    fn check_associative(&self) -> Result<(), AlgebraError> {
        let f = &self.field;
        let d = self.dim;
        let mut lhs = vec![f.zero(); d];
        let mut rhs = vec![f.zero(); d];
        let mut touched = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let ij = &self.mult[i * d + j];
                for k in 0..d {
                    let jk = &self.mult[j * d + k];
                    if ij.is_empty() && jk.is_empty() {
                        continue;
                    }
                    for (m, c) in ij {
                        for (t, e) in &self.mult[m * d + k] {
                            f.add_mul_assign(&mut lhs[*t], c, e);
                            touched.push(*t);
                        }
                    }
                    for (m, c) in jk {
                        for (t, e) in &self.mult[i * d + m] {
                            f.add_mul_assign(&mut rhs[*t], c, e);
                            touched.push(*t);
                        }
                    }
                    let mut ok = true;
                    for &t in &touched {
                        if lhs[t] != rhs[t] {
                            ok = false;
                        }
                        lhs[t] = f.zero();
                        rhs[t] = f.zero();
                    }
                    touched.clear();
                    if !ok {
                        return Err(AlgebraError::NotAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_idempotents(&mut self) -> Result<(), AlgebraError> {
        let f = self.field.clone();
        let n = self.idempotents.len();
        if n == 0 && self.dim > 0 {
            return Err(AlgebraError::BadIdempotents("no idempotents".into()));
        }
        for a in 0..n {
            for b in 0..n {
                let p = self.mul(&self.idempotents[a], &self.idempotents[b]);
                let expect = if a == b { self.idempotents[a].clone() } else { vec![f.zero(); self.dim] };
                if p != expect {
                    return Err(AlgebraError::BadIdempotents(format!(
                        "e{a} * e{b} violates orthogonality or idempotence"
                    )));
                }
            }
            if is_zero_vec(&f, &self.idempotents[a]) {
                return Err(AlgebraError::BadIdempotents(format!("e{a} is zero")));
            }
        }
        let mut unit = vec![f.zero(); self.dim];
        for e in &self.idempotents {
            axpy(&f, &mut unit, &f.one(), e);
        }
        for k in 0..self.dim {
            let b = unit_vector(&f, self.dim, k);
            if self.mul(&unit, &b) != b || self.mul(&b, &unit) != b {
                return Err(AlgebraError::NotUnital);
            }
        }
        self.unit = unit;
        Ok(())
    }

    /// Radical as the kernel of the trace form `(x, y) -> tr(L_{xy})`.
    fn trace_radical(&self) -> Result<Mat<K>, AlgebraError> {
        let f = &self.field;
        if f.characteristic() != 0 {
            return Err(AlgebraError::RadicalRequired);
        }
        let d = self.dim;
        let tr: Vec<K::Elem> = (0..d)
            .map(|k| {
                let mut t = f.zero();
                for m in 0..d {
                    for (idx, c) in &self.mult[k * d + m] {
                        if *idx == m {
                            t = f.add(&t, c);
                        }
                    }
                }
                t
            })
            .collect();
        let mut form = Mat::zeros(f, d, d);
        for i in 0..d {
            for j in 0..d {
                let mut s = f.zero();
                for (k, c) in &self.mult[i * d + j] {
                    f.add_mul_assign(&mut s, c, &tr[*k]);
                }
                form.set(i, j, s);
            }
        }
        Ok(form.transpose().kernel_basis())
    }

    fn check_radical(&self) -> Result<(), AlgebraError> {
        let f = &self.field;
        let d = self.dim;
        let mut ech = Echelon::new(f, d);
        let cols = self.radical.to_cols();
        for c in &cols {
            ech.insert(c);
        }
        for k in 0..d {
            let b = unit_vector(f, d, k);
            for r in &cols {
                if !ech.contains(&self.mul(&b, r)) || !ech.contains(&self.mul(r, &b)) {
                    return Err(AlgebraError::BadRadical("not a two-sided ideal".into()));
                }
            }
        }
        let mut power = cols.clone();
        for _ in 0..=d {
            if power.is_empty() {
                return Ok(());
            }
            let mut next = Echelon::new(f, d);
            let mut basis = Vec::new();
            for x in &power {
                for r in &cols {
                    let p = self.mul(x, r);
                    if next.insert(&p) {
                        basis.push(p);
                    }
                }
            }
            if basis.len() == power.len() {
                break;
            }
            power = basis;
        }
        Err(AlgebraError::BadRadical("not nilpotent".into()))
    }

    fn radical_square(&self) -> Echelon<K> {
        let cols = self.radical.to_cols();
        let mut sq = Echelon::new(&self.field, self.dim);
        for x in &cols {
            for y in &cols {
                sq.insert(&self.mul(x, y));
            }
        }
        sq
    }

    fn derive_generators(&self) -> Vec<Generator<K>> {
        let mut ech = self.radical_square();
        let cols = self.radical.to_cols();
        let n = self.idempotents.len();
        let mut gens = Vec::new();
        for t in 0..n {
            for s in 0..n {
                for r in &cols {
                    let v = self.mul(&self.mul(&self.idempotents[t], r), &self.idempotents[s]);
                    if ech.insert(&v) {
                        let label = match v.iter().position(|x| !self.field.is_zero(x)) {
                            Some(p) if v.iter().filter(|x| !self.field.is_zero(x)).count() == 1 => {
                                self.labels[p].clone()
                            }
                            _ => format!("g{}", gens.len() + 1),
                        };
                        gens.push(Generator { label, source: s, target: t, vector: v });
                    }
                }
            }
        }
        gens
    }

    fn check_generators(&self, gens: &[Generator<K>], check: Check) -> Result<(), AlgebraError> {
        let n = self.idempotents.len();
        for g in gens {
            if g.source >= n || g.target >= n || g.vector.len() != self.dim {
                return Err(AlgebraError::BadGenerators(format!("'{}' is malformed", g.label)));
            }
            let s = self.mul(&self.mul(&self.idempotents[g.target], &g.vector), &self.idempotents[g.source]);
            if s != g.vector {
                return Err(AlgebraError::BadGenerators(format!(
                    "'{}' is not in e_target A e_source",
                    g.label
                )));
            }
        }
        if check == Check::Full {
            let mut rad = Echelon::new(&self.field, self.dim);
            for c in self.radical.to_cols() {
                rad.insert(&c);
            }
            let mut ech = self.radical_square();
            let base = ech.dim();
            for g in gens {
                if !rad.contains(&g.vector) {
                    return Err(AlgebraError::BadGenerators(format!("'{}' is not radical", g.label)));
                }
                if !ech.insert(&g.vector) {
                    return Err(AlgebraError::BadGenerators(format!(
                        "'{}' is redundant modulo rad^2",
                        g.label
                    )));
                }
            }
            if base + gens.len() != rad.dim() {
                return Err(AlgebraError::BadGenerators("generators do not span rad/rad^2".into()));
            }
        }
        Ok(())
    }

    fn build_top(&mut self) -> Result<(), AlgebraError> {
        let f = &self.field;
        let n = self.idempotents.len();
        let mut cols = self.idempotents.clone();
        cols.extend(self.radical.to_cols());
        let m = Mat::from_cols(f, self.dim, &cols);
        let inv = m.inverse().ok_or(AlgebraError::NotElementary {
            dim: self.dim,
            idempotents: n,
            radical: self.radical.cols(),
        })?;
        self.top = inv.block(0, 0, n, self.dim);
        Ok(())
    }

    fn build_words(&mut self) -> Result<(), AlgebraError> {
        let f = self.field.clone();
        let n = self.idempotents.len();
        let mut words = Vec::new();
        let mut vectors = Vec::new();
        let mut root_words = Vec::new();
        for root in 0..n {
            let mut ech = Echelon::new(&f, self.dim);
            let mut local = Vec::new();
            ech.insert(&self.idempotents[root]);
            local.push(words.len());
            words.push(Word { root, target: root, parent: None, generator: None, local: 0 });
            vectors.push(self.idempotents[root].clone());
            let mut q = 0;
            while q < local.len() {
                let w = local[q];
                for (gi, g) in self.generators.iter().enumerate() {
                    if g.source != words[w].target {
                        continue;
                    }
                    let v = self.mul(&g.vector, &vectors[w]);
                    if ech.insert(&v) {
                        let idx = words.len();
                        words.push(Word {
                            root,
                            target: g.target,
                            parent: Some(w),
                            generator: Some(gi),
                            local: local.len(),
                        });
                        vectors.push(v);
                        local.push(idx);
                    }
                }
                q += 1;
            }
            root_words.push(local);
        }
        if words.len() != self.dim {
            return Err(AlgebraError::BadGenerators(format!(
                "generators span only {} of {} dimensions",
                words.len(),
                self.dim
            )));
        }
        let m = Mat::from_cols(&f, self.dim, &vectors);
        self.to_words = m
            .inverse()
            .ok_or_else(|| AlgebraError::BadGenerators("word basis is singular".into()))?;
        self.words = words;
        self.word_vectors = vectors;
        self.root_words = root_words;
        Ok(())
    }

    fn build_projectives(&mut self) {
        let f = &self.field;
        let mut proj = Vec::new();
        for root in 0..self.idempotents.len() {
            let local = &self.root_words[root];
            let d = local.len();
            let mut gens = Vec::new();
            for g in &self.generators {
                let mut m = Mat::zeros(f, d, d);
                for (l, &w) in local.iter().enumerate() {
                    if self.words[w].target != g.source {
                        continue;
                    }
                    let v = self.mul(&g.vector, &self.word_vectors[w]);
                    let c = self.to_words.mul_vec(&v);
                    for (l2, &w2) in local.iter().enumerate() {
                        m.set(l2, l, c[w2].clone());
                    }
                }
                gens.push(m);
            }
            proj.push(ProjActions { gens });
        }
        self.proj = proj;
    }

    pub fn field(&self) -> &K {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn vertex_labels(&self) -> &[String] {
        &self.vertex_labels
    }
    pub fn num_vertices(&self) -> usize {
        self.idempotents.len()
    }
    pub fn unit(&self) -> &[K::Elem] {
        &self.unit
    }
    pub fn idempotent(&self, i: usize) -> &[K::Elem] {
        &self.idempotents[i]
    }
    pub fn idempotents(&self) -> &[Vec<K::Elem>] {
        &self.idempotents
    }
    /// Columns form a basis of the Jacobson radical.
    pub fn radical(&self) -> &Mat<K> {
        &self.radical
    }
    pub fn generators(&self) -> &[Generator<K>] {
        &self.generators
    }
    pub fn words(&self) -> &[Word] {
        &self.words
    }
    pub fn word_vector(&self, w: usize) -> &[K::Elem] {
        &self.word_vectors[w]
    }
    /// Global word indices of the basis of `A e_root`.
    pub fn root_words(&self, root: usize) -> &[usize] {
        &self.root_words[root]
    }
    /// Change of basis from the standard basis to the word basis.
    pub fn to_words(&self) -> &Mat<K> {
        &self.to_words
    }
    pub fn structure_constants(&self, i: usize, j: usize) -> &[(usize, K::Elem)] {
        &self.mult[i * self.dim + j]
    }

    /// Coefficients of `x` modulo the radical, one per vertex.
    pub fn top_coords(&self, x: &[K::Elem]) -> Vec<K::Elem> {
        self.top.mul_vec(x)
    }

    pub fn basis_vector(&self, k: usize) -> Vec<K::Elem> {
        unit_vector(&self.field, self.dim, k)
    }

    pub fn mul(&self, x: &[K::Elem], y: &[K::Elem]) -> Vec<K::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim];
        for (i, a) in x.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if f.is_zero(b) {
                    continue;
                }
                let ab = f.mul(a, b);
                for (k, c) in &self.mult[i * self.dim + j] {
                    f.add_mul_assign(&mut out[*k], &ab, c);
                }
            }
        }
        out
    }

    /// Matrix of `y -> x y`.
    pub fn left_mul(&self, x: &[K::Elem]) -> Mat<K> {
        let cols: Vec<_> = (0..self.dim).map(|j| self.mul(x, &self.basis_vector(j))).collect();
        Mat::from_cols(&self.field, self.dim, &cols)
    }

    /// Matrix of `y -> y x`.
    pub fn right_mul(&self, x: &[K::Elem]) -> Mat<K> {
        let cols: Vec<_> = (0..self.dim).map(|j| self.mul(&self.basis_vector(j), x)).collect();
        Mat::from_cols(&self.field, self.dim, &cols)
    }

    /// Dimension of `A e_i`.
    pub fn projective_dim(&self, i: usize) -> usize {
        self.root_words[i].len()
    }

    pub(crate) fn projective_generator_action(&self, root: usize, g: usize) -> &Mat<K> {
        &self.proj[root].gens[g]
    }

    /// Same structure constants, idempotents and generators.
    pub fn same_as(&self, other: &Self) -> bool {
        core::ptr::eq(self, other)
            || (self.dim == other.dim
                && self.idempotents == other.idempotents
                && self.mult == other.mult
                && self.generators.len() == other.generators.len()
                && self
                    .generators
                    .iter()
                    .zip(&other.generators)
                    .all(|(a, b)| a.source == b.source && a.target == b.target && a.vector == b.vector))
    }

    /// `dim e_i A e_j` for all vertex pairs.
    pub fn cartan_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.num_vertices();
        let mut c = vec![vec![0; n]; n];
        for w in &self.words {
            c[w.target][w.root] += 1;
        }
        c
    }

    /// Word coordinates restricted to the words rooted at `root`.
    pub fn projective_coords(&self, root: usize, x: &[K::Elem]) -> Vec<K::Elem> {
        let c = self.to_words.mul_vec(x);
        self.root_words[root].iter().map(|&w| c[w].clone()).collect()
    }

    /// Whether `x` lies in the radical.
    pub fn in_radical(&self, x: &[K::Elem]) -> bool {
        is_zero_vec(&self.field, &self.top_coords(x))
    }

    /// Matrix of an algebra map `self -> other` sending basis vectors to
    /// the given columns; checks unit, multiplicativity and bijectivity.
    pub fn is_isomorphism(&self, other: &Self, map: &Mat<K>) -> bool {
        if map.rows() != other.dim || map.cols() != self.dim || self.dim != other.dim {
            return false;
        }
        if map.mul_vec(&self.unit) != other.unit || map.rank() != self.dim {
            return false;
        }
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                let p = map.mul_vec(&self.mul(&self.basis_vector(i), &self.basis_vector(j)));
                if p != other.mul(&map.col(i), &map.col(j)) {
                    return false;
                }
            }
        }
        true
    }
}
