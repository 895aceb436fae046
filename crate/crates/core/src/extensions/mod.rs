//! Ring extensions `B -> A`, their quotient bimodules, constructions, and
//! the boundedness check with its consequences.

mod bounded;
mod consequences;
mod constructors;

pub use bounded::{
    check_bounded, tensor_powers, BoundedConfig, MAX_POWER_DIM, BoundedPending, BoundedReport, BoundedWitness, TensorPowers,
    TorSide, TorViolation,
};
pub use consequences::{
    ehi_dimension_test, relative_bar_exactness, simple_pairs, verify_sandwich_pd, verify_tor_consequences,
    BarFailure, BarWitness, ConsequencePending, EhiViolation, EhiWitness, TorFailure, TorFamily,
};
pub use constructors::{
    arrow_removal, remove_arrow, split_extension, split_model, trivial_extension, triangular_algebra, ArrowRemoval, Triangular,
};

use alloc::vec::Vec;

use crate::algebra::{AlgRef, AlgebraTable};
use crate::arith::{unit_vector, Echelon, Field, Mat};
use crate::error::ExtensionError;
use crate::module::Bimodule;

/// An injective unital algebra map `B -> A` with a chosen complement of
/// its image, and a retraction `A -> B` when the complement is an ideal.
#[derive(Clone, Debug)]
pub struct Extension<K: Field> {
    small: AlgRef<K>,
    big: AlgRef<K>,
    embedding: Mat<K>,
    complement: Mat<K>,
    coords: Mat<K>,
    retraction: Option<Mat<K>>,
}

/// `M = A / B` as a `B`-bimodule, with the projection `A -> M`.
#[derive(Clone, Debug)]
pub struct QuotientBimodule<K: Field> {
    pub module: Bimodule<K>,
    pub projection: Mat<K>,
}

/// Validates an embedding given as a `dim A x dim B` matrix. A complement
/// is chosen from standard basis vectors when none is supplied.
pub fn make_extension<K: Field>(
    small: AlgRef<K>,
    big: AlgRef<K>,
    embedding: Mat<K>,
    complement: Option<Mat<K>>,
) -> Result<Extension<K>, ExtensionError> {
    let (da, db) = (big.dim(), small.dim());
    if embedding.rows() != da || embedding.cols() != db {
        return Err(ExtensionError::BadShape { expected: (da, db), found: (embedding.rows(), embedding.cols()) });
    }
    if embedding.mul_vec(small.unit()) != big.unit() {
        return Err(ExtensionError::NotUnital);
    }
    let images = embedding.to_cols();
    for i in 0..db {
        for j in 0..db {
            let lhs = embedding.mul_vec(&small.mul(&small.basis_vector(i), &small.basis_vector(j)));
            if lhs != big.mul(&images[i], &images[j]) {
                return Err(ExtensionError::NotMultiplicative(i, j));
            }
        }
    }
    if embedding.rank() != db {
        return Err(ExtensionError::NotInjective);
    }
    let f = big.field().clone();
    let complement = match complement {
        Some(c) => c,
        None => {
            let mut ech = Echelon::new(&f, da);
            for c in &images {
                ech.insert(c);
            }
            let cols: Vec<_> =
                (0..da).map(|k| unit_vector(&f, da, k)).filter(|e| ech.insert(e)).collect();
            Mat::from_cols(&f, da, &cols)
        }
    };
    if complement.rows() != da || complement.cols() + db != da {
        return Err(ExtensionError::BadComplement);
    }
    let coords = embedding.hstack(&complement).inverse().ok_or(ExtensionError::BadComplement)?;
    let mut e = Extension { small, big, embedding, complement, coords, retraction: None };
    e.retraction = e.detect_retraction();
    Ok(e)
}

impl<K: Field> Extension<K> {
    /// The projection along the complement, if it is an algebra map.
    fn detect_retraction(&self) -> Option<Mat<K>> {
        let big = &self.big;
        let (da, db) = (big.dim(), self.small.dim());
        let q = self.coords.block(0, 0, db, da);
        let mut ideal = Echelon::new(big.field(), da);
        for c in self.complement.to_cols() {
            ideal.insert(&c);
        }
        for c in self.complement.to_cols() {
            for g in big.generators().iter().map(|g| g.vector.clone()).chain(big.idempotents().iter().cloned()) {
                if !ideal.contains(&big.mul(&g, &c)) || !ideal.contains(&big.mul(&c, &g)) {
                    return None;
                }
            }
        }
        Some(q)
    }

    pub fn small(&self) -> &AlgRef<K> {
        &self.small
    }
    pub fn big(&self) -> &AlgRef<K> {
        &self.big
    }
    pub fn embedding(&self) -> &Mat<K> {
        &self.embedding
    }
    pub fn complement(&self) -> &Mat<K> {
        &self.complement
    }
    /// An algebra map `A -> B` left inverse to the embedding, whose kernel
    /// is the complement.
    pub fn retraction(&self) -> Option<&Mat<K>> {
        self.retraction.as_ref()
    }
    pub fn is_split(&self) -> bool {
        self.retraction.is_some()
    }

    /// `dim A - dim B`.
    pub fn quotient_dim(&self) -> usize {
        self.complement.cols()
    }

    /// `A / B` with actions induced through the embedding.
    pub fn quotient_bimodule(&self) -> QuotientBimodule<K> {
        let (da, db) = (self.big.dim(), self.small.dim());
        let dm = da - db;
        let projection = self.coords.block(db, 0, dm, da);
        let big = &self.big;
        let comp = self.complement.to_cols();
        let f = big.field();
        let left = |b: &[K::Elem]| {
            let x = self.embedding.mul_vec(b);
            let cols: Vec<_> = comp.iter().map(|c| projection.mul_vec(&big.mul(&x, c))).collect();
            Mat::from_cols(f, dm, &cols)
        };
        let right = |b: &[K::Elem]| {
            let x = self.embedding.mul_vec(b);
            let cols: Vec<_> = comp.iter().map(|c| projection.mul_vec(&big.mul(c, &x))).collect();
            Mat::from_cols(f, dm, &cols)
        };
        let s = &self.small;
        let module = Bimodule::new_unchecked(
            s.clone(),
            s.clone(),
            dm,
            s.idempotents().iter().map(|e| left(e)).collect(),
            s.generators().iter().map(|g| left(&g.vector)).collect(),
            s.idempotents().iter().map(|e| right(e)).collect(),
            s.generators().iter().map(|g| right(&g.vector)).collect(),
        );
        QuotientBimodule { module, projection }
    }

    /// `A` as a `B`-`B` bimodule.
    pub fn big_over_small(&self) -> Bimodule<K> {
        Bimodule::regular(self.big.clone()).restrict(
            self.small.clone(),
            &self.embedding,
            self.small.clone(),
            &self.embedding,
        )
    }

    /// `A` as an `A`-`B` bimodule.
    pub fn big_left(&self) -> Bimodule<K> {
        let id = Mat::identity(self.big.field(), self.big.dim());
        Bimodule::regular(self.big.clone()).restrict(self.big.clone(), &id, self.small.clone(), &self.embedding)
    }

    /// `A` as a `B`-`A` bimodule.
    pub fn big_right(&self) -> Bimodule<K> {
        let id = Mat::identity(self.big.field(), self.big.dim());
        Bimodule::regular(self.big.clone()).restrict(self.small.clone(), &self.embedding, self.big.clone(), &id)
    }

    /// The identity extension `A -> A`.
    pub fn identity(a: AlgRef<K>) -> Self {
        let id = Mat::identity(a.field(), a.dim());
        make_extension(a.clone(), a, id, None).expect("identity is an extension")
    }
}

/// The algebra map `B -> A` matching vertices and generators by label,
/// extended multiplicatively along the word basis of `B`. Returns `None`
/// when a label has no counterpart.
pub fn embedding_by_names<K: Field>(small: &AlgebraTable<K>, big: &AlgebraTable<K>) -> Option<Mat<K>> {
    let f = small.field();
    let vmap: Vec<usize> = small
        .vertex_labels()
        .iter()
        .map(|v| big.vertex_labels().iter().position(|w| w == v))
        .collect::<Option<_>>()?;
    let gmap: Vec<usize> = small
        .generators()
        .iter()
        .map(|g| big.generators().iter().position(|h| h.label == g.label))
        .collect::<Option<_>>()?;
    let mut word_images: Vec<Vec<K::Elem>> = Vec::with_capacity(small.dim());
    for w in small.words() {
        let img = match (w.parent, w.generator) {
            (Some(p), Some(g)) => big.mul(&big.generators()[gmap[g]].vector, &word_images[p]),
            _ => big.idempotent(vmap[w.root]).to_vec(),
        };
        word_images.push(img);
    }
    let t = small.to_words();
    let cols: Vec<Vec<K::Elem>> = (0..small.dim())
        .map(|k| {
            let mut v = alloc::vec![f.zero(); big.dim()];
            for (w, img) in word_images.iter().enumerate() {
                crate::arith::axpy(f, &mut v, t.get(w, k), img);
            }
            v
        })
        .collect();
    Some(Mat::from_cols(f, big.dim(), &cols))
}
