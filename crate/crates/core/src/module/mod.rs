//! Finite-dimensional modules and bimodules.

mod action;
mod bimodule;
mod hom;
mod iso;
mod tensor;

pub use bimodule::Bimodule;
pub use hom::{hom_space, is_homomorphism};
pub use iso::{random_iso_test, strip_projective_summands, IsoObstruction, Stripped};
pub use tensor::{tensor_chain, tensor_over, TensorProduct};

pub(crate) use action::Action;

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::AlgRef;
use crate::arith::{Echelon, Field, Mat};
use crate::error::ModuleError;

/// See [`FdModule::top_and_radical`].
#[derive(Clone, Debug)]
pub struct TopRadical<K: Field> {
    pub top: FdModule<K>,
    pub radical: FdModule<K>,
    /// `M -> top`.
    pub projection: Mat<K>,
    /// `rad M -> M`.
    pub inclusion: Mat<K>,
}

/// Internal constructions are re-verified in debug builds up to this size.
const DEBUG_VERIFY_DIM: usize = 24;

/// A finite-dimensional left module, stored as the action matrices of the
/// primitive idempotents and of the arrow generators of its algebra.
#[derive(Clone, Debug)]
pub struct FdModule<K: Field> {
    algebra: AlgRef<K>,
    dim: usize,
    idem: Vec<Mat<K>>,
    gens: Vec<Mat<K>>,
}

impl<K: Field> FdModule<K> {
    /// Checked constructor from idempotent and generator actions.
    pub fn new(
        algebra: AlgRef<K>,
        dim: usize,
        idem: Vec<Mat<K>>,
        gens: Vec<Mat<K>>,
    ) -> Result<Self, ModuleError> {
        let m = FdModule { algebra, dim, idem, gens };
        m.verify()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(algebra: AlgRef<K>, dim: usize, idem: Vec<Mat<K>>, gens: Vec<Mat<K>>) -> Self {
        let m = FdModule { algebra, dim, idem, gens };
        if cfg!(debug_assertions) && dim <= DEBUG_VERIFY_DIM && m.algebra.dim() <= 64 {
            if let Err(e) = m.verify() {
                panic!("internal module construction is invalid: {e}");
            }
        }
        m
    }

    /// Checked constructor from the actions of every basis element.
    pub fn from_basis_actions(algebra: AlgRef<K>, dim: usize, acts: Vec<Mat<K>>) -> Result<Self, ModuleError> {
        let alg = &algebra;
        if acts.len() != alg.dim() {
            return Err(ModuleError::DimensionMismatch { expected: alg.dim(), found: acts.len() });
        }
        if acts.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(ModuleError::NotAModule("action matrix has the wrong shape".into()));
        }
        let f = alg.field().clone();
        let combine = |x: &[K::Elem]| {
            let mut out = Mat::zeros(&f, dim, dim);
            for (k, c) in x.iter().enumerate() {
                out.add_scaled(c, &acts[k]);
            }
            out
        };
        let idem = alg.idempotents().iter().map(|e| combine(e)).collect();
        let gens = alg.generators().iter().map(|g| combine(&g.vector)).collect();
        let m = FdModule::new(algebra.clone(), dim, idem, gens)?;
        for (k, a) in m.basis_actions().iter().enumerate() {
            if *a != acts[k] {
                return Err(ModuleError::NotAModule(alloc::format!(
                    "action of basis element '{}' is not determined by the generators",
                    m.algebra.labels()[k]
                )));
            }
        }
        Ok(m)
    }

    pub fn verify(&self) -> Result<(), ModuleError> {
        self.action_data().verify(self.dim).map_err(ModuleError::NotAModule)
    }

    pub(crate) fn action_data(&self) -> Action<'_, K> {
        Action { alg: &self.algebra, idem: &self.idem, gens: &self.gens, reversed: false }
    }

    pub fn algebra(&self) -> &AlgRef<K> {
        &self.algebra
    }
    pub fn field(&self) -> &K {
        self.algebra.field()
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn idempotent_action(&self, i: usize) -> &Mat<K> {
        &self.idem[i]
    }
    pub fn idempotent_actions(&self) -> &[Mat<K>] {
        &self.idem
    }
    pub fn generator_action(&self, g: usize) -> &Mat<K> {
        &self.gens[g]
    }
    pub fn generator_actions(&self) -> &[Mat<K>] {
        &self.gens
    }

    /// Action matrix of an arbitrary algebra element.
    pub fn action(&self, x: &[K::Elem]) -> Mat<K> {
        self.action_data().of(x)
    }

    /// Actions of all standard basis elements of the algebra.
    pub fn basis_actions(&self) -> Vec<Mat<K>> {
        self.action_data().basis()
    }

    /// Actions of the word basis elements.
    pub fn word_actions(&self) -> Vec<Mat<K>> {
        self.action_data().all_words()
    }

    /// `x . v`, walking the word tree on vectors.
    pub fn apply(&self, x: &[K::Elem], v: &[K::Elem]) -> Vec<K::Elem> {
        let alg = &self.algebra;
        let f = alg.field();
        let c = alg.to_words().mul_vec(x);
        let images = self.word_images(v, |w| !f.is_zero(&c[w]));
        let mut out = vec![f.zero(); self.dim];
        for (w, img) in images.iter().enumerate() {
            if let Some(img) = img {
                crate::arith::axpy(f, &mut out, &c[w], img);
            }
        }
        out
    }

    /// `w . v` for the words selected by `want` and their ancestors.
    pub(crate) fn word_images(&self, v: &[K::Elem], want: impl Fn(usize) -> bool) -> Vec<Option<Vec<K::Elem>>> {
        let words = self.algebra.words();
        let mut need: Vec<bool> = (0..words.len()).map(&want).collect();
        for w in (0..words.len()).rev() {
            if need[w] {
                if let Some(p) = words[w].parent {
                    need[p] = true;
                }
            }
        }
        let mut out: Vec<Option<Vec<K::Elem>>> = vec![None; words.len()];
        for w in 0..words.len() {
            if !need[w] {
                continue;
            }
            out[w] = Some(match (words[w].parent, words[w].generator) {
                (Some(p), Some(g)) => self.gens[g].mul_vec(out[p].as_ref().expect("parent first")),
                _ => self.idem[words[w].root].mul_vec(v),
            });
        }
        out
    }

    pub fn zero(algebra: AlgRef<K>) -> Self {
        let f = algebra.field().clone();
        let idem = vec![Mat::zeros(&f, 0, 0); algebra.num_vertices()];
        let gens = vec![Mat::zeros(&f, 0, 0); algebra.generators().len()];
        FdModule { algebra, dim: 0, idem, gens }
    }

    pub fn simple(algebra: AlgRef<K>, vertex: usize) -> Result<Self, ModuleError> {
        let n = algebra.num_vertices();
        if vertex >= n {
            return Err(ModuleError::NoSuchVertex(vertex));
        }
        let f = algebra.field().clone();
        let idem = (0..n)
            .map(|i| if i == vertex { Mat::identity(&f, 1) } else { Mat::zeros(&f, 1, 1) })
            .collect();
        let gens = vec![Mat::zeros(&f, 1, 1); algebra.generators().len()];
        Ok(FdModule { algebra, dim: 1, idem, gens })
    }

    /// `A e_vertex` in its word basis.
    pub fn projective(algebra: AlgRef<K>, vertex: usize) -> Result<Self, ModuleError> {
        let n = algebra.num_vertices();
        if vertex >= n {
            return Err(ModuleError::NoSuchVertex(vertex));
        }
        let f = algebra.field().clone();
        let local = algebra.root_words(vertex);
        let d = local.len();
        let idem = (0..n)
            .map(|i| {
                let mut m = Mat::zeros(&f, d, d);
                for (l, &w) in local.iter().enumerate() {
                    if algebra.words()[w].target == i {
                        m.set(l, l, f.one());
                    }
                }
                m
            })
            .collect();
        let gens = (0..algebra.generators().len())
            .map(|g| algebra.projective_generator_action(vertex, g).clone())
            .collect();
        Ok(FdModule { algebra, dim: d, idem, gens })
    }

    /// The algebra acting on itself by left multiplication, in its
    /// standard basis.
    pub fn regular(algebra: AlgRef<K>) -> Self {
        let idem = algebra.idempotents().iter().map(|e| algebra.left_mul(e)).collect();
        let gens = algebra.generators().iter().map(|g| algebra.left_mul(&g.vector)).collect();
        let d = algebra.dim();
        FdModule::new_unchecked(algebra, d, idem, gens)
    }

    pub fn direct_sum(algebra: AlgRef<K>, parts: &[FdModule<K>]) -> Self {
        let f = algebra.field().clone();
        let dim = parts.iter().map(|p| p.dim).sum();
        let idem = (0..algebra.num_vertices())
            .map(|i| Mat::block_diag(&f, &parts.iter().map(|p| p.idem[i].clone()).collect::<Vec<_>>()))
            .collect();
        let gens = (0..algebra.generators().len())
            .map(|g| Mat::block_diag(&f, &parts.iter().map(|p| p.gens[g].clone()).collect::<Vec<_>>()))
            .collect();
        FdModule { algebra, dim, idem, gens }
    }

    /// Direct sum of projectives `A e_i` for the listed vertices.
    pub fn free(algebra: AlgRef<K>, vertices: &[usize]) -> Self {
        let parts: Vec<_> = vertices
            .iter()
            .map(|&v| FdModule::projective(algebra.clone(), v).expect("vertex in range"))
            .collect();
        FdModule::direct_sum(algebra, &parts)
    }

    /// The submodule spanned by the columns of `basis`, which must be
    /// independent, with actions in that basis.
    pub fn submodule(&self, basis: &Mat<K>) -> Result<Self, ModuleError> {
        let left = basis.left_inverse().ok_or(ModuleError::NotSubmodule)?;
        let restrict = |m: &Mat<K>| -> Result<Mat<K>, ModuleError> {
            let img = m.mul(basis);
            let r = left.mul(&img);
            if basis.mul(&r) != img {
                return Err(ModuleError::NotSubmodule);
            }
            Ok(r)
        };
        let idem = self.idem.iter().map(restrict).collect::<Result<Vec<_>, _>>()?;
        let gens = self.gens.iter().map(restrict).collect::<Result<Vec<_>, _>>()?;
        Ok(FdModule { algebra: self.algebra.clone(), dim: basis.cols(), idem, gens })
    }

    /// Submodule for a basis already known to span an invariant subspace.
    pub(crate) fn submodule_trusted(&self, basis: &Mat<K>) -> Self {
        let left = basis.left_inverse().expect("independent columns");
        let restrict = |m: &Mat<K>| left.mul(&m.mul(basis));
        let idem = self.idem.iter().map(restrict).collect();
        let gens = self.gens.iter().map(restrict).collect();
        FdModule::new_unchecked(self.algebra.clone(), basis.cols(), idem, gens)
    }

    /// Quotient by the submodule spanned by the columns of `sub`; returns
    /// the quotient and the projection matrix.
    pub fn quotient(&self, sub: &Mat<K>) -> Result<(Self, Mat<K>), ModuleError> {
        let f = self.field();
        self.submodule(&sub.column_basis())?;
        let mut ech = Echelon::new(f, self.dim);
        for c in sub.to_cols() {
            ech.insert(&c);
        }
        let base = ech.dim();
        let mut comp = Vec::new();
        for k in 0..self.dim {
            let e = crate::arith::unit_vector(f, self.dim, k);
            if ech.insert(&e) {
                comp.push(e);
            }
        }
        let mut cols = sub.column_basis().to_cols();
        cols.extend(comp.iter().cloned());
        let full = Mat::from_cols(f, self.dim, &cols);
        let inv = full.inverse().expect("basis of the ambient space");
        let proj = inv.block(base, 0, self.dim - base, self.dim);
        let section = Mat::from_cols(f, self.dim, &comp);
        let act = |m: &Mat<K>| proj.mul(&m.mul(&section));
        let idem = self.idem.iter().map(act).collect();
        let gens = self.gens.iter().map(act).collect();
        let q = FdModule::new_unchecked(self.algebra.clone(), self.dim - base, idem, gens);
        Ok((q, proj))
    }

    /// `D(M) = Hom_k(M, k)` over the opposite algebra `op`.
    pub fn dual(&self, op: AlgRef<K>) -> Result<Self, ModuleError> {
        if op.dim() != self.algebra.dim() || op.num_vertices() != self.algebra.num_vertices() {
            return Err(ModuleError::WrongAlgebra);
        }
        let idem = self.idem.iter().map(|m| m.transpose()).collect();
        let gens = self.gens.iter().map(|m| m.transpose()).collect();
        Ok(FdModule::new_unchecked(op, self.dim, idem, gens))
    }

    /// Restriction of scalars along an algebra map `B -> A` given by its
    /// matrix (`dim A x dim B`).
    pub fn restrict(&self, small: AlgRef<K>, embedding: &Mat<K>) -> Self {
        let idem = small.idempotents().iter().map(|e| self.action(&embedding.mul_vec(e))).collect();
        let gens = small.generators().iter().map(|g| self.action(&embedding.mul_vec(&g.vector))).collect();
        FdModule::new_unchecked(small, self.dim, idem, gens)
    }

    /// The same data viewed over an algebra with identical structure.
    pub fn rebase(&self, algebra: AlgRef<K>) -> Result<Self, ModuleError> {
        if !algebra.same_as(&self.algebra) {
            return Err(ModuleError::WrongAlgebra);
        }
        Ok(FdModule { algebra, dim: self.dim, idem: self.idem.clone(), gens: self.gens.clone() })
    }

    /// `dim e_i M` for each vertex.
    pub fn dimension_vector(&self) -> Vec<usize> {
        self.idem.iter().map(|m| m.rank()).collect()
    }

    /// Basis of `rad M`, the sum of the images of the generators.
    pub fn radical_basis(&self) -> Mat<K> {
        let f = self.field();
        let mut all = Mat::zeros(f, self.dim, 0);
        for g in &self.gens {
            all = all.hstack(g);
        }
        all.column_basis()
    }

    /// `rad M` and `M / rad M` with the inclusion and projection.
    pub fn top_and_radical(&self) -> TopRadical<K> {
        let inclusion = self.radical_basis();
        let radical = self.submodule_trusted(&inclusion);
        let (top, projection) = self.quotient(&inclusion).expect("radical is a submodule");
        TopRadical { top, radical, projection, inclusion }
    }

    /// The simple modules, one per vertex.
    pub fn simples(algebra: &AlgRef<K>) -> Vec<Self> {
        (0..algebra.num_vertices()).map(|v| FdModule::simple(algebra.clone(), v).expect("vertex")).collect()
    }

    /// The indecomposable projectives `A e_i`.
    pub fn projectives(algebra: &AlgRef<K>) -> Vec<Self> {
        (0..algebra.num_vertices()).map(|v| FdModule::projective(algebra.clone(), v).expect("vertex")).collect()
    }

    /// `dim e_i (M / rad M)` for each vertex.
    pub fn top_dims(&self) -> Vec<usize> {
        let rad = self.radical_basis();
        self.idem.iter().map(|e| e.rank() - e.mul(&rad).rank()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    pub fn same_algebra(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra.same_as(&other.algebra)
    }

    /// Identical action matrices over the same algebra.
    pub fn same_as(&self, other: &Self) -> bool {
        self.same_algebra(other) && self.dim == other.dim && self.idem == other.idem && self.gens == other.gens
    }
}

/// Column basis and coordinate map of `e_i M` for each vertex.
pub(crate) struct VertexSplitting<K: Field> {
    pub basis: Vec<Mat<K>>,
    pub coords: Vec<Mat<K>>,
}

impl<K: Field> VertexSplitting<K> {
    pub fn new(idem: &[Mat<K>]) -> Self {
        let mut basis = Vec::new();
        let mut coords = Vec::new();
        for e in idem {
            let b = e.column_basis();
            let c = match b.left_inverse() {
                Some(l) => l.mul(e),
                None => Mat::zeros(e.field(), 0, e.cols()),
            };
            basis.push(b);
            coords.push(c);
        }
        VertexSplitting { basis, coords }
    }

    pub fn dims(&self) -> Vec<usize> {
        self.basis.iter().map(|b| b.cols()).collect()
    }
}
