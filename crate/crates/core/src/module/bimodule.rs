//! Bimodules as commuting left and right actions.

use alloc::vec::Vec;

use super::{Action, FdModule};
use crate::algebra::{AlgRef, AlgebraTable};
use crate::arith::{kron_vec, Field, Mat};
use crate::error::ModuleError;

/// An `A`-`B` bimodule. The right action is stored as matrices `R(b)` with
/// `R(bc) = R(c) R(b)`, on the idempotents and generators of `B`; this is
/// the same data as a left module over `B^op`.
#[derive(Clone, Debug)]
pub struct Bimodule<K: Field> {
    left: AlgRef<K>,
    right: AlgRef<K>,
    dim: usize,
    l_idem: Vec<Mat<K>>,
    l_gens: Vec<Mat<K>>,
    r_idem: Vec<Mat<K>>,
    r_gens: Vec<Mat<K>>,
}

impl<K: Field> Bimodule<K> {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        left: AlgRef<K>,
        right: AlgRef<K>,
        dim: usize,
        l_idem: Vec<Mat<K>>,
        l_gens: Vec<Mat<K>>,
        r_idem: Vec<Mat<K>>,
        r_gens: Vec<Mat<K>>,
    ) -> Result<Self, ModuleError> {
        let b = Bimodule { left, right, dim, l_idem, l_gens, r_idem, r_gens };
        b.verify()?;
        Ok(b)
    }

    #[allow(clippy::too_many_arguments)]
    pub(crate) fn new_unchecked(
        left: AlgRef<K>,
        right: AlgRef<K>,
        dim: usize,
        l_idem: Vec<Mat<K>>,
        l_gens: Vec<Mat<K>>,
        r_idem: Vec<Mat<K>>,
        r_gens: Vec<Mat<K>>,
    ) -> Self {
        let b = Bimodule { left, right, dim, l_idem, l_gens, r_idem, r_gens };
        if cfg!(debug_assertions) && dim <= super::DEBUG_VERIFY_DIM && b.left.dim() <= 64 && b.right.dim() <= 64 {
            if let Err(e) = b.verify() {
                panic!("internal bimodule construction is invalid: {e}");
            }
        }
        b
    }

    pub fn verify(&self) -> Result<(), ModuleError> {
        self.left_data().verify(self.dim).map_err(ModuleError::NotAModule)?;
        self.right_data().verify(self.dim).map_err(ModuleError::NotAModule)?;
        for l in self.l_idem.iter().chain(&self.l_gens) {
            for r in self.r_idem.iter().chain(&self.r_gens) {
                if l.mul(r) != r.mul(l) {
                    return Err(ModuleError::NotAModule("left and right actions do not commute".into()));
                }
            }
        }
        Ok(())
    }

    pub(crate) fn left_data(&self) -> Action<'_, K> {
        Action { alg: &self.left, idem: &self.l_idem, gens: &self.l_gens, reversed: false }
    }

    pub(crate) fn right_data(&self) -> Action<'_, K> {
        Action { alg: &self.right, idem: &self.r_idem, gens: &self.r_gens, reversed: true }
    }

    pub fn left_algebra(&self) -> &AlgRef<K> {
        &self.left
    }
    pub fn right_algebra(&self) -> &AlgRef<K> {
        &self.right
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn field(&self) -> &K {
        self.left.field()
    }
    pub fn left_idempotent_actions(&self) -> &[Mat<K>] {
        &self.l_idem
    }
    pub fn left_generator_actions(&self) -> &[Mat<K>] {
        &self.l_gens
    }
    pub fn right_idempotent_actions(&self) -> &[Mat<K>] {
        &self.r_idem
    }
    pub fn right_generator_actions(&self) -> &[Mat<K>] {
        &self.r_gens
    }

    pub fn left_action(&self, a: &[K::Elem]) -> Mat<K> {
        self.left_data().of(a)
    }

    pub fn right_action(&self, b: &[K::Elem]) -> Mat<K> {
        self.right_data().of(b)
    }

    pub fn left_basis_actions(&self) -> Vec<Mat<K>> {
        self.left_data().basis()
    }

    pub fn right_basis_actions(&self) -> Vec<Mat<K>> {
        self.right_data().basis()
    }

    /// The underlying left module.
    pub fn left_module(&self) -> FdModule<K> {
        FdModule { algebra: self.left.clone(), dim: self.dim, idem: self.l_idem.clone(), gens: self.l_gens.clone() }
    }

    /// The underlying right module as a left module over `op`, which must be
    /// the opposite of the right algebra.
    pub fn right_module(&self, op: AlgRef<K>) -> Result<FdModule<K>, ModuleError> {
        if op.dim() != self.right.dim() || op.generators().len() != self.right.generators().len() {
            return Err(ModuleError::WrongAlgebra);
        }
        Ok(FdModule { algebra: op, dim: self.dim, idem: self.r_idem.clone(), gens: self.r_gens.clone() })
    }

    /// A left module, with the ground field acting on the right.
    pub fn from_left(m: &FdModule<K>) -> Self {
        let f = m.field().clone();
        let k = AlgRef::new(AlgebraTable::ground(&f));
        Bimodule {
            left: m.algebra.clone(),
            right: k,
            dim: m.dim,
            l_idem: m.idem.clone(),
            l_gens: m.gens.clone(),
            r_idem: alloc::vec![Mat::identity(&f, m.dim)],
            r_gens: Vec::new(),
        }
    }

    /// A right `B`-module given as a left module over `B^op`, with the
    /// ground field acting on the left.
    pub fn from_right(m: &FdModule<K>, right: AlgRef<K>) -> Result<Self, ModuleError> {
        if right.dim() != m.algebra.dim() || right.generators().len() != m.algebra.generators().len() {
            return Err(ModuleError::WrongAlgebra);
        }
        let f = m.field().clone();
        let k = AlgRef::new(AlgebraTable::ground(&f));
        Ok(Bimodule {
            left: k,
            right,
            dim: m.dim,
            l_idem: alloc::vec![Mat::identity(&f, m.dim)],
            l_gens: Vec::new(),
            r_idem: m.idem.clone(),
            r_gens: m.gens.clone(),
        })
    }

    /// The algebra as a bimodule over itself.
    pub fn regular(a: AlgRef<K>) -> Self {
        let l_idem = a.idempotents().iter().map(|e| a.left_mul(e)).collect();
        let l_gens = a.generators().iter().map(|g| a.left_mul(&g.vector)).collect();
        let r_idem = a.idempotents().iter().map(|e| a.right_mul(e)).collect();
        let r_gens = a.generators().iter().map(|g| a.right_mul(&g.vector)).collect();
        let d = a.dim();
        Bimodule::new_unchecked(a.clone(), a, d, l_idem, l_gens, r_idem, r_gens)
    }

    /// `X (x)_k Y` for a left `A`-module `X` and a right `B`-module `Y`
    /// (given over `B^op`).
    pub fn outer(x: &FdModule<K>, y: &FdModule<K>, right: AlgRef<K>) -> Result<Self, ModuleError> {
        if right.dim() != y.algebra.dim() || right.generators().len() != y.algebra.generators().len() {
            return Err(ModuleError::WrongAlgebra);
        }
        let f = x.field().clone();
        let ix = Mat::identity(&f, x.dim);
        let iy = Mat::identity(&f, y.dim);
        let l_idem = x.idem.iter().map(|m| m.kron(&iy)).collect();
        let l_gens = x.gens.iter().map(|m| m.kron(&iy)).collect();
        let r_idem = y.idem.iter().map(|m| ix.kron(m)).collect();
        let r_gens = y.gens.iter().map(|m| ix.kron(m)).collect();
        Ok(Bimodule::new_unchecked(x.algebra.clone(), right, x.dim * y.dim, l_idem, l_gens, r_idem, r_gens))
    }

    /// Whether `env` has the shape of `A (x) B^op` for this bimodule.
    fn env_shape_ok(&self, env: &AlgebraTable<K>) -> bool {
        env.dim() == self.left.dim() * self.right.dim()
            && env.num_vertices() == self.left.num_vertices() * self.right.num_vertices()
    }

    /// The corresponding left module over `env = A (x) B^op`, where
    /// `a (x) b` acts by `L(a) R(b)`.
    pub fn to_enveloping(&self, env: AlgRef<K>) -> Result<FdModule<K>, ModuleError> {
        if !self.env_shape_ok(&env) {
            return Err(ModuleError::WrongAlgebra);
        }
        let f = self.field().clone();
        let db = self.right.dim();
        let lb = self.left_basis_actions();
        let rb = self.right_basis_actions();
        let act = |x: &[K::Elem]| {
            let mut out = Mat::zeros(&f, self.dim, self.dim);
            for (idx, c) in x.iter().enumerate() {
                if f.is_zero(c) {
                    continue;
                }
                out.add_scaled(c, &lb[idx / db].mul(&rb[idx % db]));
            }
            out
        };
        let idem = env.idempotents().iter().map(|e| act(e)).collect();
        let gens = env.generators().iter().map(|g| act(&g.vector)).collect();
        Ok(FdModule::new_unchecked(env, self.dim, idem, gens))
    }

    /// Inverse of [`Bimodule::to_enveloping`].
    pub fn from_enveloping(m: &FdModule<K>, left: AlgRef<K>, right: AlgRef<K>) -> Result<Self, ModuleError> {
        let env = m.algebra();
        if env.dim() != left.dim() * right.dim() || env.num_vertices() != left.num_vertices() * right.num_vertices() {
            return Err(ModuleError::WrongAlgebra);
        }
        let f = m.field().clone();
        let l_of = |a: &[K::Elem]| m.action(&kron_vec(&f, a, right.unit()));
        let r_of = |b: &[K::Elem]| m.action(&kron_vec(&f, left.unit(), b));
        let l_idem = left.idempotents().iter().map(|e| l_of(e)).collect();
        let l_gens = left.generators().iter().map(|g| l_of(&g.vector)).collect();
        let r_idem = right.idempotents().iter().map(|e| r_of(e)).collect();
        let r_gens = right.generators().iter().map(|g| r_of(&g.vector)).collect();
        Bimodule::new(left, right, m.dim(), l_idem, l_gens, r_idem, r_gens)
    }

    /// `D(X) = Hom_k(X, k)` as a `B`-`A` bimodule.
    pub fn dual(&self) -> Self {
        let t = |v: &[Mat<K>]| v.iter().map(|m| m.transpose()).collect::<Vec<_>>();
        Bimodule::new_unchecked(
            self.right.clone(),
            self.left.clone(),
            self.dim,
            t(&self.r_idem),
            t(&self.r_gens),
            t(&self.l_idem),
            t(&self.l_gens),
        )
    }

    /// Restriction along algebra maps into the left and right algebras.
    pub fn restrict(&self, left: AlgRef<K>, phi_l: &Mat<K>, right: AlgRef<K>, phi_r: &Mat<K>) -> Self {
        let l = |x: &[K::Elem]| self.left_action(&phi_l.mul_vec(x));
        let r = |x: &[K::Elem]| self.right_action(&phi_r.mul_vec(x));
        let l_idem = left.idempotents().iter().map(|e| l(e)).collect();
        let l_gens = left.generators().iter().map(|g| l(&g.vector)).collect();
        let r_idem = right.idempotents().iter().map(|e| r(e)).collect();
        let r_gens = right.generators().iter().map(|g| r(&g.vector)).collect();
        Bimodule::new_unchecked(left, right, self.dim, l_idem, l_gens, r_idem, r_gens)
    }

    /// The same data with the algebras replaced by structurally equal ones.
    pub fn rebase(&self, left: AlgRef<K>, right: AlgRef<K>) -> Result<Self, ModuleError> {
        if !left.same_as(&self.left) || !right.same_as(&self.right) {
            return Err(ModuleError::WrongAlgebra);
        }
        Ok(Bimodule { left, right, ..self.clone() })
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }
}
