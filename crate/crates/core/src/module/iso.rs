//! Isomorphism testing and splitting off projective summands.

use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;

use super::{hom_space, is_homomorphism, FdModule, VertexSplitting};
use crate::arith::{Field, Mat};
use crate::error::ModuleError;
use crate::verdict::Verdict;

/// Why two modules cannot be isomorphic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoObstruction {
    Dimension(usize, usize),
    DimensionVector(Vec<usize>, Vec<usize>),
    TopDimensions(Vec<usize>, Vec<usize>),
    /// `Hom(M, N)` has no invertible element.
    NoInvertibleHom,
}

/// Looks for an isomorphism `M -> N` among random combinations of a basis
/// of `Hom(M, N)`. A certificate is an invertible intertwiner, re-verified
/// before it is returned.
pub fn random_iso_test<K: Field>(
    m: &FdModule<K>,
    n: &FdModule<K>,
    trials: usize,
    seed: u64,
) -> Result<Verdict<Mat<K>, IsoObstruction, usize>, ModuleError> {
    if !m.same_algebra(n) {
        return Err(ModuleError::WrongAlgebra);
    }
    if m.dim() != n.dim() {
        return Ok(Verdict::Refuted(IsoObstruction::Dimension(m.dim(), n.dim())));
    }
    let f = m.field().clone();
    if m.dim() == 0 {
        return Ok(Verdict::Certified(Mat::zeros(&f, 0, 0)));
    }
    let (vm, vn) = (m.dimension_vector(), n.dimension_vector());
    if vm != vn {
        return Ok(Verdict::Refuted(IsoObstruction::DimensionVector(vm, vn)));
    }
    let (tm, tn) = (m.top_dims(), n.top_dims());
    if tm != tn {
        return Ok(Verdict::Refuted(IsoObstruction::TopDimensions(tm, tn)));
    }
    let homs = hom_space(m, n)?;
    if homs.is_empty() {
        return Ok(Verdict::Refuted(IsoObstruction::NoInvertibleHom));
    }
    if homs.len() == 1 {
        let h = &homs[0];
        return Ok(if h.rank() == m.dim() {
            Verdict::Certified(h.clone())
        } else {
            Verdict::Refuted(IsoObstruction::NoInvertibleHom)
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for t in 0..trials {
        let range = 2 + t as u64;
        let mut h = Mat::zeros(&f, n.dim(), m.dim());
        for b in &homs {
            h.add_scaled(&f.random_elem(&mut rng, range), b);
        }
        if h.rank() == m.dim() && is_homomorphism(m, n, &h) {
            return Ok(Verdict::Certified(h));
        }
    }
    Ok(Verdict::Inconclusive(trials))
}

/// Result of removing projective summands.
#[derive(Clone, Debug)]
pub struct Stripped<K: Field> {
    /// A module with no nonzero projective summand.
    pub core: FdModule<K>,
    /// Vertices `i` of the removed summands `A e_i`, in removal order.
    pub removed: Vec<usize>,
}

/// Splits off summands `A e_i` until none is left.
///
/// `A e_i` is a summand of `M` exactly when some `v` in `e_i M` and some
/// `g: M -> A e_i` have `g(v)` outside the radical; then `M = A v (+) ker g`.
pub fn strip_projective_summands<K: Field>(m: &FdModule<K>) -> Result<Stripped<K>, ModuleError> {
    let alg = m.algebra().clone();
    let f = alg.field().clone();
    let projectives: Vec<_> = (0..alg.num_vertices())
        .map(|i| FdModule::projective(alg.clone(), i))
        .collect::<Result<_, _>>()?;
    let mut core = m.clone();
    let mut removed = Vec::new();
    'outer: loop {
        if core.dim() == 0 {
            break;
        }
        let split = VertexSplitting::new(core.idempotent_actions());
        for (i, p) in projectives.iter().enumerate() {
            if split.basis[i].cols() == 0 {
                continue;
            }
            let homs = hom_space(&core, p)?;
            for g in &homs {
                let img = g.mul(&split.basis[i]);
                if (0..img.cols()).any(|c| !f.is_zero(img.get(0, c))) {
                    let kernel = g.kernel_basis();
                    core = core.submodule_trusted(&kernel);
                    removed.push(i);
                    continue 'outer;
                }
            }
        }
        break;
    }
    Ok(Stripped { core, removed })
}
