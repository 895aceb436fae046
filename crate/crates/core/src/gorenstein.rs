//! Bounded tests for Gorenstein projectivity, Gorenstein algebras, and
//! certificates of singular equivalences of Morita type with level.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::convert::Infallible;

use crate::algebra::AlgRef;
use crate::arith::{Field, Mat};
use crate::error::GorensteinError;
use crate::homology::{ext_from_resolution, minimal_resolution, projective_cover, syzygy};
use crate::module::{hom_space, random_iso_test, strip_projective_summands, tensor_over, Bimodule, FdModule};
use crate::verdict::Verdict;

/// Why all higher `Ext^i(X, A)` vanish.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PerpReason {
    /// `X` has this projective dimension.
    FiniteProjectiveDimension(usize),
    /// The regular module has this injective dimension.
    SelfInjectiveDimension(usize),
}

/// `Ext^i(x, y)` for `1 <= i <= bound`, with whether the resolution of `x`
/// terminated.
fn ext_window<K: Field>(x: &FdModule<K>, y: &FdModule<K>, bound: usize) -> (Vec<Option<usize>>, Option<usize>) {
    let res = minimal_resolution(x, bound + 1);
    let dims = ext_from_resolution(&res, y, 1..=bound).expect("same algebra");
    (dims.dims, res.length())
}

/// Injective dimension of the left regular module, as the projective
/// dimension of its dual over the opposite algebra.
pub fn regular_injective_dimension<K: Field>(a: &AlgRef<K>, bound: usize) -> Option<usize> {
    let op = Arc::new(a.opposite());
    let d = FdModule::regular(a.clone()).dual(op).expect("opposite algebra");
    minimal_resolution(&d, bound).length()
}

/// `Ext^i(x, A) = 0` for all `i >= 1`. Refuted with the least nonzero
/// degree; inconclusive when only the degrees up to `bound` vanish.
pub fn perp_check<K: Field>(x: &FdModule<K>, bound: usize) -> Verdict<PerpReason, usize, usize> {
    let a = x.algebra().clone();
    let reg = FdModule::regular(a.clone());
    let (dims, pd) = ext_window(x, &reg, bound.max(1));
    for (i, d) in dims.iter().enumerate() {
        if let Some(d) = d {
            if *d > 0 {
                return Verdict::Refuted(i + 1);
            }
        }
    }
    if let Some(n) = pd {
        return Verdict::Certified(PerpReason::FiniteProjectiveDimension(n));
    }
    match regular_injective_dimension(&a, bound) {
        Some(d) if d <= bound && dims.iter().all(Option::is_some) => {
            Verdict::Certified(PerpReason::SelfInjectiveDimension(d))
        }
        _ => Verdict::Inconclusive(bound),
    }
}

/// `X* = Hom_A(X, A)` as a module over `A^op`, with its basis of maps.
pub fn transpose_dual<K: Field>(x: &FdModule<K>, op: AlgRef<K>) -> (FdModule<K>, Vec<Mat<K>>) {
    let a = x.algebra().clone();
    let f = a.field().clone();
    let homs = hom_space(x, &FdModule::regular(a.clone())).expect("same algebra");
    let flat: Vec<Vec<K::Elem>> = homs.iter().map(|h| h.to_rows().concat()).collect();
    let n = a.dim() * x.dim();
    let basis = Mat::from_cols(&f, n, &flat);
    let inv = basis.left_inverse().expect("independent maps");
    let act = |v: &[K::Elem]| {
        let r = a.right_mul(v);
        let cols: Vec<_> = homs.iter().map(|h| inv.mul_vec(&r.mul(h).to_rows().concat())).collect();
        Mat::from_cols(&f, homs.len(), &cols)
    };
    let idem = op.idempotents().iter().map(|e| act(e)).collect();
    let gens = op.generators().iter().map(|g| act(&g.vector)).collect();
    let d = homs.len();
    (FdModule::new(op, d, idem, gens).expect("dual is a module"), homs)
}

/// Total reflexivity evidence for `module` through degree `bound`.
#[derive(Clone, Debug)]
pub struct GpWitness<K: Field> {
    pub module: FdModule<K>,
    pub bound: usize,
    /// `dim Ext^i(X, A)` for `1 <= i <= bound`.
    pub left_vanishing: Vec<Option<usize>>,
    /// `dim Ext^i(X*, A)` over the opposite algebra.
    pub dual_vanishing: Vec<Option<usize>>,
    /// The evaluation `X -> X**` is bijective; refuted with
    /// `(dim X, dim X**, rank)`.
    pub reflexivity: Verdict<(), (usize, usize, usize), Infallible>,
}

impl<K: Field> GpWitness<K> {
    pub fn verdict(&self) -> Verdict<(), GpFailure, usize> {
        let first = |v: &[Option<usize>]| v.iter().position(|d| matches!(d, Some(n) if *n > 0));
        if let Some(i) = first(&self.left_vanishing) {
            return Verdict::Refuted(GpFailure::Ext(i + 1));
        }
        if let Some(i) = first(&self.dual_vanishing) {
            return Verdict::Refuted(GpFailure::DualExt(i + 1));
        }
        if self.reflexivity.is_refuted() {
            return Verdict::Refuted(GpFailure::NotReflexive);
        }
        if self.left_vanishing.iter().chain(&self.dual_vanishing).any(Option::is_none) {
            return Verdict::Inconclusive(self.bound);
        }
        Verdict::Certified(())
    }

    pub fn is_certified(&self) -> bool {
        self.verdict().is_certified()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GpFailure {
    Ext(usize),
    DualExt(usize),
    NotReflexive,
}

/// Ext vanishing on both sides up to `bound` plus reflexivity. Through that
/// degree this is the existence of a complete resolution of `x`.
pub fn gproj_check<K: Field>(x: &FdModule<K>, bound: usize) -> GpWitness<K> {
    let bound = bound.max(1);
    let a = x.algebra().clone();
    let op = Arc::new(a.opposite());
    let (left_vanishing, _) = ext_window(x, &FdModule::regular(a.clone()), bound);
    let (xs, homs) = transpose_dual(x, op.clone());
    let (dual_vanishing, _) = ext_window(&xs, &FdModule::regular(op.clone()), bound);
    let f = a.field().clone();
    let dd = hom_space(&xs, &FdModule::regular(op)).expect("same algebra").len();
    // v -> (f_k(v))_k stacked; injective iff the maps separate points
    let ev = if homs.is_empty() {
        Mat::zeros(&f, 0, x.dim())
    } else {
        homs.iter().skip(1).fold(homs[0].clone(), |acc, h| acc.vstack(h))
    };
    let rank = ev.rank();
    let reflexivity = if rank == x.dim() && dd == x.dim() {
        Verdict::Certified(())
    } else {
        Verdict::Refuted((x.dim(), dd, rank))
    };
    GpWitness { module: x.clone(), bound, left_vanishing, dual_vanishing, reflexivity }
}

/// `Ext^i(u, x) = 0` for every `u` in `testset` and `1 <= i <= bound`. Each
/// test module must itself pass [`gproj_check`]. Refuted with
/// `(test index, degree)`.
pub fn gproj_perp_check<K: Field>(
    x: &FdModule<K>,
    testset: &[FdModule<K>],
    bound: usize,
) -> Result<Verdict<(), (usize, usize), usize>, GorensteinError> {
    for (k, u) in testset.iter().enumerate() {
        if !u.same_algebra(x) {
            return Err(crate::error::ModuleError::WrongAlgebra.into());
        }
        if !gproj_check(u, bound).is_certified() {
            return Err(GorensteinError::TestsetNotCertified(k));
        }
    }
    let mut pending = false;
    for (k, u) in testset.iter().enumerate() {
        let (dims, _) = ext_window(u, x, bound.max(1));
        for (i, d) in dims.iter().enumerate() {
            match d {
                Some(0) => {}
                Some(_) => return Ok(Verdict::Refuted((k, i + 1))),
                None => pending = true,
            }
        }
    }
    Ok(if pending { Verdict::Inconclusive(bound) } else { Verdict::Certified(()) })
}

/// Injective dimensions of the regular module on the left and on the
/// right, certified when both are at most `bound`.
pub fn gorenstein_check<K: Field>(a: &AlgRef<K>, bound: usize) -> Verdict<(usize, usize), Infallible, usize> {
    let op = Arc::new(a.opposite());
    let left = regular_injective_dimension(a, bound);
    let right = minimal_resolution(&FdModule::regular(op).dual(a.clone()).expect("same shape"), bound).length();
    match (left, right) {
        (Some(l), Some(r)) => Verdict::Certified((l, r)),
        _ => Verdict::Inconclusive(bound),
    }
}

/// For a `G`-`L` bimodule `x` and `L`-modules `U`, checks that the `t`-th
/// syzygy of `x (x)_L U` over `G` lies in the left perpendicular of `G`.
/// Refuted with `(sample index, degree)`.
pub fn omega_condition_check<K: Field>(
    x: &Bimodule<K>,
    t: usize,
    samples: &[FdModule<K>],
    bound: usize,
) -> Verdict<Vec<PerpReason>, (usize, usize), usize> {
    let mut reasons = Vec::new();
    let mut pending = false;
    for (k, u) in samples.iter().enumerate() {
        let xu = tensor_over(x, &Bimodule::from_left(u)).expect("algebras match").module.left_module();
        let om = syzygy(&xu, t);
        match perp_check(&om, bound) {
            Verdict::Certified(r) => reasons.push(r),
            Verdict::Refuted(i) => return Verdict::Refuted((k, i)),
            Verdict::Inconclusive(_) => pending = true,
        }
    }
    if pending {
        Verdict::Inconclusive(bound)
    } else {
        Verdict::Certified(reasons)
    }
}

/// The clause of the certificate that failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SmtClause {
    /// `M` is projective as a left `A`-module.
    MLeft,
    /// `M` is projective as a right `B`-module.
    MRight,
    NLeft,
    NRight,
    /// `M (x)_B N` against the syzygy of `A` over `A^e`.
    MN,
    /// `N (x)_A M` against the syzygy of `B` over `B^e`.
    NM,
}

impl SmtClause {
    pub fn as_str(self) -> &'static str {
        match self {
            SmtClause::MLeft => "M projective over A",
            SmtClause::MRight => "M projective over B^op",
            SmtClause::NLeft => "N projective over B",
            SmtClause::NRight => "N projective over A^op",
            SmtClause::MN => "M(x)N stably iso to syzygy of A",
            SmtClause::NM => "N(x)M stably iso to syzygy of B",
        }
    }
}

/// Dimensions of the compared stable parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmtWitness {
    pub mn_core: usize,
    pub nm_core: usize,
}

fn is_projective<K: Field>(m: &FdModule<K>) -> bool {
    projective_cover(m).1.dim() == m.dim()
}

/// Checks a certificate `(M, N, l)`: both bimodules projective on each
/// side, and `M (x)_B N`, `N (x)_A M` stably isomorphic to the `l`-th
/// syzygies of `A` and `B` over their enveloping algebras. Stable
/// isomorphism is tested after removing projective summands.
pub fn smt_level_verify<K: Field>(
    a: &AlgRef<K>,
    b: &AlgRef<K>,
    m: &Bimodule<K>,
    n: &Bimodule<K>,
    level: usize,
    seed: u64,
) -> Result<Verdict<SmtWitness, SmtClause, SmtClause>, GorensteinError> {
    use crate::error::ModuleError::WrongAlgebra;
    if !m.left_algebra().same_as(a) || !m.right_algebra().same_as(b) {
        return Err(WrongAlgebra.into());
    }
    if !n.left_algebra().same_as(b) || !n.right_algebra().same_as(a) {
        return Err(WrongAlgebra.into());
    }
    let (aop, bop) = (Arc::new(a.opposite()), Arc::new(b.opposite()));
    let sides = [
        (SmtClause::MLeft, m.left_module()),
        (SmtClause::MRight, m.right_module(bop)?),
        (SmtClause::NLeft, n.left_module()),
        (SmtClause::NRight, n.right_module(aop)?),
    ];
    for (clause, side) in &sides {
        if !is_projective(side) {
            return Ok(Verdict::Refuted(*clause));
        }
    }
    let mut cores = [0usize; 2];
    for (slot, (clause, x, y, alg)) in
        [(SmtClause::MN, m, n, a), (SmtClause::NM, n, m, b)].into_iter().enumerate()
    {
        let env = Arc::new(alg.enveloping().expect("enveloping algebra"));
        let prod = tensor_over(x, y)?.module.to_enveloping(env.clone())?;
        let reg = Bimodule::regular(alg.clone()).to_enveloping(env)?;
        let om = syzygy(&reg, level);
        let (c1, c2) = (strip_projective_summands(&prod)?.core, strip_projective_summands(&om)?.core);
        match random_iso_test(&c1, &c2, 32, seed)? {
            Verdict::Certified(_) => cores[slot] = c1.dim(),
            Verdict::Refuted(_) => return Ok(Verdict::Refuted(clause)),
            Verdict::Inconclusive(_) => return Ok(Verdict::Inconclusive(clause)),
        }
    }
    Ok(Verdict::Certified(SmtWitness { mn_core: cores[0], nm_core: cores[1] }))
}
