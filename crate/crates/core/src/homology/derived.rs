use alloc::vec::Vec;
use core::ops::RangeInclusive;

use super::resolution::{minimal_resolution, Resolution};
use crate::arith::{Field, Mat};
use crate::error::ModuleError;
use crate::module::{FdModule, VertexSplitting};

/// Dimensions in consecutive degrees starting at `start`; `None` marks a
/// degree beyond the window the resolution certifies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDims {
    pub start: usize,
    pub dims: Vec<Option<usize>>,
}

impl GradedDims {
    pub fn get(&self, degree: usize) -> Option<usize> {
        degree.checked_sub(self.start).and_then(|i| self.dims.get(i).copied().flatten())
    }

    /// All requested degrees were computed.
    pub fn is_complete(&self) -> bool {
        self.dims.iter().all(Option::is_some)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, Option<usize>)> + '_ {
        self.dims.iter().enumerate().map(move |(i, d)| (self.start + i, *d))
    }
}

fn homology(terms: &[usize], ranks_in: impl Fn(usize) -> usize, ranks_out: impl Fn(usize) -> usize, n: usize) -> usize {
    terms[n] - ranks_in(n) - ranks_out(n)
}

/// Degrees whose homology is determined by the computed terms.
fn window<K: Field>(res: &Resolution<K>) -> usize {
    if res.is_complete() {
        usize::MAX
    } else {
        res.num_terms().saturating_sub(2)
    }
}

/// `Tor_n(Y, M)` from a resolution of `M` over `C`, with `Y` a right
/// `C`-module given over `C^op`.
pub fn tor_from_resolution<K: Field>(
    res: &Resolution<K>,
    y: &FdModule<K>,
    degrees: RangeInclusive<usize>,
) -> Result<GradedDims, ModuleError> {
    let c = res.module().algebra();
    if y.algebra().dim() != c.dim() || !y.algebra().same_as(&c.opposite()) {
        return Err(ModuleError::WrongAlgebra);
    }
    let split = VertexSplitting::new(y.idempotent_actions());
    let dims = split.dims();
    let nt = res.num_terms();
    let size: Vec<usize> = (0..nt).map(|n| res.term(n).iter().map(|&v| dims[v]).sum()).collect();
    let f = c.field().clone();
    let mut ranks = alloc::vec![0usize; nt + 1];
    let hi = (*degrees.end()).min(window(res)).min(nt.saturating_sub(1));
    for n in 1..nt.min(hi.saturating_add(2)) {
        let comps = res.components(n);
        let (src, tgt) = (res.term(n), res.term(n - 1));
        let mut m = Mat::zeros(&f, size[n - 1], size[n]);
        let mut so = 0;
        for (s, &i) in src.iter().enumerate() {
            let mut to = 0;
            for (t, &j) in tgt.iter().enumerate() {
                if dims[i] > 0 && dims[j] > 0 {
                    let block = split.coords[j].mul(&y.action(&comps[s][t]).mul(&split.basis[i]));
                    m.set_block(to, so, &block);
                }
                to += dims[j];
            }
            so += dims[i];
        }
        ranks[n] = m.rank();
    }
    let out = degrees
        .clone()
        .map(|n| {
            if n >= nt {
                return if res.is_complete() { Some(0) } else { None };
            }
            if n > window(res) {
                return None;
            }
            Some(homology(&size, |k| ranks[k], |k| ranks[k + 1], n))
        })
        .collect();
    Ok(GradedDims { start: *degrees.start(), dims: out })
}

/// `Tor^C_n(Y, M)` for `Y` over `C^op` and `M` over `C`, resolving `M`.
pub fn tor<K: Field>(
    y: &FdModule<K>,
    m: &FdModule<K>,
    degrees: RangeInclusive<usize>,
    cutoff: usize,
) -> Result<GradedDims, ModuleError> {
    let res = minimal_resolution(m, (*degrees.end() + 1).min(cutoff));
    tor_from_resolution(&res, y, degrees)
}

/// The same groups computed by resolving `Y` instead.
pub fn tor_resolving_left<K: Field>(
    y: &FdModule<K>,
    m: &FdModule<K>,
    degrees: RangeInclusive<usize>,
    cutoff: usize,
) -> Result<GradedDims, ModuleError> {
    let res = minimal_resolution(y, (*degrees.end() + 1).min(cutoff));
    tor_from_resolution(&res, m, degrees)
}

/// `Ext^n(M, N)` from a resolution of `M`.
pub fn ext_from_resolution<K: Field>(
    res: &Resolution<K>,
    n_mod: &FdModule<K>,
    degrees: RangeInclusive<usize>,
) -> Result<GradedDims, ModuleError> {
    let a = res.module().algebra();
    if !n_mod.algebra().same_as(a) {
        return Err(ModuleError::WrongAlgebra);
    }
    let split = VertexSplitting::new(n_mod.idempotent_actions());
    let dims = split.dims();
    let nt = res.num_terms();
    let size: Vec<usize> = (0..nt).map(|n| res.term(n).iter().map(|&v| dims[v]).sum()).collect();
    let f = a.field().clone();
    let mut ranks = alloc::vec![0usize; nt + 1];
    let hi = (*degrees.end()).min(window(res)).min(nt.saturating_sub(1));
    for n in 1..nt.min(hi.saturating_add(2)) {
        let comps = res.components(n);
        let (src, tgt) = (res.term(n), res.term(n - 1));
        let mut m = Mat::zeros(&f, size[n], size[n - 1]);
        let mut so = 0;
        for (s, &i) in src.iter().enumerate() {
            let mut to = 0;
            for (t, &j) in tgt.iter().enumerate() {
                if dims[i] > 0 && dims[j] > 0 {
                    let block = split.coords[i].mul(&n_mod.action(&comps[s][t]).mul(&split.basis[j]));
                    m.set_block(so, to, &block);
                }
                to += dims[j];
            }
            so += dims[i];
        }
        ranks[n] = m.rank();
    }
    let out = degrees
        .clone()
        .map(|n| {
            if n >= nt {
                return if res.is_complete() { Some(0) } else { None };
            }
            if n > window(res) {
                return None;
            }
            Some(homology(&size, |k| ranks[k + 1], |k| ranks[k], n))
        })
        .collect();
    Ok(GradedDims { start: *degrees.start(), dims: out })
}

/// `Ext^n_A(M, N)`, resolving `M`.
pub fn ext<K: Field>(
    m: &FdModule<K>,
    n: &FdModule<K>,
    degrees: RangeInclusive<usize>,
    cutoff: usize,
) -> Result<GradedDims, ModuleError> {
    let res = minimal_resolution(m, (*degrees.end() + 1).min(cutoff));
    ext_from_resolution(&res, n, degrees)
}
