//! Tensor products of bimodules over an algebra.

use alloc::vec;
use alloc::vec::Vec;

use super::{Bimodule, VertexSplitting};
use crate::arith::{Field, Mat};
use crate::error::ModuleError;

/// `X (x)_B Y` with the quotient map from the `k`-tensor space `X (x)_k Y`
/// and a section of it.
#[derive(Clone, Debug)]
pub struct TensorProduct<K: Field> {
    pub module: Bimodule<K>,
    /// `dim T x (dim X * dim Y)`.
    pub proj: Mat<K>,
    /// `(dim X * dim Y) x dim T`, with `proj * sect = I`.
    pub sect: Mat<K>,
}

/// `(L (x) I) v` for `v` in `K^{p * q}`.
fn left_kron_apply<K: Field>(l: &Mat<K>, v: &Mat<K>, q: usize) -> Mat<K> {
    let f = l.field();
    let p = l.cols();
    let mut out = Mat::zeros(f, l.rows() * q, v.cols());
    for c in 0..v.cols() {
        for i in 0..l.rows() {
            for k in 0..p {
                let a = l.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..q {
                    let b = v.get(k * q + j, c);
                    if !f.is_zero(b) {
                        let mut acc = out.get(i * q + j, c).clone();
                        f.add_mul_assign(&mut acc, a, b);
                        out.set(i * q + j, c, acc);
                    }
                }
            }
        }
    }
    out
}

/// `(I (x) R) v` for `v` in `K^{p * q}`.
fn right_kron_apply<K: Field>(r: &Mat<K>, v: &Mat<K>, p: usize) -> Mat<K> {
    let f = r.field();
    let q = r.cols();
    let mut out = Mat::zeros(f, p * r.rows(), v.cols());
    for c in 0..v.cols() {
        for i in 0..p {
            for j in 0..r.rows() {
                let mut acc = f.zero();
                for k in 0..q {
                    f.add_mul_assign(&mut acc, r.get(j, k), v.get(i * q + k, c));
                }
                out.set(i * r.rows() + j, c, acc);
            }
        }
    }
    out
}

/// `X (x)_B Y` for an `A`-`B` bimodule `X` and a `B`-`C` bimodule `Y`.
pub fn tensor_over<K: Field>(x: &Bimodule<K>, y: &Bimodule<K>) -> Result<TensorProduct<K>, ModuleError> {
    let b = x.right_algebra();
    if !b.same_as(y.left_algebra()) {
        return Err(ModuleError::WrongAlgebra);
    }
    let f = b.field().clone();
    let (dx, dy) = (x.dim(), y.dim());
    let sx = VertexSplitting::new(x.right_idempotent_actions());
    let sy = VertexSplitting::new(y.left_idempotent_actions());
    let (wx, wy) = (sx.dims(), sy.dims());
    let n = b.num_vertices();
    let mut offset = vec![0; n + 1];
    for i in 0..n {
        offset[i + 1] = offset[i] + wx[i] * wy[i];
    }
    let w = offset[n];
    let idx = |i: usize, p: usize, q: usize| offset[i] + p * wy[i] + q;

    let mut rows: Vec<Vec<K::Elem>> = Vec::new();
    for (gi, g) in b.generators().iter().enumerate() {
        let (s, t) = (g.source, g.target);
        if wx[t] == 0 || wy[s] == 0 {
            continue;
        }
        let cx = sx.coords[s].mul(&x.right_generator_actions()[gi].mul(&sx.basis[t]));
        let cy = sy.coords[t].mul(&y.left_generator_actions()[gi].mul(&sy.basis[s]));
        for a in 0..wx[t] {
            for bb in 0..wy[s] {
                let mut row = vec![f.zero(); w];
                for p in 0..wx[s] {
                    let v = cx.get(p, a);
                    if !f.is_zero(v) {
                        let k = idx(s, p, bb);
                        row[k] = f.add(&row[k], v);
                    }
                }
                for q in 0..wy[t] {
                    let v = cy.get(q, bb);
                    if !f.is_zero(v) {
                        let k = idx(t, a, q);
                        row[k] = f.sub(&row[k], v);
                    }
                }
                if row.iter().any(|e| !f.is_zero(e)) {
                    rows.push(row);
                }
            }
        }
    }
    let e = Mat::from_rows(&f, w, rows).rref();
    let mut is_pivot = vec![false; w];
    for &p in &e.pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..w).filter(|&j| !is_pivot[j]).collect();
    let t = free.len();
    let mut proj_t = Mat::zeros(&f, t, w);
    let mut sect_t = Mat::zeros(&f, w, t);
    for (fi, &j) in free.iter().enumerate() {
        proj_t.set(fi, j, f.one());
        sect_t.set(j, fi, f.one());
        for (k, &p) in e.pivots.iter().enumerate() {
            let v = e.reduced.get(k, j);
            if !f.is_zero(v) {
                proj_t.set(fi, p, f.neg(v));
            }
        }
    }
    let mut q = Mat::zeros(&f, w, dx * dy);
    let mut sigma = Mat::zeros(&f, dx * dy, w);
    for i in 0..n {
        if wx[i] * wy[i] == 0 {
            continue;
        }
        q.set_block(offset[i], 0, &sx.coords[i].kron(&sy.coords[i]));
        sigma.set_block(0, offset[i], &sx.basis[i].kron(&sy.basis[i]));
    }
    let proj = proj_t.mul(&q);
    let sect = sigma.mul(&sect_t);
    let l = |m: &Mat<K>| proj.mul(&left_kron_apply(m, &sect, dy));
    let r = |m: &Mat<K>| proj.mul(&right_kron_apply(m, &sect, dx));
    let module = Bimodule::new_unchecked(
        x.left_algebra().clone(),
        y.right_algebra().clone(),
        t,
        x.left_idempotent_actions().iter().map(l).collect(),
        x.left_generator_actions().iter().map(l).collect(),
        y.right_idempotent_actions().iter().map(r).collect(),
        y.right_generator_actions().iter().map(r).collect(),
    );
    Ok(TensorProduct { module, proj, sect })
}

/// `X_1 (x) X_2 (x) ... (x) X_n` over the intermediate algebras. With
/// `track` set, `proj` and `sect` relate it to the full `k`-tensor space;
/// otherwise they are empty.
pub fn tensor_chain<K: Field>(factors: &[Bimodule<K>], track: bool) -> Result<TensorProduct<K>, ModuleError> {
    let first = factors.first().ok_or(ModuleError::DimensionMismatch { expected: 1, found: 0 })?;
    let f = first.field().clone();
    let mut cur = TensorProduct {
        module: first.clone(),
        proj: Mat::identity(&f, if track { first.dim() } else { 0 }),
        sect: Mat::identity(&f, if track { first.dim() } else { 0 }),
    };
    for next in &factors[1..] {
        let step = tensor_over(&cur.module, next)?;
        let (proj, sect) = if track {
            let id = Mat::identity(&f, next.dim());
            (step.proj.mul(&cur.proj.kron(&id)), cur.sect.kron(&id).mul(&step.sect))
        } else {
            (Mat::zeros(&f, 0, 0), Mat::zeros(&f, 0, 0))
        };
        cur = TensorProduct { module: step.module, proj, sect };
    }
    Ok(cur)
}
