//! Homomorphism spaces between modules over the same algebra.

use alloc::vec::Vec;

use super::{FdModule, VertexSplitting};
use crate::arith::{Field, Mat};
use crate::error::ModuleError;

/// A basis of `Hom_A(X, Y)`, each map as a `dim Y x dim X` matrix.
///
/// Unknowns are the blocks `e_i X -> e_i Y`; the equations come from the
/// arrow generators only.
pub fn hom_space<K: Field>(x: &FdModule<K>, y: &FdModule<K>) -> Result<Vec<Mat<K>>, ModuleError> {
    if !x.same_algebra(y) {
        return Err(ModuleError::WrongAlgebra);
    }
    let alg = x.algebra();
    let f = alg.field();
    let sx = VertexSplitting::new(x.idempotent_actions());
    let sy = VertexSplitting::new(y.idempotent_actions());
    let (dx, dy) = (sx.dims(), sy.dims());
    let n = alg.num_vertices();
    let mut offset = Vec::with_capacity(n + 1);
    offset.push(0);
    for i in 0..n {
        offset.push(offset[i] + dx[i] * dy[i]);
    }
    let nvars = offset[n];
    let var = |i: usize, r: usize, c: usize| offset[i] + r * dx[i] + c;
    let mut rows: Vec<Vec<K::Elem>> = Vec::new();
    for (gi, g) in alg.generators().iter().enumerate() {
        let (s, t) = (g.source, g.target);
        if dy[t] == 0 || dx[s] == 0 {
            continue;
        }
        let gx = sx.coords[t].mul(&x.generator_action(gi).mul(&sx.basis[s]));
        let gy = sy.coords[t].mul(&y.generator_action(gi).mul(&sy.basis[s]));
        for r in 0..dy[t] {
            for c in 0..dx[s] {
                let mut row = alloc::vec![f.zero(); nvars];
                for k in 0..dx[t] {
                    let v = gx.get(k, c);
                    if !f.is_zero(v) {
                        row[var(t, r, k)] = f.add(&row[var(t, r, k)], v);
                    }
                }
                for k in 0..dy[s] {
                    let v = gy.get(r, k);
                    if !f.is_zero(v) {
                        row[var(s, k, c)] = f.sub(&row[var(s, k, c)], v);
                    }
                }
                if row.iter().any(|e| !f.is_zero(e)) {
                    rows.push(row);
                }
            }
        }
    }
    let eqs = Mat::from_rows(f, nvars, rows);
    let kernel = eqs.kernel_basis();
    let mut out = Vec::with_capacity(kernel.cols());
    for t in 0..kernel.cols() {
        let mut h = Mat::zeros(f, y.dim(), x.dim());
        for i in 0..n {
            if dx[i] == 0 || dy[i] == 0 {
                continue;
            }
            let mut block = Mat::zeros(f, dy[i], dx[i]);
            for r in 0..dy[i] {
                for c in 0..dx[i] {
                    block.set(r, c, kernel.get(var(i, r, c), t).clone());
                }
            }
            h = h.add(&sy.basis[i].mul(&block).mul(&sx.coords[i]));
        }
        out.push(h);
    }
    Ok(out)
}

/// Whether `h` intertwines the actions of all idempotents and generators.
pub fn is_homomorphism<K: Field>(x: &FdModule<K>, y: &FdModule<K>, h: &Mat<K>) -> bool {
    if h.rows() != y.dim() || h.cols() != x.dim() || !x.same_algebra(y) {
        return false;
    }
    let pairs = x
        .idempotent_actions()
        .iter()
        .zip(y.idempotent_actions())
        .chain(x.generator_actions().iter().zip(y.generator_actions()));
    for (ax, ay) in pairs {
        if h.mul(ax) != ay.mul(h) {
            return false;
        }
    }
    true
}
