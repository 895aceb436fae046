use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::bounded::{check_bounded, BoundedConfig, BoundedReport};
use super::{embedding_by_names, make_extension, Extension};
use crate::algebra::{AlgRef, AlgebraTable, Check, Presentation, TableData};
use crate::arith::{axpy, is_zero_vec, unit_vector, Echelon, Field, Mat};
use crate::error::{AlgebraError, ExtensionError};
use crate::module::Bimodule;

fn sparse<K: Field>(f: &K, v: Vec<K::Elem>) -> Vec<(usize, K::Elem)> {
    v.into_iter().enumerate().filter(|(_, c)| !f.is_zero(c)).collect()
}

fn check_for(dim: usize) -> Check {
    if dim <= 64 {
        Check::Full
    } else {
        Check::Light
    }
}

/// Basis `[B | M]`, products of `B` from its table, of `B` with `M` from
/// the bimodule actions, and of `M` with `M` from `product` (zero if
/// absent; column `k * dim M + l` holds `m_k m_l`).
fn split_table<K: Field>(
    b: &AlgebraTable<K>,
    m: &Bimodule<K>,
    product: Option<&Mat<K>>,
) -> Result<AlgebraTable<K>, AlgebraError> {
    let f = b.field();
    let (db, dm) = (b.dim(), m.dim());
    let d = db + dm;
    let lb = m.left_basis_actions();
    let rb = m.right_basis_actions();
    let mut mult = vec![Vec::new(); d * d];
    for i in 0..db {
        for j in 0..db {
            mult[i * d + j] = b.structure_constants(i, j).to_vec();
        }
        for k in 0..dm {
            mult[i * d + db + k] = sparse(f, lb[i].col(k)).into_iter().map(|(r, c)| (db + r, c)).collect();
            mult[(db + k) * d + i] = sparse(f, rb[i].col(k)).into_iter().map(|(r, c)| (db + r, c)).collect();
        }
    }
    if let Some(pr) = product {
        for k in 0..dm {
            for l in 0..dm {
                mult[(db + k) * d + db + l] =
                    sparse(f, pr.col(k * dm + l)).into_iter().map(|(r, c)| (db + r, c)).collect();
            }
        }
    }
    let pad = |v: &[K::Elem]| {
        let mut w = v.to_vec();
        w.resize(d, f.zero());
        w
    };
    let mut labels = b.labels().to_vec();
    labels.extend((0..dm).map(|k| format!("m{k}")));
    let mut rad: Vec<_> = b.radical().to_cols().iter().map(|c| pad(c)).collect();
    rad.extend((db..d).map(|k| unit_vector(f, d, k)));
    AlgebraTable::assemble(
        TableData {
            field: f.clone(),
            labels,
            vertex_labels: b.vertex_labels().to_vec(),
            mult,
            idempotents: b.idempotents().iter().map(|e| pad(e)).collect(),
            radical: Some(Mat::from_cols(f, d, &rad)),
            generators: None,
        },
        check_for(d),
    )
}

fn canonical_extension<K: Field>(b: AlgRef<K>, a: AlgebraTable<K>) -> Result<Extension<K>, ExtensionError> {
    let f = b.field().clone();
    let (db, d) = (b.dim(), a.dim());
    let emb = Mat::from_cols(&f, d, &(0..db).map(|k| unit_vector(&f, d, k)).collect::<Vec<_>>());
    let comp = Mat::from_cols(&f, d, &(db..d).map(|k| unit_vector(&f, d, k)).collect::<Vec<_>>());
    make_extension(b, Arc::new(a), emb, Some(comp))
}

fn check_bimodule_over<K: Field>(b: &AlgRef<K>, m: &Bimodule<K>) -> Result<(), ExtensionError> {
    if !m.left_algebra().same_as(b) || !m.right_algebra().same_as(b) {
        return Err(crate::error::ModuleError::WrongAlgebra.into());
    }
    Ok(())
}

/// `B (x) M` with `(b, m)(b', m') = (bb', bm' + mb')`.
pub fn trivial_extension<K: Field>(b: AlgRef<K>, m: &Bimodule<K>) -> Result<Extension<K>, ExtensionError> {
    check_bimodule_over(&b, m)?;
    let a = split_table(&b, m, None)?;
    canonical_extension(b, a)
}

/// `B (+) M` with `(b, x)(b', x') = (bb', bx' + xb' + x x')`. The product is
/// given as a `dim M x (dim M)^2` matrix whose column `k * dim M + l` is
/// `m_k m_l`.
pub fn split_extension<K: Field>(
    b: AlgRef<K>,
    m: &Bimodule<K>,
    product: &Mat<K>,
) -> Result<Extension<K>, ExtensionError> {
    check_bimodule_over(&b, m)?;
    let f = b.field().clone();
    let dm = m.dim();
    if product.rows() != dm || product.cols() != dm * dm {
        return Err(ExtensionError::BadShape { expected: (dm, dm * dm), found: (product.rows(), product.cols()) });
    }
    let mul = |x: &[K::Elem], y: &[K::Elem]| {
        let mut out = vec![f.zero(); dm];
        for (k, a) in x.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (l, c) in y.iter().enumerate() {
                if !f.is_zero(c) {
                    axpy(&f, &mut out, &f.mul(a, c), &product.col(k * dm + l));
                }
            }
        }
        out
    };
    let basis: Vec<_> = (0..dm).map(|k| unit_vector(&f, dm, k)).collect();
    let lb = m.left_basis_actions();
    let rb = m.right_basis_actions();
    for (bi, (l, r)) in lb.iter().zip(&rb).enumerate() {
        for (k, x) in basis.iter().enumerate() {
            for (n, y) in basis.iter().enumerate() {
                let xy = mul(x, y);
                let ok = l.mul_vec(&xy) == mul(&l.mul_vec(x), y)
                    && r.mul_vec(&xy) == mul(x, &r.mul_vec(y))
                    && mul(&r.mul_vec(x), y) == mul(x, &l.mul_vec(y));
                if !ok {
                    return Err(ExtensionError::BadProduct(format!(
                        "not a bimodule map at algebra basis {bi}, module basis ({k}, {n})"
                    )));
                }
            }
        }
    }
    for (i, x) in basis.iter().enumerate() {
        for (j, y) in basis.iter().enumerate() {
            let xy = mul(x, y);
            for (k, z) in basis.iter().enumerate() {
                if mul(&xy, z) != mul(x, &mul(y, z)) {
                    return Err(ExtensionError::BadProduct(format!("not associative at ({i}, {j}, {k})")));
                }
            }
        }
    }
    let mut power = basis.clone();
    for _ in 0..=dm {
        if power.is_empty() {
            break;
        }
        let mut ech = Echelon::new(&f, dm);
        let mut next = Vec::new();
        for p in &power {
            for x in &basis {
                let v = mul(p, x);
                if ech.insert(&v) {
                    next.push(v);
                }
            }
        }
        power = next;
    }
    if !power.is_empty() {
        return Err(ExtensionError::ProductNotNilpotent);
    }
    let a = split_table(&b, m, Some(product))?;
    canonical_extension(b, a)
}

/// A split extension rebuilt as `B (+) M` with the product of `M` taken
/// from `A`, and whether the obvious map to `A` is an isomorphism.
pub fn split_model<K: Field>(e: &Extension<K>) -> Result<(Extension<K>, bool), ExtensionError> {
    if !e.is_split() {
        return Err(ExtensionError::NotSplit);
    }
    let q = e.quotient_bimodule();
    let big = e.big();
    let comp = e.complement().to_cols();
    let f = big.field();
    let mut cols = Vec::with_capacity(comp.len() * comp.len());
    for x in &comp {
        for y in &comp {
            cols.push(q.projection.mul_vec(&big.mul(x, y)));
        }
    }
    let product = Mat::from_cols(f, comp.len(), &cols);
    let model = split_extension(e.small().clone(), &q.module, &product)?;
    let map = e.embedding().hstack(e.complement());
    let iso = model.big().is_isomorphism(big, &map);
    Ok((model, iso))
}

/// The lower triangular algebra `[[L, 0], [W, G]]` for a `G`-`L` bimodule
/// `W`, with the extension from `L x G`.
#[derive(Clone, Debug)]
pub struct Triangular<K: Field> {
    pub algebra: AlgRef<K>,
    pub extension: Extension<K>,
    /// `A` agrees with the trivial extension of `L x G` by `W`.
    pub trivial_model_isomorphic: bool,
}

pub fn triangular_algebra<K: Field>(
    lambda: AlgRef<K>,
    gamma: AlgRef<K>,
    w: &Bimodule<K>,
) -> Result<Triangular<K>, ExtensionError> {
    if !w.left_algebra().same_as(&gamma) || !w.right_algebra().same_as(&lambda) {
        return Err(crate::error::ModuleError::WrongAlgebra.into());
    }
    let f = lambda.field().clone();
    let (dl, dw, dg) = (lambda.dim(), w.dim(), gamma.dim());
    let d = dl + dw + dg;
    let (ow, og) = (dl, dl + dw);
    let lw = w.left_basis_actions();
    let rw = w.right_basis_actions();
    let shift = |v: Vec<(usize, K::Elem)>, by: usize| -> Vec<(usize, K::Elem)> {
        v.into_iter().map(|(r, c)| (r + by, c)).collect()
    };
    let mut mult = vec![Vec::new(); d * d];
    for i in 0..dl {
        for j in 0..dl {
            mult[i * d + j] = lambda.structure_constants(i, j).to_vec();
        }
        for k in 0..dw {
            mult[(ow + k) * d + i] = shift(sparse(&f, rw[i].col(k)), ow);
        }
    }
    for i in 0..dg {
        for j in 0..dg {
            mult[(og + i) * d + og + j] = shift(gamma.structure_constants(i, j).to_vec(), og);
        }
        for k in 0..dw {
            mult[(og + i) * d + ow + k] = shift(sparse(&f, lw[i].col(k)), ow);
        }
    }
    let place = |v: &[K::Elem], at: usize| {
        let mut out = vec![f.zero(); d];
        out[at..at + v.len()].clone_from_slice(v);
        out
    };
    let mut labels: Vec<String> = lambda.labels().to_vec();
    labels.extend((0..dw).map(|k| format!("w{k}")));
    labels.extend(gamma.labels().iter().cloned());
    let mut vertex_labels = lambda.vertex_labels().to_vec();
    vertex_labels.extend(gamma.vertex_labels().iter().cloned());
    let mut idempotents: Vec<_> = lambda.idempotents().iter().map(|e| place(e, 0)).collect();
    idempotents.extend(gamma.idempotents().iter().map(|e| place(e, og)));
    let mut rad: Vec<_> = lambda.radical().to_cols().iter().map(|c| place(c, 0)).collect();
    rad.extend((ow..og).map(|k| unit_vector(&f, d, k)));
    rad.extend(gamma.radical().to_cols().iter().map(|c| place(c, og)));
    let a = AlgebraTable::assemble(
        TableData {
            field: f.clone(),
            labels,
            vertex_labels,
            mult,
            idempotents,
            radical: Some(Mat::from_cols(&f, d, &rad)),
            generators: None,
        },
        check_for(d),
    )?;
    let a = Arc::new(a);

    let b = Arc::new(lambda.product(&gamma));
    let col = |k: usize| unit_vector(&f, d, k);
    let emb_cols: Vec<_> = (0..dl).map(col).chain((og..d).map(col)).collect();
    let emb = Mat::from_cols(&f, d, &emb_cols);
    let comp = Mat::from_cols(&f, d, &(ow..og).map(col).collect::<Vec<_>>());
    let extension = make_extension(b.clone(), a.clone(), emb, Some(comp))?;

    let pr_l = Mat::identity(&f, dl).hstack(&Mat::zeros(&f, dl, dg));
    let pr_g = Mat::zeros(&f, dg, dl).hstack(&Mat::identity(&f, dg));
    let wb = w.restrict(b.clone(), &pr_g, b.clone(), &pr_l);
    let model = trivial_extension(b, &wb)?;
    let mut perm = Mat::zeros(&f, d, d);
    for k in 0..dl {
        perm.set(k, k, f.one());
    }
    for k in 0..dg {
        perm.set(og + k, dl + k, f.one());
    }
    for k in 0..dw {
        perm.set(ow + k, dl + dg + k, f.one());
    }
    let trivial_model_isomorphic = model.big().is_isomorphism(&a, &perm);
    Ok(Triangular { algebra: a, extension, trivial_model_isomorphic })
}

/// Removal of an arrow that occurs in no relation.
#[derive(Clone, Debug)]
pub struct ArrowRemoval<K: Field> {
    pub small: AlgRef<K>,
    pub extension: Extension<K>,
    /// `B (+) M` with the product inherited from `A`.
    pub model: Extension<K>,
    pub model_isomorphic: bool,
    /// The ideal of the arrow squares to zero.
    pub square_zero: bool,
    pub report: BoundedReport,
}

/// The extension `B ⊂ A` where `B` drops `arrow` from the quiver, with
/// the ideal of the arrow as complement.
pub fn remove_arrow<K: Field>(p: &Presentation<K>, arrow: &str) -> Result<Extension<K>, ExtensionError> {
    let idx = p.quiver.arrow(arrow).ok_or_else(|| AlgebraError::UnknownName(arrow.to_string()))?;
    let q = p.without_arrow(idx).ok_or_else(|| ExtensionError::ArrowInRelations(arrow.to_string()))?;
    let a = Arc::new(p.algebra()?);
    let b = Arc::new(q.algebra()?);
    let emb = embedding_by_names(&b, &a).ok_or_else(|| AlgebraError::UnknownName(arrow.to_string()))?;
    let f = a.field().clone();
    let g = a.generators().iter().find(|g| g.label == arrow).ok_or_else(|| AlgebraError::UnknownName(arrow.to_string()))?;
    let d = a.dim();
    let mut ech = Echelon::new(&f, d);
    let mut ideal = Vec::new();
    for x in 0..d {
        let xa = a.mul(&a.basis_vector(x), &g.vector);
        if is_zero_vec(&f, &xa) {
            continue;
        }
        for y in 0..d {
            let v = a.mul(&xa, &a.basis_vector(y));
            if ech.insert(&v) {
                ideal.push(v);
            }
        }
    }
    let comp = Mat::from_cols(&f, d, &ideal);
    make_extension(b, a, emb, Some(comp))
}

pub fn arrow_removal<K: Field>(
    p: &Presentation<K>,
    arrow: &str,
    config: BoundedConfig,
) -> Result<ArrowRemoval<K>, ExtensionError> {
    let extension = remove_arrow(p, arrow)?;
    let (a, f) = (extension.big().clone(), extension.big().field().clone());
    let ideal = extension.complement().to_cols();
    let square_zero = ideal.iter().all(|x| ideal.iter().all(|y| is_zero_vec(&f, &a.mul(x, y))));
    let (model, model_isomorphic) = split_model(&extension)?;
    let report = check_bounded(&extension, config);
    Ok(ArrowRemoval { small: extension.small().clone(), extension, model, model_isomorphic, square_zero, report })
}
