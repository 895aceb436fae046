use alloc::vec::Vec;

use crate::arith::{Echelon, Field, Mat};
use crate::module::{FdModule, VertexSplitting};
use crate::verdict::Verdict;

/// A minimal projective resolution `... -> P_1 -> P_0 -> M`, possibly
/// truncated.
#[derive(Clone, Debug)]
pub struct Resolution<K: Field> {
    module: FdModule<K>,
    terms: Vec<Vec<usize>>,
    projectives: Vec<FdModule<K>>,
    differentials: Vec<Mat<K>>,
    syzygies: Vec<FdModule<K>>,
    complete: bool,
    size_limited: bool,
}

/// Resolutions stop, incomplete, before a term would exceed this
/// dimension.
pub const MAX_TERM_DIM: usize = 1200;

/// Projective dimension once certified; the flag marks the zero module.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProjDim {
    pub value: usize,
    pub zero_module: bool,
}

/// `P -> M` with `P` a direct sum of `A e_i` mapping onto a basis of
/// `M / rad M`. Returns the vertices of the summands, `P`, and the map.
pub fn projective_cover<K: Field>(m: &FdModule<K>) -> (Vec<usize>, FdModule<K>, Mat<K>) {
    let alg = m.algebra().clone();
    let f = alg.field().clone();
    let mut ech = Echelon::new(&f, m.dim());
    for c in m.radical_basis().to_cols() {
        ech.insert(&c);
    }
    let split = VertexSplitting::new(m.idempotent_actions());
    let mut vertices = Vec::new();
    let mut cols: Vec<Vec<K::Elem>> = Vec::new();
    for (i, b) in split.basis.iter().enumerate() {
        for v in b.to_cols() {
            if !ech.insert(&v) {
                continue;
            }
            vertices.push(i);
            let images = m.word_images(&v, |w| alg.words()[w].root == i);
            for &w in alg.root_words(i) {
                cols.push(images[w].clone().expect("root word image"));
            }
        }
    }
    let p = FdModule::free(alg, &vertices);
    let cover = Mat::from_cols(&f, m.dim(), &cols);
    (vertices, p, cover)
}

/// Resolves `m` through `P_cutoff`; complete if the last kernel vanishes.
/// Stops early if a term would exceed [`MAX_TERM_DIM`].
pub fn minimal_resolution<K: Field>(m: &FdModule<K>, cutoff: usize) -> Resolution<K> {
    resolve(m, cutoff, MAX_TERM_DIM)
}

fn resolve<K: Field>(m: &FdModule<K>, cutoff: usize, max_term: usize) -> Resolution<K> {
    let mut res = Resolution {
        module: m.clone(),
        terms: Vec::new(),
        projectives: Vec::new(),
        differentials: Vec::new(),
        syzygies: Vec::new(),
        complete: m.dim() == 0,
        size_limited: false,
    };
    if m.dim() == 0 {
        return res;
    }
    let (v, p, cover) = projective_cover(m);
    res.terms.push(v);
    res.projectives.push(p);
    res.differentials.push(cover);
    let mut n = 0;
    loop {
        let k = res.differentials[n].kernel_basis();
        if k.cols() == 0 {
            res.complete = true;
            break;
        }
        if n >= cutoff {
            break;
        }
        if k.cols() > max_term {
            res.size_limited = true;
            break;
        }
        let omega = res.projectives[n].submodule_trusted(&k);
        let (v, p, cover) = projective_cover(&omega);
        if p.dim() > max_term {
            res.size_limited = true;
            break;
        }
        res.differentials.push(k.mul(&cover));
        res.terms.push(v);
        res.projectives.push(p);
        res.syzygies.push(omega);
        n += 1;
    }
    res
}

/// `Omega^n(m)`; `Omega^0` is `m` itself.
pub fn syzygy<K: Field>(m: &FdModule<K>, n: usize) -> FdModule<K> {
    if n == 0 {
        return m.clone();
    }
    let res = resolve(m, n - 1, usize::MAX);
    match res.syzygies.get(n - 1) {
        Some(s) => s.clone(),
        None if res.complete => FdModule::zero(m.algebra().clone()),
        None => {
            let d = &res.differentials[n - 1];
            res.projectives[n - 1].submodule_trusted(&d.kernel_basis())
        }
    }
}

/// Certified when the minimal resolution stops within `cutoff` steps.
pub fn projective_dimension<K: Field>(
    m: &FdModule<K>,
    cutoff: usize,
) -> Verdict<ProjDim, core::convert::Infallible, usize> {
    let res = minimal_resolution(m, cutoff);
    match res.length() {
        Some(value) => Verdict::Certified(ProjDim { value, zero_module: m.dim() == 0 }),
        None => Verdict::Inconclusive(cutoff),
    }
}

impl<K: Field> Resolution<K> {
    pub fn module(&self) -> &FdModule<K> {
        &self.module
    }

    /// Stopped because a term grew past [`MAX_TERM_DIM`].
    pub fn is_size_limited(&self) -> bool {
        self.size_limited
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// The projective dimension when the resolution is complete.
    pub fn length(&self) -> Option<usize> {
        self.complete.then(|| self.terms.len().saturating_sub(1))
    }

    /// Number of computed terms `P_0, ..., P_{n-1}`.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Vertices of the summands of `P_n`.
    pub fn term(&self, n: usize) -> &[usize] {
        &self.terms[n]
    }

    pub fn projective(&self, n: usize) -> &FdModule<K> {
        &self.projectives[n]
    }

    /// `d_0: P_0 -> M` and `d_n: P_n -> P_{n-1}`.
    pub fn differential(&self, n: usize) -> &Mat<K> {
        &self.differentials[n]
    }

    /// `Omega^n(M)` for `1 <= n < num_terms()`, as a submodule of `P_{n-1}`.
    pub fn syzygy(&self, n: usize) -> Option<&FdModule<K>> {
        n.checked_sub(1).and_then(|i| self.syzygies.get(i))
    }

    /// Multiplicity of each `A e_i` in `P_n`.
    pub fn term_multiplicities(&self, n: usize) -> Vec<usize> {
        let mut out = alloc::vec![0; self.module.algebra().num_vertices()];
        for &v in &self.terms[n] {
            out[v] += 1;
        }
        out
    }

    /// Components `x_st` in `e_{i_s} A e_{j_t}` of `d_n` for `n >= 1`,
    /// indexed `[s][t]`.
    pub fn components(&self, n: usize) -> Vec<Vec<Vec<K::Elem>>> {
        let alg = self.module.algebra();
        let f = alg.field();
        let d = &self.differentials[n];
        let src = &self.terms[n];
        let tgt = &self.terms[n - 1];
        let tgt_offsets = offsets(alg, tgt);
        let src_offsets = offsets(alg, src);
        src.iter()
            .enumerate()
            .map(|(s, _)| {
                let col = d.col(src_offsets[s]);
                tgt.iter()
                    .enumerate()
                    .map(|(t, &j)| {
                        let mut x = alloc::vec![f.zero(); alg.dim()];
                        for (l, &w) in alg.root_words(j).iter().enumerate() {
                            crate::arith::axpy(f, &mut x, &col[tgt_offsets[t] + l], alg.word_vector(w));
                        }
                        x
                    })
                    .collect()
            })
            .collect()
    }

    /// Whether every `d_n` with `n >= 1` lands in `rad P_{n-1}`.
    pub fn is_minimal(&self) -> bool {
        (1..self.differentials.len()).all(|n| {
            let rad = self.projectives[n - 1].radical_basis();
            rad.hstack(&self.differentials[n]).rank() == rad.rank()
        })
    }

    /// `d_{n-1} d_n = 0`, `d_0` onto, and exactness at every computed term.
    pub fn is_exact(&self) -> bool {
        let nd = self.differentials.len();
        if nd == 0 {
            return self.module.dim() == 0;
        }
        if self.differentials[0].rank() != self.module.dim() {
            return false;
        }
        for n in 1..nd {
            let (a, b) = (&self.differentials[n - 1], &self.differentials[n]);
            if !a.mul(b).is_zero() || a.cols() - a.rank() != b.rank() {
                return false;
            }
        }
        !self.complete || self.differentials[nd - 1].kernel_basis().cols() == 0
    }
}

pub(crate) fn offsets<K: Field>(alg: &crate::algebra::AlgebraTable<K>, vertices: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(vertices.len());
    let mut acc = 0;
    for &v in vertices {
        out.push(acc);
        acc += alg.projective_dim(v);
    }
    out
}
