use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::convert::Infallible;

use super::bounded::{tensor_powers, BoundedReport};
use super::Extension;
use crate::arith::{Field, Mat};
use crate::error::ExtensionError;
use crate::homology::{ext_from_resolution, minimal_resolution, tor_from_resolution, Resolution};
use crate::module::{tensor_chain, tensor_over, FdModule};
use crate::verdict::Verdict;

/// Why a consequence check could not decide.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConsequencePending {
    /// The boundedness report is not certified.
    ReportNotCertified,
    /// A resolution did not finish within the cutoff.
    Cutoff(usize),
}

/// Which of the three `Tor` families has a nonzero group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TorFamily {
    /// `Tor_i(A, A)`.
    AA,
    /// `Tor_i(M^j, A)`.
    PowerA,
    /// `Tor_i(A, M^j (x) A)`.
    APowerA,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TorFailure {
    pub family: TorFamily,
    pub i: usize,
    pub j: usize,
    pub dim: usize,
}

fn certified_p(report: &BoundedReport) -> Result<usize, ConsequencePending> {
    match &report.overall {
        Verdict::Certified(w) => Ok(w.p),
        _ => Err(ConsequencePending::ReportNotCertified),
    }
}

/// All of `Tor_i(Y, X)` for `i >= 1`, given a resolution of `X`; `None`
/// if it did not terminate.
fn all_higher_tor<K: Field>(res: &Resolution<K>, y: &FdModule<K>) -> Option<Vec<usize>> {
    let n = res.length()?;
    if n == 0 {
        return Some(Vec::new());
    }
    let dims = tor_from_resolution(res, y, 1..=n).expect("algebras match");
    dims.dims.into_iter().collect()
}

/// Checks that `Tor_i^B(A, A)`, `Tor_i^B(M^j, A)` and
/// `Tor_i^B(A, M^j (x) A)` vanish for `i >= 1` and `1 <= j < p`.
pub fn verify_tor_consequences<K: Field>(
    e: &Extension<K>,
    report: &BoundedReport,
    cutoff: usize,
) -> Verdict<(), TorFailure, ConsequencePending> {
    let p = match certified_p(report) {
        Ok(p) => p,
        Err(x) => return Verdict::Inconclusive(x),
    };
    let b = e.small();
    let op = Arc::new(b.opposite());
    let a_bb = e.big_over_small();
    let a_right = a_bb.right_module(op.clone()).expect("opposite algebra");
    let m = e.quotient_bimodule().module;
    let powers = tensor_powers(&m, p).powers;

    let res_a = minimal_resolution(&a_bb.left_module(), cutoff);
    let mut checks: Vec<(TorFamily, usize, &Resolution<K>, FdModule<K>)> = vec![(TorFamily::AA, 0, &res_a, a_right.clone())];
    for j in 1..p {
        checks.push((TorFamily::PowerA, j, &res_a, powers[j - 1].right_module(op.clone()).expect("opposite algebra")));
    }
    let sandwiches: Vec<Resolution<K>> = (1..p)
        .map(|j| {
            let t = tensor_over(&powers[j - 1], &a_bb).expect("same algebra").module;
            minimal_resolution(&t.left_module(), cutoff)
        })
        .collect();
    for (j, res) in sandwiches.iter().enumerate() {
        checks.push((TorFamily::APowerA, j + 1, res, a_right.clone()));
    }
    let mut pending = false;
    for (family, j, res, y) in checks {
        match all_higher_tor(res, &y) {
            None => pending = true,
            Some(dims) => {
                if let Some((i, &dim)) = dims.iter().enumerate().find(|(_, d)| **d > 0) {
                    return Verdict::Refuted(TorFailure { family, i: i + 1, j, dim });
                }
            }
        }
    }
    if pending {
        Verdict::Inconclusive(ConsequencePending::Cutoff(cutoff))
    } else {
        Verdict::Certified(())
    }
}

/// Projective dimension over `A^e` of `A (x)_B M^j (x)_B A` for each
/// `1 <= j < p`.
pub fn verify_sandwich_pd<K: Field>(
    e: &Extension<K>,
    report: &BoundedReport,
    cutoff: usize,
) -> Verdict<Vec<usize>, Infallible, ConsequencePending> {
    let p = match certified_p(report) {
        Ok(p) => p,
        Err(x) => return Verdict::Inconclusive(x),
    };
    if p <= 1 {
        return Verdict::Certified(Vec::new());
    }
    let a = e.big();
    let env = Arc::new(a.enveloping().expect("enveloping algebra"));
    let m = e.quotient_bimodule().module;
    let (left, right) = (e.big_left(), e.big_right());
    let mut pds = Vec::new();
    for j in 1..p {
        let mut factors = vec![left.clone()];
        factors.extend(core::iter::repeat_n(m.clone(), j));
        factors.push(right.clone());
        let t = tensor_chain(&factors, false).expect("chain is composable").module;
        let x = t.to_enveloping(env.clone()).expect("shape matches");
        match minimal_resolution(&x, cutoff).length() {
            Some(n) => pds.push(n),
            None => return Verdict::Inconclusive(ConsequencePending::Cutoff(cutoff)),
        }
    }
    Verdict::Certified(pds)
}

/// Dimensions and ranks of the checked complex, with terms ordered
/// `A, A (x) A, A (x) M (x) A, ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarWitness {
    pub dims: Vec<usize>,
    /// `ranks[n]` is the rank of the map out of term `n + 1` into term `n`.
    pub ranks: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BarFailure {
    /// The composite into term `n` is nonzero.
    NotComplex(usize),
    /// Homology of this dimension at term `n`.
    Homology { position: usize, dim: usize },
}

/// Contracts factors `pos` and `pos + 1` of a vector in a `k`-tensor space
/// of the given shape with `mu`.
fn contract<K: Field>(f: &K, v: &[K::Elem], shape: &[usize], pos: usize, mu: &Mat<K>) -> Vec<K::Elem> {
    let outer: usize = shape[..pos].iter().product();
    let pair = shape[pos] * shape[pos + 1];
    let inner: usize = shape[pos + 2..].iter().product();
    let q = mu.rows();
    let mut out = vec![f.zero(); outer * q * inner];
    for o in 0..outer {
        for pi in 0..pair {
            for r in 0..inner {
                let x = &v[(o * pair + pi) * inner + r];
                if f.is_zero(x) {
                    continue;
                }
                for qi in 0..q {
                    let c = mu.get(qi, pi);
                    if !f.is_zero(c) {
                        f.add_mul_assign(&mut out[(o * q + qi) * inner + r], c, x);
                    }
                }
            }
        }
    }
    out
}

/// Exactness of `0 -> A(x)M^{p-1}(x)A -> ... -> A(x)M(x)A -> A(x)A -> A -> 0`
/// (tensors over `B`) for a split extension, where the differentials are
/// alternating sums of adjacent products and `M` multiplies through `A`.
pub fn relative_bar_exactness<K: Field>(
    e: &Extension<K>,
    report: &BoundedReport,
) -> Result<Verdict<BarWitness, BarFailure, ConsequencePending>, ExtensionError> {
    if !e.is_split() {
        return Err(ExtensionError::NotSplit);
    }
    let p = match certified_p(report) {
        Ok(p) => p,
        Err(x) => return Ok(Verdict::Inconclusive(x)),
    };
    let a = e.big();
    let f = a.field().clone();
    let q = e.quotient_bimodule();
    let (da, dm) = (a.dim(), q.module.dim());
    let comp = e.complement().to_cols();
    let basis_a: Vec<_> = (0..da).map(|k| a.basis_vector(k)).collect();
    let table = |rows: usize, n1: usize, n2: usize, g: &dyn Fn(usize, usize) -> Vec<K::Elem>| {
        let cols: Vec<_> = (0..n1).flat_map(|x| (0..n2).map(move |y| (x, y))).map(|(x, y)| g(x, y)).collect();
        Mat::from_cols(&f, rows, &cols)
    };
    let mu_aa = table(da, da, da, &|x, y| a.mul(&basis_a[x], &basis_a[y]));
    let mu_am = table(da, da, dm, &|x, y| a.mul(&basis_a[x], &comp[y]));
    let mu_ma = table(da, dm, da, &|x, y| a.mul(&comp[x], &basis_a[y]));
    let mu_mm = table(dm, dm, dm, &|x, y| q.projection.mul_vec(&a.mul(&comp[x], &comp[y])));

    let (left, right) = (e.big_left(), e.big_right());
    let mut terms = Vec::with_capacity(p);
    for j in 0..p {
        let mut factors = vec![left.clone()];
        factors.extend(core::iter::repeat_n(q.module.clone(), j));
        factors.push(right.clone());
        terms.push(tensor_chain(&factors, true).expect("chain is composable"));
    }
    let mut dims = vec![da];
    dims.extend(terms.iter().map(|t| t.module.dim()));
    let mut maps: Vec<Mat<K>> = vec![mu_aa.mul(&terms[0].sect)];
    for j in 1..p {
        let mut shape = vec![da];
        shape.extend(core::iter::repeat_n(dm, j));
        shape.push(da);
        let sect = &terms[j].sect;
        let cols: Vec<Vec<K::Elem>> = (0..sect.cols())
            .map(|c| {
                let v = sect.col(c);
                let mut acc = contract(&f, &v, &shape, 0, &mu_am);
                for i in 1..=j {
                    let mu = if i == j { &mu_ma } else { &mu_mm };
                    let d = contract(&f, &v, &shape, i, mu);
                    let d = if i % 2 == 1 { d.iter().map(|x| f.neg(x)).collect() } else { d };
                    acc = crate::arith::add_vec(&f, &acc, &d);
                }
                acc
            })
            .collect();
        let full = Mat::from_cols(&f, terms[j - 1].proj.cols(), &cols);
        maps.push(terms[j - 1].proj.mul(&full));
    }
    for n in 1..maps.len() {
        if !maps[n - 1].mul(&maps[n]).is_zero() {
            return Ok(Verdict::Refuted(BarFailure::NotComplex(n - 1)));
        }
    }
    let ranks: Vec<usize> = maps.iter().map(|m| m.rank()).collect();
    for (pos, &d) in dims.iter().enumerate() {
        let into = if pos == 0 { 0 } else { ranks[pos - 1] };
        let out = ranks.get(pos).copied().unwrap_or(0);
        let h = d - into - out;
        let h = if pos == 0 { d - ranks[0] } else { h };
        if h != 0 {
            return Ok(Verdict::Refuted(BarFailure::Homology { position: pos, dim: h }));
        }
    }
    Ok(Verdict::Certified(BarWitness { dims, ranks }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EhiWitness {
    pub overshoot: usize,
    pub window: usize,
    pub pairs: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EhiViolation {
    pub pair: usize,
    pub degree: usize,
    pub over_big: usize,
    pub over_small: usize,
}

/// Pairs of simple modules of an algebra.
pub fn simple_pairs<K: Field>(a: &crate::algebra::AlgRef<K>) -> Vec<(FdModule<K>, FdModule<K>)> {
    let n = a.num_vertices();
    let simples: Vec<_> = (0..n).map(|v| FdModule::simple(a.clone(), v).expect("vertex exists")).collect();
    let mut out = Vec::new();
    for x in &simples {
        for y in &simples {
            out.push((x.clone(), y.clone()));
        }
    }
    out
}

/// Compares `dim Ext_A^i(X, Y)` with `dim Ext_B^i(X, Y)` restricted, for
/// `t < i <= t + window` with `t = pd + p + 1`.
pub fn ehi_dimension_test<K: Field>(
    e: &Extension<K>,
    report: &BoundedReport,
    samples: &[(FdModule<K>, FdModule<K>)],
    window: usize,
) -> Verdict<EhiWitness, EhiViolation, ConsequencePending> {
    let (p, pd) = match &report.overall {
        Verdict::Certified(w) => (w.p, w.bimodule_pd),
        _ => return Verdict::Inconclusive(ConsequencePending::ReportNotCertified),
    };
    let t = pd + p + 1;
    let hi = t + window;
    let small = e.small();
    for (idx, (x, y)) in samples.iter().enumerate() {
        let rx = x.restrict(small.clone(), e.embedding());
        let ry = y.restrict(small.clone(), e.embedding());
        let big = ext_from_resolution(&minimal_resolution(x, hi + 1), y, t + 1..=hi).expect("same algebra");
        let sm = ext_from_resolution(&minimal_resolution(&rx, hi + 1), &ry, t + 1..=hi).expect("same algebra");
        for i in t + 1..=hi {
            match (big.get(i), sm.get(i)) {
                (Some(u), Some(v)) if u != v => {
                    return Verdict::Refuted(EhiViolation { pair: idx, degree: i, over_big: u, over_small: v })
                }
                (Some(_), Some(_)) => {}
                _ => return Verdict::Inconclusive(ConsequencePending::Cutoff(hi + 1)),
            }
        }
    }
    Verdict::Certified(EhiWitness { overshoot: t, window, pairs: samples.len() })
}

