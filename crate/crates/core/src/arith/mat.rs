//! Dense matrices over a [`Field`] and exact linear algebra.

use alloc::vec;
use alloc::vec::Vec;

use super::field::Field;

/// A dense row-major matrix that carries its field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat<K: Field> {
    field: K,
    rows: usize,
    cols: usize,
    data: Vec<K::Elem>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref<K: Field> {
    pub reduced: Mat<K>,
    pub pivots: Vec<usize>,
}

impl<K: Field> Rref<K> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl<K: Field> Mat<K> {
    pub fn zeros(field: &K, rows: usize, cols: usize) -> Self {
        Mat { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &K, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    /// Builds a matrix from rows; `cols` is needed when there are no rows.
    pub fn from_rows(field: &K, cols: usize, rows: Vec<Vec<K::Elem>>) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix");
            data.extend(row);
        }
        Mat { field: field.clone(), rows: r, cols, data }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_cols(field: &K, rows: usize, cols: &[Vec<K::Elem>]) -> Self {
        let mut m = Self::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "ragged matrix");
            for (i, x) in c.iter().enumerate() {
                m.data[i * cols.len() + j] = x.clone();
            }
        }
        m
    }

    pub fn from_i64(field: &K, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            field,
            cols,
            rows.iter().map(|r| r.iter().map(|&v| field.from_i64(v)).collect()).collect(),
        )
    }

    pub fn field(&self) -> &K {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn get(&self, i: usize, j: usize) -> &K::Elem {
        &self.data[i * self.cols + j]
    }
    pub fn set(&mut self, i: usize, j: usize, v: K::Elem) {
        self.data[i * self.cols + j] = v;
    }
    pub fn row(&self, i: usize) -> &[K::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
    pub fn row_mut(&mut self, i: usize) -> &mut [K::Elem] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }
    pub fn col(&self, j: usize) -> Vec<K::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }
    pub fn to_rows(&self) -> Vec<Vec<K::Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }
    pub fn to_cols(&self) -> Vec<Vec<K::Elem>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        let nz: Vec<Vec<usize>> = (0..other.rows)
            .map(|k| (0..other.cols).filter(|&j| !f.is_zero(other.get(k, j))).collect())
            .collect();
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for &j in &nz[k] {
                    let idx = i * other.cols + j;
                    f.add_mul_assign(&mut out.data[idx], a, &other.data[k * other.cols + j]);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[K::Elem]) -> Vec<K::Elem> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in product");
        let f = &self.field;
        let nz: Vec<usize> = (0..v.len()).filter(|&k| !f.is_zero(&v[k])).collect();
        (0..self.rows)
            .map(|i| {
                let mut acc = f.zero();
                for &k in &nz {
                    f.add_mul_assign(&mut acc, self.get(i, k), &v[k]);
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect();
        Mat { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.sub(a, b)).collect();
        Mat { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &K::Elem) -> Self {
        let f = &self.field;
        let data = self.data.iter().map(|a| f.mul(a, c)).collect();
        Mat { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &K::Elem, other: &Self) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field.clone();
        if f.is_zero(c) {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            f.add_mul_assign(a, c, b);
        }
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        let mut out = Self::zeros(&self.field, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            out.row_mut(i)[..self.cols].clone_from_slice(self.row(i));
            out.row_mut(i)[self.cols..].clone_from_slice(other.row(i));
        }
        out
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Mat { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Block diagonal sum.
    pub fn block_diag(field: &K, blocks: &[Mat<K>]) -> Self {
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(field, r, c);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            out.set_block(ro, co, b);
            ro += b.rows;
            co += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Self) {
        for i in 0..b.rows {
            self.row_mut(r0 + i)[c0..c0 + b.cols].clone_from_slice(b.row(i));
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        let mut out = Self::zeros(&self.field, rows, cols);
        for i in 0..rows {
            out.row_mut(i).clone_from_slice(&self.row(r0 + i)[c0..c0 + cols]);
        }
        out
    }

    pub fn select_cols(&self, cols: &[usize]) -> Self {
        let mut out = Self::zeros(&self.field, self.rows, cols.len());
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                out.data[i * cols.len() + jj] = self.get(i, j).clone();
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &i in rows {
            data.extend_from_slice(self.row(i));
        }
        Mat { field: self.field.clone(), rows: rows.len(), cols: self.cols, data }
    }

    /// Kronecker product; index `(i, k)` of the result is `i * other.rows + k`.
    pub fn kron(&self, other: &Self) -> Self {
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows * other.rows, self.cols * other.cols);
        let oc = self.cols * other.cols;
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if f.is_zero(a) {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if f.is_zero(b) {
                            continue;
                        }
                        out.data[(i * other.rows + k) * oc + j * other.cols + l] = f.mul(a, b);
                    }
                }
            }
        }
        out
    }

    /// Reduced row echelon form.
    pub fn rref(&self) -> Rref<K> {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..m.cols {
            if prow == m.rows {
                break;
            }
            let mut best: Option<(usize, u64)> = None;
            for r in prow..m.rows {
                let x = m.get(r, col);
                if !f.is_zero(x) {
                    let h = f.height(x);
                    if best.is_none_or(|(_, bh)| h < bh) {
                        best = Some((r, h));
                        if h <= 1 {
                            break;
                        }
                    }
                }
            }
            let Some((r, _)) = best else { continue };
            if r != prow {
                for j in 0..m.cols {
                    m.data.swap(r * m.cols + j, prow * m.cols + j);
                }
            }
            let inv = f.inv(m.get(prow, col)).expect("nonzero pivot");
            let mut support = Vec::new();
            for j in col..m.cols {
                let idx = prow * m.cols + j;
                if !f.is_zero(&m.data[idx]) {
                    m.data[idx] = f.mul(&m.data[idx], &inv);
                    support.push(j);
                }
            }
            let pivot_row: Vec<(usize, K::Elem)> =
                support.iter().map(|&j| (j, m.get(prow, j).clone())).collect();
            for r in 0..m.rows {
                if r == prow {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                let nf = f.neg(&factor);
                for (j, v) in &pivot_row {
                    f.add_mul_assign(&mut m.data[r * m.cols + j], &nf, v);
                }
            }
            pivots.push(col);
            prow += 1;
        }
        Rref { reduced: m, pivots }
    }

    pub fn rank(&self) -> usize {
        if self.rows <= self.cols {
            self.rref().rank()
        } else {
            self.transpose().rref().rank()
        }
    }

    /// Basis of the right null space, as the columns of the result.
    pub fn kernel_basis(&self) -> Self {
        let f = &self.field;
        let e = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &e.pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut k = Self::zeros(f, self.cols, free.len());
        for (t, &fc) in free.iter().enumerate() {
            k.set(fc, t, f.one());
            for (r, &p) in e.pivots.iter().enumerate() {
                let v = e.reduced.get(r, fc);
                if !f.is_zero(v) {
                    k.set(p, t, f.neg(v));
                }
            }
        }
        k
    }

    /// Some `x` with `self * x = b`, if one exists.
    pub fn solve(&self, b: &Self) -> Option<Self> {
        assert_eq!(self.rows, b.rows);
        let aug = self.hstack(b).rref();
        if aug.pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Self::zeros(&self.field, self.cols, b.cols);
        for (r, &p) in aug.pivots.iter().enumerate() {
            x.row_mut(p).clone_from_slice(&aug.reduced.row(r)[self.cols..]);
        }
        Some(x)
    }

    pub fn solve_vec(&self, b: &[K::Elem]) -> Option<Vec<K::Elem>> {
        let bm = Self::from_cols(&self.field, self.rows, &[b.to_vec()]);
        self.solve(&bm).map(|x| x.col(0))
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let x = self.solve(&Self::identity(&self.field, self.rows))?;
        (self.mul(&x) == Self::identity(&self.field, self.rows)).then_some(x)
    }

    /// Indices of a maximal set of independent columns, first-come.
    pub fn independent_cols(&self) -> Vec<usize> {
        self.rref().pivots
    }

    /// A basis for the column space, taken from the columns themselves.
    pub fn column_basis(&self) -> Self {
        self.select_cols(&self.independent_cols())
    }

    /// For a matrix of full column rank, some `L` with `L * self = I`.
    pub fn left_inverse(&self) -> Option<Self> {
        let rows = self.transpose().independent_cols();
        if rows.len() != self.cols {
            return None;
        }
        let sq_inv = self.select_rows(&rows).inverse()?;
        let mut l = Self::zeros(&self.field, self.cols, self.rows);
        for (t, &r) in rows.iter().enumerate() {
            for i in 0..self.cols {
                l.set(i, r, sq_inv.get(i, t).clone());
            }
        }
        Some(l)
    }
}

/// An incrementally built echelon basis of a subspace of `K^n`.
#[derive(Clone, Debug)]
pub struct Echelon<K: Field> {
    field: K,
    n: usize,
    rows: Vec<(usize, Vec<K::Elem>)>,
}

impl<K: Field> Echelon<K> {
    pub fn new(field: &K, n: usize) -> Self {
        Echelon { field: field.clone(), n, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    /// Reduces `v` modulo the current span.
    pub fn reduce(&self, v: &[K::Elem]) -> Vec<K::Elem> {
        let f = &self.field;
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if f.is_zero(&v[*p]) {
                continue;
            }
            let c = f.neg(&v[*p]);
            for (j, x) in row.iter().enumerate().skip(*p) {
                f.add_mul_assign(&mut v[j], &c, x);
            }
        }
        v
    }

    pub fn contains(&self, v: &[K::Elem]) -> bool {
        self.reduce(v).iter().all(|x| self.field.is_zero(x))
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[K::Elem]) -> bool {
        assert_eq!(v.len(), self.n);
        let f = &self.field;
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&r[p]).expect("nonzero");
        for x in r.iter_mut().skip(p) {
            *x = f.mul(x, &inv);
        }
        self.rows.push((p, r));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rationals;

    #[test]
    fn rank_one_rref_and_kernel() {
        let q = Rationals;
        let m = Mat::from_i64(&q, &[&[1, 2], &[2, 4]]);
        let e = m.rref();
        assert_eq!(e.reduced, Mat::from_i64(&q, &[&[1, 2], &[0, 0]]));
        assert_eq!(e.pivots, [0]);
        let k = m.kernel_basis();
        assert_eq!(k, Mat::from_i64(&q, &[&[-2], &[1]]));
        assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn solve_and_inverse() {
        let q = Rationals;
        let a = Mat::from_i64(&q, &[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Mat::identity(&q, 2));
        let b = Mat::from_i64(&q, &[&[3], &[2]]);
        assert_eq!(a.solve(&b).unwrap(), Mat::from_i64(&q, &[&[1], &[1]]));
        let s = Mat::from_i64(&q, &[&[1, 2], &[2, 4]]);
        assert!(s.solve(&Mat::from_i64(&q, &[&[1], &[0]])).is_none());
        assert!(s.inverse().is_none());
    }

    #[test]
    fn left_inverse_of_tall() {
        let q = Rationals;
        let s = Mat::from_i64(&q, &[&[1, 0], &[1, 1], &[0, 3]]);
        let l = s.left_inverse().unwrap();
        assert_eq!(l.mul(&s), Mat::identity(&q, 2));
    }

    #[test]
    fn empty_shapes() {
        let q = Rationals;
        let m = Mat::zeros(&q, 0, 3);
        assert_eq!(m.kernel_basis().cols(), 3);
        let n = Mat::zeros(&q, 3, 0);
        assert_eq!(n.rank(), 0);
        assert_eq!(n.kernel_basis().cols(), 0);
    }
}
