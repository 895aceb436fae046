//! Evaluating an action given on idempotents and generators at arbitrary
//! algebra elements, through the word basis.

use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::AlgebraTable;
use crate::arith::{Field, Mat};

/// Action data on one side. With `reversed` set the action is a right
/// action written as matrices, so `R(xy) = R(y) R(x)`.
pub(crate) struct Action<'a, K: Field> {
    pub alg: &'a AlgebraTable<K>,
    pub idem: &'a [Mat<K>],
    pub gens: &'a [Mat<K>],
    pub reversed: bool,
}

impl<'a, K: Field> Action<'a, K> {
    fn dim(&self) -> usize {
        self.idem.first().map_or(0, |m| m.rows())
    }

    fn step(&self, parent: &Mat<K>, g: usize) -> Mat<K> {
        if self.reversed {
            parent.mul(&self.gens[g])
        } else {
            self.gens[g].mul(parent)
        }
    }

    /// Matrices of the words flagged in `needed` and of their ancestors.
    pub fn words(&self, needed: &[bool]) -> Vec<Option<Mat<K>>> {
        let words = self.alg.words();
        let mut need = needed.to_vec();
        for w in (0..words.len()).rev() {
            if need[w] {
                if let Some(p) = words[w].parent {
                    need[p] = true;
                }
            }
        }
        let mut out: Vec<Option<Mat<K>>> = vec![None; words.len()];
        for w in 0..words.len() {
            if !need[w] {
                continue;
            }
            let m = match (words[w].parent, words[w].generator) {
                (Some(p), Some(g)) => self.step(out[p].as_ref().expect("parent first"), g),
                _ => self.idem[words[w].root].clone(),
            };
            out[w] = Some(m);
        }
        out
    }

    pub fn all_words(&self) -> Vec<Mat<K>> {
        let n = self.alg.words().len();
        self.words(&vec![true; n]).into_iter().map(|m| m.expect("all computed")).collect()
    }

    pub fn of(&self, x: &[K::Elem]) -> Mat<K> {
        let f = self.alg.field();
        let c = self.alg.to_words().mul_vec(x);
        let needed: Vec<bool> = c.iter().map(|v| !f.is_zero(v)).collect();
        let mats = self.words(&needed);
        let mut out = Mat::zeros(f, self.dim(), self.dim());
        for (w, m) in mats.iter().enumerate() {
            if needed[w] {
                out.add_scaled(&c[w], m.as_ref().expect("computed"));
            }
        }
        out
    }

    /// Actions of all standard basis elements.
    pub fn basis(&self) -> Vec<Mat<K>> {
        let f = self.alg.field();
        let words = self.all_words();
        let t = self.alg.to_words();
        (0..self.alg.dim())
            .map(|k| {
                let mut out = Mat::zeros(f, self.dim(), self.dim());
                for (w, m) in words.iter().enumerate() {
                    out.add_scaled(t.get(w, k), m);
                }
                out
            })
            .collect()
    }

    /// Checks the axioms of a (left or right) module structure; returns a
    /// description of the first failure.
    pub fn verify(&self, dim: usize) -> Result<(), alloc::string::String> {
        use alloc::format;
        let alg = self.alg;
        let f = alg.field();
        let n = alg.num_vertices();
        if self.idem.len() != n || self.gens.len() != alg.generators().len() {
            return Err("wrong number of action matrices".into());
        }
        for m in self.idem.iter().chain(self.gens) {
            if m.rows() != dim || m.cols() != dim {
                return Err("action matrix has the wrong shape".into());
            }
        }
        let mut sum = Mat::zeros(f, dim, dim);
        for i in 0..n {
            for j in 0..n {
                let p = self.idem[i].mul(&self.idem[j]);
                let ok = if i == j { p == self.idem[i] } else { p.is_zero() };
                if !ok {
                    return Err(format!("idempotents {i} and {j} are not orthogonal idempotents"));
                }
            }
            sum = sum.add(&self.idem[i]);
        }
        if sum != Mat::identity(f, dim) {
            return Err("idempotents do not act with sum one".into());
        }
        for (gi, g) in alg.generators().iter().enumerate() {
            let (s, t) = if self.reversed { (g.target, g.source) } else { (g.source, g.target) };
            let sandwich = self.idem[t].mul(&self.gens[gi]).mul(&self.idem[s]);
            if sandwich != self.gens[gi] {
                return Err(format!("generator '{}' does not respect idempotents", g.label));
            }
        }
        let words = self.all_words();
        let to_words = alg.to_words();
        for (w, word) in alg.words().iter().enumerate() {
            for (gi, g) in alg.generators().iter().enumerate() {
                if g.source != word.target {
                    continue;
                }
                let prod = alg.mul(&g.vector, alg.word_vector(w));
                let c = to_words.mul_vec(&prod);
                let mut expect = Mat::zeros(f, dim, dim);
                for (w2, m) in words.iter().enumerate() {
                    expect.add_scaled(&c[w2], m);
                }
                let got = self.step(&words[w], gi);
                if got != expect {
                    return Err(format!("relation fails for generator '{}'", g.label));
                }
            }
        }
        Ok(())
    }
}
