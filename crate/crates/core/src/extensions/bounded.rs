use alloc::sync::Arc;
use alloc::vec::Vec;
use core::convert::Infallible;

use super::Extension;
use crate::arith::Field;
use crate::homology::{minimal_resolution, tor_from_resolution, DEFAULT_CUTOFF};
use crate::module::{tensor_over, Bimodule};
use crate::verdict::{Status, Verdict};

/// Which argument of `Tor_i(M, M^j)` versus `Tor_i(M^j, M)` is used for the
/// third condition. Both must give the same verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TorSide {
    /// `Tor_i(M, M^j)`, resolving `M` as a right module.
    #[default]
    Left,
    /// `Tor_i(M^j, M)`, resolving `M` as a left module.
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundedConfig {
    /// Largest tensor power computed.
    pub nil_cap: usize,
    /// Resolution length limit, for both the bimodule and one-sided pd.
    pub pd_cutoff: usize,
    pub tor_side: TorSide,
}

impl Default for BoundedConfig {
    fn default() -> Self {
        BoundedConfig { nil_cap: 8, pd_cutoff: DEFAULT_CUTOFF, tor_side: TorSide::Left }
    }
}

/// Tensor powers `M, M (x) M, ...` as bimodules.
#[derive(Clone, Debug)]
pub struct TensorPowers<K: Field> {
    pub dims: Vec<usize>,
    /// Least `p` with a vanishing `p`-th power, or the cap.
    pub nilpotency: Verdict<usize, Infallible, usize>,
    /// `powers[j - 1]` is `M^j`.
    pub powers: Vec<Bimodule<K>>,
}

/// Powers are not formed past this dimension; the verdict is then
/// inconclusive at the last computed exponent.
pub const MAX_POWER_DIM: usize = 512;

/// Iterated `M^{(x) j}` up to `cap`. The zero bimodule has `p = 1`.
pub fn tensor_powers<K: Field>(m: &Bimodule<K>, cap: usize) -> TensorPowers<K> {
    let mut powers: Vec<Bimodule<K>> = Vec::new();
    let mut dims = Vec::new();
    let mut cur = m.clone();
    for j in 1..=cap.max(1) {
        dims.push(cur.dim());
        if cur.is_zero() {
            powers.push(cur);
            return TensorPowers { dims, nilpotency: Verdict::Certified(j), powers };
        }
        let next = if j < cap && cur.dim() * m.dim() <= MAX_POWER_DIM * 8 {
            Some(tensor_over(&cur, m).expect("powers share the algebra").module)
        } else {
            None
        };
        powers.push(cur);
        match next {
            Some(n) if n.dim() <= MAX_POWER_DIM || n.is_zero() => cur = n,
            _ => return TensorPowers { dims, nilpotency: Verdict::Inconclusive(j), powers },
        }
    }
    TensorPowers { dims, nilpotency: Verdict::Inconclusive(cap), powers }
}

/// A nonzero entry of the `Tor` table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TorViolation {
    pub i: usize,
    pub j: usize,
    pub dim: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundedWitness {
    pub p: usize,
    pub bimodule_pd: usize,
}

/// The first condition that could not be decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundedPending {
    NilpotencyCap(usize),
    BimodulePdCutoff(usize),
    OneSidedPdCutoff(usize),
}

#[derive(Clone, Debug)]
pub struct BoundedReport {
    pub config: BoundedConfig,
    pub quotient_dim: usize,
    pub power_dims: Vec<usize>,
    pub nilpotency: Verdict<usize, Infallible, usize>,
    pub bimodule_pd: Verdict<usize, Infallible, usize>,
    pub one_sided_pd: Verdict<usize, Infallible, usize>,
    /// `tor_table[i - 1][j - 1]`; `None` past the certified window.
    pub tor_table: Vec<Vec<Option<usize>>>,
    pub overall: Verdict<BoundedWitness, TorViolation, BoundedPending>,
}

impl BoundedReport {
    pub fn p(&self) -> Option<usize> {
        self.nilpotency.certified().copied()
    }
    pub fn status(&self) -> Status {
        self.overall.status()
    }
}

fn pd_verdict<K: Field>(res: &crate::homology::Resolution<K>, cutoff: usize) -> Verdict<usize, Infallible, usize> {
    match res.length() {
        Some(n) => Verdict::Certified(n),
        None => Verdict::Inconclusive(cutoff),
    }
}

/// Checks the three conditions of a bounded extension for `B -> A` with
/// `M = A/B`: tensor nilpotency, finite projective dimension over `B^e`,
/// and vanishing of `Tor_i(M, M^j)` for `i, j >= 1`.
///
/// Only `j < p` and `i` up to the one-sided pd of `M` matter; beyond those
/// the groups vanish.
pub fn check_bounded<K: Field>(e: &Extension<K>, config: BoundedConfig) -> BoundedReport {
    let b = e.small().clone();
    let m = e.quotient_bimodule().module;
    let pw = tensor_powers(&m, config.nil_cap);

    let env = Arc::new(b.enveloping().expect("enveloping algebra of a checked algebra"));
    let m_env = m.to_enveloping(env).expect("shape matches");
    let bimodule_pd = pd_verdict(&minimal_resolution(&m_env, config.pd_cutoff), config.pd_cutoff);

    let op = Arc::new(b.opposite());
    let one_sided = match config.tor_side {
        TorSide::Left => m.right_module(op.clone()).expect("opposite algebra"),
        TorSide::Right => m.left_module(),
    };
    let res = minimal_resolution(&one_sided, config.pd_cutoff);
    let one_sided_pd = pd_verdict(&res, config.pd_cutoff);

    // without a vanishing power no table entry can change the verdict
    let j_max = match pw.nilpotency {
        Verdict::Certified(p) => p - 1,
        _ => 0,
    };
    let i_max = match one_sided_pd {
        Verdict::Certified(n) => n,
        _ => res.num_terms().saturating_sub(2),
    };
    let mut tor_table = alloc::vec![alloc::vec![None; j_max]; i_max];
    for j in 1..=j_max {
        let pj = &pw.powers[j - 1];
        let y = match config.tor_side {
            TorSide::Left => pj.left_module(),
            TorSide::Right => pj.right_module(op.clone()).expect("opposite algebra"),
        };
        let dims = tor_from_resolution(&res, &y, 1..=i_max.max(1)).expect("algebras match");
        for i in 1..=i_max {
            tor_table[i - 1][j - 1] = dims.get(i);
        }
    }

    let violation = (1..=i_max).find_map(|i| {
        (1..=j_max).find_map(|j| match tor_table[i - 1][j - 1] {
            Some(d) if d > 0 => Some(TorViolation { i, j, dim: d }),
            _ => None,
        })
    });
    let overall = match (&pw.nilpotency, violation) {
        (Verdict::Certified(_), Some(v)) => Verdict::Refuted(v),
        (Verdict::Inconclusive(c), _) => Verdict::Inconclusive(BoundedPending::NilpotencyCap(*c)),
        (Verdict::Certified(p), None) => match (&bimodule_pd, &one_sided_pd) {
            (Verdict::Certified(d), Verdict::Certified(_)) => {
                Verdict::Certified(BoundedWitness { p: *p, bimodule_pd: *d })
            }
            (Verdict::Certified(_), _) => Verdict::Inconclusive(BoundedPending::OneSidedPdCutoff(config.pd_cutoff)),
            _ => Verdict::Inconclusive(BoundedPending::BimodulePdCutoff(config.pd_cutoff)),
        },
        (Verdict::Refuted(x), _) => match *x {},
    };
    BoundedReport {
        config,
        quotient_dim: m.dim(),
        power_dims: pw.dims,
        nilpotency: pw.nilpotency,
        bimodule_pd,
        one_sided_pd,
        tor_table,
        overall,
    }
}
