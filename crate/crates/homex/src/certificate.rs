//! Certificate files for `verify-smt`.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::dsl::{BimoduleExpr, MatrixLit, Side};

/// A matrix entry, as a JSON integer or a string such as `"-1/2"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Int(i64),
    Text(String),
}

impl Entry {
    fn text(&self) -> String {
        match self {
            Entry::Int(n) => n.to_string(),
            Entry::Text(s) => s.trim().to_string(),
        }
    }
}

/// A bimodule named in the source file, or given by action matrices keyed
/// by vertex label or arrow name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BimoduleSpec {
    Name(String),
    Matrices {
        dim: usize,
        #[serde(default)]
        left: BTreeMap<String, Vec<Vec<Entry>>>,
        #[serde(default)]
        right: BTreeMap<String, Vec<Vec<Entry>>>,
    },
}

impl BimoduleSpec {
    pub fn to_expr(&self) -> BimoduleExpr {
        match self {
            BimoduleSpec::Name(n) => BimoduleExpr::Name(n.clone()),
            BimoduleSpec::Matrices { dim, left, right } => {
                let lit = |m: &Vec<Vec<Entry>>| -> MatrixLit { m.iter().map(|r| r.iter().map(Entry::text).collect()).collect() };
                let mut actions = Vec::new();
                for (k, m) in left {
                    actions.push((Side::Left, k.clone(), lit(m)));
                }
                for (k, m) in right {
                    actions.push((Side::Right, k.clone(), lit(m)));
                }
                BimoduleExpr::Matrices { dim: *dim, actions }
            }
        }
    }
}

/// `M` is an `A`-`B` bimodule and `N` a `B`-`A` bimodule; `level` is the
/// claimed syzygy degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Certificate {
    /// Path of the `.hx` file declaring the algebras, relative to the
    /// certificate.
    pub source: String,
    pub a: String,
    pub b: String,
    pub m: BimoduleSpec,
    pub n: BimoduleSpec,
    pub level: usize,
}

impl Certificate {
    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn source_path(&self, certificate: &Path) -> PathBuf {
        let p = Path::new(&self.source);
        if p.is_absolute() {
            return p.to_path_buf();
        }
        certificate.parent().unwrap_or(Path::new(".")).join(p)
    }
}
