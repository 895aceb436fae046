//! Declarations of a `.hx` source file.

/// A matrix literal; entries keep their source text (`-3`, `1/2`).
pub type MatrixLit = Vec<Vec<String>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowDecl {
    pub name: String,
    pub source: String,
    pub target: String,
}

/// `coeff * path`, the path listed as written (`b*a` is `["b", "a"]`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: String,
    pub path: Vec<String>,
}

/// A vertex by label, or by position with `#k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VertexRef {
    Label(String),
    Index(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraExpr {
    Enveloping(String),
    Opposite(String),
    Tensor(String, String),
    Product(String, String),
    /// The larger algebra of an extension.
    Big(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleExpr {
    Name(String),
    Simple(VertexRef),
    Proj(VertexRef),
    Regular,
    Sum(Vec<ModuleExpr>),
    Syzygy(Box<ModuleExpr>, usize),
    /// Action matrices keyed by vertex label or arrow name.
    Matrices { dim: usize, actions: Vec<(String, MatrixLit)> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BimoduleExpr {
    Name(String),
    Regular,
    /// A left module of the left algebra and a right module of the right
    /// algebra.
    Outer(ModuleExpr, ModuleExpr),
    /// `A / B` for an extension, over the smaller algebra.
    Quotient(String),
    Matrices { dim: usize, actions: Vec<(Side, String, MatrixLit)> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtensionExpr {
    Embed { small: String, big: String, matrix: Option<MatrixLit> },
    Trivial { algebra: String, bimodule: String },
    Split { algebra: String, bimodule: String, product: MatrixLit },
    Triangular { lambda: String, gamma: String, bimodule: String },
    ArrowRemoval { algebra: String, arrow: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decl {
    Field(FieldSpec),
    Quiver { name: String, vertices: Vec<String>, arrows: Vec<ArrowDecl> },
    Relations { name: String, relations: Vec<Vec<Term>> },
    Algebra { name: String, expr: AlgebraExpr },
    /// `right` marks a right module, given by its right action.
    Module { name: String, algebra: String, right: bool, expr: ModuleExpr },
    Bimodule { name: String, over: Option<(String, String)>, expr: BimoduleExpr },
    Extension { name: String, expr: ExtensionExpr },
}

impl Decl {
    /// The name a declaration introduces, if any.
    pub fn name(&self) -> Option<&str> {
        match self {
            Decl::Field(_) | Decl::Relations { .. } => None,
            Decl::Quiver { name, .. }
            | Decl::Algebra { name, .. }
            | Decl::Module { name, .. }
            | Decl::Bimodule { name, .. }
            | Decl::Extension { name, .. } => Some(name),
        }
    }
}

/// A parsed file. Equality ignores source positions.
#[derive(Clone, Debug, Default)]
pub struct SourceFile {
    pub decls: Vec<Decl>,
    /// Line of each declaration.
    pub lines: Vec<usize>,
}

impl PartialEq for SourceFile {
    fn eq(&self, other: &Self) -> bool {
        self.decls == other.decls
    }
}

impl Eq for SourceFile {}
