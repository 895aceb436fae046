//! Error types.

use alloc::string::String;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("structure constants are malformed: {0}")]
    Malformed(String),
    #[error("multiplication is not associative on basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("the idempotents do not sum to a two-sided unit")]
    NotUnital,
    #[error("idempotent data is invalid: {0}")]
    BadIdempotents(String),
    #[error("radical data is invalid: {0}")]
    BadRadical(String),
    #[error("the algebra is not basic and split: dim {dim} != {idempotents} idempotents + radical {radical}")]
    NotElementary { dim: usize, idempotents: usize, radical: usize },
    #[error("generator data is invalid: {0}")]
    BadGenerators(String),
    #[error("relation {index} is invalid: {reason}")]
    BadRelation { index: usize, reason: String },
    #[error("relations are not admissible: paths of length {0} survive")]
    NonAdmissible(usize),
    #[error("{what} exceeds the limit of {limit}")]
    TooLarge { what: String, limit: usize },
    #[error("the radical must be supplied in positive characteristic")]
    RadicalRequired,
    #[error("unknown name '{0}'")]
    UnknownName(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuleError {
    #[error("module is over a different algebra than required")]
    WrongAlgebra,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("module axiom fails: {0}")]
    NotAModule(String),
    #[error("subspace is not a submodule")]
    NotSubmodule,
    #[error("vertex {0} out of range")]
    NoSuchVertex(usize),
    #[error("map is not a module homomorphism")]
    NotHomomorphism,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtensionError {
    #[error("embedding does not send the unit to the unit")]
    NotUnital,
    #[error("embedding is not multiplicative on basis pair ({0}, {1})")]
    NotMultiplicative(usize, usize),
    #[error("embedding is not injective")]
    NotInjective,
    #[error("embedding shape is {found:?}, expected {expected:?}")]
    BadShape { expected: (usize, usize), found: (usize, usize) },
    #[error("complement does not span a complement of the image")]
    BadComplement,
    #[error("product on the bimodule is not nilpotent")]
    ProductNotNilpotent,
    #[error("product on the bimodule is not a bimodule map or not associative: {0}")]
    BadProduct(String),
    #[error("arrow '{0}' occurs in a relation")]
    ArrowInRelations(String),
    #[error("the extension is not split")]
    NotSplit,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Module(#[from] ModuleError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GorensteinError {
    #[error("test set module {0} is not certified Gorenstein projective")]
    TestsetNotCertified(usize),
    #[error(transparent)]
    Module(#[from] ModuleError),
}
