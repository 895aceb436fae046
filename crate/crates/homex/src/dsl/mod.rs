//! The `.hx` input language: a line-oriented description of quivers,
//! relations, modules and extensions.

mod ast;
mod error;
mod lexer;
mod parser;
mod printer;

pub use ast::*;
pub use error::{ParseError, Pos, ResolveError};
pub use lexer::{lex, Tok, Token};
pub use parser::{parse, RESERVED};
pub use printer::{lincomb, print};
