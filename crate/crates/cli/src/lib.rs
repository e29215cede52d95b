//! Text front end for the `qheis` engine: an expression language, JSON
//! encodings and the `qheis` command line.

pub mod commands;
pub mod error;
pub mod eval;
pub mod json;
pub mod lexer;
pub mod parser;

pub use error::{CliError, DomainError, SyntaxError};
pub use eval::{eval_ast, eval_scalar, eval_with, Value};
pub use parser::{parse, Ast, Atom};
