//! A small language for string diagrams and the `sdc` driver.

pub mod cli;
pub mod diagnostic;
pub mod lexer;
pub mod parser;
pub mod source;

pub use cli::{run, run_args, Cli, Command, Output};
pub use diagnostic::{Diagnostic, DiagnosticKind, Severity, Span};
pub use parser::{parse_expr, parse_items, Expr, Item};
pub use source::{SourceFile, TheorySpec};
