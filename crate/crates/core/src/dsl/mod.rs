//! The reeskit script language: declarations of rings, ideals, modules,
//! maps and graded algebras, followed by commands that print results.
//!
//! ```text
//! ring A = QQ[x] / (x^2);
//! module M = coker A [[x]];
//! rees M;
//! ```

pub mod ast;
pub mod exec;
pub mod output;
pub mod parse;

use crate::error::AlgebraError;
use ast::Pos;

pub use exec::{execute, run_source, Execution, Session, Value};
pub use output::{Block, Out};
pub use parse::{parse, parse_expr_list, parse_incremental, Declared};

#[derive(Debug, thiserror::Error)]
pub enum ScriptError {
    #[error("{}:{}: {message}", pos.line, pos.col)]
    Syntax { pos: Pos, message: String },
    #[error("{}:{}: undefined name '{name}'", pos.line, pos.col)]
    Undefined { pos: Pos, name: String },
    #[error("{}:{}: '{name}' is already defined", pos.line, pos.col)]
    Redefined { pos: Pos, name: String },
    #[error("{}:{}: '{name}' is a {found}, expected a {expected}", pos.line, pos.col)]
    WrongKind { pos: Pos, name: String, expected: &'static str, found: &'static str },
    #[error("{}:{}: ragged matrix: row has {found} entries, expected {expected}", pos.line, pos.col)]
    Ragged { pos: Pos, expected: usize, found: usize },
    #[error("{}:{}: {context}: {source}", pos.line, pos.col)]
    Engine { pos: Pos, context: String, source: AlgebraError },
}

impl ScriptError {
    pub(crate) fn syntax(pos: Pos, message: String) -> ScriptError {
        ScriptError::Syntax { pos, message }
    }
}
