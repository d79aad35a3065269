//! Surface languages for group words and Laurent series.
//!
//! Both grammars are LL(1) and parsed by hand-rolled recursive descent so
//! diagnostics always carry a line and column. Rationals are written `p/q`
//! with an optional sign; there are no floating literals.

mod group;
mod lex;
mod series;

pub use group::{eval_group, parse_group, print_group, GroupExpr, GroupValue};
pub use lex::Pos;
pub use series::{eval_series, parse_series, print_series, RingDecl, SeriesExpr, SeriesProgram};

use crate::extension::ExtError;
use crate::symbols::SymbolError;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExprError {
    #[error("{line}:{col}: expected {expected}, found {found}")]
    Syntax {
        line: u32,
        col: u32,
        expected: String,
        found: String,
    },
    #[error("{line}:{col}: expected {expected} coordinates, got {got}")]
    Arity {
        line: u32,
        col: u32,
        expected: usize,
        got: usize,
    },
    #[error("{line}:{col}: undeclared symbol `{name}`")]
    UndeclaredSymbol { line: u32, col: u32, name: String },
    #[error("{line}:{col}: scalar coordinates must be nonzero")]
    ZeroScalar { line: u32, col: u32 },
    #[error(transparent)]
    Ext(#[from] ExtError),
    #[error(transparent)]
    Symbol(#[from] SymbolError),
}

impl ExprError {
    pub(crate) fn syntax(pos: Pos, expected: impl Into<String>, found: impl Into<String>) -> Self {
        ExprError::Syntax {
            line: pos.line,
            col: pos.col,
            expected: expected.into(),
            found: found.into(),
        }
    }
}
