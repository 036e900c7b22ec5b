//! The `.hdv` derivation language.
//!
//! ```text
//! let A = bk 4
//! let B = bk 4
//! let C = hajos A (0,1) B (1,0)
//! check C chi = 4
//! check C critical 4
//! ```
//!
//! Steps bind names to digraphs built by the operations in
//! [`crate::constructions`]; checks are verified with the exact solver and
//! the isomorphism engine.

mod ast;
mod builder;
mod eval;
mod parse;
mod verify;

pub use ast::{Check, Claim, Expr, JoinArgs, Script, Step};
pub use builder::ScriptBuilder;
pub use eval::{evaluate_script, Bindings};
pub use parse::{parse_script, ParseError, ParseErrorKind};
pub use verify::{
    verify_file, verify_script, Line, Mode, VerificationReport, SOLVER_CONFIRM_LIMIT,
};
