//! Command-line front end for `involute-core`: group expressions, threaded
//! enumeration drivers and output formats.

pub mod cli;
pub mod expr;
pub mod format;
pub mod parallel;

pub use cli::run;
pub use expr::{parse_group_expr, ExprError, GroupExpr};
