//! Instance files and generators.

mod format;
pub mod gen;

pub use format::{parse, render, ParseError, ParseErrorKind};
