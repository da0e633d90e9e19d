//! Text formats and the command-line front end for [`gfm_core`].
//!
//! All formats are line based: one `key value...` entry per line, blank
//! lines and lines starting with `#` skipped. Tokens are separated by
//! whitespace, so a `#` inside a token list is an ordinary letter.

pub mod cli;
pub mod graph_file;
pub mod instance_file;
pub mod rows_file;
pub mod witness_file;

pub use graph_file::{parse_graph, write_graph};
pub use instance_file::{parse_instance, serialize_instance};
pub use rows_file::{parse_rows, write_rows};
pub use witness_file::{parse_witness, write_witness, WitnessFile};

use std::fmt;

/// A format error, tied to a 1-based line when one is to blame.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub line: Option<usize>,
    pub message: String,
}

impl ParseError {
    pub fn at(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line: Some(line),
            message: message.into(),
        }
    }

    pub fn eof(message: impl Into<String>) -> Self {
        ParseError {
            line: None,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(l) => write!(f, "line {l}: {}", self.message),
            None => write!(f, "end of input: {}", self.message),
        }
    }
}

/// Non-comment lines as `(line number, key, rest of tokens)`.
pub(crate) fn entries(src: &str) -> impl Iterator<Item = (usize, &str, Vec<&str>)> {
    src.lines().enumerate().filter_map(|(i, line)| {
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            return None;
        }
        let mut tokens = trimmed.split_whitespace();
        let key = tokens.next()?;
        Some((i + 1, key, tokens.collect()))
    })
}
