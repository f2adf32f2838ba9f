//! Named example diagrams.
//!
//! The corpus lives in a plain-text manifest (`name | code | notes`), so
//! entries can be added or swapped without rebuilding: see
//! [`parse_manifest`].

use thiserror::Error;

use crate::diagram::{LinkDiagram, ParseError};

const BUILTIN: &str = include_str!("../fixtures.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub name: String,
    /// `None` while the code is still to be transcribed.
    pub code: Option<String>,
    pub notes: String,
}

impl Fixture {
    pub fn diagram(&self) -> Option<LinkDiagram> {
        self.code.as_deref().map(|c| LinkDiagram::parse(c).expect("manifest codes are validated"))
    }
}

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("line {line}: expected `name | code | notes`")]
    Format { line: usize },
    #[error("line {line}: fixture `{name}`: {source}")]
    Code { line: usize, name: String, source: ParseError },
    #[error("line {line}: duplicate fixture `{name}`")]
    Duplicate { line: usize, name: String },
}

pub fn parse_manifest(text: &str) -> Result<Vec<Fixture>, FixtureError> {
    let mut out: Vec<Fixture> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.splitn(3, '|').map(str::trim).collect();
        let [name, code, notes] = fields[..] else {
            return Err(FixtureError::Format { line });
        };
        if name.is_empty() {
            return Err(FixtureError::Format { line });
        }
        if out.iter().any(|f| f.name == name) {
            return Err(FixtureError::Duplicate { line, name: name.to_string() });
        }
        let code = if code == "-" {
            None
        } else {
            LinkDiagram::parse(code).map_err(|source| FixtureError::Code {
                line,
                name: name.to_string(),
                source,
            })?;
            Some(code.to_string())
        };
        out.push(Fixture { name: name.to_string(), code, notes: notes.to_string() });
    }
    Ok(out)
}

pub fn builtin() -> Vec<Fixture> {
    parse_manifest(BUILTIN).expect("built-in manifest is valid")
}

pub fn find(name: &str) -> Option<Fixture> {
    builtin().into_iter().find(|f| f.name == name)
}
