//! Text formats: group specifications, Cayley-table files, permutation
//! generator files and catalog files. Parsers take `&str` and never panic
//! on malformed input; the `load_*` wrappers add file access.

mod catalog_file;
mod cayley;
mod perms;
mod spec;

use std::path::{Path, PathBuf};

pub use catalog_file::{parse_catalog, render_catalog};
pub use cayley::{parse_cayley, render_cayley};
pub use perms::{parse_permutations, render_permutations};
pub use spec::{parse_spec, Builtin, GroupSpec, SpecError, FAMILIES};

use crate::error::GroupError;
use crate::group::FiniteGroup;

/// Largest table order accepted from files and products.
pub const MAX_TABLE_ORDER: usize = 4096;

/// Largest permutation degree accepted from files.
pub const MAX_DEGREE: usize = 1024;

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("cannot read {path}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Spec(#[from] SpecError),
}

impl LoadError {
    pub(crate) fn format(line: usize, message: impl Into<String>) -> Self {
        LoadError::Format {
            line,
            message: message.into(),
        }
    }
}

fn read(path: &Path) -> Result<String, LoadError> {
    std::fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn load_cayley(path: &Path) -> Result<FiniteGroup, LoadError> {
    let g = parse_cayley(&read(path)?)?;
    if g.name().is_empty() {
        Ok(g.with_name(path.display().to_string()))
    } else {
        Ok(g)
    }
}

pub fn load_permutations(path: &Path) -> Result<FiniteGroup, LoadError> {
    let g = parse_permutations(&read(path)?)?;
    Ok(g.with_name(path.display().to_string()))
}

pub fn export_cayley(g: &FiniteGroup, path: &Path) -> Result<(), LoadError> {
    std::fs::write(path, render_cayley(g)).map_err(|source| LoadError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn load_catalog(path: &Path) -> Result<Vec<crate::verifier::CatalogEntry>, LoadError> {
    parse_catalog(&read(path)?)
}

/// Non-empty, non-comment lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_usize(line: usize, token: &str, what: &str) -> Result<usize, LoadError> {
    token.parse().map_err(|_| {
        LoadError::format(
            line,
            format!("{what}: expected a decimal integer, got {token:?}"),
        )
    })
}
