use std::fmt::Write;

use super::{content_lines, parse_spec, LoadError};
use crate::verifier::{CatalogEntry, Expected};

/// One entry per line: `<name> <spec> [; key=value, ...]`, where keys are
/// `n`, `m`, `f_group` and `ca_group`.
pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>, LoadError> {
    let mut entries = Vec::new();
    for (line, content) in content_lines(text) {
        let (body, attrs) = match content.split_once(';') {
            Some((b, a)) => (b.trim(), Some(a)),
            None => (content, None),
        };
        let Some((name, spec)) = body.split_once(char::is_whitespace) else {
            return Err(LoadError::format(line, "expected `<name> <spec>`"));
        };
        let spec = spec.trim();
        if let Err(e) = parse_spec(spec) {
            return Err(LoadError::format(line, e.to_string()));
        }
        let mut expected = Expected::default();
        for attr in attrs.into_iter().flat_map(|a| a.split(',')) {
            let attr = attr.trim();
            if attr.is_empty() {
                continue;
            }
            let bad = || LoadError::format(line, format!("bad attribute {attr:?}"));
            let (key, value) = attr.split_once('=').ok_or_else(bad)?;
            let value = value.trim();
            match key.trim() {
                "n" => expected.n = Some(value.parse().map_err(|_| bad())?),
                "m" => expected.m = Some(value.parse().map_err(|_| bad())?),
                "f_group" => expected.f_group = Some(value.parse().map_err(|_| bad())?),
                "ca_group" => expected.ca_group = Some(value.parse().map_err(|_| bad())?),
                _ => return Err(bad()),
            }
        }
        entries.push(CatalogEntry {
            name: name.to_string(),
            builder_spec: spec.to_string(),
            expected,
        });
    }
    Ok(entries)
}

pub fn render_catalog(entries: &[CatalogEntry]) -> String {
    let mut out = String::new();
    for e in entries {
        let _ = write!(out, "{} {}", e.name, e.builder_spec);
        let x = &e.expected;
        let attrs: Vec<String> = [
            x.n.map(|v| format!("n={v}")),
            x.m.map(|v| format!("m={v}")),
            x.f_group.map(|v| format!("f_group={v}")),
            x.ca_group.map(|v| format!("ca_group={v}")),
        ]
        .into_iter()
        .flatten()
        .collect();
        if !attrs.is_empty() {
            let _ = write!(out, " ; {}", attrs.join(", "));
        }
        out.push('\n');
    }
    out
}
