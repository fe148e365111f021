//! JSON diagonal configs.
//!
//! Syntax errors carry the line and column from the JSON parser; semantic
//! errors carry the path of the offending node, e.g.
//! `$.params.components[1].params`.

use std::path::Path;

use crate::diagonal::{make_family, Diagonal, FamilySpec, DEFAULT_GRID};
use crate::error::{Error, Result};

pub fn parse_spec(text: &str) -> Result<FamilySpec> {
    let mut de = serde_json::Deserializer::from_str(text);
    let spec: FamilySpec = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let path = match e.path().to_string() {
            p if p == "." => "$".to_string(),
            p => format!("$.{p}"),
        };
        let inner = e.inner();
        Error::Config {
            path,
            message: format!("line {} column {}: {inner}", inner.line(), inner.column()),
        }
    })?;
    de.end().map_err(|e| Error::Config {
        path: "$".into(),
        message: format!("line {} column {}: {e}", e.line(), e.column()),
    })?;
    Ok(spec)
}

/// Builds a diagonal from a parsed spec, rejecting anything that is not an
/// admissible diagonal.
pub fn build(spec: &FamilySpec) -> Result<Diagonal> {
    let diagonal = build_at(spec, "$")?;
    let report = diagonal.validate(DEFAULT_GRID);
    if let Some(first) = report.violations.first() {
        return Err(Error::Config {
            path: "$".into(),
            message: format!("{first} ({} violations in total)", report.violations.len()),
        });
    }
    Ok(diagonal)
}

fn build_at(spec: &FamilySpec, path: &str) -> Result<Diagonal> {
    let located = |e: Error| match e {
        Error::Domain(message) => Error::Config {
            path: format!("{path}.params"),
            message,
        },
        other => other,
    };
    match spec {
        FamilySpec::Mixture { components, weights } => {
            let parts = components
                .iter()
                .enumerate()
                .map(|(i, c)| build_at(c, &format!("{path}.params.components[{i}]")))
                .collect::<Result<Vec<_>>>()?;
            Diagonal::mix(&parts, weights).map_err(located)
        }
        leaf => make_family(leaf).map_err(located),
    }
}

pub fn parse_config(text: &str) -> Result<Diagonal> {
    build(&parse_spec(text)?)
}

pub fn load_config(path: &Path) -> Result<Diagonal> {
    let text = std::fs::read_to_string(path)?;
    parse_config(&text)
}
