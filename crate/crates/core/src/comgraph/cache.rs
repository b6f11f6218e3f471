//! Component element lists as text: one header line, then one element per
//! line in cycle notation.

use std::collections::BTreeMap;

use super::graph::VertexSet;
use crate::error::{Error, Result};
use crate::perm::Permutation;

pub const CACHE_SCHEMA_VERSION: &str = "1";

const MAGIC: &str = "# cga-component";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CacheHeader {
    pub schema_version: String,
    pub degree: usize,
    /// Free-form `key=value` parameters; values contain no whitespace.
    pub params: BTreeMap<String, String>,
}

pub fn export_component(set: &VertexSet, params: &BTreeMap<String, String>) -> Result<String> {
    let mut out = format!("{MAGIC} schema_version={CACHE_SCHEMA_VERSION} degree={}", set.degree);
    for (k, v) in params {
        if k.contains(['=', ' ']) || v.contains(char::is_whitespace) || k.is_empty() {
            return Err(Error::InvalidParameters(format!("bad cache parameter {k}={v}")));
        }
        out.push_str(&format!(" {k}={v}"));
    }
    out.push('\n');
    for g in set.elements() {
        out.push_str(&g.render());
        out.push('\n');
    }
    Ok(out)
}

pub fn import_component(text: &str) -> Result<(CacheHeader, VertexSet)> {
    let mut lines = text.lines();
    let bad = |reason: &str| Error::Malformed {
        offset: 0,
        reason: reason.to_string(),
    };
    let header = lines.next().ok_or_else(|| bad("empty cache file"))?;
    let rest = header
        .strip_prefix(MAGIC)
        .ok_or_else(|| bad("missing cache header"))?;
    let mut fields: BTreeMap<String, String> = BTreeMap::new();
    for field in rest.split_whitespace() {
        let (k, v) = field.split_once('=').ok_or_else(|| bad("header field without '='"))?;
        fields.insert(k.to_string(), v.to_string());
    }
    let schema_version = fields
        .remove("schema_version")
        .ok_or_else(|| bad("header lacks schema_version"))?;
    if schema_version != CACHE_SCHEMA_VERSION {
        return Err(bad(&format!("unsupported schema_version {schema_version}")));
    }
    let degree: usize = fields
        .remove("degree")
        .and_then(|d| d.parse().ok())
        .ok_or_else(|| bad("header lacks a valid degree"))?;
    let elements = lines
        .filter(|l| !l.trim().is_empty())
        .map(|l| Permutation::parse(l, degree))
        .collect::<Result<Vec<_>>>()?;
    let set = VertexSet::new(elements)?;
    Ok((
        CacheHeader {
            schema_version,
            degree,
            params: fields,
        },
        set,
    ))
}
