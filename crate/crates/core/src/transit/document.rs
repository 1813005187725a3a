//! The JSON transit-function document.
//!
//! ```json
//! { "n": 3, "vertices": ["a", "b", "c"], "default": "pair",
//!   "entries": [ { "u": "a", "v": "c", "set": ["a", "b", "c"] } ] }
//! ```
//!
//! Vertices may be given as indices or, when `vertices` declares an ordering,
//! by name. With `"default": "pair"` unlisted pairs map to `{u, v}`; with
//! `"none"` (or no default at all) they map to the empty set. Entries with
//! `u = v` overwrite the diagonal. Later entries win over earlier ones.

use serde::{Deserialize, Serialize};

use super::TransitFunction;
use crate::error::{input, Error, Result};
use crate::set::VertexSet;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DefaultRule {
    /// Unlisted pairs map to `{u, v}`.
    Pair,
    /// Unlisted pairs map to the empty set.
    #[default]
    None,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VertexRef {
    Index(usize),
    Name(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransitEntry {
    pub u: VertexRef,
    pub v: VertexRef,
    pub set: Vec<VertexRef>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransitDocument {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<String>>,
    #[serde(default)]
    pub default: DefaultRule,
    #[serde(default)]
    pub entries: Vec<TransitEntry>,
}

impl TransitDocument {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| {
            Error::Input(format!(
                "transit-function document, line {} column {}: {e}",
                e.line(),
                e.column()
            ))
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    fn resolve(&self, r: &VertexRef) -> Result<usize> {
        match r {
            VertexRef::Index(i) if *i < self.n => Ok(*i),
            VertexRef::Index(i) => input(format!("vertex index {i} outside 0..{}", self.n)),
            VertexRef::Name(name) => match &self.vertices {
                Some(names) => names
                    .iter()
                    .position(|x| x == name)
                    .ok_or_else(|| Error::Input(format!("unknown vertex name {name:?}"))),
                None => input(format!(
                    "vertex {name:?} given by name but the document declares no vertex names"
                )),
            },
        }
    }

    /// Builds the function. Index errors are rejected; axiom violations (a
    /// set that omits an endpoint, a diagonal entry) are kept as written.
    pub fn to_transit_function(&self) -> Result<TransitFunction> {
        let mut r = TransitFunction::with_default(self.n, self.default)?;
        if let Some(names) = &self.vertices {
            r = r.with_names(names.iter().cloned())?;
        }
        for e in &self.entries {
            let u = self.resolve(&e.u)?;
            let v = self.resolve(&e.v)?;
            let mut s = VertexSet::EMPTY;
            for w in &e.set {
                s.insert(self.resolve(w)?);
            }
            r.set(u, v, s)?;
        }
        Ok(r)
    }

    /// Lossless document for `r`: default rule `pair`, one entry per pair that
    /// deviates from it, names used when `r` carries them.
    pub fn from_transit_function(r: &TransitFunction) -> Self {
        let named = r.names().is_some();
        let vref = |v: usize| {
            if named {
                VertexRef::Name(r.name(v))
            } else {
                VertexRef::Index(v)
            }
        };
        let mut entries = Vec::new();
        for u in 0..r.n() {
            for v in u..r.n() {
                if !r.is_pair(u, v) {
                    entries.push(TransitEntry {
                        u: vref(u),
                        v: vref(v),
                        set: r.get(u, v).iter().map(vref).collect(),
                    });
                }
            }
        }
        TransitDocument {
            n: r.n(),
            vertices: r.names().map(<[String]>::to_vec),
            default: DefaultRule::Pair,
            entries,
        }
    }
}

impl TransitFunction {
    pub fn to_document(&self) -> TransitDocument {
        TransitDocument::from_transit_function(self)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        TransitDocument::parse(text)?.to_transit_function()
    }

    pub fn to_json(&self) -> String {
        self.to_document().to_json()
    }
}
