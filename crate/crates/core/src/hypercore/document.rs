//! On-disk witness format.
//!
//! A witness file is one compact JSON object, ASCII only, with the keys in
//! this order:
//!
//! ```text
//! {"m":8,"n":11,"z":30,"construction":"L3.6","seed":0,"edges":[[0,1,2,3],[1,4,5],...]}
//! ```
//!
//! `seed` may be `null`. `edges` is in canonical order (size descending,
//! then lexicographic). Files end with a single newline.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::hypergraph::{Hypergraph, HypergraphError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessDocument {
    pub m: usize,
    pub n: usize,
    pub z: usize,
    pub construction: String,
    pub seed: Option<u64>,
    pub edges: Vec<Vec<usize>>,
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed witness document: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("witness document is not ASCII")]
    NotAscii,
    #[error("invalid hypergraph in witness document: {0}")]
    Hypergraph(#[from] HypergraphError),
    #[error("edges are not in canonical order")]
    NotCanonical,
}

impl WitnessDocument {
    pub fn new(h: &Hypergraph, n: usize, z: usize, construction: &str, seed: Option<u64>) -> Self {
        let h = h.clone().canonical();
        WitnessDocument {
            m: h.m(),
            n,
            z,
            construction: construction.to_string(),
            seed,
            edges: h.into_edges(),
        }
    }

    /// Compact single-line JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("witness document serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        if !text.is_ascii() {
            return Err(DocumentError::NotAscii);
        }
        Ok(serde_json::from_str(text)?)
    }

    /// The hypergraph stored in the document. Edges must already be
    /// ascending and canonically ordered.
    pub fn hypergraph(&self) -> Result<Hypergraph, DocumentError> {
        let h = Hypergraph::new(self.m, self.edges.clone())?;
        if !h.is_canonical() {
            return Err(DocumentError::NotCanonical);
        }
        Ok(h)
    }
}
