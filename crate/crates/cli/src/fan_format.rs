//! Fan file format: a JSON document with the fan dimension, primitive ray
//! generators, and maximal cones as 0-based ray-index sets.
//!
//! ```json
//! { "dim": 2,
//!   "rays": [[1,0],[0,1],[-1,-1]],
//!   "max_cones": [[0,1],[0,2],[1,2]] }
//! ```
//!
//! Unknown fields are rejected.

use serde::Deserialize;
use std::fmt;

use chowkit_core::toric::FanError;
use chowkit_core::Fan;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FanDoc {
    dim: usize,
    rays: Vec<Vec<i64>>,
    max_cones: Vec<Vec<usize>>,
}

#[derive(Debug)]
pub enum FanFormatError {
    Malformed(serde_json::Error),
    Invalid(FanError),
}

impl fmt::Display for FanFormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FanFormatError::Malformed(e) => write!(f, "malformed fan document: {}", e),
            FanFormatError::Invalid(e) => write!(f, "invalid fan: {}", e),
        }
    }
}

impl std::error::Error for FanFormatError {}

/// Parse and validate a fan document.
pub fn parse_fan(text: &str) -> Result<Fan, FanFormatError> {
    let doc: FanDoc = serde_json::from_str(text).map_err(FanFormatError::Malformed)?;
    Fan::new(doc.dim, doc.rays, doc.max_cones).map_err(FanFormatError::Invalid)
}
