use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::ForbiddenSpec;
use crate::error::{Error, Result};
use crate::graph::graph6::{decode_graph6, encode_graph6};
use crate::graph::Graph;

/// Result of an exhaustive search: the maximum number of `r`-cliques over
/// admissible `n`-vertex graphs and one representative of every extremal
/// isomorphism class, ordered by canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalRecord {
    pub n: usize,
    pub r: usize,
    pub spec: ForbiddenSpec,
    pub value: BigUint,
    pub witnesses: Vec<Graph>,
    pub nodes_explored: u64,
    pub elapsed_ms: u64,
}

#[derive(Serialize, Deserialize)]
struct RecordJson {
    n: usize,
    r: usize,
    forbidden: Vec<String>,
    s: Option<usize>,
    value: String,
    witnesses: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    nodes: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    millis: Option<u64>,
}

impl ExtremalRecord {
    fn json(&self, stats: bool) -> RecordJson {
        RecordJson {
            n: self.n,
            r: self.r,
            forbidden: self.spec.subgraphs().iter().map(encode_graph6).collect(),
            s: self.spec.matching_bound(),
            value: self.value.to_string(),
            witnesses: self.witnesses.iter().map(encode_graph6).collect(),
            nodes: stats.then_some(self.nodes_explored),
            millis: stats.then_some(self.elapsed_ms),
        }
    }

    /// `{n, r, forbidden, s, value, witnesses, nodes, millis}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.json(true)).expect("plain data serializes")
    }

    /// The same without the search statistics, so that equal results give
    /// byte-identical text.
    pub fn comparable_json(&self) -> String {
        serde_json::to_string(&self.json(false)).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RecordJson = serde_json::from_str(text).map_err(|e| Error::InvalidRecord(e.to_string()))?;
        let decode = |xs: &[String]| xs.iter().map(|x| decode_graph6(x)).collect::<Result<Vec<_>>>();
        let value = raw
            .value
            .parse::<BigUint>()
            .map_err(|e| Error::InvalidRecord(format!("value {:?}: {e}", raw.value)))?;
        Ok(ExtremalRecord {
            n: raw.n,
            r: raw.r,
            spec: ForbiddenSpec::new(decode(&raw.forbidden)?, raw.s)?,
            value,
            witnesses: decode(&raw.witnesses)?,
            nodes_explored: raw.nodes.unwrap_or(0),
            elapsed_ms: raw.millis.unwrap_or(0),
        })
    }
}
