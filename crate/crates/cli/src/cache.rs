//! Search results persisted as JSON lines, one record per line.

use std::fs::{self, File, OpenOptions};
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use turan_core::oracle::{ex_search_with, ExtremalRecord, ForbiddenSpec, SearchConfig};
use turan_core::subgraph::{canonical_form, CANONICAL_LIMIT};
use turan_core::{encode_graph6, Graph};

use crate::error::CliError;

pub const CACHE_ENV: &str = "TURAN_CACHE";
pub const DEFAULT_CACHE: &str = ".turan_cache.jsonl";

#[derive(Serialize, Deserialize)]
struct Line {
    n: usize,
    r: usize,
    digest: String,
    /// Seconds since the Unix epoch; not part of the record.
    created_at: u64,
    record: serde_json::Value,
}

pub struct Cache {
    path: PathBuf,
}

/// SHA-256 over the sorted graph6 codes of the forbidden graphs (canonically
/// labelled where possible) and the matching bound.
pub fn spec_digest(spec: &ForbiddenSpec) -> String {
    let mut codes: Vec<String> = spec.subgraphs().iter().map(stable_code).collect();
    codes.sort();
    let mut h = Sha256::new();
    for c in &codes {
        h.update(c.as_bytes());
        h.update(b"\n");
    }
    match spec.matching_bound() {
        Some(s) => h.update(format!("s={s}").as_bytes()),
        None => h.update(b"s=none"),
    }
    hex::encode(h.finalize())
}

fn stable_code(g: &Graph) -> String {
    if g.order() <= CANONICAL_LIMIT {
        if let Ok(c) = canonical_form(g) {
            return encode_graph6(&c.to_graph());
        }
    }
    encode_graph6(g)
}

impl Cache {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        Cache { path: path.into() }
    }

    pub fn from_env() -> Self {
        Cache::new(std::env::var_os(CACHE_ENV).map_or_else(|| PathBuf::from(DEFAULT_CACHE), PathBuf::from))
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// The cached record for `(n, r, spec)`, or a fresh search that is then
    /// stored. The flag tells whether the cache answered.
    pub fn lookup_or_search(
        &self,
        n: usize,
        r: usize,
        spec: &ForbiddenSpec,
        cfg: &SearchConfig,
    ) -> Result<(ExtremalRecord, bool), CliError> {
        let digest = spec_digest(spec);
        let (valid, corrupt) = self.load()?;
        let hit = valid
            .iter()
            .find(|(line, _)| line.n == n && line.r == r && line.digest == digest)
            .map(|(_, rec)| rec.clone());
        let (record, fresh) = match hit {
            Some(rec) => (rec, None),
            None => {
                let rec = ex_search_with(n, r, spec, cfg)?;
                let line = Line {
                    n,
                    r,
                    digest,
                    created_at: SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs()),
                    record: serde_json::from_str(&rec.comparable_json()).expect("record JSON is valid"),
                };
                (rec, Some(serde_json::to_string(&line).expect("plain data serializes")))
            }
        };
        let hit = fresh.is_none();
        if corrupt {
            let mut lines: Vec<String> = valid
                .iter()
                .map(|(l, _)| serde_json::to_string(l).expect("plain data serializes"))
                .collect();
            lines.extend(fresh);
            self.rewrite(&lines)?;
        } else if let Some(line) = fresh {
            self.append(&line)?;
        }
        Ok((record, hit))
    }

    /// Valid entries and whether any line had to be dropped.
    fn load(&self) -> Result<(Vec<(Line, ExtremalRecord)>, bool), CliError> {
        let mut file = match File::open(&self.path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok((Vec::new(), false)),
            Err(e) => return Err(e.into()),
        };
        file.lock_shared()?;
        let mut bytes = Vec::new();
        file.read_to_end(&mut bytes)?;
        drop(file);
        let text = String::from_utf8_lossy(&bytes);
        let mut valid = Vec::new();
        let mut corrupt = false;
        for (i, raw) in text.lines().enumerate() {
            if raw.trim().is_empty() {
                continue;
            }
            match parse_line(raw) {
                Ok(entry) => valid.push(entry),
                Err(why) => {
                    eprintln!(
                        "warning: cache {} line {}: {why}; dropping it and rebuilding the cache",
                        self.path.display(),
                        i + 1
                    );
                    corrupt = true;
                }
            }
        }
        Ok((valid, corrupt))
    }

    fn append(&self, line: &str) -> Result<(), CliError> {
        let mut file = OpenOptions::new().create(true).append(true).open(&self.path)?;
        file.lock()?;
        writeln!(file, "{line}")?;
        Ok(())
    }

    fn rewrite(&self, lines: &[String]) -> Result<(), CliError> {
        let mut file = OpenOptions::new().create(true).append(true).open(&self.path)?;
        file.lock()?;
        let tmp = self.path.with_extension("jsonl.tmp");
        let mut body = lines.join("\n");
        if !body.is_empty() {
            body.push('\n');
        }
        fs::write(&tmp, body)?;
        fs::rename(&tmp, &self.path)?;
        file.flush()?;
        Ok(())
    }
}

/// A line is trusted only if its record parses and matches its own key.
fn parse_line(raw: &str) -> Result<(Line, ExtremalRecord), String> {
    let line: Line = serde_json::from_str(raw).map_err(|e| format!("not a cache entry ({e})"))?;
    let rec = ExtremalRecord::from_json(&line.record.to_string()).map_err(|e| e.to_string())?;
    if rec.n != line.n || rec.r != line.r || spec_digest(&rec.spec) != line.digest {
        return Err("key does not match the stored record".into());
    }
    Ok((line, rec))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_ignores_order_and_labels() {
        let a = ForbiddenSpec::with_matching(vec![Graph::path(3), Graph::complete(3)], 2).unwrap();
        let relabelled = Graph::from_edges(3, [(0, 2), (2, 1)]).unwrap();
        let b = ForbiddenSpec::with_matching(vec![Graph::complete(3), relabelled], 2).unwrap();
        assert_eq!(spec_digest(&a), spec_digest(&b));
        let c = ForbiddenSpec::with_matching(vec![Graph::complete(3), Graph::path(3)], 3).unwrap();
        assert_ne!(spec_digest(&a), spec_digest(&c));
    }
}
