//! On-disk store of reduced words and lower Bruhat intervals, one JSON file
//! per group.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::affine_weyl::{AffineWeylGroup, ExtAffineElement, ReducedWord};
use crate::error::{Error, Result};

pub const CACHE_VERSION: u32 = 1;
pub const CACHE_DIR_ENV: &str = "WORKBENCH_CACHE_DIR";

#[derive(Serialize, Deserialize)]
pub struct CacheFile {
    pub version: u32,
    pub group: String,
    pub words: Vec<(ExtAffineElement, ReducedWord)>,
    pub intervals: Vec<(ExtAffineElement, Vec<ExtAffineElement>)>,
}

/// `$WORKBENCH_CACHE_DIR`, else `$XDG_CACHE_HOME/hecke-workbench`, else
/// `~/.cache/hecke-workbench`, else a directory under the system temp dir.
pub fn cache_dir() -> PathBuf {
    if let Some(d) = std::env::var_os(CACHE_DIR_ENV) {
        return PathBuf::from(d);
    }
    if let Some(d) = std::env::var_os("XDG_CACHE_HOME") {
        return PathBuf::from(d).join("hecke-workbench");
    }
    if let Some(h) = std::env::var_os("HOME") {
        return PathBuf::from(h).join(".cache").join("hecke-workbench");
    }
    std::env::temp_dir().join("hecke-workbench")
}

pub fn cache_path(dir: &Path, group: &AffineWeylGroup) -> PathBuf {
    dir.join(format!("{}.v{CACHE_VERSION}.json", group.name()))
}

impl CacheFile {
    /// Snapshot of the group's in-memory memo, sorted for stable output.
    pub fn snapshot(group: &AffineWeylGroup) -> CacheFile {
        let mut words = Vec::new();
        let mut intervals = Vec::new();
        if let Some(memo) = group.memo() {
            words = memo.words.read().unwrap().iter().map(|(k, v)| (k.clone(), v.clone())).collect();
            intervals = memo
                .intervals
                .read()
                .unwrap()
                .iter()
                .map(|(k, v)| (k.clone(), v.as_ref().clone()))
                .collect();
        }
        words.sort_by(|a, b| a.0.cmp(&b.0));
        intervals.sort_by(|a, b| a.0.cmp(&b.0));
        CacheFile { version: CACHE_VERSION, group: group.name().to_string(), words, intervals }
    }

    /// Loads entries into the group's memo, returning how many were added.
    /// Files with another version or group label are ignored.
    pub fn install(self, group: &AffineWeylGroup) -> usize {
        let Some(memo) = group.memo() else { return 0 };
        if self.version != CACHE_VERSION || self.group != group.name() {
            return 0;
        }
        let n = self.words.len() + self.intervals.len();
        memo.words.write().unwrap().extend(self.words);
        memo.intervals
            .write()
            .unwrap()
            .extend(self.intervals.into_iter().map(|(k, v)| (k, Arc::new(v))));
        n
    }
}

/// Reads the group's cache file from `dir` into its memo. A missing file
/// loads nothing; an unreadable one is an error.
pub fn load(group: &AffineWeylGroup, dir: &Path) -> Result<usize> {
    let path = cache_path(dir, group);
    let text = match fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(0),
        Err(e) => return Err(e.into()),
    };
    let file: CacheFile = serde_json::from_str(&text)
        .map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
    Ok(file.install(group))
}

/// Writes the memo to `dir`, through a temporary file renamed into place.
pub fn save(group: &AffineWeylGroup, dir: &Path) -> Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let path = cache_path(dir, group);
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    serde_json::to_writer(&mut tmp, &CacheFile::snapshot(group))
        .map_err(|e| Error::Cache(e.to_string()))?;
    tmp.flush()?;
    tmp.persist(&path).map_err(|e| Error::Cache(e.to_string()))?;
    Ok(path)
}
