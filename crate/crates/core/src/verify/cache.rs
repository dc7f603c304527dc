//! On-disk cache of H̃ tables: `htilde_<n>.json` files plus `manifest.json`.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::macdonald::htilde::{
    install_htilde_table, is_table_loaded, try_htilde_table, HtildeFile, HtildeTable, FILE_FORMAT,
};

pub const MANIFEST_FILE: &str = "manifest.json";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub file: String,
    pub sha256: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheManifest {
    pub format: String,
    /// Keyed by degree.
    pub entries: BTreeMap<usize, CacheEntry>,
}

impl Default for CacheManifest {
    fn default() -> Self {
        CacheManifest { format: FILE_FORMAT.to_string(), entries: BTreeMap::new() }
    }
}

/// What happened while preparing tables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CacheOutcome {
    pub loaded: Vec<usize>,
    pub built: Vec<usize>,
    pub warnings: Vec<String>,
}

pub fn table_file_name(n: usize) -> String {
    format!("htilde_{n}.json")
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> Error + '_ {
    move |source| Error::Io { path: path.to_path_buf(), source }
}

/// Writes `bytes` to a temporary sibling and renames it into place.
fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let name = path.file_name().and_then(|s| s.to_str()).unwrap_or("cache");
    let tmp = path.with_file_name(format!(".{name}.{}.tmp", std::process::id()));
    fs::write(&tmp, bytes).map_err(io_err(&tmp))?;
    fs::rename(&tmp, path).map_err(io_err(path))
}

pub fn serialize_table(table: &HtildeTable) -> Vec<u8> {
    serde_json::to_vec(&table.to_file()).expect("tables serialize")
}

pub struct TableCache {
    dir: PathBuf,
}

impl TableCache {
    pub fn open(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir).map_err(io_err(&dir))?;
        Ok(TableCache { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn manifest_path(&self) -> PathBuf {
        self.dir.join(MANIFEST_FILE)
    }

    pub fn table_path(&self, n: usize) -> PathBuf {
        self.dir.join(table_file_name(n))
    }

    /// The stored manifest; a missing one is empty, an unreadable one is an error.
    pub fn read_manifest(&self) -> Result<CacheManifest> {
        let path = self.manifest_path();
        match fs::read(&path) {
            Ok(bytes) => {
                let m: CacheManifest = serde_json::from_slice(&bytes)
                    .map_err(|e| Error::CacheFormat { path: path.clone(), msg: e.to_string() })?;
                if m.format != FILE_FORMAT {
                    return Err(Error::CacheFormat { path, msg: format!("unknown format '{}'", m.format) });
                }
                Ok(m)
            }
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(CacheManifest::default()),
            Err(e) => Err(Error::Io { path, source: e }),
        }
    }

    pub fn write_manifest(&self, m: &CacheManifest) -> Result<()> {
        let bytes = serde_json::to_vec_pretty(m).expect("manifests serialize");
        write_atomic(&self.manifest_path(), &bytes)
    }

    /// Loads degree `n` if the manifest lists it and the digest matches.
    /// `Ok(Err(reason))` means the entry exists but was rejected.
    pub fn load(&self, n: usize, manifest: &CacheManifest) -> Result<Option<std::result::Result<HtildeTable, String>>> {
        let Some(entry) = manifest.entries.get(&n) else {
            return Ok(None);
        };
        let path = self.dir.join(&entry.file);
        let bytes = match fs::read(&path) {
            Ok(b) => b,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Some(Err("file missing".into()))),
            Err(e) => return Err(Error::Io { path, source: e }),
        };
        if digest(&bytes) != entry.sha256 {
            return Ok(Some(Err("digest mismatch".into())));
        }
        let parsed = serde_json::from_slice::<HtildeFile>(&bytes)
            .map_err(|e| e.to_string())
            .and_then(|f| HtildeTable::from_file(&f).map_err(|e| e.to_string()))
            .and_then(|t| if t.degree == n { Ok(t) } else { Err("degree mismatch".into()) });
        Ok(Some(parsed))
    }

    pub fn store(&self, table: &HtildeTable, manifest: &mut CacheManifest) -> Result<()> {
        let bytes = serialize_table(table);
        write_atomic(&self.table_path(table.degree), &bytes)?;
        manifest
            .entries
            .insert(table.degree, CacheEntry { file: table_file_name(table.degree), sha256: digest(&bytes) });
        Ok(())
    }

    /// Makes the tables for `degrees` available in memory, loading what the cache
    /// holds and building (then storing) the rest.
    pub fn prepare(&self, degrees: impl IntoIterator<Item = usize>) -> Result<CacheOutcome> {
        let mut manifest = self.read_manifest()?;
        let mut out = CacheOutcome::default();
        let mut missing = Vec::new();
        for n in degrees {
            match self.load(n, &manifest)? {
                Some(Ok(table)) => {
                    install_htilde_table(table);
                    out.loaded.push(n);
                }
                Some(Err(reason)) => {
                    out.warnings.push(format!("{}: {reason}; rebuilt", table_file_name(n)));
                    missing.push(n);
                }
                None => missing.push(n),
            }
        }
        let fresh: Vec<usize> = missing.iter().copied().filter(|&n| !is_table_loaded(n)).collect();
        let built: Vec<(usize, Result<std::sync::Arc<HtildeTable>>)> =
            missing.par_iter().map(|&n| (n, try_htilde_table(n))).collect();
        for (n, table) in built {
            let table = table?;
            self.store(&table, &mut manifest)?;
            if fresh.contains(&n) {
                out.built.push(n);
            }
        }
        if !missing.is_empty() {
            self.write_manifest(&manifest)?;
        }
        Ok(out)
    }
}

/// Builds or loads the tables for degrees `1..=max`, using `dir` when given.
pub fn prepare_tables(dir: Option<&Path>, max: usize) -> Result<CacheOutcome> {
    match dir {
        Some(d) => TableCache::open(d)?.prepare(1..=max),
        None => {
            let missing: Vec<usize> = (1..=max).filter(|&n| !is_table_loaded(n)).collect();
            for r in missing.par_iter().map(|&n| try_htilde_table(n)).collect::<Vec<_>>() {
                r?;
            }
            Ok(CacheOutcome { built: missing, ..Default::default() })
        }
    }
}
