//! On-disk coefficient cache.
//!
//! Entries are keyed by statistic, truncation order and [`CODE_VERSION`].
//! Entries written by another version are never served. A corrupt file is
//! reported and treated as empty. While a cache is open a sibling `.lock`
//! file is held; a second opener fails fast instead of waiting.

use std::fs::{self, File, OpenOptions};
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::stanley::{series_for, Stat, StanleyError, StanleyTable};

/// Bumped whenever a formula change could alter cached numbers.
pub const CODE_VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "+coeffs.1");

/// Overrides the directory the CLI keeps its cache in.
pub const CACHE_DIR_ENV: &str = "STANLEY_CACHE_DIR";
pub const CACHE_FILE_NAME: &str = "stanley-coefficients.json";

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache {path} is locked by another process (remove {lock} if stale)")]
    Locked { path: PathBuf, lock: PathBuf },
    #[error("cache I/O on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error(transparent)]
    Compute(#[from] StanleyError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct Entry {
    stat: Stat,
    order: usize,
    version: String,
    /// Decimal strings, so any magnitude survives.
    values: Vec<String>,
}

#[derive(Debug, Default, Serialize, Deserialize)]
struct CacheFile {
    entries: Vec<Entry>,
}

#[derive(Debug)]
struct LockGuard {
    path: PathBuf,
}

impl LockGuard {
    fn acquire(cache: &Path) -> Result<Self, CacheError> {
        let mut lock = cache.as_os_str().to_owned();
        lock.push(".lock");
        let lock = PathBuf::from(lock);
        match OpenOptions::new().write(true).create_new(true).open(&lock) {
            Ok(mut f) => {
                let _ = writeln!(f, "{}", std::process::id());
                Ok(Self { path: lock })
            }
            Err(e) if e.kind() == io::ErrorKind::AlreadyExists => Err(CacheError::Locked {
                path: cache.to_path_buf(),
                lock,
            }),
            Err(source) => Err(CacheError::Io { path: lock, source }),
        }
    }
}

impl Drop for LockGuard {
    fn drop(&mut self) {
        let _ = fs::remove_file(&self.path);
    }
}

#[derive(Debug)]
pub struct CoefficientCache {
    path: PathBuf,
    entries: Vec<Entry>,
    dirty: bool,
    warnings: Vec<String>,
    _lock: LockGuard,
}

impl CoefficientCache {
    pub fn open(path: impl Into<PathBuf>) -> Result<Self, CacheError> {
        let path = path.into();
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir).map_err(|source| CacheError::Io {
                path: dir.to_path_buf(),
                source,
            })?;
        }
        let lock = LockGuard::acquire(&path)?;
        let mut warnings = Vec::new();
        let entries = match fs::read_to_string(&path) {
            Ok(text) => match serde_json::from_str::<CacheFile>(&text) {
                Ok(file) => file.entries,
                Err(e) => {
                    warnings.push(format!(
                        "ignoring corrupt cache {}: {e}; recomputing",
                        path.display()
                    ));
                    Vec::new()
                }
            },
            Err(e) if e.kind() == io::ErrorKind::NotFound => Vec::new(),
            Err(source) => return Err(CacheError::Io { path, source }),
        };
        Ok(Self {
            path,
            entries,
            dirty: false,
            warnings,
            _lock: lock,
        })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// Problems met while reading, for the caller to surface.
    pub fn take_warnings(&mut self) -> Vec<String> {
        std::mem::take(&mut self.warnings)
    }

    /// Coefficients for `(stat, order)` written by this code version.
    pub fn get(&mut self, stat: Stat, order: usize) -> Option<Vec<BigInt>> {
        let entry = self
            .entries
            .iter()
            .find(|e| e.stat == stat && e.order == order && e.version == CODE_VERSION)?;
        let parsed: Option<Vec<BigInt>> = entry.values.iter().map(|v| v.parse().ok()).collect();
        match parsed {
            Some(values) if values.len() == order + 1 => Some(values),
            _ => {
                self.warnings.push(format!(
                    "ignoring corrupt cache entry {stat} order {order} in {}; recomputing",
                    self.path.display()
                ));
                None
            }
        }
    }

    pub fn insert(&mut self, stat: Stat, order: usize, values: &[BigInt]) {
        self.entries.retain(|e| !(e.stat == stat && e.order == order));
        self.entries.push(Entry {
            stat,
            order,
            version: CODE_VERSION.to_string(),
            values: values.iter().map(ToString::to_string).collect(),
        });
        self.dirty = true;
    }

    /// Cached coefficients, or computed and remembered ones.
    pub fn get_or_compute(&mut self, stat: Stat, order: usize) -> Result<Vec<BigInt>, CacheError> {
        if let Some(values) = self.get(stat, order) {
            return Ok(values);
        }
        let values = series_for(stat, order)?.into_coeffs();
        self.insert(stat, order, &values);
        Ok(values)
    }

    /// Writes through a temporary file so readers never see a partial cache.
    /// Entries from other code versions are dropped.
    pub fn save(&mut self) -> Result<(), CacheError> {
        if !self.dirty {
            return Ok(());
        }
        self.entries.retain(|e| e.version == CODE_VERSION);
        let io_err = |path: &Path| {
            let path = path.to_path_buf();
            move |source| CacheError::Io { path, source }
        };
        let mut tmp = self.path.as_os_str().to_owned();
        tmp.push(".tmp");
        let tmp = PathBuf::from(tmp);
        let file = CacheFile {
            entries: self.entries.clone(),
        };
        let text = serde_json::to_string(&file).expect("cache entries serialize");
        File::create(&tmp)
            .and_then(|mut f| f.write_all(text.as_bytes()))
            .map_err(io_err(&tmp))?;
        fs::rename(&tmp, &self.path).map_err(io_err(&self.path))?;
        self.dirty = false;
        Ok(())
    }
}

/// Stores every column of `table` and reads it back through a fresh handle.
pub fn cache_roundtrip(path: &Path, table: &StanleyTable) -> Result<StanleyTable, CacheError> {
    {
        let mut cache = CoefficientCache::open(path)?;
        for stat in Stat::ALL {
            cache.insert(stat, table.max_n, table.column(stat));
        }
        cache.save()?;
    }
    let mut cache = CoefficientCache::open(path)?;
    let mut column = |stat| cache.get_or_compute(stat, table.max_n);
    Ok(StanleyTable {
        max_n: table.max_n,
        p: column(Stat::P)?,
        t: column(Stat::T)?,
        u: column(Stat::U)?,
        f: column(Stat::F)?,
        source: table.source,
    })
}
