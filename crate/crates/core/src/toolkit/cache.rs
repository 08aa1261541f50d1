use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

use sha2::{Digest, Sha256};

use crate::error::Result;
use crate::toolkit::bundle::{AnalysisBundle, TOOLKIT_VERSION};
use crate::toolkit::definition::GroupDefinition;

pub const CACHE_ENV: &str = "VANISHKIT_CACHE";

/// Content-addressed store of analysis bundles.
#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

static TEMP_COUNTER: AtomicU64 = AtomicU64::new(0);

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    /// The flag wins over the environment; `None` when neither is set.
    pub fn resolve(flag: Option<&Path>) -> Option<Self> {
        flag.map(Path::to_path_buf)
            .or_else(|| std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from))
            .map(Self::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// Hex SHA-256 of the toolkit version and the definition's file text.
    pub fn key(def: &GroupDefinition) -> String {
        let mut hasher = Sha256::new();
        hasher.update(format!("vanishkit {TOOLKIT_VERSION}\n").as_bytes());
        hasher.update(def.to_file_text().as_bytes());
        hex::encode(hasher.finalize())
    }

    pub fn path_for(&self, def: &GroupDefinition) -> PathBuf {
        self.dir.join(format!("{}.json", Self::key(def)))
    }

    /// A stored bundle, ignoring unreadable or stale entries.
    pub fn load(&self, def: &GroupDefinition) -> Option<AnalysisBundle> {
        let text = fs::read_to_string(self.path_for(def)).ok()?;
        AnalysisBundle::from_json(&text).ok().filter(|b| b.group == *def)
    }

    /// Writes to a temporary file in the cache directory, then renames it into place.
    pub fn store(&self, def: &GroupDefinition, bundle: &AnalysisBundle) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let mut stored = bundle.clone();
        stored.timing = None;
        let target = self.path_for(def);
        let tmp = self.dir.join(format!(
            ".{}.{}.{}.tmp",
            Self::key(def),
            std::process::id(),
            TEMP_COUNTER.fetch_add(1, Ordering::Relaxed)
        ));
        let mut file = fs::File::create(&tmp)?;
        file.write_all(stored.to_json()?.as_bytes())?;
        file.sync_all()?;
        drop(file);
        fs::rename(&tmp, &target)?;
        Ok(())
    }

    /// Cached bundle, or a fresh computation that is then stored.
    pub fn get_or_compute(&self, def: &GroupDefinition, order_cap: usize, timing: bool) -> Result<AnalysisBundle> {
        if let Some(hit) = self.load(def) {
            return Ok(hit);
        }
        let bundle = AnalysisBundle::compute(def, order_cap, timing)?;
        self.store(def, &bundle)?;
        Ok(bundle)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toolkit::catalog::find_builtin;

    #[test]
    fn hit_equals_cold_run() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        let def = find_builtin("Alt4").unwrap();
        let cold = cache.get_or_compute(&def, 1000, false).unwrap();
        assert!(cache.path_for(&def).exists());
        let hot = cache.get_or_compute(&def, 1000, false).unwrap();
        assert_eq!(cold.to_json().unwrap(), hot.to_json().unwrap());
        // no temporary files left behind
        assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 1);
    }

    #[test]
    fn keys_track_definitions() {
        let a = find_builtin("Sym3").unwrap();
        let mut b = a.clone();
        b.generators.reverse();
        assert_ne!(Cache::key(&a), Cache::key(&b));
        assert_eq!(Cache::key(&a), Cache::key(&a.clone()));
        assert_eq!(Cache::key(&a).len(), 64);
    }

    #[test]
    fn corrupt_entries_are_recomputed() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        let def = find_builtin("C6").unwrap();
        fs::write(cache.path_for(&def), "not json").unwrap();
        assert!(cache.load(&def).is_none());
        assert_eq!(cache.get_or_compute(&def, 100, false).unwrap().order, 6);
    }
}
