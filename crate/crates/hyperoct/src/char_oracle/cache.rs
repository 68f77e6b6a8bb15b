//! Versioned on-disk cache for character tables, keyed by subgroup
//! fingerprint digest and prime. Writes go to a temporary file first and
//! are renamed into place, so concurrent writers never expose a torn file.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::char_oracle::classes::ConjClasses;
use crate::char_oracle::dixon::CharTable;
use crate::groups::perm::PermGroup;
use crate::Result;

pub const CACHE_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    fingerprint: String,
    order: u64,
    prime: u64,
    class_sizes: Vec<u64>,
    class_reps: Vec<Vec<u8>>,
    degrees: Vec<u64>,
    rows: Vec<Vec<u64>>,
}

#[derive(Clone, Debug)]
pub struct DiskCache {
    dir: PathBuf,
}

impl DiskCache {
    pub fn new(dir: impl AsRef<Path>) -> DiskCache {
        DiskCache { dir: dir.as_ref().to_path_buf() }
    }

    fn path_for(&self, digest: &str, prime: u64) -> PathBuf {
        self.dir.join(format!("chartab-{digest}-p{prime}.json"))
    }

    /// Attempts to reuse a cached table. The recomputed classes must align
    /// with the stored representatives; otherwise the entry is ignored.
    pub fn load(
        &self,
        digest: &str,
        prime: u64,
        group: &PermGroup,
        classes: &ConjClasses,
    ) -> Option<CharTable> {
        let path = self.path_for(digest, prime);
        let text = fs::read_to_string(path).ok()?;
        let file: CacheFile = serde_json::from_str(&text).ok()?;
        if file.version != CACHE_VERSION
            || file.fingerprint != digest
            || file.prime != prime
            || file.order != group.order()
            || file.class_sizes != classes.sizes
        {
            return None;
        }
        let reps_match = file
            .class_reps
            .iter()
            .zip(&classes.reps)
            .all(|(stored, rep)| stored.as_slice() == rep.images());
        if !reps_match {
            return None;
        }
        Some(CharTable {
            order: file.order,
            prime,
            classes: classes.clone(),
            degrees: file.degrees,
            rows: file.rows,
        })
    }

    /// Writes a table entry (write-to-temp, then atomic rename).
    pub fn store(&self, digest: &str, table: &CharTable) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let file = CacheFile {
            version: CACHE_VERSION,
            fingerprint: digest.to_string(),
            order: table.order,
            prime: table.prime,
            class_sizes: table.classes.sizes.clone(),
            class_reps: table.classes.reps.iter().map(|r| r.images().to_vec()).collect(),
            degrees: table.degrees.clone(),
            rows: table.rows.clone(),
        };
        let final_path = self.path_for(digest, table.prime);
        let tmp_path = self.dir.join(format!(
            ".tmp-{}-{}",
            std::process::id(),
            std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_nanos())
                .unwrap_or(0)
        ));
        fs::write(&tmp_path, serde_json::to_vec(&file)?)?;
        fs::rename(&tmp_path, &final_path)?;
        Ok(())
    }
}
