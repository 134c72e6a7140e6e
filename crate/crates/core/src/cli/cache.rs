//! On-disk memo for geodesic lengths.
//!
//! One JSON file per entry, named by the SHA-256 of (family fingerprint,
//! element JSON, cap). Writes go to a temporary file in the same directory
//! and are renamed into place, so concurrent processes never see partial
//! entries. Anything unreadable is reported on stderr and recomputed.

use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::algorithms::GeodesicStore;
use crate::wreath::Level2Element;

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    key: String,
    length: Option<u32>,
}

pub struct FileStore {
    dir: PathBuf,
    fingerprint: String,
}

impl FileStore {
    pub fn new(dir: &Path, fingerprint: &str) -> Self {
        FileStore {
            dir: dir.to_path_buf(),
            fingerprint: fingerprint.to_string(),
        }
    }

    fn key(&self, e: &Level2Element, cap: u32) -> String {
        let element = serde_json::to_string(e).expect("element serializes");
        let mut h = Sha256::new();
        h.update(self.fingerprint.as_bytes());
        h.update([0]);
        h.update(element.as_bytes());
        h.update([0]);
        h.update(cap.to_le_bytes());
        hex::encode(h.finalize())
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }
}

pub(crate) fn warn(kind: &str, path: &Path, message: &str) {
    let record = serde_json::json!({
        "warning": kind,
        "path": path.display().to_string(),
        "message": message,
    });
    eprintln!("{record}");
}

impl GeodesicStore for FileStore {
    fn get(&self, e: &Level2Element, cap: u32) -> Option<Option<u32>> {
        let key = self.key(e, cap);
        let path = self.path(&key);
        let text = match std::fs::read_to_string(&path) {
            Ok(t) => t,
            Err(err) if err.kind() == std::io::ErrorKind::NotFound => return None,
            Err(err) => {
                warn("cache_unreadable", &path, &err.to_string());
                return None;
            }
        };
        match serde_json::from_str::<CacheEntry>(&text) {
            Ok(entry) if entry.key == key => Some(entry.length),
            Ok(_) => {
                warn(
                    "cache_corrupt",
                    &path,
                    "entry key does not match its file name",
                );
                None
            }
            Err(err) => {
                warn("cache_corrupt", &path, &err.to_string());
                None
            }
        }
    }

    fn put(&self, e: &Level2Element, cap: u32, value: Option<u32>) {
        let key = self.key(e, cap);
        let path = self.path(&key);
        let entry = CacheEntry { key, length: value };
        let result = std::fs::create_dir_all(&self.dir).and_then(|_| {
            let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
            serde_json::to_writer(&mut tmp, &entry)?;
            tmp.flush()?;
            tmp.persist(&path).map_err(|e| e.error)?;
            Ok(())
        });
        if let Err(err) = result {
            warn("cache_write_failed", &path, &err.to_string());
        }
    }
}
