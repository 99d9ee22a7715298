//! Append-only JSON-lines cache of Y-free Hilbert series keyed by diagram.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::LatticeDiagram;
use crate::spans::y_free_of_diagram;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheRecord {
    pub diagram: String,
    pub hilbert: Vec<usize>,
    pub dim: usize,
}

/// In-memory map backed by an optional file. Lookups may come from many
/// threads; appends go through one lock.
#[derive(Debug, Default)]
pub struct HilbertCache {
    path: Option<PathBuf>,
    entries: Mutex<HashMap<String, CacheRecord>>,
}

impl HilbertCache {
    pub fn in_memory() -> Self {
        Self::default()
    }

    /// Load `path` if it exists; later records for a diagram win.
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut entries = HashMap::new();
        if path.exists() {
            let reader = BufReader::new(File::open(&path)?);
            for (lineno, line) in reader.lines().enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                let rec: CacheRecord = serde_json::from_str(&line)
                    .map_err(|e| Error::Parse(format!("{}:{}: {e}", path.display(), lineno + 1)))?;
                if rec.hilbert.iter().sum::<usize>() != rec.dim {
                    return Err(Error::Parse(format!(
                        "{}:{}: dim {} disagrees with the Hilbert series",
                        path.display(),
                        lineno + 1,
                        rec.dim
                    )));
                }
                entries.insert(rec.diagram.clone(), rec);
            }
        }
        Ok(HilbertCache { path: Some(path), entries: Mutex::new(entries) })
    }

    pub fn len(&self) -> usize {
        self.entries.lock().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, d: &LatticeDiagram) -> Option<CacheRecord> {
        self.entries.lock().expect("cache lock").get(&d.canonical()).cloned()
    }

    pub fn insert(&self, rec: CacheRecord) -> Result<()> {
        let mut map = self.entries.lock().expect("cache lock");
        if map.get(&rec.diagram) == Some(&rec) {
            return Ok(());
        }
        if let Some(path) = &self.path {
            let mut f = OpenOptions::new().create(true).append(true).open(path)?;
            writeln!(f, "{}", serde_json::to_string(&rec)?)?;
        }
        map.insert(rec.diagram.clone(), rec);
        Ok(())
    }

    /// Cached Y-free Hilbert series of `d`, computing and recording it on a miss.
    pub fn hilbert(&self, d: &LatticeDiagram) -> Result<Vec<usize>> {
        if let Some(rec) = self.get(d) {
            return Ok(rec.hilbert);
        }
        let h = y_free_of_diagram(d)?.hilbert_series();
        self.insert(CacheRecord { diagram: d.canonical(), dim: h.iter().sum(), hilbert: h.clone() })?;
        Ok(h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::Partition;

    #[test]
    fn round_trip_through_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.jsonl");
        let d = "2,1".parse::<Partition>().unwrap().diagram();
        {
            let c = HilbertCache::open(&path).unwrap();
            assert_eq!(c.hilbert(&d).unwrap(), vec![1, 2]);
            assert_eq!(c.hilbert(&d).unwrap(), vec![1, 2]);
        }
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text, "{\"diagram\":\"0,0;0,1;1,0\",\"hilbert\":[1,2],\"dim\":3}\n");
        let c = HilbertCache::open(&path).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.get(&d).unwrap().dim, 3);
    }

    #[test]
    fn corrupt_lines_are_reported() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.jsonl");
        std::fs::write(&path, "{\"diagram\":\"0,0\",\"hilbert\":[1],\"dim\":2}\n").unwrap();
        assert!(matches!(HilbertCache::open(&path), Err(Error::Parse(_))));
        std::fs::write(&path, "not json\n").unwrap();
        assert!(matches!(HilbertCache::open(&path), Err(Error::Parse(_))));
    }
}
