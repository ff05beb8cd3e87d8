//! On-disk cache of invariant reports for disjoint open set graphs.
//!
//! One JSON file per entry, named by the SHA-256 of the code version, the
//! model and the topology (canonical key and labeled form). Unreadable or
//! stale entries are recomputed and overwritten.

use std::fs;
use std::path::{Path, PathBuf};

use annigraph_core::graph::{InvariantReport, UGraph};
use annigraph_core::{PointSet, Topology};
use sha2::{Digest, Sha256};

pub const ENV_VAR: &str = "ANNIGRAPH_CACHE_DIR";

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    /// `--cache-dir` wins over the environment; no directory means no cache.
    pub fn resolve(flag: Option<&Path>) -> Option<Cache> {
        flag.map(Path::to_path_buf)
            .or_else(|| std::env::var_os(ENV_VAR).filter(|v| !v.is_empty()).map(PathBuf::from))
            .map(|dir| Cache { dir })
    }

    pub fn key(model: &str, t: &Topology) -> String {
        let canonical = t
            .canonical_form()
            .map(|k| k.into_topology().to_string())
            .unwrap_or_default();
        let mut h = Sha256::new();
        h.update(env!("CARGO_PKG_VERSION"));
        h.update([0]);
        h.update(model);
        h.update([0]);
        h.update(canonical);
        h.update([0]);
        h.update(t.to_string());
        hex::encode(h.finalize())
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    pub fn get(&self, key: &str) -> Option<InvariantReport> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        serde_json::from_str(&text).ok()
    }

    /// Best effort: a cache that cannot be written only costs recomputation.
    pub fn put(&self, key: &str, report: &InvariantReport) {
        if fs::create_dir_all(&self.dir).is_err() {
            return;
        }
        let tmp = self.dir.join(format!("{key}.tmp{}", std::process::id()));
        let body = serde_json::to_string(report).expect("reports serialize");
        if fs::write(&tmp, body).is_ok() {
            let _ = fs::rename(&tmp, self.path(key));
        }
    }

    pub fn dg_report(&self, t: &Topology, g: &UGraph<PointSet>) -> InvariantReport {
        let key = Cache::key("dg", t);
        if let Some(hit) = self.get(&key) {
            return hit;
        }
        let report = InvariantReport::compute(g);
        self.put(&key, &report);
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use annigraph_core::ideal::build_dg;

    #[test]
    fn hit_equals_cold() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::resolve(Some(dir.path())).unwrap();
        let t = Topology::discrete(3);
        let g = build_dg(&t);
        let cold = cache.dg_report(&t, &g);
        assert!(cache.get(&Cache::key("dg", &t)).is_some());
        assert_eq!(cache.dg_report(&t, &g), cold);
        assert_ne!(Cache::key("dg", &t), Cache::key("dg", &Topology::discrete(4)));
    }
}
