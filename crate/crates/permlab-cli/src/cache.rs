//! A small on-disk cache for expensive enumerations.
//!
//! Entries are JSON files keyed by operation name, a parameter string, and
//! the crate version, so stale results from older code are never reused.
//! The directory comes from `PERMLAB_CACHE`, falling back to the platform
//! cache directory.

use std::fs;
use std::path::PathBuf;

use serde_json::Value;

pub fn cache_dir() -> Option<PathBuf> {
    if let Ok(dir) = std::env::var("PERMLAB_CACHE") {
        if !dir.is_empty() {
            return Some(PathBuf::from(dir));
        }
    }
    if let Ok(xdg) = std::env::var("XDG_CACHE_HOME") {
        if !xdg.is_empty() {
            return Some(PathBuf::from(xdg).join("permlab"));
        }
    }
    std::env::var("HOME")
        .ok()
        .filter(|h| !h.is_empty())
        .map(|h| PathBuf::from(h).join(".cache").join("permlab"))
}

fn entry_path(op: &str, params: &str) -> Option<PathBuf> {
    // hash the parameters so the file name stays short and safe
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in params.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x1000_0000_01b3);
    }
    let version = env!("CARGO_PKG_VERSION");
    Some(cache_dir()?.join(format!("{op}-{version}-{h:016x}.json")))
}

pub fn load(op: &str, params: &str) -> Option<Value> {
    let path = entry_path(op, params)?;
    let text = fs::read_to_string(path).ok()?;
    let value: Value = serde_json::from_str(&text).ok()?;
    // guard against hash collisions by storing the full parameter string
    if value.get("params").and_then(Value::as_str) == Some(params) {
        value.get("result").cloned()
    } else {
        None
    }
}

pub fn store(op: &str, params: &str, result: &Value) {
    let Some(path) = entry_path(op, params) else {
        return;
    };
    if let Some(parent) = path.parent() {
        if fs::create_dir_all(parent).is_err() {
            return;
        }
    }
    let envelope = serde_json::json!({ "params": params, "result": result });
    let _ = fs::write(path, envelope.to_string()); // cache misses are fine
}

/// Runs `compute` through the cache unless `disabled`.
pub fn with_cache<E>(
    disabled: bool,
    op: &str,
    params: &str,
    compute: impl FnOnce() -> Result<Value, E>,
) -> Result<Value, E> {
    if !disabled {
        if let Some(hit) = load(op, params) {
            return Ok(hit);
        }
    }
    let result = compute()?;
    if !disabled {
        store(op, params, &result);
    }
    Ok(result)
}
