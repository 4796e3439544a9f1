//! Table output (CSV, JSON) and the on-disk cache.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use partrec::counting::dp_table;
use partrec::{Count, Error, FamilySpec, Result};
use serde::{Deserialize, Serialize};

pub const FORMAT_VERSION: u32 = 1;
const VALIDATED_PREFIX: usize = 16;

#[derive(Debug, Serialize, Deserialize)]
pub struct TableFile {
    pub format_version: u32,
    pub family: String,
    pub params: BTreeMap<String, u64>,
    pub values: Vec<String>,
}

impl TableFile {
    pub fn new(family: &FamilySpec, values: &[Count]) -> TableFile {
        TableFile {
            format_version: FORMAT_VERSION,
            family: family.name().to_string(),
            params: family.params().iter().map(|(k, v)| (k.to_string(), v)).collect(),
            values: values.iter().map(|v| v.to_string()).collect(),
        }
    }

    /// Parses the values, rejecting anything that is not for `family`.
    pub fn decode(&self, family: &FamilySpec) -> Result<Vec<Count>> {
        if self.format_version != FORMAT_VERSION {
            return Err(Error::Integrity(format!("unsupported format_version {}", self.format_version)));
        }
        let expected = TableFile::new(family, &[]);
        if self.family != expected.family || self.params != expected.params {
            return Err(Error::Integrity(format!("table is for {} {:?}, not {family}", self.family, self.params)));
        }
        self.values
            .iter()
            .map(|v| v.parse::<BigInt>().map_err(|_| Error::Integrity(format!("bad value `{v}`"))))
            .collect()
    }
}

pub fn to_csv(values: &[Count]) -> String {
    let mut out = String::from("n,value\n");
    for (n, v) in values.iter().enumerate() {
        out.push_str(&format!("{n},{v}\n"));
    }
    out
}

pub fn to_json(family: &FamilySpec, values: &[Count]) -> String {
    let mut text = serde_json::to_string_pretty(&TableFile::new(family, values)).expect("table serializes");
    text.push('\n');
    text
}

pub fn io_error(path: &Path, err: impl std::fmt::Display) -> Error {
    Error::Usage(format!("{}: {err}", path.display()))
}

/// Writes via a temporary file in the same directory, then renames.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| io_error(dir, e))?;
    tmp.write_all(contents.as_bytes()).map_err(|e| io_error(path, e))?;
    tmp.persist(path).map_err(|e| io_error(path, e.error))?;
    Ok(())
}

pub fn cache_path(dir: &Path, family: &FamilySpec) -> PathBuf {
    let mut name = family.name().to_string();
    for (k, v) in family.params().iter() {
        name.push_str(&format!("_{k}={v}"));
    }
    dir.join(format!("{name}.json"))
}

pub enum CacheLookup {
    Missing,
    Hit(Vec<Count>),
    /// Valid but too short for the request; holds the stored length.
    Short(usize),
    Rejected(String),
}

pub fn load_cache(dir: &Path, family: &FamilySpec, n_max: usize) -> CacheLookup {
    let path = cache_path(dir, family);
    let text = match fs::read_to_string(&path) {
        Ok(t) => t,
        Err(_) => return CacheLookup::Missing,
    };
    let values = match serde_json::from_str::<TableFile>(&text)
        .map_err(|e| Error::Integrity(e.to_string()))
        .and_then(|file| file.decode(family))
    {
        Ok(v) => v,
        Err(e) => return CacheLookup::Rejected(e.to_string()),
    };
    let k = values.len().min(VALIDATED_PREFIX);
    if k == 0 || values[..k] != dp_table(family, k - 1)[..] {
        return CacheLookup::Rejected(format!("{}: leading values disagree with the dp oracle", path.display()));
    }
    if values.len() <= n_max {
        return CacheLookup::Short(values.len());
    }
    CacheLookup::Hit(values[..=n_max].to_vec())
}

pub fn store_cache(dir: &Path, family: &FamilySpec, values: &[Count]) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| io_error(dir, e))?;
    write_atomic(&cache_path(dir, family), &to_json(family, values))
}
