//! Shipped data files (cohomology tables, multiplicity table).
//!
//! The copies compiled into the binary are used unless `STEINBERG_DATA_DIR`
//! names a directory, in which case files are read from there.

use std::path::PathBuf;

use sha2::{Digest, Sha256};

pub const DATA_DIR_ENV: &str = "STEINBERG_DATA_DIR";

pub const TABLE1: &str = "table1.txt";
pub const TABLE2: &str = "table2.txt";
pub const MULTIPLICITIES: &str = "multiplicities.txt";

pub const ALL: [&str; 3] = [TABLE1, TABLE2, MULTIPLICITIES];

fn embedded(name: &str) -> Option<&'static str> {
    match name {
        TABLE1 => Some(include_str!("../data/table1.txt")),
        TABLE2 => Some(include_str!("../data/table2.txt")),
        MULTIPLICITIES => Some(include_str!("../data/multiplicities.txt")),
        _ => None,
    }
}

#[derive(Debug, thiserror::Error)]
pub enum DataError {
    #[error("unknown data file '{0}'")]
    Unknown(String),
    #[error("reading {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DataFile {
    pub name: String,
    pub contents: String,
}

impl DataFile {
    pub fn sha256(&self) -> String {
        sha256_hex(self.contents.as_bytes())
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// Loads a data file, honouring the directory override.
pub fn load(name: &str) -> Result<DataFile, DataError> {
    let builtin = embedded(name).ok_or_else(|| DataError::Unknown(name.to_string()))?;
    let contents = match std::env::var_os(DATA_DIR_ENV) {
        Some(dir) => {
            let path = PathBuf::from(dir).join(name);
            std::fs::read_to_string(&path).map_err(|source| DataError::Io { path, source })?
        }
        None => builtin.to_string(),
    };
    Ok(DataFile { name: name.to_string(), contents })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_files_exist() {
        for name in ALL {
            assert!(!embedded(name).unwrap().is_empty());
        }
        assert!(embedded("nope.txt").is_none());
    }

    #[test]
    fn hash_of_empty_input() {
        assert_eq!(sha256_hex(b""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    }
}
