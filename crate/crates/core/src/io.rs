//! Code JSON: `{"n": 5, "m": 5, "servers": [[1,3,5], ...]}` with 1-based items.

use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::setsystem::McbcCode;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeFile {
    pub n: usize,
    pub m: usize,
    pub servers: Vec<Vec<usize>>,
}

impl From<&McbcCode> for CodeFile {
    fn from(code: &McbcCode) -> Self {
        CodeFile {
            n: code.n(),
            m: code.m(),
            servers: code.server_view().blocks().to_vec(),
        }
    }
}

impl TryFrom<CodeFile> for McbcCode {
    type Error = Error;

    fn try_from(file: CodeFile) -> Result<Self> {
        if file.servers.len() != file.m {
            return Err(Error::Format(format!(
                "m = {} but {} server lists given",
                file.m,
                file.servers.len()
            )));
        }
        if file.n == 0 {
            return Err(Error::Format("n must be positive".into()));
        }
        McbcCode::from_servers(file.n, file.servers)
    }
}

/// Single-line JSON encoding of a code.
pub fn code_to_json(code: &McbcCode) -> String {
    serde_json::to_string(&CodeFile::from(code)).expect("plain data serializes")
}

pub fn code_from_json(text: &str) -> Result<McbcCode> {
    let file: CodeFile = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    file.try_into()
}

/// Reads a code from a file, or from stdin when `path` is `-`.
pub fn read_code(path: &Path) -> Result<McbcCode> {
    let text = if path == Path::new("-") {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        std::fs::read_to_string(path)?
    };
    code_from_json(&text)
}
