//! Code files: JSON `{"q", "modulus"?, "n", "generator"}` or plain text
//! with a `q n k` header followed by k rows.

use serde::{Deserialize, Serialize};

use super::code::LinearCode;
use crate::error::{LrcError, Result};
use crate::gf::Field;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeFile {
    pub q: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
    pub n: usize,
    pub generator: Vec<Vec<u64>>,
}

impl CodeFile {
    pub fn from_code(code: &LinearCode) -> CodeFile {
        CodeFile {
            q: code.q(),
            modulus: Some(code.field().modulus().to_vec()),
            n: code.n(),
            generator: code.to_entries(),
        }
    }

    pub fn build(&self) -> Result<LinearCode> {
        let field = match &self.modulus {
            Some(m) => Field::with_modulus(self.q, m)?,
            None => Field::new(self.q)?,
        };
        LinearCode::from_entries(&field, self.n, &self.generator)
    }
}

/// Parses either format, choosing JSON when the text starts with `{`.
pub fn parse_code(text: &str) -> Result<LinearCode> {
    let trimmed = text.trim_start();
    if trimmed.is_empty() {
        return Err(LrcError::Parse("empty code file".into()));
    }
    if trimmed.starts_with('{') {
        let file: CodeFile = serde_json::from_str(trimmed).map_err(|e| LrcError::Parse(e.to_string()))?;
        return file.build();
    }
    parse_text(trimmed)?.build()
}

fn parse_text(text: &str) -> Result<CodeFile> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| LrcError::Parse("missing header".into()))?;
    let head = numbers(header)?;
    let [q, n, k] = head[..] else {
        return Err(LrcError::Parse(format!("header must be `q n k`, got `{header}`")));
    };
    let generator: Vec<Vec<u64>> = lines.map(numbers).collect::<Result<_>>()?;
    if generator.len() as u64 != k {
        return Err(LrcError::Parse(format!(
            "header announces {k} rows, found {}",
            generator.len()
        )));
    }
    Ok(CodeFile {
        q: u32::try_from(q).map_err(|_| LrcError::Parse(format!("field size {q}")))?,
        modulus: None,
        n: n as usize,
        generator,
    })
}

fn numbers(line: &str) -> Result<Vec<u64>> {
    line.split_whitespace()
        .map(|tok| tok.parse().map_err(|_| LrcError::Parse(format!("bad integer `{tok}`"))))
        .collect()
}

pub fn to_json(code: &LinearCode) -> String {
    serde_json::to_string(&CodeFile::from_code(code)).expect("plain data serializes")
}
