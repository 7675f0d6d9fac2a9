//! The rack file: `{"size": n, "op": [[...]], "convention": "left"}`.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use rackhom::algebra::{validate_rack, AxiomViolation, BinaryTable, FiniteRack};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// `op[x][y] = x ▷ y`.
    #[default]
    Left,
    /// `op[x][y] = x ◁ y = y ▷ x`; transposed on load.
    Right,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Left => "left",
            Convention::Right => "right",
        })
    }
}

impl FromStr for Convention {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "left" => Ok(Convention::Left),
            "right" => Ok(Convention::Right),
            other => Err(format!("convention must be left or right, got {other:?}")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RackFile {
    pub size: usize,
    pub op: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub convention: Option<Convention>,
}

impl RackFile {
    pub fn from_rack(rack: &FiniteRack) -> Self {
        RackFile { size: rack.size(), op: rack.table().rows(), convention: None }
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Usage(format!("invalid rack file: {e}")))
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text).map_err(|e| match e {
            CliError::Usage(msg) => CliError::Usage(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    /// The table in left convention. `overrule` replaces the file's own
    /// convention field.
    pub fn table(&self, overrule: Option<Convention>) -> Result<BinaryTable, CliError> {
        let rows = match overrule.or(self.convention).unwrap_or_default() {
            Convention::Left => self.op.clone(),
            Convention::Right => {
                if self.op.iter().any(|r| r.len() != self.op.len()) {
                    return Err(CliError::Usage("a right-convention table must be square".into()));
                }
                (0..self.op.len()).map(|x| self.op.iter().map(|row| row[x]).collect()).collect()
            }
        };
        BinaryTable::new(self.size, rows).map_err(|e| CliError::Usage(format!("invalid table: {e}")))
    }
}

/// Reads a file and checks the rack axioms.
pub fn load_rack(path: &Path, convention: Option<Convention>) -> Result<FiniteRack, CliError> {
    let table = RackFile::read(path)?.table(convention)?;
    validate_rack(table).map_err(|v| CliError::Math(format!("{}: not a rack\n{}", path.display(), diagnostics(&v))))
}

/// One violation per line, at most 20.
pub fn diagnostics(violations: &[AxiomViolation]) -> String {
    let mut lines: Vec<String> = violations.iter().take(20).map(|v| format!("  {v}")).collect();
    if violations.len() > 20 {
        lines.push(format!("  ... and {} more", violations.len() - 20));
    }
    lines.join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_keys_rejected() {
        assert!(RackFile::parse(r#"{"size": 1, "op": [[0]], "extra": 1}"#).is_err());
        assert!(RackFile::parse(r#"{"size": 1, "op": [[0]], "convention": "up"}"#).is_err());
    }

    #[test]
    fn right_convention_transposes() {
        let file = RackFile::parse(r#"{"size": 2, "op": [[0, 0], [1, 1]], "convention": "right"}"#).unwrap();
        assert_eq!(file.table(None).unwrap().rows(), vec![vec![0, 1], vec![0, 1]]);
        assert_eq!(file.table(Some(Convention::Left)).unwrap().rows(), vec![vec![0, 0], vec![1, 1]]);
    }

    #[test]
    fn table_shape_errors_are_usage_errors() {
        let file = RackFile::parse(r#"{"size": 2, "op": [[0, 1]]}"#).unwrap();
        assert!(matches!(file.table(None), Err(CliError::Usage(_))));
        let file = RackFile::parse(r#"{"size": 2, "op": [[0, 1], [0, 2]]}"#).unwrap();
        assert!(matches!(file.table(None), Err(CliError::Usage(_))));
    }
}
