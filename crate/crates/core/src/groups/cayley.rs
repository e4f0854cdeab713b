use std::collections::HashSet;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::GroupError;

pub const MAX_ORDER: usize = 256;

/// Reasons a multiplication table is not a group table. Validation stops at the first one.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CayleyViolation {
    #[error("empty table")]
    Empty,
    #[error("table of order {n} exceeds the limit of {MAX_ORDER}")]
    TooLarge { n: usize },
    #[error("row {row} has length {len}, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("entry ({row}, {col}) = {value} is out of range")]
    EntryOutOfRange { row: usize, col: usize, value: usize },
    #[error("Latin-square violation in row {row}")]
    RowNotLatin { row: usize },
    #[error("Latin-square violation in column {col}")]
    ColumnNotLatin { col: usize },
    #[error("identity index {identity} is out of range")]
    IdentityOutOfRange { identity: usize },
    #[error("element {identity} is not a two-sided identity (fails against {element})")]
    NotIdentity { identity: usize, element: usize },
    #[error("element {element} has no two-sided inverse")]
    MissingInverse { element: usize },
    #[error("associativity fails at ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
}

/// A validated finite group given by its multiplication table.
#[derive(Clone, Debug)]
pub struct CayleyTable {
    n: usize,
    identity: usize,
    table: Vec<u32>,
    inverses: Vec<u32>,
    names: Option<Vec<String>>,
    label: String,
}

impl PartialEq for CayleyTable {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.identity == other.identity
            && self.table == other.table
            && self.names == other.names
    }
}

impl Eq for CayleyTable {}

impl CayleyTable {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn product(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Descriptor used when the group is printed, e.g. `cyclic:3` or `cayley:path.json`.
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn name_of(&self, k: usize) -> String {
        match &self.names {
            Some(names) => names[k].clone(),
            None => format!("g{k}"),
        }
    }

    pub fn index_of_name(&self, name: &str) -> Option<usize> {
        if let Some(k) = self.names.as_ref().and_then(|ns| ns.iter().position(|s| s == name)) {
            return Some(k);
        }
        let digits = name.strip_prefix('g')?;
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        digits.parse::<usize>().ok().filter(|&k| k < self.n)
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.n).map(|r| r.iter().map(|&v| v as usize).collect()).collect()
    }
}

/// Checks shape, the Latin-square property, the identity, two-sided inverses and full
/// associativity (O(n³)), returning the first violation found.
pub fn validate_cayley(table: &[Vec<usize>], identity: usize) -> Result<CayleyTable, CayleyViolation> {
    let n = table.len();
    if n == 0 {
        return Err(CayleyViolation::Empty);
    }
    if n > MAX_ORDER {
        return Err(CayleyViolation::TooLarge { n });
    }
    for (row, entries) in table.iter().enumerate() {
        if entries.len() != n {
            return Err(CayleyViolation::NotSquare { row, len: entries.len(), n });
        }
        if let Some((col, &value)) = entries.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(CayleyViolation::EntryOutOfRange { row, col, value });
        }
    }
    for (row, entries) in table.iter().enumerate() {
        let mut seen = vec![false; n];
        for &v in entries {
            if std::mem::replace(&mut seen[v], true) {
                return Err(CayleyViolation::RowNotLatin { row });
            }
        }
    }
    for col in 0..n {
        let mut seen = vec![false; n];
        for entries in table {
            if std::mem::replace(&mut seen[entries[col]], true) {
                return Err(CayleyViolation::ColumnNotLatin { col });
            }
        }
    }
    if identity >= n {
        return Err(CayleyViolation::IdentityOutOfRange { identity });
    }
    for (element, row) in table.iter().enumerate() {
        if table[identity][element] != element || row[identity] != element {
            return Err(CayleyViolation::NotIdentity { identity, element });
        }
    }
    let mut inverses = Vec::with_capacity(n);
    for (element, row) in table.iter().enumerate() {
        let right = row.iter().position(|&v| v == identity);
        match right {
            Some(b) if table[b][element] == identity => inverses.push(b as u32),
            _ => return Err(CayleyViolation::MissingInverse { element }),
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = table[a][b];
            for c in 0..n {
                if table[ab][c] != table[a][table[b][c]] {
                    return Err(CayleyViolation::NotAssociative { a, b, c });
                }
            }
        }
    }
    Ok(CayleyTable {
        n,
        identity,
        table: table.iter().flatten().map(|&v| v as u32).collect(),
        inverses,
        names: None,
        label: format!("cayley:{n}"),
    })
}

/// ℤ/n with `table[i][j] = (i + j) mod n` and identity 0.
pub fn cyclic_table(n: usize) -> Result<CayleyTable, GroupError> {
    if n == 0 || n > MAX_ORDER {
        return Err(GroupError::OrderOutOfRange(n));
    }
    let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    let validated = validate_cayley(&table, 0).map_err(GroupError::Cayley)?;
    Ok(validated.with_label(format!("cyclic:{n}")))
}

/// On-disk form of a Cayley table.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CayleyFile {
    pub n: usize,
    pub identity: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    let head_ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_');
    head_ok && chars.all(|c| c.is_ascii_alphanumeric() || c == '_') && name != "i"
}

impl CayleyFile {
    pub fn into_table(self, label: impl Into<String>) -> Result<CayleyTable, GroupError> {
        if self.n != self.table.len() {
            return Err(GroupError::CayleyFile(format!(
                "\"n\" is {} but the table has {} rows",
                self.n,
                self.table.len()
            )));
        }
        let mut validated = validate_cayley(&self.table, self.identity).map_err(GroupError::Cayley)?;
        if let Some(names) = self.names {
            if names.len() != self.n {
                return Err(GroupError::CayleyFile(format!(
                    "{} names given for {} elements",
                    names.len(),
                    self.n
                )));
            }
            let mut seen = HashSet::new();
            for (k, name) in names.iter().enumerate() {
                if !valid_name(name) {
                    return Err(GroupError::CayleyFile(format!("invalid element name {name:?}")));
                }
                if !seen.insert(name.as_str()) {
                    return Err(GroupError::CayleyFile(format!("duplicate element name {name:?}")));
                }
                // `g<k>` is reserved for index k.
                if let Some(digits) = name.strip_prefix('g') {
                    if digits.parse::<usize>().is_ok_and(|j| j != k) {
                        return Err(GroupError::CayleyFile(format!(
                            "name {name:?} clashes with the index syntax"
                        )));
                    }
                }
            }
            validated.names = Some(names);
        }
        Ok(validated.with_label(label))
    }

    pub fn load(path: &Path) -> Result<CayleyTable, GroupError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| GroupError::Io { path: path.display().to_string(), message: e.to_string() })?;
        let file: CayleyFile =
            serde_json::from_str(&text).map_err(|e| GroupError::CayleyFile(e.to_string()))?;
        file.into_table(format!("cayley:{}", path.display()))
    }
}
