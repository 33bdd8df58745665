//! The reference table of `(chi, tau)` pairs keyed by fan id.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::HarnessError;

/// Table shipped with the repository.
pub const BUNDLED_TABLE: &str = include_str!("../../../data/reference/fourfolds.csv");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReferenceRow {
    pub no: u32,
    pub id: String,
    pub chi_m: i64,
    pub tau_m: i64,
    pub notation: String,
}

#[derive(Debug, Clone, Default)]
pub struct ReferenceTable {
    rows: Vec<ReferenceRow>,
    by_id: BTreeMap<String, usize>,
}

impl ReferenceTable {
    pub fn bundled() -> Self {
        Self::from_csv_str(BUNDLED_TABLE).expect("bundled table is well formed")
    }

    pub fn load(path: &Path) -> Result<Self, HarnessError> {
        let text = std::fs::read_to_string(path).map_err(|e| HarnessError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Self::from_csv_str(&text)
    }

    pub fn from_csv_str(text: &str) -> Result<Self, HarnessError> {
        let mut reader = csv::Reader::from_reader(text.as_bytes());
        let mut table = ReferenceTable::default();
        for (i, row) in reader.deserialize::<ReferenceRow>().enumerate() {
            let row = row.map_err(|e| HarnessError::Reference(e.to_string()))?;
            if table.by_id.insert(row.id.clone(), i).is_some() {
                return Err(HarnessError::Reference(format!("duplicate id {}", row.id)));
            }
            table.rows.push(row);
        }
        Ok(table)
    }

    pub fn rows(&self) -> &[ReferenceRow] {
        &self.rows
    }

    pub fn get(&self, id: &str) -> Option<&ReferenceRow> {
        self.by_id.get(id).map(|&i| &self.rows[i])
    }

    /// Ids of every row carrying this pair.
    pub fn ids_with(&self, chi: i64, tau: i64) -> Vec<&str> {
        self.rows
            .iter()
            .filter(|r| r.chi_m == chi && r.tau_m == tau)
            .map(|r| r.id.as_str())
            .collect()
    }
}
