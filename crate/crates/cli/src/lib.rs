//! Fan-file ingestion, batch runs, report output and reference checks
//! for the `toric-cy4` pipeline.

pub mod batch;
pub mod check;
pub mod emit;
pub mod error;
pub mod fanfile;
pub mod reference;

pub use batch::{batch_exit_code, run_batch, run_fan, BatchOptions, FanResult, SEED_CONE_ENV};
pub use check::{check_expectations, check_reference, CheckEntry, CheckStatus, CheckSummary};
pub use emit::{render, EmitFormat};
pub use error::HarnessError;
pub use fanfile::{parse_fan_file, parse_fan_str, FanFile};
pub use reference::{ReferenceRow, ReferenceTable, BUNDLED_TABLE};
