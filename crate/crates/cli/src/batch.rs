//! Batch orchestration: one report per input file, failures isolated.

use std::path::{Path, PathBuf};

use rayon::prelude::*;
use toric_cy4::{compute_report_with, DoublingReport, PipelineOptions};

use crate::error::HarnessError;
use crate::fanfile::{parse_fan_file, FanFile};

/// Environment variable overriding the elimination cone.
pub const SEED_CONE_ENV: &str = "TORIC_CY4_SEED_CONE";

#[derive(Debug, Clone, Default)]
pub struct BatchOptions {
    /// Worker threads; 0 lets rayon decide, 1 runs serially.
    pub jobs: usize,
    pub seed_cone: Option<usize>,
}

impl BatchOptions {
    /// Reads the seed cone from [`SEED_CONE_ENV`] if set.
    pub fn seed_cone_from_env() -> Result<Option<usize>, HarnessError> {
        match std::env::var(SEED_CONE_ENV) {
            Ok(v) => v.trim().parse().map(Some).map_err(|_| HarnessError::Parse {
                origin: SEED_CONE_ENV.to_string(),
                line: 0,
                message: format!("expected a cone index, got `{v}`"),
            }),
            Err(_) => Ok(None),
        }
    }
}

/// Outcome for one input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanResult {
    pub origin: String,
    pub file: Option<FanFile>,
    pub outcome: Result<DoublingReport, HarnessError>,
}

impl FanResult {
    pub fn id(&self) -> &str {
        self.file.as_ref().map_or("", |f| f.id.as_str())
    }

    pub fn name(&self) -> &str {
        self.file.as_ref().and_then(|f| f.name.as_deref()).unwrap_or("")
    }
}

pub fn run_fan(file: FanFile, origin: &str, opts: &BatchOptions) -> FanResult {
    let outcome = file.to_fan().and_then(|fan| {
        let po = PipelineOptions {
            elimination_cone: opts.seed_cone,
        };
        compute_report_with(&fan, po).map_err(|e| HarnessError::Computation {
            origin: origin.to_string(),
            source: e,
        })
    });
    FanResult {
        origin: origin.to_string(),
        file: Some(file),
        outcome,
    }
}

fn run_path(path: &Path, opts: &BatchOptions) -> FanResult {
    let origin = path.display().to_string();
    match parse_fan_file(path) {
        Ok(file) => run_fan(file, &origin, opts),
        Err(e) => FanResult {
            origin,
            file: None,
            outcome: Err(e),
        },
    }
}

/// Runs every path; results come back in input order.
pub fn run_batch(paths: &[PathBuf], opts: &BatchOptions) -> Vec<FanResult> {
    if opts.jobs == 1 {
        return paths.iter().map(|p| run_path(p, opts)).collect();
    }
    let work = || paths.par_iter().map(|p| run_path(p, opts)).collect();
    if opts.jobs == 0 {
        return work();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(opts.jobs).build() {
        Ok(pool) => pool.install(work),
        Err(_) => work(),
    }
}

/// 0 when every input produced a report, 1 otherwise.
pub fn batch_exit_code(results: &[FanResult]) -> i32 {
    if results.iter().all(|r| r.outcome.is_ok()) {
        0
    } else {
        1
    }
}
