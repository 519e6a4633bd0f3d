//! Suite configuration, catalogue execution and report emission.
//!
//! [`run_suite`] resolves the family filter against the relation catalogue,
//! runs every selected entry in a rayon pool sized by `STSP_THREADS`, and
//! assembles the records single-threaded in catalogue order.  The JSON
//! report is fully determined by the configuration; wall time is kept on
//! the in-memory report for the console summary but never serialized.

use std::fs;
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use stsp_core::checks::{entries, run_entry, CheckContext, Entry, RelationRecord};
use stsp_core::ring::parse_ring;
use stsp_core::{Error, Result};

pub const SCHEMA_VERSION: u32 = 1;
pub const THREADS_ENV: &str = "STSP_THREADS";
pub const DEFAULT_N_MAX: u32 = 16;

#[derive(Clone, Debug, Serialize)]
pub struct SuiteConfig {
    pub ring: String,
    pub n: usize,
    pub seed: u64,
    pub samples: usize,
    pub family: Option<String>,
    pub n_max: u32,
}

#[derive(Debug, Serialize)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub tool: String,
    pub config: SuiteConfig,
    pub threads: usize,
    pub records: Vec<RelationRecord>,
    pub failures: usize,
    #[serde(skip)]
    pub wall_ms: u128,
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn write_json(&self, path: &Path) -> Result<()> {
        fs::write(path, self.to_json())
            .map_err(|e| Error::ConfigError(format!("cannot write {}: {e}", path.display())))
    }
}

/// Resolve a comma-separated filter of family names and relation ids to
/// catalogue entries, preserving catalogue order.
fn selected_entries(filter: Option<&str>) -> Result<Vec<&'static Entry>> {
    let all = entries();
    let Some(spec) = filter else {
        return Ok(all.iter().collect());
    };
    let tokens: Vec<&str> = spec
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .collect();
    if tokens.is_empty() {
        return Err(Error::ConfigError("empty family filter".into()));
    }
    for token in &tokens {
        if !all.iter().any(|e| e.family() == *token || e.id() == *token) {
            return Err(Error::ConfigError(format!(
                "unknown relation family or id {token:?}"
            )));
        }
    }
    Ok(all
        .iter()
        .filter(|e| tokens.iter().any(|t| e.family() == *t || e.id() == *t))
        .collect())
}

fn thread_count() -> Result<usize> {
    match std::env::var(THREADS_ENV) {
        Ok(raw) => raw
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&k| k > 0)
            .ok_or_else(|| {
                Error::ConfigError(format!(
                    "{THREADS_ENV} must be a positive integer, got {raw:?}"
                ))
            }),
        Err(_) => Ok(0),
    }
}

pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    if cfg.samples == 0 {
        return Err(Error::ConfigError("sample count must be positive".into()));
    }
    let ring = parse_ring(&cfg.ring)?;
    let ctx = CheckContext::new(&ring, cfg.n)?;
    let chosen = selected_entries(cfg.family.as_deref())?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(thread_count()?)
        .build()
        .map_err(|e| Error::ConfigError(format!("cannot build thread pool: {e}")))?;

    let start = Instant::now();
    let results: Vec<Result<RelationRecord>> = pool.install(|| {
        chosen
            .par_iter()
            .map(|entry| run_entry(&ctx, entry, cfg.seed, cfg.samples))
            .collect()
    });
    let wall_ms = start.elapsed().as_millis();

    let mut records = Vec::with_capacity(results.len());
    for result in results {
        records.push(result?);
    }
    let failures = records.iter().map(|r| r.failures).sum();
    Ok(SuiteReport {
        schema_version: SCHEMA_VERSION,
        tool: format!("stsp {}", env!("CARGO_PKG_VERSION")),
        config: cfg.clone(),
        threads: pool.current_num_threads(),
        records,
        failures,
        wall_ms,
    })
}

pub fn print_summary(report: &SuiteReport) {
    for record in &report.records {
        print_record(record);
    }
    let total: usize = report.records.iter().map(|r| r.samples).sum();
    println!(
        "suite: {} relations, {} samples, {} failures ({} n={} seed={}, {} ms)",
        report.records.len(),
        total,
        report.failures,
        report.config.ring,
        report.config.n,
        report.config.seed,
        report.wall_ms
    );
}

fn print_record(record: &RelationRecord) {
    if record.failures == 0 {
        println!(
            "{:<24} ok    {}/{}",
            record.relation_id, record.samples, record.samples
        );
        return;
    }
    println!(
        "{:<24} FAIL  {} of {} samples",
        record.relation_id, record.failures, record.samples
    );
    if let Some(c) = &record.first_counterexample {
        let origin = if c.shrunk { "shrunk from" } else { "at" };
        println!("    counterexample {origin} sample {}:", c.sample);
        for (name, value) in &c.bindings {
            println!("      {name} = {value}");
        }
        println!("      lhs = {}", c.lhs);
        println!("      rhs = {}", c.rhs);
    }
}
