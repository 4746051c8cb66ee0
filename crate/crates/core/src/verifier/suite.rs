use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use super::catalog::CatalogEntry;
use super::checks::{CheckResult, Details, Status, VerifyConfig, CHECKS};
use crate::analytics::GroupAnalysis;

/// Check id used for entries whose group could not be built.
pub const BUILD_CHECK_ID: &str = "build";

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub groups: usize,
    pub results: usize,
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
    pub indeterminate: usize,
    pub error: usize,
}

impl Summary {
    fn count(groups: usize, results: &[CheckResult]) -> Self {
        let mut s = Summary {
            groups,
            results: results.len(),
            ..Summary::default()
        };
        for r in results {
            *match r.status {
                Status::Pass => &mut s.pass,
                Status::Fail => &mut s.fail,
                Status::Skip => &mut s.skip,
                Status::Indeterminate => &mut s.indeterminate,
                Status::Error => &mut s.error,
            } += 1;
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub results: Vec<CheckResult>,
    pub summary: Summary,
}

impl SuiteReport {
    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0
    }
}

/// A catalog entry with its analysis, or the reason it failed to build.
pub struct BuiltEntry {
    pub entry: CatalogEntry,
    pub analysis: Result<GroupAnalysis, String>,
}

/// Runs `f` over `items` on `jobs` worker threads, keeping input order.
pub(crate) fn ordered_map<T: Sync, R: Send>(
    items: &[T],
    jobs: usize,
    f: impl Fn(&T) -> R + Sync + Send,
) -> Vec<R> {
    if jobs <= 1 {
        return items.iter().map(f).collect();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(|| items.par_iter().map(&f).collect()),
        Err(_) => items.iter().map(f).collect(),
    }
}

pub fn build_catalog(entries: &[CatalogEntry], jobs: usize) -> Vec<BuiltEntry> {
    ordered_map(entries, jobs, |e| BuiltEntry {
        entry: e.clone(),
        analysis: e
            .build()
            .map(GroupAnalysis::new)
            .map_err(|err| err.to_string()),
    })
}

fn evaluate(entry: &CatalogEntry, config: &VerifyConfig) -> Vec<CheckResult> {
    match entry.build() {
        Ok(g) => {
            let a = GroupAnalysis::new(g);
            CHECKS.iter().map(|c| c.run(&a, config)).collect()
        }
        Err(err) => vec![CheckResult {
            check_id: BUILD_CHECK_ID.to_string(),
            group_name: entry.name.clone(),
            status: Status::Error,
            reason: Some(err.to_string()),
            details: Details::from_iter([("builder_spec".to_string(), json!(entry.builder_spec))]),
        }],
    }
}

/// Every check on every entry, ordered by catalog position and then by
/// registry position. The output does not depend on `jobs`.
pub fn run_suite(entries: &[CatalogEntry], config: &VerifyConfig, jobs: usize) -> SuiteReport {
    let results: Vec<CheckResult> = ordered_map(entries, jobs, |e| evaluate(e, config))
        .into_iter()
        .flatten()
        .collect();
    SuiteReport {
        summary: Summary::count(entries.len(), &results),
        results,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_catalog() {
        let r = run_suite(&[], &VerifyConfig::default(), 1);
        assert!(r.results.is_empty());
        assert_eq!(r.summary, Summary::default());
    }

    #[test]
    fn build_failures_are_isolated() {
        let cat = vec![
            CatalogEntry::new("S3", "builtin:dihedral:6"),
            CatalogEntry::new("broken", "cayley:/nonexistent/table.txt"),
            CatalogEntry::new("Q8", "builtin:quaternion8"),
        ];
        let r = run_suite(&cat, &VerifyConfig::default(), 2);
        assert_eq!(r.summary.error, 1);
        assert_eq!(r.summary.fail, 0);
        assert_eq!(r.results.len(), 2 * CHECKS.len() + 1);
        let broken = &r.results[CHECKS.len()];
        assert_eq!(
            (broken.check_id.as_str(), broken.status),
            (BUILD_CHECK_ID, Status::Error)
        );
    }
}
