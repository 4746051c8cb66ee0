//! Named checks over a catalog of groups, and catalog searches.

mod catalog;
mod checks;
mod families;
mod search;
mod suite;

pub use catalog::{default_catalog, CatalogEntry, Expected};
pub use checks::{
    check_ids, find_check, run_check, CheckDef, CheckResult, Details, Status, VerifyConfig, CHECKS,
    DEFAULT_SEED,
};
pub use families::{
    ca_census_family, dihedral_degree, f_census_family, frobenius_prime_kernel, is_a4, is_d8,
    is_extraspecial_2_group, is_odd_dihedral, is_q8, is_s3,
};
pub use search::{search, CentStats, Relation, Scope, SearchHit, SearchPredicate, SearchQuery};
pub use suite::{build_catalog, run_suite, BuiltEntry, SuiteReport, Summary, BUILD_CHECK_ID};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("unknown check id {0:?}")]
    UnknownCheckId(String),
    #[error("unknown search predicate {0:?}")]
    UnknownPredicate(String),
}
