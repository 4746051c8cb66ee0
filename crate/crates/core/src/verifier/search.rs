use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::families::f_census_family;
use super::suite::BuiltEntry;
use super::VerifyError;

/// The numbers a search predicate sees.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CentStats {
    pub n: u64,
    pub order: u64,
    pub center_order: u64,
}

pub type Relation = Arc<dyn Fn(CentStats) -> bool + Send + Sync>;

#[derive(Clone)]
pub enum SearchPredicate {
    /// `n = |G|/2`.
    CentEqHalf,
    /// `n = |G|/2 + 2`.
    CentEqHalfPlusTwo,
    /// `n >= |G|/2`.
    CentGeHalf,
    Custom {
        label: String,
        relation: Relation,
    },
}

impl SearchPredicate {
    pub fn custom(
        label: impl Into<String>,
        f: impl Fn(CentStats) -> bool + Send + Sync + 'static,
    ) -> Self {
        SearchPredicate::Custom {
            label: label.into(),
            relation: Arc::new(f),
        }
    }

    pub fn holds(&self, s: CentStats) -> bool {
        match self {
            SearchPredicate::CentEqHalf => 2 * s.n == s.order,
            SearchPredicate::CentEqHalfPlusTwo => 2 * s.n == s.order + 4,
            SearchPredicate::CentGeHalf => 2 * s.n >= s.order,
            SearchPredicate::Custom { relation, .. } => relation(s),
        }
    }

    pub fn label(&self) -> &str {
        match self {
            SearchPredicate::CentEqHalf => "cent_eq_half",
            SearchPredicate::CentEqHalfPlusTwo => "cent_eq_half_plus_two",
            SearchPredicate::CentGeHalf => "cent_ge_half",
            SearchPredicate::Custom { label, .. } => label,
        }
    }
}

impl fmt::Debug for SearchPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for SearchPredicate {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cent_eq_half" => Ok(SearchPredicate::CentEqHalf),
            "cent_eq_half_plus_two" => Ok(SearchPredicate::CentEqHalfPlusTwo),
            "cent_ge_half" => Ok(SearchPredicate::CentGeHalf),
            other => Err(VerifyError::UnknownPredicate(other.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    Catalog,
    /// Catalog groups of order at most the bound.
    MaxOrder(usize),
}

#[derive(Clone, Debug)]
pub struct SearchQuery {
    pub predicate: SearchPredicate,
    pub scope: Scope,
    pub f_groups_only: bool,
}

impl SearchQuery {
    pub fn new(predicate: SearchPredicate) -> Self {
        SearchQuery {
            predicate,
            scope: Scope::Catalog,
            f_groups_only: false,
        }
    }

    pub fn max_order(mut self, bound: usize) -> Self {
        self.scope = Scope::MaxOrder(bound);
        self
    }

    pub fn f_groups_only(mut self) -> Self {
        self.f_groups_only = true;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchHit {
    pub group: String,
    pub n: u64,
    pub order: u64,
    pub center_order: u64,
    pub f_group: bool,
    pub ca_group: bool,
    /// One of `A4`, `odd dihedral`, `extraspecial 2-group`, or absent for
    /// groups outside those families.
    pub known_family: Option<String>,
}

/// Non-abelian catalog groups in scope satisfying the predicate, in
/// catalog order. Entries that failed to build are ignored.
pub fn search(query: &SearchQuery, catalog: &[BuiltEntry]) -> Vec<SearchHit> {
    catalog
        .iter()
        .filter_map(|b| b.analysis.as_ref().ok())
        .filter(|a| match query.scope {
            Scope::Catalog => true,
            Scope::MaxOrder(bound) => a.group().order() <= bound,
        })
        .filter_map(|a| {
            let n = a.n().ok()? as u64;
            let stats = CentStats {
                n,
                order: a.group().order() as u64,
                center_order: a.center().order() as u64,
            };
            let f_group = a.is_f_group().ok()?;
            if !query.predicate.holds(stats) || (query.f_groups_only && !f_group) {
                return None;
            }
            Some(SearchHit {
                group: a.group().name().to_string(),
                n,
                order: stats.order,
                center_order: stats.center_order,
                f_group,
                ca_group: a.is_ca_group().ok()?,
                known_family: f_census_family(a).map(str::to_string),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verifier::{build_catalog, CatalogEntry};

    fn small() -> Vec<BuiltEntry> {
        build_catalog(
            &[
                CatalogEntry::new("S3", "builtin:dihedral:6"),
                CatalogEntry::new("Q8", "builtin:quaternion8"),
                CatalogEntry::new("S4", "builtin:symmetric:4"),
                CatalogEntry::new("C4", "builtin:cyclic:4"),
            ],
            1,
        )
    }

    #[test]
    fn predicates() {
        let cat = small();
        let names = |q: SearchQuery| -> Vec<String> {
            search(&q, &cat).into_iter().map(|h| h.group).collect()
        };
        assert_eq!(names(SearchQuery::new(SearchPredicate::CentEqHalf)), ["Q8"]);
        assert_eq!(
            names(SearchQuery::new(SearchPredicate::CentEqHalfPlusTwo)),
            ["S3", "S4"]
        );
        assert_eq!(
            names(SearchQuery::new(SearchPredicate::CentEqHalfPlusTwo).max_order(10)),
            ["S3"]
        );
        assert_eq!(
            names(SearchQuery::new(SearchPredicate::CentGeHalf).f_groups_only()),
            ["S3", "Q8"]
        );
        let custom = SearchPredicate::custom("n_gt_10", |s| s.n > 10);
        assert_eq!(names(SearchQuery::new(custom)), ["S4"]);
    }

    #[test]
    fn flags() {
        let hits = search(
            &SearchQuery::new(SearchPredicate::CentEqHalfPlusTwo),
            &small(),
        );
        let s4 = hits.iter().find(|h| h.group == "S4").unwrap();
        assert!(!s4.f_group);
        assert_eq!(s4.known_family, None);
        let s3 = hits.iter().find(|h| h.group == "S3").unwrap();
        assert_eq!(s3.known_family.as_deref(), Some("odd dihedral"));
    }

    #[test]
    fn parse_predicate() {
        assert!(matches!(
            "cent_ge_half".parse(),
            Ok(SearchPredicate::CentGeHalf)
        ));
        assert!(matches!(
            "cent_lt_half".parse::<SearchPredicate>(),
            Err(VerifyError::UnknownPredicate(_))
        ));
    }
}
