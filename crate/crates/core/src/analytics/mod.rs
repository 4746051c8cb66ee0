//! Centralizer-derived structure: `Cent(G)`, `Z(x)`, conjugate type, the
//! central partition of `G/Z(G)`, classification predicates and bounds.
//!
//! [`GroupAnalysis`] owns a group and computes each piece at most once; it is
//! `Sync`, so analyses of different groups can be driven from worker threads.

mod bounds;
mod partition;
mod predicates;
mod profile;

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

pub use bounds::{
    bounds, exponential_bound_holds, exponential_term, factorial, gcd_condition, BoundFlags,
    BoundReport, Verdict, RELATIVE_GUARD,
};
pub use partition::{central_partition, PartitionReport, PartitionWitness};
pub use predicates::{
    conjugate_type, f_group_violation, is_abelian_subgroup, is_ca_group, is_extraspecial,
    is_f_group, is_i_group, is_semi_extraspecial, is_special, is_ultraspecial,
    maximal_subgroups_of_abelian, ConjugateTypeReport,
};
pub use profile::{profile, CentralizerProfile};

use crate::error::AnalyticsError;
use crate::group::{FiniteGroup, QuotientResult, Subgroup};

/// `(|C(x)/Z(G)|, |C_{G/Z}(xZ)|, |C(x)|)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sandwich {
    pub lower: usize,
    pub middle: usize,
    pub upper: usize,
}

impl Sandwich {
    pub fn holds(&self) -> bool {
        self.lower <= self.middle && self.middle <= self.upper
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerfectQuotientReport {
    pub cent_count: usize,
    pub derived_order: usize,
    pub derived_cent_count: usize,
    /// `G' Z(G) = G`.
    pub derived_center_spans: bool,
}

/// Lazily computed centralizer structure of one group.
pub struct GroupAnalysis {
    group: FiniteGroup,
    center: OnceLock<Subgroup>,
    central_quotient: OnceLock<QuotientResult>,
    derived: OnceLock<Subgroup>,
    profile: OnceLock<Result<CentralizerProfile, AnalyticsError>>,
    f_group: OnceLock<bool>,
    ca_group: OnceLock<bool>,
    conjugate_type: OnceLock<ConjugateTypeReport>,
    partition: OnceLock<PartitionReport>,
    quotient_centralizer_orders: OnceLock<Vec<usize>>,
    extraspecial: OnceLock<bool>,
    semi_extraspecial: OnceLock<bool>,
    ultraspecial: OnceLock<bool>,
    nilpotent: OnceLock<bool>,
}

impl GroupAnalysis {
    pub fn new(group: FiniteGroup) -> Self {
        GroupAnalysis {
            group,
            center: OnceLock::new(),
            central_quotient: OnceLock::new(),
            derived: OnceLock::new(),
            profile: OnceLock::new(),
            f_group: OnceLock::new(),
            ca_group: OnceLock::new(),
            conjugate_type: OnceLock::new(),
            partition: OnceLock::new(),
            quotient_centralizer_orders: OnceLock::new(),
            extraspecial: OnceLock::new(),
            semi_extraspecial: OnceLock::new(),
            ultraspecial: OnceLock::new(),
            nilpotent: OnceLock::new(),
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn into_group(self) -> FiniteGroup {
        self.group
    }

    pub fn center(&self) -> &Subgroup {
        self.center.get_or_init(|| self.group.center())
    }

    pub fn central_quotient(&self) -> &QuotientResult {
        self.central_quotient.get_or_init(|| {
            self.group
                .quotient(self.center())
                .expect("the center is normal")
        })
    }

    /// `|G/Z(G)|`.
    pub fn quotient_order(&self) -> u64 {
        (self.group.order() / self.center().order()) as u64
    }

    pub fn derived(&self) -> &Subgroup {
        self.derived.get_or_init(|| self.group.derived_subgroup())
    }

    pub fn is_abelian(&self) -> bool {
        self.center().order() == self.group.order()
    }

    pub fn is_nilpotent(&self) -> bool {
        *self.nilpotent.get_or_init(|| self.group.is_nilpotent())
    }

    pub fn profile(&self) -> Result<&CentralizerProfile, AnalyticsError> {
        self.profile
            .get_or_init(|| profile(&self.group))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// `|Cent(G)|`.
    pub fn n(&self) -> Result<usize, AnalyticsError> {
        Ok(self.profile()?.n())
    }

    pub fn is_f_group(&self) -> Result<bool, AnalyticsError> {
        let p = self.profile()?;
        Ok(*self.f_group.get_or_init(|| is_f_group(p)))
    }

    pub fn is_ca_group(&self) -> Result<bool, AnalyticsError> {
        let p = self.profile()?;
        Ok(*self.ca_group.get_or_init(|| is_ca_group(&self.group, p)))
    }

    pub fn conjugate_type(&self) -> Result<&ConjugateTypeReport, AnalyticsError> {
        let p = self.profile()?;
        Ok(self
            .conjugate_type
            .get_or_init(|| conjugate_type(&self.group, p)))
    }

    pub fn is_i_group(&self) -> Result<bool, AnalyticsError> {
        Ok(self.conjugate_type()?.is_uniform)
    }

    pub fn central_partition(&self) -> Result<&PartitionReport, AnalyticsError> {
        let p = self.profile()?;
        Ok(self
            .partition
            .get_or_init(|| central_partition(p, self.central_quotient())))
    }

    pub fn is_extraspecial(&self) -> bool {
        *self
            .extraspecial
            .get_or_init(|| is_extraspecial(&self.group))
    }

    pub fn is_semi_extraspecial(&self) -> bool {
        *self
            .semi_extraspecial
            .get_or_init(|| is_semi_extraspecial(&self.group))
    }

    pub fn is_ultraspecial(&self) -> bool {
        *self
            .ultraspecial
            .get_or_init(|| is_ultraspecial(&self.group))
    }

    pub fn bounds(&self) -> Result<BoundReport, AnalyticsError> {
        bounds(self.n()? as u64, self.quotient_order())
    }

    /// Orders of centralizers in `G/Z(G)`, indexed by quotient element.
    fn quotient_centralizer_orders(&self) -> &[usize] {
        self.quotient_centralizer_orders.get_or_init(|| {
            let q = &self.central_quotient().quotient;
            q.elements()
                .map(|x| q.elements().filter(|&y| q.commute(x, y)).count())
                .collect()
        })
    }

    pub fn quotient_centralizer_sandwich(&self, x: usize) -> Result<Sandwich, AnalyticsError> {
        if self.center().contains(x) {
            return Err(AnalyticsError::CentralElement(x));
        }
        let c = self.profile()?.centralizer_of(x).order();
        let z = self.center().order();
        let image = self.central_quotient().project(x);
        Ok(Sandwich {
            lower: c / z,
            middle: self.quotient_centralizer_orders()[image],
            upper: c,
        })
    }

    /// When `G/Z(G)` is perfect: `G' Z(G) = G` and `|Cent(G)| = |Cent(G')|`.
    pub fn perfect_quotient_check(&self) -> Result<PerfectQuotientReport, AnalyticsError> {
        let n = self.n()?;
        if !self.central_quotient().quotient.is_perfect() {
            return Err(AnalyticsError::NotPerfectQuotient);
        }
        let derived = self.derived();
        let span = self.group.join(derived, self.center());
        let derived_group = self.group.subgroup_as_group(derived);
        Ok(PerfectQuotientReport {
            cent_count: n,
            derived_order: derived.order(),
            derived_cent_count: profile(&derived_group)?.n(),
            derived_center_spans: span.order() == self.group.order(),
        })
    }

    /// For a `p`-group of conjugate type `(p^k, 1)` with `|G/Z(G)| > p^{2k}`,
    /// whether every proper centralizer is non-abelian.
    pub fn nonabelian_centralizer_check(&self) -> Result<bool, AnalyticsError> {
        let unmet = |why: String| Err(AnalyticsError::PreconditionNotMet(why));
        let Some(p) = self.group.p_group_prime() else {
            return unmet("not a p-group".into());
        };
        let t = self.conjugate_type()?;
        let (Some(tp), Some(k)) = (t.p, t.k) else {
            return unmet("conjugate type is not (p^k, 1)".into());
        };
        if tp != p {
            return unmet(format!(
                "centralizer index is a power of {tp}, group prime is {p}"
            ));
        }
        let threshold = p.pow(2 * k);
        if self.quotient_order() <= threshold {
            return unmet(format!(
                "|G/Z(G)| = {} is not greater than p^(2k) = {threshold}",
                self.quotient_order()
            ));
        }
        let prof = self.profile()?;
        Ok(prof
            .proper_centralizers()
            .iter()
            .all(|c| !is_abelian_subgroup(&self.group, c)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{
        alternating, cyclic, dihedral, extraspecial2, quaternion8, symmetric, Variant,
    };

    #[test]
    fn sandwich_examples() {
        let q8 = GroupAnalysis::new(quaternion8().unwrap());
        let i = q8
            .group()
            .elements()
            .find(|&x| q8.group().element_order(x) == 4)
            .unwrap();
        assert_eq!(
            q8.quotient_centralizer_sandwich(i).unwrap(),
            Sandwich {
                lower: 2,
                middle: 4,
                upper: 4
            }
        );
        let a4 = GroupAnalysis::new(alternating(4).unwrap());
        let t = a4
            .group()
            .elements()
            .find(|&x| a4.group().element_order(x) == 3)
            .unwrap();
        assert_eq!(
            a4.quotient_centralizer_sandwich(t).unwrap(),
            Sandwich {
                lower: 3,
                middle: 3,
                upper: 3
            }
        );
        let e = GroupAnalysis::new(extraspecial2(2, Variant::Plus).unwrap());
        for x in e.group().elements().filter(|&x| !e.center().contains(x)) {
            assert_eq!(
                e.quotient_centralizer_sandwich(x).unwrap(),
                Sandwich {
                    lower: 8,
                    middle: 16,
                    upper: 16
                }
            );
        }
        let id = q8.group().identity();
        assert_eq!(
            q8.quotient_centralizer_sandwich(id).unwrap_err(),
            AnalyticsError::CentralElement(id)
        );
    }

    #[test]
    fn perfect_quotient() {
        let a5 = GroupAnalysis::new(alternating(5).unwrap());
        let r = a5.perfect_quotient_check().unwrap();
        assert_eq!((r.cent_count, r.derived_cent_count), (22, 22));
        let c6a5 = GroupAnalysis::new(FiniteGroup::direct_product(
            &cyclic(6).unwrap(),
            &alternating(5).unwrap(),
        ));
        let r = c6a5.perfect_quotient_check().unwrap();
        assert_eq!(
            (r.cent_count, r.derived_order, r.derived_cent_count),
            (22, 60, 22)
        );
        assert!(r.derived_center_spans);
        let s4 = GroupAnalysis::new(symmetric(4).unwrap());
        assert_eq!(
            s4.perfect_quotient_check().unwrap_err(),
            AnalyticsError::NotPerfectQuotient
        );
    }

    #[test]
    fn nonabelian_centralizers() {
        for (a, v) in [(2, Variant::Plus), (3, Variant::Minus)] {
            let g = GroupAnalysis::new(extraspecial2(a, v).unwrap());
            assert_eq!(g.nonabelian_centralizer_check(), Ok(true));
        }
        let d8 = GroupAnalysis::new(dihedral(8).unwrap());
        assert!(matches!(
            d8.nonabelian_centralizer_check(),
            Err(AnalyticsError::PreconditionNotMet(_))
        ));
        let s3 = GroupAnalysis::new(symmetric(3).unwrap());
        assert!(matches!(
            s3.nonabelian_centralizer_check(),
            Err(AnalyticsError::PreconditionNotMet(_))
        ));
    }
}
