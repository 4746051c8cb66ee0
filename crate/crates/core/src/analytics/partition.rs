//! The family `{Z(x_i)/Z(G)}` inside `G/Z(G)` and its partition and
//! normality verdicts.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::profile::CentralizerProfile;
use crate::group::QuotientResult;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PartitionWitness {
    /// A nontrivial quotient element lying in two components.
    Overlap {
        element: usize,
        first: usize,
        second: usize,
    },
    /// A nontrivial quotient element in no component.
    Uncovered { element: usize },
    /// Conjugating `component` by `conjugator` leaves the family.
    NotNormal { component: usize, conjugator: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionReport {
    /// Quotient element indices of each component, ascending.
    pub components: Vec<Vec<usize>>,
    pub is_partition: bool,
    pub is_normal: bool,
    pub witness: Option<PartitionWitness>,
}

/// Projects `Z(x_i)` for one representative of each proper centralizer into
/// `quotient` (which must be `G/Z(G)`).
pub fn central_partition(
    profile: &CentralizerProfile,
    quotient: &QuotientResult,
) -> PartitionReport {
    let q = &quotient.quotient;
    let components: Vec<Vec<usize>> = profile
        .centralizer_centers()
        .iter()
        .map(|z| quotient.image(z.elements()))
        .collect();

    let mut owner: Vec<Option<usize>> = vec![None; q.order()];
    let mut partition_witness = None;
    'scan: for (i, comp) in components.iter().enumerate() {
        for &e in comp {
            if e == q.identity() {
                continue;
            }
            match owner[e] {
                Some(first) => {
                    partition_witness = Some(PartitionWitness::Overlap {
                        element: e,
                        first,
                        second: i,
                    });
                    break 'scan;
                }
                None => owner[e] = Some(i),
            }
        }
    }
    if partition_witness.is_none() {
        if let Some(e) = q
            .elements()
            .find(|&e| e != q.identity() && owner[e].is_none())
        {
            partition_witness = Some(PartitionWitness::Uncovered { element: e });
        }
    }

    let family: HashSet<&Vec<usize>> = components.iter().collect();
    let mut normal_witness = None;
    'normal: for (i, comp) in components.iter().enumerate() {
        for g in q.elements() {
            let mut conj: Vec<usize> = comp.iter().map(|&x| q.conjugate(x, g)).collect();
            conj.sort_unstable();
            if !family.contains(&conj) {
                normal_witness = Some(PartitionWitness::NotNormal {
                    component: i,
                    conjugator: g,
                });
                break 'normal;
            }
        }
    }

    PartitionReport {
        is_partition: partition_witness.is_none(),
        is_normal: normal_witness.is_none(),
        witness: partition_witness.or(normal_witness),
        components,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytics::profile;
    use crate::constructions::{alternating, extraspecial2, symmetric, Variant};
    use crate::group::FiniteGroup;

    fn report(g: &FiniteGroup) -> PartitionReport {
        central_partition(&profile(g).unwrap(), &g.central_quotient())
    }

    #[test]
    fn a4_partition() {
        let r = report(&alternating(4).unwrap());
        let mut sizes: Vec<usize> = r.components.iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![3, 3, 3, 3, 4]);
        assert!(r.is_partition && r.is_normal);
        assert_eq!(r.witness, None);
    }

    #[test]
    fn s4_is_not_a_partition() {
        let r = report(&symmetric(4).unwrap());
        assert!(!r.is_partition);
        assert!(matches!(r.witness, Some(PartitionWitness::Overlap { .. })));
    }

    #[test]
    fn extraspecial_partitions() {
        for a in 1..=3 {
            for v in [Variant::Plus, Variant::Minus] {
                let r = report(&extraspecial2(a, v).unwrap());
                assert!(r.is_partition && r.is_normal);
            }
        }
    }
}
