use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;

use super::GroupId;

/// A closed subset of a parent group, stored as sorted element indices plus
/// a membership bitset.
#[derive(Clone, Debug)]
pub struct Subgroup {
    group_id: GroupId,
    elements: Vec<usize>,
    members: FixedBitSet,
}

impl Subgroup {
    pub(crate) fn from_bits(
        group_id: GroupId,
        parent_order: usize,
        mut members: FixedBitSet,
    ) -> Self {
        members.grow(parent_order);
        let elements = members.ones().collect();
        Subgroup {
            group_id,
            elements,
            members,
        }
    }

    pub fn group_id(&self) -> GroupId {
        self.group_id
    }

    /// Strictly ascending element indices.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn is_proper_subset_of(&self, other: &Subgroup) -> bool {
        self.order() < other.order() && self.is_subset_of(other)
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let mut bits = self.members.clone();
        bits.intersect_with(&other.members);
        Subgroup::from_bits(self.group_id, self.members.len(), bits)
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.group_id == other.group_id && self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.group_id.hash(state);
        self.elements.hash(state);
    }
}

/// Ordered by size, then lexicographically by elements.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| self.elements.cmp(&other.elements))
            .then_with(|| self.group_id.cmp(&other.group_id))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
