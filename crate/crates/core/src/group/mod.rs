//! Dense multiplication-table groups.
//!
//! A [`FiniteGroup`] stores its Cayley table row-major together with the
//! identity, inverses and element orders discovered during validation. All
//! structural operations (centers, centralizers, quotients, products) work
//! directly on element indices.

mod iso;
mod quotient;
mod recognize;
mod subgroup;

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;

use crate::error::GroupError;

pub use iso::{isomorphic, ISOMORPHISM_CAP};
pub use quotient::QuotientResult;
pub use subgroup::Subgroup;

/// Largest order validated with the full `O(n^3)` associativity scan.
/// Above it validation uses Light's test on a generating set.
pub const FULL_ASSOCIATIVITY_MAX_ORDER: usize = 1024;

/// Fingerprint of a multiplication table, used to tie subgroups to parents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupId(u64);

#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    identity: usize,
    inverses: Vec<u32>,
    element_orders: Vec<u32>,
    name: String,
    id: GroupId,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("identity", &self.identity)
            .finish_non_exhaustive()
    }
}

/// How associativity is established when building from a table.
enum Associativity<'a> {
    /// Every triple, or Light's test on a greedy generating set above the cap.
    Auto,
    /// Light's test on the supplied generators (which must generate).
    Generators(&'a [usize]),
}

impl FiniteGroup {
    /// Validates a square Cayley table and caches identity, inverses and
    /// element orders.
    pub fn from_table(table: &[Vec<usize>], name: impl Into<String>) -> Result<Self, GroupError> {
        let order = table.len();
        let mut flat = Vec::with_capacity(order * order);
        for (i, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(GroupError::NotAGroup(format!(
                    "row {i} has {} entries, expected {order}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= order {
                    return Err(GroupError::NotAGroup(format!(
                        "entry ({i}, {j}) = {v} is out of range"
                    )));
                }
                flat.push(v as u32);
            }
        }
        Self::validated(order, flat, name.into(), Associativity::Auto)
    }

    /// Like [`FiniteGroup::from_table`] for a row-major flat table.
    pub fn from_flat_table(
        order: usize,
        table: Vec<u32>,
        name: impl Into<String>,
    ) -> Result<Self, GroupError> {
        Self::check_flat(order, &table)?;
        Self::validated(order, table, name.into(), Associativity::Auto)
    }

    /// Validates associativity with Light's test on `generators` instead of
    /// every triple. The generators must generate the whole table.
    pub fn from_flat_table_with_generators(
        order: usize,
        table: Vec<u32>,
        name: impl Into<String>,
        generators: &[usize],
    ) -> Result<Self, GroupError> {
        Self::check_flat(order, &table)?;
        if let Some(&g) = generators.iter().find(|&&g| g >= order) {
            return Err(GroupError::NotAGroup(format!("generator {g} out of range")));
        }
        Self::validated(
            order,
            table,
            name.into(),
            Associativity::Generators(generators),
        )
    }

    fn check_flat(order: usize, table: &[u32]) -> Result<(), GroupError> {
        if table.len() != order * order {
            return Err(GroupError::NotAGroup(format!(
                "table has {} entries, expected {}",
                table.len(),
                order * order
            )));
        }
        if let Some(pos) = table.iter().position(|&v| v as usize >= order) {
            return Err(GroupError::NotAGroup(format!(
                "entry ({}, {}) = {} is out of range",
                pos / order,
                pos % order,
                table[pos]
            )));
        }
        Ok(())
    }

    fn validated(
        order: usize,
        table: Vec<u32>,
        name: String,
        assoc: Associativity<'_>,
    ) -> Result<Self, GroupError> {
        if order == 0 {
            return Err(GroupError::NotAGroup("empty table".into()));
        }
        let at = |i: usize, j: usize| table[i * order + j] as usize;
        let identity = (0..order)
            .find(|&e| (0..order).all(|j| at(e, j) == j && at(j, e) == j))
            .ok_or_else(|| GroupError::NotAGroup("no identity element".into()))?;
        for i in 0..order {
            let Some(j) = (0..order).find(|&j| at(i, j) == identity) else {
                return Err(GroupError::NotAGroup(format!("element {i} has no inverse")));
            };
            if at(j, i) != identity {
                return Err(GroupError::NotAGroup(format!(
                    "element {i} has right inverse {j} that is not a left inverse"
                )));
            }
        }
        match assoc {
            Associativity::Auto if order <= FULL_ASSOCIATIVITY_MAX_ORDER => {
                check_all_triples(order, &table)?
            }
            Associativity::Auto => {
                let gens = greedy_generators(order, &table, identity);
                check_light(order, &table, &gens)?
            }
            Associativity::Generators(gens) => {
                let reached = right_closure(order, &table, identity, gens);
                if reached.count_ones(..) != order {
                    return Err(GroupError::NotAGroup(format!(
                        "supplied generators reach only {} of {order} elements",
                        reached.count_ones(..)
                    )));
                }
                check_light(order, &table, gens)?
            }
        }
        Ok(Self::from_trusted(order, table, name))
    }

    /// Builds a group from a table already known to satisfy the axioms
    /// (restrictions, quotients and products of validated groups).
    pub(crate) fn from_trusted(order: usize, table: Vec<u32>, name: String) -> Self {
        let at = |i: usize, j: usize| table[i * order + j] as usize;
        let identity = (0..order)
            .find(|&e| (0..order).all(|j| at(e, j) == j))
            .expect("trusted table has an identity");
        let mut inverses = vec![0u32; order];
        for (i, inv) in inverses.iter_mut().enumerate() {
            let row = &table[i * order..(i + 1) * order];
            *inv = row
                .iter()
                .position(|&v| v as usize == identity)
                .expect("trusted table has inverses") as u32;
        }
        let mut element_orders = vec![0u32; order];
        for (i, o) in element_orders.iter_mut().enumerate() {
            let mut k = 1;
            let mut acc = i;
            while acc != identity {
                acc = at(acc, i);
                k += 1;
            }
            *o = k;
        }
        let mut hasher = DefaultHasher::new();
        order.hash(&mut hasher);
        table.hash(&mut hasher);
        let id = GroupId(hasher.finish());
        FiniteGroup {
            order,
            table,
            identity,
            inverses,
            element_orders,
            name,
            id,
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn id(&self) -> GroupId {
        self.id
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.element_orders[a] as usize
    }

    pub fn element_orders(&self) -> impl Iterator<Item = usize> + '_ {
        self.element_orders.iter().map(|&o| o as usize)
    }

    /// `g^-1 x g`.
    #[inline]
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `a b a^-1 b^-1`.
    #[inline]
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    #[inline]
    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Rows of the multiplication table.
    pub fn rows(&self) -> impl Iterator<Item = &[u32]> + '_ {
        self.table.chunks(self.order)
    }

    pub fn flat_table(&self) -> &[u32] {
        &self.table
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.rows()
            .map(|r| r.iter().map(|&v| v as usize).collect())
            .collect()
    }

    pub(crate) fn bitset(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.order)
    }

    fn subgroup_from_bits(&self, bits: FixedBitSet) -> Subgroup {
        Subgroup::from_bits(self.id, self.order, bits)
    }

    pub fn whole(&self) -> Subgroup {
        let mut bits = self.bitset();
        bits.insert_range(..);
        self.subgroup_from_bits(bits)
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        let mut bits = self.bitset();
        bits.insert(self.identity);
        self.subgroup_from_bits(bits)
    }

    /// Checks closure and wraps `elements` as a subgroup.
    pub fn subgroup(&self, elements: &[usize]) -> Result<Subgroup, GroupError> {
        let mut bits = self.bitset();
        for &e in elements {
            if e >= self.order {
                return Err(GroupError::NotASubgroup(format!(
                    "element {e} out of range"
                )));
            }
            bits.insert(e);
        }
        if !bits.contains(self.identity) {
            return Err(GroupError::NotASubgroup("identity missing".into()));
        }
        for a in bits.ones() {
            if !bits.contains(self.inv(a)) {
                return Err(GroupError::NotASubgroup(format!("inverse of {a} missing")));
            }
            for b in bits.ones() {
                if !bits.contains(self.mul(a, b)) {
                    return Err(GroupError::NotASubgroup(format!("{a}*{b} not closed")));
                }
            }
        }
        Ok(self.subgroup_from_bits(bits))
    }

    pub fn center(&self) -> Subgroup {
        let mut bits = self.bitset();
        for z in self.elements() {
            if self.elements().all(|g| self.commute(z, g)) {
                bits.insert(z);
            }
        }
        self.subgroup_from_bits(bits)
    }

    pub fn centralizer(&self, x: usize) -> Subgroup {
        let mut bits = self.bitset();
        for g in self.elements() {
            if self.commute(g, x) {
                bits.insert(g);
            }
        }
        self.subgroup_from_bits(bits)
    }

    /// Elements of `within` commuting with every element of `within`.
    pub fn center_of(&self, within: &Subgroup) -> Subgroup {
        let elems = within.elements();
        let mut bits = self.bitset();
        for &z in elems {
            if elems.iter().all(|&g| self.commute(z, g)) {
                bits.insert(z);
            }
        }
        self.subgroup_from_bits(bits)
    }

    pub fn generated_subgroup(&self, gens: &[usize]) -> Subgroup {
        let bits = right_closure(self.order, &self.table, self.identity, gens);
        self.subgroup_from_bits(bits)
    }

    /// Smallest subgroup containing both arguments.
    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let gens: Vec<usize> = a.elements().iter().chain(b.elements()).copied().collect();
        self.generated_subgroup(&gens)
    }

    pub fn derived_subgroup(&self) -> Subgroup {
        let mut comms = self.bitset();
        for a in self.elements() {
            for b in self.elements() {
                comms.insert(self.commutator(a, b));
            }
        }
        let gens: Vec<usize> = comms.ones().collect();
        self.generated_subgroup(&gens)
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.elements().all(|g| {
            h.elements()
                .iter()
                .all(|&x| h.contains(self.conjugate(x, g)))
        })
    }

    /// `g^-1 H g` as a subgroup.
    pub fn conjugate_subgroup(&self, h: &Subgroup, g: usize) -> Subgroup {
        let mut bits = self.bitset();
        for &x in h.elements() {
            bits.insert(self.conjugate(x, g));
        }
        self.subgroup_from_bits(bits)
    }

    /// The subgroup `H` as a group in its own right; element `i` of the
    /// result is `H.elements()[i]`.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> FiniteGroup {
        let elems = h.elements();
        let mut position = vec![u32::MAX; self.order];
        for (i, &e) in elems.iter().enumerate() {
            position[e] = i as u32;
        }
        let m = elems.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in elems {
            for &b in elems {
                table.push(position[self.mul(a, b)]);
            }
        }
        FiniteGroup::from_trusted(m, table, format!("{} < {}", m, self.name))
    }

    /// Componentwise product; element `(a, b)` has index `a * |B| + b`.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
        let (m, n) = (a.order, b.order);
        let order = m * n;
        let mut table = Vec::with_capacity(order * order);
        for a1 in 0..m {
            for b1 in 0..n {
                for a2 in 0..m {
                    let ap = a.mul(a1, a2) * n;
                    for b2 in 0..n {
                        table.push((ap + b.mul(b1, b2)) as u32);
                    }
                }
            }
        }
        FiniteGroup::from_trusted(order, table, format!("{} x {}", a.name, b.name))
    }

    /// Ascending central series `Z_0 = 1 <= Z_1 = Z(G) <= ...` until it
    /// stabilizes.
    pub fn upper_central_series(&self) -> Vec<Subgroup> {
        let mut series = vec![self.trivial_subgroup()];
        loop {
            let last = series.last().expect("non-empty");
            let mut bits = self.bitset();
            for g in self.elements() {
                if self
                    .elements()
                    .all(|x| last.contains(self.commutator(g, x)))
                {
                    bits.insert(g);
                }
            }
            let next = self.subgroup_from_bits(bits);
            if next.order() == last.order() {
                return series;
            }
            series.push(next);
        }
    }
}

fn check_all_triples(order: usize, table: &[u32]) -> Result<(), GroupError> {
    let at = |i: usize, j: usize| table[i * order + j] as usize;
    for a in 0..order {
        for b in 0..order {
            let ab = at(a, b);
            let row_ab = &table[ab * order..(ab + 1) * order];
            let row_b = &table[b * order..(b + 1) * order];
            let row_a = &table[a * order..(a + 1) * order];
            for c in 0..order {
                if row_ab[c] != row_a[row_b[c] as usize] {
                    return Err(GroupError::NotAGroup(format!(
                        "associativity fails on ({a}, {b}, {c})"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Light's test: associativity holds if `(x g) y = x (g y)` for every `g`
/// in a generating set.
fn check_light(order: usize, table: &[u32], gens: &[usize]) -> Result<(), GroupError> {
    let at = |i: usize, j: usize| table[i * order + j] as usize;
    for &g in gens {
        for x in 0..order {
            let xg = at(x, g);
            for y in 0..order {
                if at(xg, y) != at(x, at(g, y)) {
                    return Err(GroupError::NotAGroup(format!(
                        "associativity fails on ({x}, {g}, {y})"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Closure of `{identity} ∪ gens` under right multiplication by `gens`.
fn right_closure(order: usize, table: &[u32], identity: usize, gens: &[usize]) -> FixedBitSet {
    let mut seen = FixedBitSet::with_capacity(order);
    seen.insert(identity);
    let mut queue = vec![identity];
    while let Some(x) = queue.pop() {
        for &g in gens {
            let y = table[x * order + g] as usize;
            if !seen.put(y) {
                queue.push(y);
            }
        }
    }
    seen
}

fn greedy_generators(order: usize, table: &[u32], identity: usize) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut reached = right_closure(order, table, identity, &gens);
    while let Some(x) = (0..order).find(|&x| !reached.contains(x)) {
        gens.push(x);
        reached = right_closure(order, table, identity, &gens);
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{dihedral, quaternion8, symmetric};

    #[test]
    fn trivial_group_from_table() {
        let g = FiniteGroup::from_table(&[vec![0]], "1").unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.identity(), 0);
    }

    #[test]
    fn identity_need_not_be_zero() {
        // C2 with the identity stored at index 1.
        let g = FiniteGroup::from_table(&[vec![1, 0], vec![0, 1]], "C2").unwrap();
        assert_eq!(g.identity(), 1);
        assert_eq!(g.element_order(0), 2);
    }

    #[test]
    fn rejects_non_associative_table() {
        // Loop of order 5 in which every element squares to the identity.
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        match FiniteGroup::from_table(&t, "loop") {
            Err(GroupError::NotAGroup(reason)) => assert!(reason.contains("associativity")),
            other => panic!("expected NotAGroup, got {other:?}"),
        }
    }

    #[test]
    fn rejects_missing_identity_and_bad_entries() {
        assert!(matches!(
            FiniteGroup::from_table(&[vec![1, 1], vec![1, 1]], "x"),
            Err(GroupError::NotAGroup(_))
        ));
        assert!(matches!(
            FiniteGroup::from_table(&[vec![0, 2], vec![1, 0]], "x"),
            Err(GroupError::NotAGroup(_))
        ));
        assert!(matches!(
            FiniteGroup::from_table(&[vec![0, 1], vec![1]], "x"),
            Err(GroupError::NotAGroup(_))
        ));
        assert!(matches!(
            FiniteGroup::from_table(&[], "x"),
            Err(GroupError::NotAGroup(_))
        ));
    }

    #[test]
    fn light_test_agrees_with_full_scan() {
        let g = symmetric(4).unwrap();
        let gens = greedy_generators(g.order(), g.flat_table(), g.identity());
        assert!(check_light(g.order(), g.flat_table(), &gens).is_ok());
        let again = FiniteGroup::from_flat_table_with_generators(
            g.order(),
            g.flat_table().to_vec(),
            "S4",
            &gens,
        )
        .unwrap();
        assert_eq!(again.id(), g.id());
        assert!(FiniteGroup::from_flat_table_with_generators(
            g.order(),
            g.flat_table().to_vec(),
            "S4",
            &gens[..1],
        )
        .is_err());
    }

    #[test]
    fn s3_centers_and_centralizers() {
        let s3 = symmetric(3).unwrap();
        assert_eq!(s3.center().order(), 1);
        let t = s3.elements().find(|&x| s3.element_order(x) == 2).unwrap();
        let c = s3.centralizer(t);
        assert_eq!(c.order(), 2);
        assert!(c.contains(t));
        assert_eq!(s3.centralizer(s3.identity()).order(), 6);
    }

    #[test]
    fn q8_centralizer_of_i() {
        let q8 = quaternion8().unwrap();
        assert_eq!(q8.center().order(), 2);
        let i = q8.elements().find(|&x| q8.element_order(x) == 4).unwrap();
        let c = q8.centralizer(i);
        assert_eq!(c, q8.generated_subgroup(&[i]));
        assert_eq!(c.order(), 4);
    }

    #[test]
    fn generated_subgroups_of_s3() {
        let s3 = symmetric(3).unwrap();
        assert_eq!(s3.generated_subgroup(&[]).order(), 1);
        let r = s3.elements().find(|&x| s3.element_order(x) == 3).unwrap();
        let t = s3.elements().find(|&x| s3.element_order(x) == 2).unwrap();
        assert_eq!(s3.generated_subgroup(&[r]).order(), 3);
        assert_eq!(s3.generated_subgroup(&[t, r]).order(), 6);
    }

    #[test]
    fn derived_subgroups() {
        let s3 = symmetric(3).unwrap();
        let d = s3.derived_subgroup();
        assert_eq!(d.order(), 3);
        assert!(s3.is_normal(&d));
        let q8 = quaternion8().unwrap();
        assert_eq!(q8.derived_subgroup(), q8.center());
        let c6 = crate::constructions::cyclic(6).unwrap();
        assert_eq!(c6.derived_subgroup().order(), 1);
        assert_eq!(c6.center().order(), 6);
    }

    #[test]
    fn normality() {
        let s3 = symmetric(3).unwrap();
        let t = s3.elements().find(|&x| s3.element_order(x) == 2).unwrap();
        assert!(!s3.is_normal(&s3.generated_subgroup(&[t])));
        assert!(s3.is_normal(&s3.center()));
    }

    #[test]
    fn subgroup_as_group_restricts() {
        let s3 = symmetric(3).unwrap();
        let a3 = s3.derived_subgroup();
        let c3 = s3.subgroup_as_group(&a3);
        assert_eq!(c3.order(), 3);
        assert!(c3.is_cyclic());
        let q8 = quaternion8().unwrap();
        let i = q8.elements().find(|&x| q8.element_order(x) == 4).unwrap();
        let c4 = q8.subgroup_as_group(&q8.generated_subgroup(&[i]));
        assert!(c4.is_cyclic() && c4.order() == 4);
    }

    #[test]
    fn subgroup_constructor_checks_closure() {
        let s3 = symmetric(3).unwrap();
        let e = s3.identity();
        let t = s3.elements().find(|&x| s3.element_order(x) == 2).unwrap();
        assert!(s3.subgroup(&[e, t]).is_ok());
        let r = s3.elements().find(|&x| s3.element_order(x) == 3).unwrap();
        assert!(s3.subgroup(&[e, r]).is_err());
        assert!(s3.subgroup(&[t]).is_err());
    }

    #[test]
    fn direct_products() {
        let s3 = symmetric(3).unwrap();
        let s3s3 = FiniteGroup::direct_product(&s3, &s3);
        assert_eq!(s3s3.order(), 36);
        assert_eq!(s3s3.center().order(), 1);
        let one = crate::constructions::cyclic(1).unwrap();
        let same = FiniteGroup::direct_product(&s3, &one);
        assert_eq!(same.flat_table(), s3.flat_table());
        let c6a5 = FiniteGroup::direct_product(
            &crate::constructions::cyclic(6).unwrap(),
            &crate::constructions::alternating(5).unwrap(),
        );
        assert_eq!(c6a5.order(), 360);
        assert_eq!(c6a5.center().order(), 6);
    }

    #[test]
    fn central_series() {
        let d8 = dihedral(8).unwrap();
        assert_eq!(d8.upper_central_series().last().unwrap().order(), 8);
        let s3 = symmetric(3).unwrap();
        assert_eq!(s3.upper_central_series().last().unwrap().order(), 1);
    }
}
