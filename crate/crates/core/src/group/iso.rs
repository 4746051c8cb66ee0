//! Exact isomorphism testing by generator-image backtracking.

use std::collections::HashMap;

use super::FiniteGroup;
use crate::error::GroupError;

/// Largest order accepted by [`isomorphic`].
pub const ISOMORPHISM_CAP: usize = 512;

/// Element invariant preserved by isomorphisms: (element order, centralizer
/// order).
type Key = (usize, usize);

fn keys(g: &FiniteGroup) -> Vec<Key> {
    g.elements()
        .map(|x| {
            let c = g.elements().filter(|&y| g.commute(x, y)).count();
            (g.element_order(x), c)
        })
        .collect()
}

fn key_census(keys: &[Key]) -> HashMap<Key, usize> {
    let mut census = HashMap::new();
    for &k in keys {
        *census.entry(k).or_insert(0) += 1;
    }
    census
}

/// True iff a bijective homomorphism `a -> b` exists.
pub fn isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> Result<bool, GroupError> {
    for g in [a, b] {
        if g.order() > ISOMORPHISM_CAP {
            return Err(GroupError::OrderCapExceeded {
                order: g.order(),
                cap: ISOMORPHISM_CAP,
            });
        }
    }
    if a.order() != b.order() {
        return Ok(false);
    }
    if a.flat_table() == b.flat_table() {
        return Ok(true);
    }
    let mut oa: Vec<usize> = a.element_orders().collect();
    let mut ob: Vec<usize> = b.element_orders().collect();
    oa.sort_unstable();
    ob.sort_unstable();
    if oa != ob || a.center().order() != b.center().order() {
        return Ok(false);
    }
    let (ka, kb) = (keys(a), keys(b));
    let census_a = key_census(&ka);
    if census_a != key_census(&kb) {
        return Ok(false);
    }

    // Greedy generators, rarest invariant class first to keep branching low.
    let mut order: Vec<usize> = a.elements().collect();
    order.sort_by_key(|&x| (census_a[&ka[x]], std::cmp::Reverse(a.element_order(x)), x));
    let mut gens = Vec::new();
    let mut span = a.trivial_subgroup();
    for x in order {
        if span.order() == a.order() {
            break;
        }
        if !span.contains(x) {
            gens.push(x);
            span = a.generated_subgroup(&gens);
        }
    }

    let mut candidates: HashMap<Key, Vec<usize>> = HashMap::new();
    for y in b.elements() {
        candidates.entry(kb[y]).or_default().push(y);
    }
    let search = Search {
        a,
        b,
        gens: &gens,
        candidates: &candidates,
        keys_a: &ka,
    };
    Ok(search.run(0, &[]))
}

struct Search<'a> {
    a: &'a FiniteGroup,
    b: &'a FiniteGroup,
    gens: &'a [usize],
    candidates: &'a HashMap<Key, Vec<usize>>,
    keys_a: &'a [Key],
}

impl Search<'_> {
    fn run(&self, depth: usize, images: &[usize]) -> bool {
        let Some(map) = self.extend(images) else {
            return false;
        };
        if depth == self.gens.len() {
            return map.iter().all(Option::is_some);
        }
        let g = self.gens[depth];
        let mut used = vec![false; self.b.order()];
        for y in map.iter().flatten() {
            used[*y] = true;
        }
        let Some(cands) = self.candidates.get(&self.keys_a[g]) else {
            return false;
        };
        let mut next = images.to_vec();
        next.push(0);
        for &c in cands {
            if used[c] {
                continue;
            }
            *next.last_mut().expect("pushed") = c;
            if self.run(depth + 1, &next) {
                return true;
            }
        }
        false
    }

    /// Extends `gens[i] -> images[i]` to the generated subgroup, or `None`
    /// when the assignment is inconsistent or not injective.
    fn extend(&self, images: &[usize]) -> Option<Vec<Option<usize>>> {
        let (a, b) = (self.a, self.b);
        let gens = &self.gens[..images.len()];
        let mut map = vec![None; a.order()];
        let mut used = vec![false; b.order()];
        map[a.identity()] = Some(b.identity());
        used[b.identity()] = true;
        let mut queue = vec![a.identity()];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            let fx = map[x].expect("queued elements are mapped");
            for (&s, &fs) in gens.iter().zip(images) {
                let xs = a.mul(x, s);
                let target = b.mul(fx, fs);
                match map[xs] {
                    Some(t) if t != target => return None,
                    Some(_) => {}
                    None => {
                        if used[target] {
                            return None;
                        }
                        used[target] = true;
                        map[xs] = Some(target);
                        queue.push(xs);
                    }
                }
            }
        }
        Some(map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{
        alternating, cyclic, dihedral, elementary_abelian, quaternion8, symmetric,
    };

    #[test]
    fn reflexive_on_same_object() {
        let g = symmetric(4).unwrap();
        assert!(isomorphic(&g, &g).unwrap());
    }

    #[test]
    fn q8_is_not_d8() {
        assert!(!isomorphic(&quaternion8().unwrap(), &dihedral(8).unwrap()).unwrap());
    }

    #[test]
    fn relabelled_groups_are_isomorphic() {
        assert!(isomorphic(&dihedral(6).unwrap(), &symmetric(3).unwrap()).unwrap());
        assert!(isomorphic(
            &dihedral(12).unwrap(),
            &FiniteGroup::direct_product(&symmetric(3).unwrap(), &cyclic(2).unwrap())
        )
        .unwrap());
        assert!(!isomorphic(&dihedral(12).unwrap(), &alternating(4).unwrap()).unwrap());
        assert!(isomorphic(
            &FiniteGroup::direct_product(&cyclic(2).unwrap(), &cyclic(3).unwrap()),
            &cyclic(6).unwrap()
        )
        .unwrap());
        assert!(!isomorphic(&cyclic(4).unwrap(), &elementary_abelian(2, 2).unwrap()).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        let big = cyclic(600).unwrap();
        assert_eq!(
            isomorphic(&big, &big),
            Err(GroupError::OrderCapExceeded {
                order: 600,
                cap: ISOMORPHISM_CAP
            })
        );
    }
}
