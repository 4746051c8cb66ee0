use std::collections::HashMap;

use crate::error::GroupError;
use crate::group::{FiniteGroup, FULL_ASSOCIATIVITY_MAX_ORDER};

/// Largest permutation group [`from_permutations`] will enumerate.
pub const PERMUTATION_CLOSURE_CAP: usize = 10_000;

/// Enumerates the group generated by `generators` (images of `0..degree`)
/// and tabulates it. Products compose left to right: `(p q)(i) = q(p(i))`.
/// The identity permutation gets index 0.
pub fn from_permutations(
    degree: usize,
    generators: &[Vec<usize>],
) -> Result<FiniteGroup, GroupError> {
    for (k, g) in generators.iter().enumerate() {
        if g.len() != degree {
            return Err(GroupError::NotAPermutation(format!(
                "generator {k} has {} images, expected {degree}",
                g.len()
            )));
        }
        let mut seen = vec![false; degree];
        for &i in g {
            if i >= degree || std::mem::replace(&mut seen[i], true) {
                return Err(GroupError::NotAPermutation(format!(
                    "generator {k} is not a bijection of 0..{degree}"
                )));
            }
        }
    }

    let compose = |p: &[usize], q: &[usize]| -> Vec<usize> { p.iter().map(|&i| q[i]).collect() };
    let identity: Vec<usize> = (0..degree).collect();
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
    let mut head = 0;
    while head < elements.len() {
        for g in generators {
            let next = compose(&elements[head], g);
            if !index.contains_key(&next) {
                if elements.len() == PERMUTATION_CLOSURE_CAP {
                    return Err(GroupError::TooLarge {
                        cap: PERMUTATION_CLOSURE_CAP,
                    });
                }
                index.insert(next.clone(), elements.len());
                elements.push(next);
            }
        }
        head += 1;
    }

    let order = elements.len();
    let mut table = Vec::with_capacity(order * order);
    for p in &elements {
        for q in &elements {
            table.push(index[&compose(p, q)] as u32);
        }
    }
    let name = format!("perm{degree}/{order}");
    if order <= FULL_ASSOCIATIVITY_MAX_ORDER {
        FiniteGroup::from_flat_table(order, table, name)
    } else {
        let gens: Vec<usize> = generators.iter().map(|g| index[g]).collect();
        FiniteGroup::from_flat_table_with_generators(order, table, name, &gens)
    }
}
