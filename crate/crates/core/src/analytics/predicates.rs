//! Classification predicates derived from the centralizer profile.

use serde::{Deserialize, Serialize};

use super::profile::CentralizerProfile;
use crate::group::{FiniteGroup, Subgroup};
use crate::numbers::prime_power;

/// No proper centralizer strictly contains another.
pub fn is_f_group(profile: &CentralizerProfile) -> bool {
    let cs = profile.proper_centralizers();
    cs.iter()
        .all(|a| cs.iter().all(|b| !a.is_proper_subset_of(b)))
}

/// A pair `(i, j)` with `C_i ⊊ C_j`, if any.
pub fn f_group_violation(profile: &CentralizerProfile) -> Option<(usize, usize)> {
    let cs = profile.proper_centralizers();
    (0..cs.len())
        .flat_map(|i| (0..cs.len()).map(move |j| (i, j)))
        .find(|&(i, j)| cs[i].is_proper_subset_of(&cs[j]))
}

pub fn is_abelian_subgroup(g: &FiniteGroup, h: &Subgroup) -> bool {
    let e = h.elements();
    e.iter()
        .enumerate()
        .all(|(i, &a)| e[i + 1..].iter().all(|&b| g.commute(a, b)))
}

/// Every proper centralizer is abelian.
pub fn is_ca_group(g: &FiniteGroup, profile: &CentralizerProfile) -> bool {
    profile
        .proper_centralizers()
        .iter()
        .all(|c| is_abelian_subgroup(g, c))
}

/// Whether all proper centralizers share one index `m`, and its prime-power
/// decomposition when it has one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugateTypeReport {
    pub is_uniform: bool,
    pub m: Option<u64>,
    pub p: Option<u64>,
    pub k: Option<u32>,
}

pub fn conjugate_type(g: &FiniteGroup, profile: &CentralizerProfile) -> ConjugateTypeReport {
    let mut indices = profile
        .proper_centralizers()
        .iter()
        .map(|c| (g.order() / c.order()) as u64);
    let first = indices.next();
    let is_uniform = first.is_some() && indices.all(|m| Some(m) == first);
    if !is_uniform {
        return ConjugateTypeReport {
            is_uniform,
            m: None,
            p: None,
            k: None,
        };
    }
    let m = first.expect("uniform implies non-empty");
    let pk = prime_power(m);
    ConjugateTypeReport {
        is_uniform,
        m: Some(m),
        p: pk.map(|(p, _)| p),
        k: pk.map(|(_, k)| k),
    }
}

/// All proper centralizers have the same order.
pub fn is_i_group(g: &FiniteGroup, profile: &CentralizerProfile) -> bool {
    conjugate_type(g, profile).is_uniform
}

/// `G' = Z(G)` is elementary abelian and so is `G/G'`.
pub fn is_special(g: &FiniteGroup) -> bool {
    let Some(p) = g.p_group_prime() else {
        return false;
    };
    let z = g.center();
    let d = g.derived_subgroup();
    if z != d || z.order() == 1 {
        return false;
    }
    let ok = |h: &FiniteGroup| h.is_elementary_abelian(p).unwrap_or(false);
    ok(&g.subgroup_as_group(&z)) && ok(&g.quotient(&d).expect("G' is normal").quotient)
}

/// Special with `|G'| = |Z(G)| = p`.
pub fn is_extraspecial(g: &FiniteGroup) -> bool {
    g.p_group_prime()
        .is_some_and(|p| g.center().order() as u64 == p && is_special(g))
}

/// Subgroups of index `p` in an abelian `p`-subgroup `z`.
pub fn maximal_subgroups_of_abelian(g: &FiniteGroup, z: &Subgroup, p: u64) -> Vec<Subgroup> {
    let cyclic: Vec<Subgroup> = {
        let mut v: Vec<Subgroup> = z
            .elements()
            .iter()
            .map(|&x| g.generated_subgroup(&[x]))
            .collect();
        v.sort();
        v.dedup();
        v
    };
    let mut all = cyclic.clone();
    let mut frontier = cyclic.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for s in &frontier {
            for c in &cyclic {
                let j = g.join(s, c);
                if !all.contains(&j) {
                    all.push(j.clone());
                    next.push(j);
                }
            }
        }
        frontier = next;
    }
    let target = z.order() / p as usize;
    let mut out: Vec<Subgroup> = all.into_iter().filter(|s| s.order() == target).collect();
    out.sort();
    out
}

/// Every quotient by a maximal subgroup of `Z(G)` is extraspecial.
pub fn is_semi_extraspecial(g: &FiniteGroup) -> bool {
    let Some(p) = g.p_group_prime() else {
        return false;
    };
    if g.is_abelian() {
        return false;
    }
    let z = g.center();
    maximal_subgroups_of_abelian(g, &z, p).iter().all(|n| {
        g.quotient(n)
            .map(|q| is_extraspecial(&q.quotient))
            .unwrap_or(false)
    })
}

/// Semi-extraspecial with `|G'|^2 = |G : G'|`.
pub fn is_ultraspecial(g: &FiniteGroup) -> bool {
    if !is_semi_extraspecial(g) {
        return false;
    }
    let d = g.derived_subgroup().order();
    d * d == g.order() / d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytics::profile;
    use crate::constructions::{
        alternating, dihedral, extraspecial2, gf, heisenberg, quaternion8, symmetric, Variant,
    };

    #[test]
    fn f_group_examples() {
        assert!(!is_f_group(&profile(&symmetric(4).unwrap()).unwrap()));
        assert!(is_f_group(&profile(&alternating(4).unwrap()).unwrap()));
        assert!(is_f_group(
            &profile(&extraspecial2(2, Variant::Plus).unwrap()).unwrap()
        ));
        assert!(f_group_violation(&profile(&symmetric(4).unwrap()).unwrap()).is_some());
    }

    #[test]
    fn ca_group_examples() {
        for g in [
            quaternion8().unwrap(),
            dihedral(8).unwrap(),
            alternating(4).unwrap(),
            dihedral(14).unwrap(),
            heisenberg(&gf(2, 2).unwrap()).unwrap(),
        ] {
            assert!(is_ca_group(&g, &profile(&g).unwrap()), "{}", g.name());
        }
        let e32 = extraspecial2(2, Variant::Plus).unwrap();
        assert!(!is_ca_group(&e32, &profile(&e32).unwrap()));
    }

    #[test]
    fn conjugate_types() {
        let h3 = heisenberg(&gf(3, 1).unwrap()).unwrap();
        let t = conjugate_type(&h3, &profile(&h3).unwrap());
        assert_eq!(
            (t.is_uniform, t.m, t.p, t.k),
            (true, Some(3), Some(3), Some(1))
        );
        let h4 = heisenberg(&gf(2, 2).unwrap()).unwrap();
        let t = conjugate_type(&h4, &profile(&h4).unwrap());
        assert_eq!(
            (t.is_uniform, t.m, t.p, t.k),
            (true, Some(4), Some(2), Some(2))
        );
        let s3 = symmetric(3).unwrap();
        assert!(!conjugate_type(&s3, &profile(&s3).unwrap()).is_uniform);
        assert!(!is_i_group(&s3, &profile(&s3).unwrap()));
        assert!(is_i_group(&h3, &profile(&h3).unwrap()));
        for a in 1..=3 {
            for v in [Variant::Plus, Variant::Minus] {
                let g = extraspecial2(a, v).unwrap();
                assert!(is_i_group(&g, &profile(&g).unwrap()));
            }
        }
    }

    #[test]
    fn special_family_predicates() {
        assert!(is_extraspecial(&extraspecial2(2, Variant::Minus).unwrap()));
        let h4 = heisenberg(&gf(2, 2).unwrap()).unwrap();
        assert!(!is_extraspecial(&h4));
        assert!(is_semi_extraspecial(&h4));
        assert!(is_ultraspecial(&h4));
        let d8c2 = FiniteGroup::direct_product(
            &dihedral(8).unwrap(),
            &crate::constructions::cyclic(2).unwrap(),
        );
        assert!(!is_extraspecial(&d8c2));
        assert!(!is_semi_extraspecial(&d8c2));
        assert!(!is_extraspecial(&symmetric(3).unwrap()));
        // Extraspecial groups are semi-extraspecial but not ultraspecial past order p^3.
        let e32 = extraspecial2(2, Variant::Plus).unwrap();
        assert!(is_semi_extraspecial(&e32));
        assert!(!is_ultraspecial(&e32));
    }
}
