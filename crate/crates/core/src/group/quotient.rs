use super::{FiniteGroup, Subgroup};
use crate::error::GroupError;

/// `G/N` together with the projection `G -> G/N`.
#[derive(Clone, Debug)]
pub struct QuotientResult {
    pub quotient: FiniteGroup,
    pub projection: Vec<usize>,
    pub normal_subgroup: Subgroup,
}

impl QuotientResult {
    pub fn project(&self, g: usize) -> usize {
        self.projection[g]
    }

    /// Image of a set of parent elements, sorted and deduplicated.
    pub fn image(&self, elements: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = elements.iter().map(|&g| self.projection[g]).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

impl FiniteGroup {
    /// Coset group `G/N`. Cosets are numbered in order of their least
    /// element.
    pub fn quotient(&self, n: &Subgroup) -> Result<QuotientResult, GroupError> {
        if n.group_id() != self.id() || !self.is_normal(n) {
            return Err(GroupError::NotNormal);
        }
        let mut projection = vec![usize::MAX; self.order()];
        let mut reps = Vec::new();
        for g in self.elements() {
            if projection[g] != usize::MAX {
                continue;
            }
            let k = reps.len();
            reps.push(g);
            for &h in n.elements() {
                projection[self.mul(g, h)] = k;
            }
        }
        let m = reps.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in &reps {
            for &b in &reps {
                table.push(projection[self.mul(a, b)] as u32);
            }
        }
        let quotient =
            FiniteGroup::from_trusted(m, table, format!("{}/N{}", self.name(), n.order()));
        Ok(QuotientResult {
            quotient,
            projection,
            normal_subgroup: n.clone(),
        })
    }

    /// `G/Z(G)` with its projection.
    pub fn central_quotient(&self) -> QuotientResult {
        self.quotient(&self.center())
            .expect("the center is always normal")
    }
}

#[cfg(test)]
mod tests {
    use crate::constructions::{elementary_abelian, quaternion8, symmetric};
    use crate::error::GroupError;
    use crate::group::isomorphic;

    #[test]
    fn trivial_quotient_is_the_group() {
        let s3 = symmetric(3).unwrap();
        let q = s3.quotient(&s3.trivial_subgroup()).unwrap();
        assert_eq!(q.quotient.order(), 6);
        let mut a: Vec<_> = s3.element_orders().collect();
        let mut b: Vec<_> = q.quotient.element_orders().collect();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn q8_mod_center_is_klein() {
        let q8 = quaternion8().unwrap();
        let q = q8.central_quotient();
        assert_eq!(q.quotient.order(), 4);
        assert_eq!(q.quotient.exponent(), 2);
        assert!(isomorphic(&q.quotient, &elementary_abelian(2, 2).unwrap()).unwrap());
    }

    #[test]
    fn quotient_by_non_normal_fails() {
        let s3 = symmetric(3).unwrap();
        let t = s3.elements().find(|&x| s3.element_order(x) == 2).unwrap();
        let h = s3.generated_subgroup(&[t]);
        assert_eq!(s3.quotient(&h).unwrap_err(), GroupError::NotNormal);
    }

    #[test]
    fn projection_is_a_homomorphism() {
        let g = symmetric(4).unwrap();
        let a4 = g.subgroup_as_group(&g.derived_subgroup());
        let v = a4.derived_subgroup();
        let q = a4.quotient(&v).unwrap();
        assert_eq!(q.quotient.order() * v.order(), a4.order());
        for a in a4.elements() {
            for b in a4.elements() {
                assert_eq!(
                    q.project(a4.mul(a, b)),
                    q.quotient.mul(q.project(a), q.project(b))
                );
            }
        }
    }
}
