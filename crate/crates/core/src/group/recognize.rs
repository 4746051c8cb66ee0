//! Structural recognizers: abelian, cyclic, nilpotent, perfect, p-groups.

use super::FiniteGroup;
use crate::error::GroupError;
use crate::numbers::{prime_power, require_prime};

impl FiniteGroup {
    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| (a + 1..self.order()).all(|b| self.commute(a, b)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.element_orders().any(|o| o == self.order())
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        self.element_orders().fold(1, num_integer::lcm)
    }

    /// Abelian, of `p`-power order and exponent `p` (the trivial group
    /// counts).
    pub fn is_elementary_abelian(&self, p: u64) -> Result<bool, GroupError> {
        require_prime(p)?;
        if self.order() == 1 {
            return Ok(true);
        }
        Ok(self.p_group_prime() == Some(p) && self.exponent() as u64 == p && self.is_abelian())
    }

    /// The prime `p` when `|G|` is a nontrivial power of `p`.
    pub fn p_group_prime(&self) -> Option<u64> {
        prime_power(self.order() as u64).map(|(p, _)| p)
    }

    /// The upper central series reaches the whole group.
    pub fn is_nilpotent(&self) -> bool {
        self.upper_central_series()
            .last()
            .is_some_and(|z| z.order() == self.order())
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_subgroup().order() == self.order()
    }
}

#[cfg(test)]
mod tests {
    use crate::constructions::{
        alternating, cyclic, dihedral, elementary_abelian, quaternion8, symmetric,
    };
    use crate::error::GroupError;

    #[test]
    fn elementary_abelian_recognition() {
        let v4 = elementary_abelian(2, 2).unwrap();
        assert_eq!(v4.is_elementary_abelian(2), Ok(true));
        assert_eq!(v4.is_elementary_abelian(3), Ok(false));
        assert_eq!(cyclic(4).unwrap().is_elementary_abelian(2), Ok(false));
        assert_eq!(cyclic(1).unwrap().is_elementary_abelian(5), Ok(true));
        assert_eq!(v4.is_elementary_abelian(4), Err(GroupError::NotPrime(4)));
    }

    #[test]
    fn perfect_and_nilpotent() {
        assert!(alternating(5).unwrap().is_perfect());
        assert!(!symmetric(4).unwrap().is_perfect());
        assert!(dihedral(8).unwrap().is_nilpotent());
        assert!(!symmetric(3).unwrap().is_nilpotent());
        assert!(quaternion8().unwrap().is_nilpotent());
    }

    #[test]
    fn exponents_and_cyclicity() {
        assert_eq!(quaternion8().unwrap().exponent(), 4);
        assert_eq!(symmetric(4).unwrap().exponent(), 12);
        assert!(cyclic(7).unwrap().is_cyclic());
        assert!(!elementary_abelian(3, 2).unwrap().is_cyclic());
        assert!(!dihedral(10).unwrap().is_abelian());
    }
}
