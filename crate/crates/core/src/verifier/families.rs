//! Recognizers for the named families that the census checks compare
//! against.

use crate::analytics::GroupAnalysis;
use crate::constructions::{alternating, dihedral, quaternion8};
use crate::group::{isomorphic, FiniteGroup};
use crate::numbers::{is_prime, largest_prime_divisor};

fn iso_to(g: &FiniteGroup, order: usize, build: impl FnOnce() -> FiniteGroup) -> bool {
    g.order() == order && isomorphic(g, &build()).unwrap_or(false)
}

pub fn is_a4(g: &FiniteGroup) -> bool {
    iso_to(g, 12, || alternating(4).expect("A4 builds"))
}

pub fn is_q8(g: &FiniteGroup) -> bool {
    iso_to(g, 8, || quaternion8().expect("Q8 builds"))
}

pub fn is_d8(g: &FiniteGroup) -> bool {
    iso_to(g, 8, || dihedral(8).expect("D8 builds"))
}

pub fn is_s3(g: &FiniteGroup) -> bool {
    iso_to(g, 6, || dihedral(6).expect("S3 builds"))
}

/// `Some(m)` when `g` is dihedral of order `2m` with `m >= 3`: it has an
/// element `r` of order `m` and an involution `s` outside `<r>` inverting it.
pub fn dihedral_degree(g: &FiniteGroup) -> Option<usize> {
    let order = g.order();
    if order < 6 || !order.is_multiple_of(2) {
        return None;
    }
    let m = order / 2;
    let found = g.elements().filter(|&r| g.element_order(r) == m).any(|r| {
        let rotations = g.generated_subgroup(&[r]);
        let r_inv = g.inv(r);
        g.elements().any(|s| {
            !rotations.contains(s) && g.element_order(s) == 2 && g.mul(g.mul(s, r), s) == r_inv
        })
    });
    found.then_some(m)
}

pub fn is_odd_dihedral(g: &FiniteGroup) -> bool {
    dihedral_degree(g).is_some_and(|m| m % 2 == 1)
}

pub fn is_extraspecial_2_group(a: &GroupAnalysis) -> bool {
    a.group().p_group_prime() == Some(2) && a.is_extraspecial()
}

/// `Some((q, m))` when `g = C_q ⋊ C_m` is a Frobenius group with `q` the
/// largest prime divisor of `|G|`: `g` has a normal subgroup `K` of order
/// `q` with `C(k) = K` for `1 != k ∈ K`, and an element of order
/// `m = |G|/q` coprime to `q`.
pub fn frobenius_prime_kernel(g: &FiniteGroup) -> Option<(u64, u64)> {
    let order = g.order() as u64;
    let q = largest_prime_divisor(order).ok()?;
    let m = order / q;
    if m < 2 || m.is_multiple_of(q) || !is_prime(q) {
        return None;
    }
    let k = g.elements().find(|&k| g.element_order(k) as u64 == q)?;
    let kernel = g.generated_subgroup(&[k]);
    // A Sylow q-subgroup of order q is normal iff it is the only one, so
    // checking the first one found suffices.
    if !g.is_normal(&kernel) || g.centralizer(k) != kernel {
        return None;
    }
    g.elements()
        .any(|h| g.element_order(h) as u64 == m)
        .then_some((q, m))
}

/// The family among `A4`, odd dihedral and extraspecial 2-group that `g`
/// belongs to.
pub fn f_census_family(a: &GroupAnalysis) -> Option<&'static str> {
    let g = a.group();
    if is_a4(g) {
        Some("A4")
    } else if is_odd_dihedral(g) {
        Some("odd dihedral")
    } else if is_extraspecial_2_group(a) {
        Some("extraspecial 2-group")
    } else {
        None
    }
}

/// The family among `A4`, `Q8`, `D8` and odd dihedral that `g` belongs to.
pub fn ca_census_family(a: &GroupAnalysis) -> Option<&'static str> {
    let g = a.group();
    if is_a4(g) {
        Some("A4")
    } else if is_q8(g) {
        Some("Q8")
    } else if is_d8(g) {
        Some("D8")
    } else if is_odd_dihedral(g) {
        Some("odd dihedral")
    } else {
        None
    }
}
