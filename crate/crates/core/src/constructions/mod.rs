//! Builders for the group families used throughout the catalog.

mod field;
mod perm;
mod products;

pub use field::{gf, gf_with_modulus, FiniteField};
pub use perm::{from_permutations, PERMUTATION_CLOSURE_CAP};
pub use products::{
    central_product, central_product_of_order_two_centers, extraspecial2, frobenius_cq_cn,
    heisenberg, least_frobenius_unit, semidirect, ActionSpec, Variant,
};

use crate::error::GroupError;
use crate::group::FiniteGroup;
use crate::numbers::require_prime;

fn tabulate(
    order: usize,
    name: String,
    op: impl Fn(usize, usize) -> usize,
) -> Result<FiniteGroup, GroupError> {
    let mut table = Vec::with_capacity(order * order);
    for a in 0..order {
        for b in 0..order {
            table.push(op(a, b) as u32);
        }
    }
    FiniteGroup::from_flat_table(order, table, name)
}

pub fn cyclic(n: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::BadParameter(
            "cyclic order must be positive".into(),
        ));
    }
    tabulate(n, format!("C{n}"), |a, b| (a + b) % n)
}

/// `(C_p)^k`, elements as base-`p` digit vectors.
pub fn elementary_abelian(p: u64, k: u32) -> Result<FiniteGroup, GroupError> {
    require_prime(p)?;
    let p = p as usize;
    let order = p
        .checked_pow(k)
        .filter(|&o| o <= 4096)
        .ok_or_else(|| GroupError::BadParameter(format!("{p}^{k} is too large")))?;
    tabulate(order, format!("C{p}^{k}"), |mut a, mut b| {
        let (mut out, mut place) = (0, 1);
        for _ in 0..k {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    })
}

/// Dihedral group of order `two_n`; element `r^k s^e` has index `k + n e`.
pub fn dihedral(two_n: usize) -> Result<FiniteGroup, GroupError> {
    if two_n < 6 || !two_n.is_multiple_of(2) {
        return Err(GroupError::BadParameter(format!(
            "dihedral order must be even and at least 6, got {two_n}"
        )));
    }
    let n = two_n / 2;
    tabulate(two_n, format!("D{two_n}"), |x, y| {
        let (a, e) = (x % n, x / n);
        let (b, f) = (y % n, y / n);
        let rot = if e == 0 { (a + b) % n } else { (a + n - b) % n };
        rot + n * ((e + f) % 2)
    })
}

/// `{±1, ±i, ±j, ±k}` with index `4 * sign + unit`.
pub fn quaternion8() -> Result<FiniteGroup, GroupError> {
    // Unit products: (sign, unit) for 1, i, j, k.
    const UNITS: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    tabulate(8, "Q8".into(), |x, y| {
        let (s, u) = UNITS[x % 4][y % 4];
        4 * ((x / 4 + y / 4 + s) % 2) + u
    })
}

fn check_degree(n: usize) -> Result<(), GroupError> {
    if (1..=5).contains(&n) {
        Ok(())
    } else {
        Err(GroupError::BadParameter(format!(
            "degree must be 1..=5, got {n}"
        )))
    }
}

pub fn symmetric(n: usize) -> Result<FiniteGroup, GroupError> {
    check_degree(n)?;
    let mut gens = Vec::new();
    if n >= 2 {
        let mut swap: Vec<usize> = (0..n).collect();
        swap.swap(0, 1);
        let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        gens.push(swap);
        gens.push(cycle);
    }
    Ok(from_permutations(n, &gens)?.with_name(format!("S{n}")))
}

pub fn alternating(n: usize) -> Result<FiniteGroup, GroupError> {
    check_degree(n)?;
    let gens: Vec<Vec<usize>> = (0..n.saturating_sub(2))
        .map(|i| {
            let mut p: Vec<usize> = (0..n).collect();
            p[i] = i + 1;
            p[i + 1] = i + 2;
            p[i + 2] = i;
            p
        })
        .collect();
    Ok(from_permutations(n, &gens)?.with_name(format!("A{n}")))
}
