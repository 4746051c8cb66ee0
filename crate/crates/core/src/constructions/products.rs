//! Semidirect, Frobenius, central-product, extraspecial and Heisenberg
//! constructions.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use super::{cyclic, dihedral, quaternion8, FiniteField};
use crate::error::GroupError;
use crate::group::FiniteGroup;
use crate::numbers::{is_prime, multiplicative_order};

/// A complement acting on a kernel by automorphisms.
#[derive(Clone, Debug)]
pub struct ActionSpec {
    kernel: FiniteGroup,
    complement: FiniteGroup,
    action: Vec<Vec<usize>>,
}

impl ActionSpec {
    /// `action[h]` is the permutation of kernel indices induced by `h`.
    /// Checks that every image is an automorphism and that `h -> action[h]`
    /// is a homomorphism into `Aut(K)` (composition `(f g)(k) = f(g(k))`).
    pub fn new(
        kernel: FiniteGroup,
        complement: FiniteGroup,
        action: Vec<Vec<usize>>,
    ) -> Result<Self, GroupError> {
        let (nk, nh) = (kernel.order(), complement.order());
        if action.len() != nh {
            return Err(GroupError::NotAnAction(format!(
                "{} permutations for a complement of order {nh}",
                action.len()
            )));
        }
        for (h, perm) in action.iter().enumerate() {
            let mut seen = vec![false; nk];
            if perm.len() != nk
                || perm
                    .iter()
                    .any(|&k| k >= nk || std::mem::replace(&mut seen[k], true))
            {
                return Err(GroupError::NotAnAction(format!(
                    "image of complement element {h} is not a permutation of the kernel"
                )));
            }
            for a in kernel.elements() {
                for b in kernel.elements() {
                    if perm[kernel.mul(a, b)] != kernel.mul(perm[a], perm[b]) {
                        return Err(GroupError::NotAnAction(format!(
                            "image of {h} is not an automorphism: fails on ({a}, {b})"
                        )));
                    }
                }
            }
        }
        for h1 in complement.elements() {
            for h2 in complement.elements() {
                let lhs = &action[complement.mul(h1, h2)];
                if kernel
                    .elements()
                    .any(|k| lhs[k] != action[h1][action[h2][k]])
                {
                    return Err(GroupError::NotAnAction(format!(
                        "action is not a homomorphism on ({h1}, {h2})"
                    )));
                }
            }
        }
        Ok(ActionSpec {
            kernel,
            complement,
            action,
        })
    }

    pub fn kernel(&self) -> &FiniteGroup {
        &self.kernel
    }

    pub fn complement(&self) -> &FiniteGroup {
        &self.complement
    }

    pub fn action(&self, h: usize) -> &[usize] {
        &self.action[h]
    }
}

/// `K ⋊ H` on pairs `(k, h)` with index `k + |K| h` and product
/// `(k1, h1)(k2, h2) = (k1 · h1(k2), h1 h2)`.
pub fn semidirect(spec: &ActionSpec) -> Result<FiniteGroup, GroupError> {
    let (k, h) = (&spec.kernel, &spec.complement);
    let (nk, nh) = (k.order(), h.order());
    let order = nk * nh;
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        let (k1, h1) = (x % nk, x / nk);
        for y in 0..order {
            let (k2, h2) = (y % nk, y / nk);
            let kk = k.mul(k1, spec.action[h1][k2]);
            table.push((kk + nk * h.mul(h1, h2)) as u32);
        }
    }
    FiniteGroup::from_flat_table(order, table, format!("{} : {}", k.name(), h.name()))
}

/// Least `r` with multiplicative order exactly `n` modulo `q`.
pub fn least_frobenius_unit(q: u64, n: u64) -> Option<u64> {
    (2..q).find(|&r| multiplicative_order(r, q) == Some(n))
}

/// `C_q ⋊ C_n` where the generator of `C_n` acts by `x -> x^r`.
pub fn frobenius_cq_cn(q: u64, n: u64, r: u64) -> Result<FiniteGroup, GroupError> {
    if !is_prime(q) {
        return Err(GroupError::NotPrime(q));
    }
    if n < 2 || !(q - 1).is_multiple_of(n) {
        return Err(GroupError::BadParameter(format!(
            "n = {n} must be at least 2 and divide q - 1 = {}",
            q - 1
        )));
    }
    let actual = multiplicative_order(r, q).unwrap_or(0);
    if actual != n {
        return Err(GroupError::BadOrder {
            q,
            r,
            expected: n,
            actual,
        });
    }
    let (qs, ns) = (q as usize, n as usize);
    let kernel = cyclic(qs)?;
    let complement = cyclic(ns)?;
    let mut action = Vec::with_capacity(ns);
    let mut power = 1usize;
    for _ in 0..ns {
        action.push((0..qs).map(|x| x * power % qs).collect());
        power = power * r as usize % qs;
    }
    let spec = ActionSpec::new(kernel, complement, action)?;
    let g = semidirect(&spec)?.with_name(format!("C{q}:C{n}"));
    // Complement element (0, h) must not commute with kernel element (k, 0).
    for h in 1..ns {
        for k in 1..qs {
            if g.commute(h * qs, k) {
                return Err(GroupError::NotFrobenius(format!(
                    "complement element {h} fixes kernel element {k}"
                )));
            }
        }
    }
    Ok(g)
}

/// `(A × B) / {(z, iso(z)^-1)}` for an isomorphism `iso: Z(A) -> Z(B)`
/// given as `(a, b)` pairs.
pub fn central_product(
    a: &FiniteGroup,
    b: &FiniteGroup,
    iso: &[(usize, usize)],
) -> Result<FiniteGroup, GroupError> {
    let (za, zb) = (a.center(), b.center());
    let map: HashMap<usize, usize> = iso.iter().copied().collect();
    if map.len() != iso.len() || map.len() != za.order() || za.order() != zb.order() {
        return Err(GroupError::NotCentralIso(format!(
            "need a bijection between centers of orders {} and {}",
            za.order(),
            zb.order()
        )));
    }
    for (&x, &y) in &map {
        if !za.contains(x) || !zb.contains(y) {
            return Err(GroupError::NotCentralIso(format!(
                "({x}, {y}) is not central"
            )));
        }
    }
    let mut images: Vec<usize> = map.values().copied().collect();
    images.sort_unstable();
    images.dedup();
    if images.len() != map.len() {
        return Err(GroupError::NotCentralIso("not injective".into()));
    }
    for &x in za.elements() {
        for &y in za.elements() {
            if map[&a.mul(x, y)] != b.mul(map[&x], map[&y]) {
                return Err(GroupError::NotCentralIso(format!(
                    "not a homomorphism on ({x}, {y})"
                )));
            }
        }
    }
    let ab = FiniteGroup::direct_product(a, b);
    let nb = b.order();
    let glue: Vec<usize> = za
        .elements()
        .iter()
        .map(|&z| z * nb + b.inv(map[&z]))
        .collect();
    let n = ab.subgroup(&glue)?;
    let q = ab.quotient(&n)?;
    Ok(q.quotient.with_name(format!("{} o {}", a.name(), b.name())))
}

/// Central product identifying the unique nontrivial central elements of
/// two groups whose centers have order 2.
pub fn central_product_of_order_two_centers(
    a: &FiniteGroup,
    b: &FiniteGroup,
) -> Result<FiniteGroup, GroupError> {
    let nontrivial = |g: &FiniteGroup| {
        let z = g.center();
        if z.order() != 2 {
            return Err(GroupError::NotCentralIso(format!(
                "{} has center of order {}",
                g.name(),
                z.order()
            )));
        }
        Ok(z.elements()
            .iter()
            .copied()
            .find(|&x| x != g.identity())
            .expect("order 2"))
    };
    let iso = [
        (a.identity(), b.identity()),
        (nontrivial(a)?, nontrivial(b)?),
    ];
    central_product(a, b, &iso)
}

/// The two isomorphism types of extraspecial 2-groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Plus,
    Minus,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Plus => "plus",
            Variant::Minus => "minus",
        })
    }
}

impl FromStr for Variant {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "plus" | "+" => Ok(Variant::Plus),
            "minus" | "-" => Ok(Variant::Minus),
            _ => Err(GroupError::BadParameter(format!("unknown variant {s:?}"))),
        }
    }
}

/// Extraspecial group of order `2^(2a+1)`: `a` copies of `D8` (plus) or
/// `a - 1` copies of `D8` and one `Q8` (minus), glued along the centers.
pub fn extraspecial2(a: u32, variant: Variant) -> Result<FiniteGroup, GroupError> {
    if !(1..=4).contains(&a) {
        return Err(GroupError::BadParameter(format!(
            "a must be 1..=4, got {a}"
        )));
    }
    let d8 = dihedral(8)?;
    let last = match variant {
        Variant::Plus => d8.clone(),
        Variant::Minus => quaternion8()?,
    };
    let mut g = last;
    for _ in 1..a {
        g = central_product_of_order_two_centers(&d8, &g)?;
    }
    Ok(g.with_name(format!(
        "E2^{}{}",
        2 * a + 1,
        if variant == Variant::Plus { "+" } else { "-" }
    )))
}

/// Upper unitriangular 3×3 matrices over `field`. The matrix with
/// off-diagonal entries `a` (1,2), `b` (2,3), `c` (1,3) has index
/// `a + q b + q^2 c`; `(a, b, c)(a', b', c') = (a + a', b + b', c + c' + a b')`.
pub fn heisenberg(field: &FiniteField) -> Result<FiniteGroup, GroupError> {
    let q = field.order();
    if q.pow(3) > 1024 {
        return Err(GroupError::BadParameter(format!(
            "Heisenberg group over GF({q}) is too large"
        )));
    }
    let order = q * q * q;
    let split = |x: usize| (x % q, (x / q) % q, x / (q * q));
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        let (a, b, c) = split(x);
        for y in 0..order {
            let (a2, b2, c2) = split(y);
            let corner = field.add(field.add(c, c2), field.mul(a, b2));
            table.push((field.add(a, a2) + q * field.add(b, b2) + q * q * corner) as u32);
        }
    }
    let name = format!("Heis(GF({q}))");
    if order > 512 {
        // Elementary matrices over an additive basis of the field.
        let basis: Vec<usize> = (0..field.degree())
            .map(|i| field.characteristic().pow(i) as usize)
            .collect();
        let gens: Vec<usize> = basis.iter().flat_map(|&u| [u, q * u]).collect();
        FiniteGroup::from_flat_table_with_generators(order, table, name, &gens)
    } else {
        FiniteGroup::from_flat_table(order, table, name)
    }
}
