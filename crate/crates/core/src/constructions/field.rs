//! Prime-power fields `GF(p^e)` as polynomials over `GF(p)` modulo a fixed
//! irreducible. Elements are indices `0..p^e` whose base-`p` digits are the
//! coefficients, constant term first.

use crate::error::GroupError;
use crate::numbers::require_prime;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteField {
    p: u64,
    e: u32,
    /// Monic modulus, `e + 1` coefficients, constant term first.
    modulus: Vec<u64>,
    generator: usize,
}

/// Built-in field with the default modulus for small orders.
pub fn gf(p: u64, e: u32) -> Result<FiniteField, GroupError> {
    require_prime(p)?;
    let modulus = match (p, e) {
        (_, 1) => vec![0, 1],
        (2, 2) => vec![1, 1, 1],
        (2, 3) => vec![1, 1, 0, 1],
        (2, 4) => vec![1, 1, 0, 0, 1],
        (3, 2) => vec![1, 0, 1],
        _ => {
            return Err(GroupError::BadParameter(format!(
                "no built-in modulus for GF({p}^{e}); supply one"
            )))
        }
    };
    gf_with_modulus(p, e, &modulus)
}

/// Field with a caller-supplied monic modulus of degree `e`.
pub fn gf_with_modulus(p: u64, e: u32, modulus: &[u64]) -> Result<FiniteField, GroupError> {
    require_prime(p)?;
    if e == 0 || modulus.len() != e as usize + 1 {
        return Err(GroupError::BadParameter(format!(
            "modulus must have {} coefficients",
            e as usize + 1
        )));
    }
    if modulus.iter().any(|&c| c >= p) || modulus[e as usize] != 1 {
        return Err(GroupError::BadParameter(
            "modulus must be monic with coefficients below p".into(),
        ));
    }
    let size = p
        .checked_pow(e)
        .filter(|&q| q <= 1 << 16)
        .ok_or_else(|| GroupError::BadParameter(format!("GF({p}^{e}) is too large")))?;
    if let Some(factor) = small_factor(p, modulus) {
        return Err(GroupError::NotIrreducible(format!(
            "divisible by the polynomial with coefficients {factor:?}"
        )));
    }
    let mut field = FiniteField {
        p,
        e,
        modulus: modulus.to_vec(),
        generator: 0,
    };
    field.generator = (1..size as usize)
        .find(|&g| field.multiplicative_order(g) == size as usize - 1)
        .ok_or_else(|| GroupError::NotIrreducible("no primitive element".into()))?;
    Ok(field)
}

impl FiniteField {
    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> usize {
        self.p.pow(self.e) as usize
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// An element of multiplicative order `q - 1`.
    pub fn generator(&self) -> usize {
        self.generator
    }

    pub fn coefficients(&self, x: usize) -> Vec<u64> {
        let mut x = x as u64;
        (0..self.e)
            .map(|_| {
                let c = x % self.p;
                x /= self.p;
                c
            })
            .collect()
    }

    pub fn from_coefficients(&self, coeffs: &[u64]) -> usize {
        coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * self.p + c % self.p) as usize
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.coefficients(a), self.coefficients(b));
        let sum: Vec<u64> = x.iter().zip(&y).map(|(u, v)| (u + v) % self.p).collect();
        self.from_coefficients(&sum)
    }

    pub fn neg(&self, a: usize) -> usize {
        let x: Vec<u64> = self
            .coefficients(a)
            .iter()
            .map(|&c| (self.p - c) % self.p)
            .collect();
        self.from_coefficients(&x)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.coefficients(a), self.coefficients(b));
        let mut prod = vec![0u64; 2 * self.e as usize];
        for (i, &u) in x.iter().enumerate() {
            for (j, &v) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + u * v) % self.p;
            }
        }
        let rem = poly_rem(self.p, &prod, &self.modulus);
        self.from_coefficients(&rem[..self.e as usize])
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, _| self.mul(acc, a))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: usize) -> Option<usize> {
        if a == 0 {
            return None;
        }
        (1..self.order()).find(|&b| self.mul(a, b) == 1)
    }

    fn multiplicative_order(&self, a: usize) -> usize {
        let mut acc = a;
        let mut k = 1;
        while acc != 1 {
            acc = self.mul(acc, a);
            k += 1;
            if k > self.order() {
                return 0;
            }
        }
        k
    }
}

/// Remainder of `a` modulo the monic `m`, padded to `deg m` coefficients.
fn poly_rem(p: u64, a: &[u64], m: &[u64]) -> Vec<u64> {
    let d = m.len() - 1;
    let mut r = a.to_vec();
    if r.len() < d {
        r.resize(d, 0);
    }
    for i in (d..r.len()).rev() {
        let c = r[i];
        if c == 0 {
            continue;
        }
        for (j, &mj) in m.iter().enumerate() {
            let k = i - d + j;
            r[k] = (r[k] + p - c * mj % p) % p;
        }
    }
    r.truncate(d);
    r
}

/// A monic factor of degree `1..=deg/2`, found by exhaustive division.
fn small_factor(p: u64, m: &[u64]) -> Option<Vec<u64>> {
    let deg = m.len() - 1;
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for low in 0..count {
            let mut f: Vec<u64> = (0..d)
                .scan(low, |x, _| {
                    let c = *x % p;
                    *x /= p;
                    Some(c)
                })
                .collect();
            f.push(1);
            if poly_rem(p, m, &f).iter().all(|&c| c == 0) {
                return Some(f);
            }
        }
    }
    None
}
