//! Upper bounds on `|G/Z(G)|` as functions of `n = |Cent(G)|`.
//!
//! The exponential term `2 (n-4)^{log2(n-4)}` is compared through logarithms:
//! `q <= 2 m^{log2 m}` iff `log2(q) - 1 <= (log2 m)^2`. When `m` is a power
//! of two the comparison is exact in integers; otherwise any comparison
//! whose two sides agree to within a relative `1e-9` is reported as
//! [`Verdict::Indeterminate`].

use num_bigint::BigUint;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::AnalyticsError;
use crate::numbers::gcd;

/// Relative guard band for floating-point bound comparisons.
pub const RELATIVE_GUARD: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Violated,
    Indeterminate,
}

impl Verdict {
    fn from_bool(b: bool) -> Self {
        if b {
            Verdict::Holds
        } else {
            Verdict::Violated
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundFlags {
    /// `q <= (n-2)^2`.
    pub f_bound: bool,
    /// `q <= max((n-2)^2, 2(n-4)^{log2(n-4)})`.
    pub general: Verdict,
    /// `q <= 2(n-4)^{log2(n-4)}`.
    pub exponential: Verdict,
    /// `q <= max((n-3)^2, 2(n-4)^{log2(n-4)})`.
    pub non_f: Verdict,
    /// `q < (n-1)!`.
    pub factorial: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: u64,
    pub q_order: u64,
    /// `(n-2)^2`.
    pub bound_f: u64,
    /// `(n-3)^2`.
    pub bound_non_f: u64,
    /// `2(n-4)^{log2(n-4)}`; absent for `n = 4`.
    pub exponential_term: Option<f64>,
    /// `max((n-2)^2, 2(n-4)^{log2(n-4)})`.
    pub bound_general: f64,
    /// `(n-1)!`.
    #[serde(serialize_with = "big_to_str", deserialize_with = "big_from_str")]
    pub factorial_bound: BigUint,
    pub satisfied: BoundFlags,
}

fn big_to_str<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn big_from_str<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
    let s = String::deserialize(d)?;
    s.parse().map_err(serde::de::Error::custom)
}

/// `2 m^{log2 m}` for `m = n - 4 >= 1`.
pub fn exponential_term(n: u64) -> Option<f64> {
    let m = n.checked_sub(4).filter(|&m| m >= 1)? as f64;
    Some(2.0 * m.powf(m.log2()))
}

/// Decides `q <= 2(n-4)^{log2(n-4)}`.
pub fn exponential_bound_holds(n: u64, q: u64) -> Verdict {
    let Some(m) = n.checked_sub(4).filter(|&m| m >= 1) else {
        return Verdict::Violated;
    };
    if m.is_power_of_two() {
        let k = m.trailing_zeros() as u64;
        let bound = BigUint::from(1u8) << (k * k + 1);
        return Verdict::from_bool(BigUint::from(q) <= bound);
    }
    let lhs = (q.max(1) as f64).log2() - 1.0;
    let rhs = (m as f64).log2().powi(2);
    let scale = lhs.abs().max(rhs.abs()).max(1.0);
    if (rhs - lhs).abs() <= RELATIVE_GUARD * scale {
        Verdict::Indeterminate
    } else {
        Verdict::from_bool(lhs < rhs)
    }
}

/// `q <= max(square, exponential term)`.
fn max_bound_holds(square: u64, n: u64, q: u64) -> Verdict {
    if q <= square {
        Verdict::Holds
    } else {
        exponential_bound_holds(n, q)
    }
}

pub fn factorial(k: u64) -> BigUint {
    (1..=k).fold(BigUint::from(1u8), |acc, i| acc * i)
}

pub fn bounds(n: u64, q_order: u64) -> Result<BoundReport, AnalyticsError> {
    if n < 4 {
        return Err(AnalyticsError::BadN(n));
    }
    let bound_f = (n - 2).pow(2);
    let bound_non_f = (n - 3).pow(2);
    let exp = exponential_term(n);
    let factorial_bound = factorial(n - 1);
    let satisfied = BoundFlags {
        f_bound: q_order <= bound_f,
        general: max_bound_holds(bound_f, n, q_order),
        exponential: exponential_bound_holds(n, q_order),
        non_f: max_bound_holds(bound_non_f, n, q_order),
        factorial: BigUint::from(q_order) < factorial_bound,
    };
    Ok(BoundReport {
        n,
        q_order,
        bound_f,
        bound_non_f,
        exponential_term: exp,
        bound_general: exp.map_or(bound_f as f64, |e| e.max(bound_f as f64)),
        factorial_bound,
        satisfied,
    })
}

/// `gcd(n - 2, |G/Z(G)|) != 1`.
pub fn gcd_condition(n: u64, q_order: u64) -> bool {
    gcd(n.saturating_sub(2), q_order) != 1
}
