//! The check registry. Each check evaluates one statement about
//! centralizers on a single group and reports measured values; failures
//! carry the elements or numbers that contradict the statement.

use fixedbitset::FixedBitSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use super::families::{ca_census_family, f_census_family, frobenius_prime_kernel, is_s3};
use super::VerifyError;
use crate::analytics::{
    f_group_violation, gcd_condition, is_abelian_subgroup, CentralizerProfile, GroupAnalysis,
    Verdict,
};
use crate::constructions::elementary_abelian;
use crate::error::AnalyticsError;
use crate::group::{isomorphic, FiniteGroup};
use crate::numbers::{gcd, largest_prime_divisor, prime_power};

pub type Details = Map<String, Value>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skip,
    Indeterminate,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check_id: String,
    pub group_name: String,
    pub status: Status,
    /// Why a check was skipped or errored.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub details: Details,
}

/// Quantification settings for element-pair checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Groups up to this order are checked on every pair.
    pub exhaustive_max_order: usize,
    /// Pairs drawn per group above the exhaustive threshold.
    pub sample_pairs: usize,
    pub seed: u64,
}

pub const DEFAULT_SEED: u64 = 0x5EED;

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            exhaustive_max_order: 64,
            sample_pairs: 256,
            seed: DEFAULT_SEED,
        }
    }
}

pub struct CheckDef {
    pub id: &'static str,
    pub statement: &'static str,
    run: fn(&Ctx<'_>) -> Result<Outcome, AnalyticsError>,
}

macro_rules! registry {
    ($($id:literal => $f:ident: $statement:literal,)*) => {
        pub const CHECKS: &[CheckDef] = &[
            $(CheckDef { id: $id, statement: $statement, run: $f },)*
        ];
    };
}

registry! {
    "np1" => np1: "C(x) ⊆ C(y) iff Z(y) ⊆ Z(x)",
    "co1" => co1: "y ∈ Z(x) iff Z(y) ⊆ Z(x)",
    "npcor1" => npcor1: "a centralizer of prime order lies in no larger proper centralizer",
    "np155" => np155: "|C(x)/Z| ≤ |C_{G/Z}(xZ)| ≤ |C(x)| for non-central x",
    "zclass1" => zclass1: "g⁻¹Z(x)g = Z(g⁻¹xg) for non-central x",
    "zclass5" => zclass5: "F-group iff {Z(x_i)/Z} is a normal partition of G/Z",
    "1np" => gcd_np: "F-group implies gcd(n-2, |G/Z|) ≠ 1",
    "np22" => np22: "nilpotent F-group with |G/Z| = p^k implies p | n-2",
    "np2" => np2: "conjugate type (p^k, 1) implies p | n-2",
    "bc1a" => bc1a: "F-group implies |G/Z| ≤ (n-2)², strictly when every |Z(x)/Z|² < |G/Z|",
    "bc1b" => bc1b: "non-F-group implies |G/Z| ≤ max((n-3)², 2(n-4)^log2(n-4))",
    "1sb" => sb_general: "|G/Z| ≤ max((n-2)², 2(n-4)^log2(n-4))",
    "sb1" => sb1: "n > 11 implies |G/Z| ≤ 2(n-4)^log2(n-4)",
    "bbc" => bbc: "|G/Z| < (n-1)!",
    "xx" => xx: "F-group implies |G/Z| ≤ (n-2)² ≤ |G|²/4",
    "5sb" => sb5: "conjugate type (p, 1): n-2 = p iff G/Z ≅ C_p × C_p",
    "52sb" => sb52: "conjugate type (p², 1): n-2 = p² iff G/Z ≅ C_p⁴",
    "np2b" => np2b: "conjugate type (p, 1): |G/Z| ≤ (n-2)², equality iff G/Z ≅ C_p × C_p",
    "np2a" => np2a: "conjugate type (p², 1): |G/Z| ≤ (n-2)², equality iff G/Z ≅ C_p⁴",
    "semi" => semi: "semi-extraspecial p-group implies p | n-2 and |G/Z| ≤ (n-2)²",
    "bbu" => bbu: "ultraspecial of order p⁶: the n-1 proper centralizers are abelian, cover G, and |G/Z| = (n-2)²",
    "np12a" => np12a: "trivial center implies n ≥ q+2 (q the largest prime divisor of |G|), equality iff G = C_q ⋊ C_m is Frobenius",
    "np12b" => np12b: "trivial center implies n ≤ |G|-1, equality iff G ≅ S3",
    "t1" => t1: "non-trivial center implies n ≤ |G|/2, equality iff G is an extraspecial 2-group",
    "thm1" => thm1: "F-group with n ≥ |G|/2 iff G is A4, an odd dihedral group or an extraspecial 2-group",
    "ccor1" => ccor1: "CA-group with n ≥ |G|/2 iff G is A4, Q8, D8 or an odd dihedral group",
    "cg118" => cg118: "G/Z perfect implies G'Z = G and n(G) = n(G')",
    "za1" => za1: "p-group of type (p^k, 1) with |G/Z| > p^2k has only non-abelian proper centralizers",
    "tom11" => tom11: "n ≤ 11 implies |G/Z| ≤ (n-2)²",
}

pub fn check_ids() -> impl Iterator<Item = &'static str> {
    CHECKS.iter().map(|c| c.id)
}

pub fn find_check(id: &str) -> Result<&'static CheckDef, VerifyError> {
    CHECKS
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| VerifyError::UnknownCheckId(id.to_string()))
}

pub fn run_check(
    id: &str,
    analysis: &GroupAnalysis,
    config: &VerifyConfig,
) -> Result<CheckResult, VerifyError> {
    Ok(find_check(id)?.run(analysis, config))
}

impl CheckDef {
    pub fn run(&self, analysis: &GroupAnalysis, config: &VerifyConfig) -> CheckResult {
        let outcome = if analysis.is_abelian() {
            Outcome::skip("abelian group: Cent(G) = {G}")
        } else {
            let ctx = Ctx {
                a: analysis,
                cfg: config,
            };
            (self.run)(&ctx).unwrap_or_else(|e| Outcome {
                status: Status::Error,
                reason: Some(e.to_string()),
                details: Details::new(),
            })
        };
        CheckResult {
            check_id: self.id.to_string(),
            group_name: analysis.group().name().to_string(),
            status: outcome.status,
            reason: outcome.reason,
            details: outcome.details,
        }
    }
}

struct Outcome {
    status: Status,
    reason: Option<String>,
    details: Details,
}

fn obj(v: Value) -> Details {
    match v {
        Value::Object(m) => m,
        other => Details::from_iter([("value".to_string(), other)]),
    }
}

impl Outcome {
    fn new(ok: bool, details: Value) -> Self {
        Outcome {
            status: if ok { Status::Pass } else { Status::Fail },
            reason: None,
            details: obj(details),
        }
    }

    fn pass(details: Value) -> Self {
        Self::new(true, details)
    }

    fn fail(details: Value) -> Self {
        Self::new(false, details)
    }

    fn verdict(v: Verdict, details: Value) -> Self {
        let status = match v {
            Verdict::Holds => Status::Pass,
            Verdict::Violated => Status::Fail,
            Verdict::Indeterminate => Status::Indeterminate,
        };
        Outcome {
            status,
            reason: None,
            details: obj(details),
        }
    }

    fn skip(reason: impl Into<String>) -> Self {
        Outcome {
            status: Status::Skip,
            reason: Some(reason.into()),
            details: Details::new(),
        }
    }

    fn with(mut self, key: &str, value: Value) -> Self {
        self.details.insert(key.to_string(), value);
        self
    }
}

const CATALOG_RELATIVE: &str =
    "classification evaluated on this group only; the suite covers the catalog, not all finite groups";

struct Ctx<'a> {
    a: &'a GroupAnalysis,
    cfg: &'a VerifyConfig,
}

impl Ctx<'_> {
    fn g(&self) -> &FiniteGroup {
        self.a.group()
    }

    fn prof(&self) -> Result<&CentralizerProfile, AnalyticsError> {
        self.a.profile()
    }

    fn n(&self) -> Result<u64, AnalyticsError> {
        Ok(self.a.n()? as u64)
    }

    fn q(&self) -> u64 {
        self.a.quotient_order()
    }

    fn order(&self) -> u64 {
        self.g().order() as u64
    }

    fn non_central(&self) -> Vec<usize> {
        let z = self.a.center();
        self.g().elements().filter(|&x| !z.contains(x)).collect()
    }

    /// Every pair from `xs × ys` for small groups, otherwise a seeded sample.
    fn pairs(&self, xs: &[usize], ys: &[usize]) -> (Vec<(usize, usize)>, Value) {
        if self.g().order() <= self.cfg.exhaustive_max_order {
            let all: Vec<_> = xs
                .iter()
                .flat_map(|&x| ys.iter().map(move |&y| (x, y)))
                .collect();
            let q = json!({ "mode": "exhaustive", "pairs": all.len() });
            return (all, q);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.cfg.seed);
        let sample = (0..self.cfg.sample_pairs)
            .map(|_| {
                (
                    xs[rng.gen_range(0..xs.len())],
                    ys[rng.gen_range(0..ys.len())],
                )
            })
            .collect();
        let q = json!({ "mode": "sampled", "pairs": self.cfg.sample_pairs, "seed": self.cfg.seed });
        (sample, q)
    }

    fn measured(&self) -> Result<Value, AnalyticsError> {
        Ok(json!({
            "n": self.n()?,
            "order": self.order(),
            "center_order": self.a.center().order(),
            "quotient_order": self.q(),
        }))
    }

    /// `(p, k)` for conjugate type `(p^k, 1)`.
    fn type_prime_power(&self) -> Result<Option<(u64, u32)>, AnalyticsError> {
        let t = self.a.conjugate_type()?;
        Ok(match (t.is_uniform, t.p, t.k) {
            (true, Some(p), Some(k)) => Some((p, k)),
            _ => None,
        })
    }

    /// `G/Z ≅ C_p^k`.
    fn quotient_is_elementary(&self, p: u64, k: u32) -> Result<bool, AnalyticsError> {
        if Some(self.q()) != p.checked_pow(k) {
            return Ok(false);
        }
        let target = elementary_abelian(p, k)?;
        Ok(isomorphic(&self.a.central_quotient().quotient, &target)?)
    }
}

fn merge(mut base: Value, extra: Value) -> Value {
    if let (Value::Object(b), Value::Object(e)) = (&mut base, extra) {
        b.extend(e);
    }
    base
}

fn np1(c: &Ctx<'_>) -> Result<Outcome, AnalyticsError> {
    let p = c.prof()?;
    let all: Vec<usize> = c.g().elements().collect();
    let (pairs, quant) = c.pairs(&all, &all);
    for (x, y) in pairs {
        let lhs = p.centralizer_of(x).is_subset_of(p.centralizer_of(y));
        let rhs = p.z_of(y).is_subset_of(p.z_of(x));
        if lhs != rhs {
            return Ok(Outcome::fail(json!({
                "x": x, "y": y,
                "c_x_subset_c_y": lhs, "z_y_subset_z_x": rhs,
                "quantification": quant,
            })));
        }
    }
    Ok(Outcome::pass(json!({ "quantification": quant })))
}

fn co1(c: &Ctx<'_>) -> Result<Outcome, AnalyticsError> {
    let p = c.prof()?;
    let all: Vec<usize> = c.g().elements().collect();
    let (pairs, quant) = c.pairs(&all, &all);
    for (x, y) in pairs {
        let lhs = p.z_of(x).contains(y);
        let rhs = p.z_of(y).is_subset_of(p.z_of(x));
        if lhs != rhs {
            return Ok(Outcome::fail(json!({
                "x": x, "y": y,
                "y_in_z_x": lhs, "z_y_subset_z_x": rhs,
                "quantification": quant,
            })));
        }
    }
    Ok(Outcome::pass(json!({ "quantification": quant })))
}

fn npcor1(c: &Ctx<'_>) -> Result<Outcome, AnalyticsError> {
    let cs = c.prof()?.proper_centralizers();
    let prime_order: Vec<usize> = (0..cs.len())
        .filter(|&i| prime_power(cs[i].order() as u64).is_some_and(|(_, k)| k == 1))
        .collect();
    if prime_order.is_empty() {
        return Ok(Outcome::skip("no centralizer has prime order"));
    }
    for &i in &prime_order {
        if let Some(j) = (0..cs.len()).find(|&j| cs[i].is_proper_subset_of(&cs[j])) {
            return Ok(Outcome::fail(json!({
                "centralizer": i, "order": cs[i].order(),
                "contained_in": j, "containing_order": cs[j].order(),
            })));
        }
    }
    Ok(Outcome::pass(
        json!({ "prime_order_centralizers": prime_order.len() }),
    ))
}

fn np155(c: &Ctx<'_>) -> Result<Outcome, AnalyticsError> {
    let xs = c.non_central();
    for &x in &xs {
        let s = c.a.quotient_centralizer_sandwich(x)?;
        if !s.holds() {
            return Ok(Outcome::fail(json!({
                "x": x, "lower": s.lower, "middle": s.middle, "upper": s.upper,
            })));
        }
    }
    Ok(Outcome::pass(json!({ "elements_checked": xs.len() })))
}

fn zclass1(c: &Ctx<'_>) -> Result<Outcome, AnalyticsError> {
    let p = c.prof()?;
    let g = c.g();
    let xs = c.non_central();
    let all: Vec<usize> = g.elements().collect();
    let (pairs, quant) = c.pairs(&xs, &all);
    for (x, h) in pairs {
        let lhs = g.conjugate_subgroup(p.z_of(x), h);
        let rhs = p.z_of(g.conjugate(x, h));
        if &lhs != rhs {
            return Ok(Outcome::fail(json!({
                "x": x, "g": h,
                "conjugated_z_x": lhs.elements(), "z_of_conjugate": rhs.elements(),
                "quantification": quant,
            })));
        }
    }
    Ok(Outcome::pass(json!({ "quantification": quant })))
}

fn zclass5(c: &Ctx<'_>) -> Result<Outcome, AnalyticsError> {
    let f = c.a.is_f_group()?;
    let part = c.a.central_partition()?;
    let ok = f == (part.is_partition && part.is_normal);
    let violation = f_group_violation(c.prof()?);
    Ok(Outcome::new(
        ok,
        json!({
            "f_group": f,
            "is_partition": part.is_partition,
            "is_normal": part.is_normal,
            "components": part.components.len(),
            "containment": violation,
            "partition_witness": part.witness,
        }),
    ))
}

fn gcd_np(c: &Ctx<'_>) -> Result<Outcome, AnalyticsError> {
    if !c.a.is_f_group()? {
        return Ok(Outcome::skip("not an F-group"));
    }
    let (n, q) = (c.n()?, c.q());
    Ok(Outcome::new(
        gcd_condition(n, q),
        merge(c.measured()?, json!({ "gcd": gcd(n - 2, q) })),
    ))
}

fn np22(c: &Ctx<'_>) -> Result<Outcome, AnalyticsError> {
    if !c.a.is_nilpotent() || !c.a.is_f_group()? {
        return Ok(Outcome::skip("not a nilpotent F-group"));
    }
    let n = c.n()?;
    let Some((p, k)) = prime_power(c.q()) else {
        return Ok(Outcome::fail(merge(
            c.measured()?,
            json!({ "problem": "|G/Z| is not a prime power" }),
        )));
    };
    Ok(Outcome::new(
        (n - 2) % p == 0,
        merge(c.measured()?, json!({ "p": p, "k": k })),
    ))
}

fn np2(c: &Ctx<'_>) -> Result<Outcome, AnalyticsError> {
    let t = c.a.conjugate_type()?;
    if !t.is_uniform {
        return Ok(Outcome::skip(
            "conjugate type is not (m, 1): centralizer indices differ",
        ));
    }
    let n = c.n()?;
    let Some(p) = t.p else {
        return Ok(Outcome::fail(merge(
            c.measured()?,
            json!({ "m": t.m, "problem": "m is not a prime power" }),
        )));
    };
    Ok(Outcome::new(
        (n - 2) % p == 0,
        merge(c.measured()?, json!({ "m": t.m, "p": p, "k": t.k })),
    ))
}

fn bc1a(c: &Ctx<'_>) -> Result<Outcome, AnalyticsError> {
    if !c.a.is_f_group()? {
        return Ok(Outcome::skip("not an F-group"));
    }
    let (n, q) = (c.n()?, c.q());
    let bound = (n - 2).pow(2);
    let z = c.a.center().order() as u64;
    let strict_applies = c
        .prof()?
        .centralizer_centers()
        .iter()
        .all(|zx| (zx.order() as u64 / z).pow(2) < q);
    let ok = q <= bound && (!strict_applies || q < bound);
    Ok(Outcome::new(
        ok,
        merge(
            c.measured()?,
            json!({ "bound": bound, "strict_clause_applies": strict_applies }),
        ),
    ))
}

fn bc1b(c: &Ctx<'_>) -> Result<Outcome, AnalyticsError> {
    if c.a.is_f_group()? {
        return Ok(Outcome::skip("is an F-group"));
    }
    let b = c.a.bounds()?;
    Ok(Outcome::verdict(
        b.satisfied.non_f,
        merge(
            c.measured()?,
            json!({ "bound_non_f": b.bound_non_f, "exponential_term": b.exponential_term }),
        ),
    ))
}

fn sb_general(c: &Ctx<'_>) -> Result<Outcome, AnalyticsError> {
    let b = c.a.bounds()?;
    Ok(Outcome::verdict(
        b.satisfied.general,
        merge(c.measured()?, json!({ "bound_general": b.bound_general })),
    ))
}

fn sb1(c: &Ctx<'_>) -> Result<Outcome, AnalyticsError> {
    let n = c.n()?;
    if n <= 11 {
        return Ok(Outcome::skip(format!("n = {n} is at most 11")));
    }
    let b = c.a.bounds()?;
    Ok(Outcome::verdict(
        b.satisfied.exponential,
        merge(
            c.measured()?,
            json!({ "exponential_term": b.exponential_term }),
        ),
    ))
}

fn bbc(c: &Ctx<'_>) -> Result<Outcome, AnalyticsError> {
    let b = c.a.bounds()?;
    Ok(Outcome::new(
        b.satisfied.factorial,
        merge(
            c.measured()?,
            json!({ "factorial_bound": b.factorial_bound.to_string() }),
        ),
    ))
}

fn xx(c: &Ctx<'_>) -> Result<Outcome, AnalyticsError> {
    if !c.a.is_f_group()? {
        return Ok(Outcome::skip("not an F-group"));
    }
    let (n, q, order) = (c.n()?, c.q(), c.order());
    let square = (n - 2).pow(2);
    // (n-2)^2 <= |G|^2/4  iff  4(n-2)^2 <= |G|^2
    let ok = q <= square && 4 * square <= order * order;
    Ok(Outcome::new(
        ok,
        merge(
            c.measured()?,
            json!({ "square": square, "order_squared_over_4": order * order / 4 }),
        ),
    ))
}

/// `n-2 = p^k` iff `G/Z ≅ C_p^{2k}` for conjugate type `(p^k, 1)`.
fn equality_iff_elementary(c: &Ctx<'_>, k_want: u32) -> Result<Outcome, AnalyticsError> {
    let Some((p, k)) = c.type_prime_power()?.filter(|&(_, k)| k == k_want) else {
        return Ok(Outcome::skip(format!(
            "conjugate type is not (p^{k_want}, 1) for a prime p"
        )));
    };
    let n = c.n()?;
    let lhs = n - 2 == p.pow(k);
    let rhs = c.quotient_is_elementary(p, 2 * k)?;
    Ok(Outcome::new(
        lhs == rhs,
        merge(
            c.measured()?,
            json!({ "p": p, "n_minus_2_is_p_power": lhs, "quotient_is_elementary": rhs }),
        ),
    ))
}

fn sb5(c: &Ctx<'_>) -> Result<Outcome, AnalyticsError> {
    equality_iff_elementary(c, 1)
}

fn sb52(c: &Ctx<'_>) -> Result<Outcome, AnalyticsError> {
    equality_iff_elementary(c, 2)
}

/// `|G/Z| ≤ (n-2)^2` with equality iff `G/Z ≅ C_p^{2k}`.
fn bound_iff_elementary(c: &Ctx<'_>, k_want: u32) -> Result<Outcome, AnalyticsError> {
    let Some((p, k)) = c.type_prime_power()?.filter(|&(_, k)| k == k_want) else {
        return Ok(Outcome::skip(format!(
            "conjugate type is not (p^{k_want}, 1) for a prime p"
        )));
    };
    let (n, q) = (c.n()?, c.q());
    let bound = (n - 2).pow(2);
    let elementary = c.quotient_is_elementary(p, 2 * k)?;
    Ok(Outcome::new(
        q <= bound && (q == bound) == elementary,
        merge(
            c.measured()?,
            json!({ "p": p, "bound": bound, "quotient_is_elementary": elementary }),
        ),
    ))
}

fn np2b(c: &Ctx<'_>) -> Result<Outcome, AnalyticsError> {
    bound_iff_elementary(c, 1)
}

fn np2a(c: &Ctx<'_>) -> Result<Outcome, AnalyticsError> {
    bound_iff_elementary(c, 2)
}

fn semi(c: &Ctx<'_>) -> Result<Outcome, AnalyticsError> {
    if !c.a.is_semi_extraspecial() {
        return Ok(Outcome::skip("not a semi-extraspecial p-group"));
    }
    let p = c
        .g()
        .p_group_prime()
        .expect("semi-extraspecial groups are p-groups");
    let (n, q) = (c.n()?, c.q());
    let bound = (n - 2).pow(2);
    Ok(Outcome::new(
        (n - 2) % p == 0 && q <= bound,
        merge(c.measured()?, json!({ "p": p, "bound": bound })),
    ))
}

fn bbu(c: &Ctx<'_>) -> Result<Outcome, AnalyticsError> {
    let p = c.g().p_group_prime();
    let order_p6 = p.is_some_and(|p| p.checked_pow(6) == Some(c.order()));
    if !order_p6 || !c.a.is_ultraspecial() {
        return Ok(Outcome::skip("not an ultraspecial group of order p^6"));
    }
    let g = c.g();
    let (n, q) = (c.n()?, c.q());
    let cs = c.prof()?.proper_centralizers();
    let non_abelian = cs.iter().position(|h| !is_abelian_subgroup(g, h));
    let mut covered = FixedBitSet::with_capacity(g.order());
    for h in cs {
        covered.union_with(h.members());
    }
    let uncovered = g.elements().find(|&x| !covered.contains(x));
    let covering = cs.len() as u64;
    Ok(Outcome::new(
        non_abelian.is_none() && uncovered.is_none() && q == (covering - 1).pow(2),
        merge(
            c.measured()?,
            json!({
                "abelian_cover_size": covering,
                "non_abelian_centralizer": non_abelian,
                "uncovered_element": uncovered,
                "cover_size_minus_1_squared": (covering - 1).pow(2),
                "n_minus_2_squared": (n - 2).pow(2),
            }),
        ),
    ))
}

fn np12a(c: &Ctx<'_>) -> Result<Outcome, AnalyticsError> {
    if c.a.center().order() != 1 {
        return Ok(Outcome::skip("center is non-trivial"));
    }
    let n = c.n()?;
    let q = largest_prime_divisor(c.order())?;
    let frobenius = frobenius_prime_kernel(c.g());
    let ok = n >= q + 2 && (n == q + 2) == frobenius.is_some();
    Ok(Outcome::new(
        ok,
        merge(
            c.measured()?,
            json!({
                "largest_prime": q,
                "frobenius_cq_cm": frobenius.map(|(q, m)| json!({ "q": q, "m": m })),
            }),
        ),
    )
    .with("scope", json!(CATALOG_RELATIVE)))
}

fn np12b(c: &Ctx<'_>) -> Result<Outcome, AnalyticsError> {
    if c.a.center().order() != 1 {
        return Ok(Outcome::skip("center is non-trivial"));
    }
    let n = c.n()?;
    let order = c.order();
    let s3 = is_s3(c.g());
    Ok(Outcome::new(
        n < order && (n == order - 1) == s3,
        merge(c.measured()?, json!({ "is_s3": s3 })),
    )
    .with("scope", json!(CATALOG_RELATIVE)))
}

fn t1(c: &Ctx<'_>) -> Result<Outcome, AnalyticsError> {
    if c.a.center().order() == 1 {
        return Ok(Outcome::skip("center is trivial"));
    }
    let (n, order) = (c.n()?, c.order());
    let extraspecial2 = c.g().p_group_prime() == Some(2) && c.a.is_extraspecial();
    Ok(Outcome::new(
        2 * n <= order && (2 * n == order) == extraspecial2,
        merge(
            c.measured()?,
            json!({ "extraspecial_2_group": extraspecial2 }),
        ),
    ))
}

fn thm1(c: &Ctx<'_>) -> Result<Outcome, AnalyticsError> {
    let (n, order) = (c.n()?, c.order());
    let f = c.a.is_f_group()?;
    let lhs = f && 2 * n >= order;
    let family = f_census_family(c.a);
    Ok(Outcome::new(
        lhs == family.is_some(),
        merge(
            c.measured()?,
            json!({ "f_group": f, "n_at_least_half": 2 * n >= order, "family": family }),
        ),
    )
    .with("scope", json!(CATALOG_RELATIVE)))
}

fn ccor1(c: &Ctx<'_>) -> Result<Outcome, AnalyticsError> {
    let (n, order) = (c.n()?, c.order());
    let ca = c.a.is_ca_group()?;
    let lhs = ca && 2 * n >= order;
    let family = ca_census_family(c.a);
    Ok(Outcome::new(
        lhs == family.is_some(),
        merge(
            c.measured()?,
            json!({ "ca_group": ca, "n_at_least_half": 2 * n >= order, "family": family }),
        ),
    )
    .with("scope", json!(CATALOG_RELATIVE)))
}

fn cg118(c: &Ctx<'_>) -> Result<Outcome, AnalyticsError> {
    match c.a.perfect_quotient_check() {
        Err(AnalyticsError::NotPerfectQuotient) => Ok(Outcome::skip("G/Z is not perfect")),
        Err(e) => Err(e),
        Ok(r) => Ok(Outcome::new(
            r.derived_center_spans && r.cent_count == r.derived_cent_count,
            json!(r),
        )),
    }
}

fn za1(c: &Ctx<'_>) -> Result<Outcome, AnalyticsError> {
    match c.a.nonabelian_centralizer_check() {
        Err(AnalyticsError::PreconditionNotMet(why)) => Ok(Outcome::skip(why)),
        Err(e) => Err(e),
        Ok(ok) => {
            let g = c.g();
            let abelian = c
                .prof()?
                .proper_centralizers()
                .iter()
                .position(|h| is_abelian_subgroup(g, h));
            Ok(Outcome::new(
                ok,
                merge(c.measured()?, json!({ "abelian_centralizer": abelian })),
            ))
        }
    }
}

fn tom11(c: &Ctx<'_>) -> Result<Outcome, AnalyticsError> {
    let n = c.n()?;
    if n > 11 {
        return Ok(Outcome::skip(format!("n = {n} exceeds 11")));
    }
    let bound = (n - 2).pow(2);
    Ok(Outcome::new(
        c.q() <= bound,
        merge(c.measured()?, json!({ "bound": bound })),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{dihedral, extraspecial2, frobenius_cq_cn, Variant};

    #[test]
    fn registry_matches_the_published_index() {
        let ids: Vec<&str> = check_ids().collect();
        assert_eq!(
            ids,
            [
                "np1", "co1", "npcor1", "np155", "zclass1", "zclass5", "1np", "np22", "np2",
                "bc1a", "bc1b", "1sb", "sb1", "bbc", "xx", "5sb", "52sb", "np2b", "np2a", "semi",
                "bbu", "np12a", "np12b", "t1", "thm1", "ccor1", "cg118", "za1", "tom11",
            ]
        );
    }

    #[test]
    fn unknown_id() {
        let a = GroupAnalysis::new(dihedral(6).unwrap());
        assert_eq!(
            run_check("nope", &a, &VerifyConfig::default()).unwrap_err(),
            VerifyError::UnknownCheckId("nope".into())
        );
    }

    #[test]
    fn documented_examples() {
        let cfg = VerifyConfig::default();
        let f = GroupAnalysis::new(frobenius_cq_cn(7, 3, 2).unwrap());
        let r = run_check("np12a", &f, &cfg).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.details["n"], json!(9));
        assert_eq!(r.details["largest_prime"], json!(7));

        let e = GroupAnalysis::new(extraspecial2(2, Variant::Minus).unwrap());
        let r = run_check("t1", &e, &cfg).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(
            (r.details["n"].clone(), r.details["order"].clone()),
            (json!(16), json!(32))
        );

        let d8 = GroupAnalysis::new(dihedral(8).unwrap());
        let r = run_check("za1", &d8, &cfg).unwrap();
        assert_eq!(r.status, Status::Skip);
        assert!(r.reason.unwrap().contains("not greater than"));
    }

    #[test]
    fn abelian_groups_skip_everything() {
        let a = GroupAnalysis::new(crate::constructions::cyclic(6).unwrap());
        for def in CHECKS {
            let r = def.run(&a, &VerifyConfig::default());
            assert_eq!(r.status, Status::Skip);
            assert!(r.reason.is_some());
        }
    }
}
