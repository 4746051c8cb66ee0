//! Group specifications: `builtin:<family>:<args>`, `cayley:<path>`,
//! `perm:<path>`, and products of those joined by `*`.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use super::{load_cayley, load_permutations, LoadError};
use crate::constructions::{
    alternating, cyclic, dihedral, elementary_abelian, extraspecial2, frobenius_cq_cn, gf,
    heisenberg, quaternion8, symmetric, Variant,
};
use crate::error::GroupError;
use crate::group::FiniteGroup;
use crate::numbers::is_prime;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpecError {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
}

/// A built-in family with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Builtin {
    Cyclic(usize),
    ElementaryAbelian {
        p: u64,
        k: u32,
    },
    /// Parameter is the group order `2n`.
    Dihedral(usize),
    Quaternion8,
    Symmetric(usize),
    Alternating(usize),
    Extraspecial2 {
        a: u32,
        variant: Variant,
    },
    Heisenberg {
        p: u64,
        e: u32,
    },
    Frobenius {
        q: u64,
        n: u64,
        r: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Builtin(Builtin),
    Cayley(PathBuf),
    Perm(PathBuf),
    /// Direct product of the factors, left to right.
    Product(Vec<GroupSpec>),
}

pub const FAMILIES: &[&str] = &[
    "cyclic",
    "elementary_abelian",
    "dihedral",
    "quaternion8",
    "symmetric",
    "alternating",
    "extraspecial2",
    "heisenberg",
    "frobenius",
];

pub fn parse_spec(text: &str) -> Result<GroupSpec, SpecError> {
    let mut factors = Vec::new();
    let mut offset = 0;
    for part in text.split('*') {
        let lead = part.len() - part.trim_start().len();
        factors.push(parse_term(part.trim(), offset + lead)?);
        offset += part.len() + 1;
    }
    if factors.len() == 1 {
        Ok(factors.pop().expect("one factor"))
    } else {
        Ok(GroupSpec::Product(factors))
    }
}

fn err<T>(position: usize, message: impl Into<String>) -> Result<T, SpecError> {
    Err(SpecError::Parse {
        position,
        message: message.into(),
    })
}

fn parse_term(term: &str, start: usize) -> Result<GroupSpec, SpecError> {
    let Some((scheme, rest)) = term.split_once(':') else {
        return err(start, "expected <scheme>:<payload>");
    };
    let payload_at = start + scheme.len() + 1;
    match scheme {
        "builtin" => parse_builtin(rest, payload_at).map(GroupSpec::Builtin),
        "cayley" | "perm" if rest.is_empty() => err(payload_at, "missing path"),
        "cayley" => Ok(GroupSpec::Cayley(PathBuf::from(rest))),
        "perm" => Ok(GroupSpec::Perm(PathBuf::from(rest))),
        _ => err(start, format!("unknown scheme {scheme:?}")),
    }
}

struct Args<'a> {
    items: Vec<(usize, &'a str)>,
    next: usize,
    end: usize,
}

impl<'a> Args<'a> {
    fn new(text: &'a str, start: usize) -> Self {
        let mut items = Vec::new();
        let mut pos = start;
        for piece in text.split(':') {
            items.push((pos, piece));
            pos += piece.len() + 1;
        }
        Args {
            items,
            next: 1,
            end: start + text.len(),
        }
    }

    fn family(&self) -> (usize, &'a str) {
        self.items[0]
    }

    fn raw(&mut self, what: &str) -> Result<(usize, &'a str), SpecError> {
        let Some(&item) = self.items.get(self.next) else {
            return err(self.end, format!("missing argument {what}"));
        };
        self.next += 1;
        Ok(item)
    }

    fn number<T: FromStr>(&mut self, what: &str) -> Result<(usize, T), SpecError> {
        let (pos, s) = self.raw(what)?;
        match s.parse() {
            Ok(v) => Ok((pos, v)),
            Err(_) => err(
                pos,
                format!("{what} must be a non-negative integer, got {s:?}"),
            ),
        }
    }

    fn finish(&self) -> Result<(), SpecError> {
        match self.items.get(self.next) {
            Some(&(pos, _)) => err(pos, "too many arguments"),
            None => Ok(()),
        }
    }
}

fn parse_builtin(text: &str, start: usize) -> Result<Builtin, SpecError> {
    let mut args = Args::new(text, start);
    let (fam_at, family) = args.family();
    let check = |ok: bool, pos: usize, msg: &str| if ok { Ok(()) } else { err(pos, msg) };
    let spec = match family {
        "cyclic" => {
            let (pos, n) = args.number::<usize>("n")?;
            check(
                (1..=4096).contains(&n),
                pos,
                "cyclic order must be 1..=4096",
            )?;
            Builtin::Cyclic(n)
        }
        "elementary_abelian" => {
            let (pp, p) = args.number::<u64>("p")?;
            check(is_prime(p), pp, "p must be prime")?;
            let (pk, k) = args.number::<u32>("k")?;
            let fits = p.checked_pow(k).is_some_and(|o| o <= 4096);
            check(fits, pk, "p^k must be at most 4096")?;
            Builtin::ElementaryAbelian { p, k }
        }
        "dihedral" => {
            let (pos, two_n) = args.number::<usize>("order")?;
            check(
                two_n >= 6 && two_n % 2 == 0 && two_n <= 4096,
                pos,
                "dihedral order must be even, at least 6 and at most 4096",
            )?;
            Builtin::Dihedral(two_n)
        }
        "quaternion8" | "q8" => Builtin::Quaternion8,
        "symmetric" | "alternating" => {
            let (pos, n) = args.number::<usize>("degree")?;
            check((1..=5).contains(&n), pos, "degree must be 1..=5")?;
            if family == "symmetric" {
                Builtin::Symmetric(n)
            } else {
                Builtin::Alternating(n)
            }
        }
        "extraspecial2" => {
            let (pa, a) = args.number::<u32>("a")?;
            check((1..=4).contains(&a), pa, "a must be 1..=4")?;
            let (pv, v) = args.raw("variant")?;
            let Ok(variant) = v.parse::<Variant>() else {
                return err(pv, "variant must be plus or minus");
            };
            Builtin::Extraspecial2 { a, variant }
        }
        "heisenberg" => {
            let (pp, p) = args.number::<u64>("p")?;
            check(is_prime(p), pp, "p must be prime")?;
            let (pe, e) = args.number::<u32>("e")?;
            let q = p.checked_pow(e).unwrap_or(u64::MAX);
            check(e >= 1 && q <= 10, pe, "field order p^e must be at most 10")?;
            Builtin::Heisenberg { p, e }
        }
        "frobenius" => {
            let (pq, q) = args.number::<u64>("q")?;
            check(
                is_prime(q) && q <= 1021,
                pq,
                "q must be a prime at most 1021",
            )?;
            let (pn, n) = args.number::<u64>("n")?;
            check(
                n >= 2 && (q - 1) % n == 0,
                pn,
                "n must be at least 2 and divide q - 1",
            )?;
            let (_, r) = args.number::<u64>("r")?;
            Builtin::Frobenius { q, n, r }
        }
        other => {
            if other.is_empty() {
                return err(fam_at, "missing family");
            }
            return Err(SpecError::UnknownFamily(other.to_string()));
        }
    };
    args.finish()?;
    Ok(spec)
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Builtin::Cyclic(n) => write!(f, "builtin:cyclic:{n}"),
            Builtin::ElementaryAbelian { p, k } => write!(f, "builtin:elementary_abelian:{p}:{k}"),
            Builtin::Dihedral(n) => write!(f, "builtin:dihedral:{n}"),
            Builtin::Quaternion8 => write!(f, "builtin:quaternion8"),
            Builtin::Symmetric(n) => write!(f, "builtin:symmetric:{n}"),
            Builtin::Alternating(n) => write!(f, "builtin:alternating:{n}"),
            Builtin::Extraspecial2 { a, variant } => {
                write!(f, "builtin:extraspecial2:{a}:{variant}")
            }
            Builtin::Heisenberg { p, e } => write!(f, "builtin:heisenberg:{p}:{e}"),
            Builtin::Frobenius { q, n, r } => write!(f, "builtin:frobenius:{q}:{n}:{r}"),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Builtin(b) => b.fmt(f),
            GroupSpec::Cayley(p) => write!(f, "cayley:{}", p.display()),
            GroupSpec::Perm(p) => write!(f, "perm:{}", p.display()),
            GroupSpec::Product(parts) => {
                for (i, part) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" * ")?;
                    }
                    part.fmt(f)?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for GroupSpec {
    type Err = SpecError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_spec(s)
    }
}

impl Builtin {
    pub fn build(&self) -> Result<FiniteGroup, GroupError> {
        match *self {
            Builtin::Cyclic(n) => cyclic(n),
            Builtin::ElementaryAbelian { p, k } => elementary_abelian(p, k),
            Builtin::Dihedral(n) => dihedral(n),
            Builtin::Quaternion8 => quaternion8(),
            Builtin::Symmetric(n) => symmetric(n),
            Builtin::Alternating(n) => alternating(n),
            Builtin::Extraspecial2 { a, variant } => extraspecial2(a, variant),
            Builtin::Heisenberg { p, e } => heisenberg(&gf(p, e)?),
            Builtin::Frobenius { q, n, r } => frobenius_cq_cn(q, n, r),
        }
    }
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup, LoadError> {
        match self {
            GroupSpec::Builtin(b) => Ok(b.build()?),
            GroupSpec::Cayley(path) => load_cayley(path),
            GroupSpec::Perm(path) => load_permutations(path),
            GroupSpec::Product(parts) => {
                let mut groups = parts.iter().map(GroupSpec::build);
                let first = groups.next().expect("products have factors")?;
                groups.try_fold(first, |acc, g| {
                    let g = g?;
                    if acc.order().saturating_mul(g.order()) > super::MAX_TABLE_ORDER {
                        return Err(LoadError::Group(GroupError::BadParameter(format!(
                            "product order exceeds {}",
                            super::MAX_TABLE_ORDER
                        ))));
                    }
                    Ok(FiniteGroup::direct_product(&acc, &g))
                })
            }
        }
    }
}
