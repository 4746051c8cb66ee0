use serde::{Deserialize, Serialize};

use crate::group::FiniteGroup;
use crate::io::{parse_spec, LoadError};

/// Values a catalog entry is known to have.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    /// `|Cent(G)|`.
    pub n: Option<usize>,
    /// Common centralizer index when the conjugate type is uniform.
    pub m: Option<u64>,
    pub f_group: Option<bool>,
    pub ca_group: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub builder_spec: String,
    pub expected: Expected,
}

impl CatalogEntry {
    pub fn new(name: impl Into<String>, builder_spec: impl Into<String>) -> Self {
        CatalogEntry {
            name: name.into(),
            builder_spec: builder_spec.into(),
            expected: Expected::default(),
        }
    }

    fn n(mut self, n: usize) -> Self {
        self.expected.n = Some(n);
        self
    }

    fn m(mut self, m: u64) -> Self {
        self.expected.m = Some(m);
        self
    }

    fn flags(mut self, f_group: bool, ca_group: bool) -> Self {
        self.expected.f_group = Some(f_group);
        self.expected.ca_group = Some(ca_group);
        self
    }

    /// Builds the group and gives it the entry's name.
    pub fn build(&self) -> Result<FiniteGroup, LoadError> {
        let g = parse_spec(&self.builder_spec)?.build()?;
        Ok(g.with_name(self.name.clone()))
    }
}

fn e(name: impl Into<String>, spec: impl Into<String>) -> CatalogEntry {
    CatalogEntry::new(name, spec)
}

pub fn default_catalog() -> Vec<CatalogEntry> {
    let mut cat = Vec::new();
    // D_{2m}: n = m + 2 for odd m, m/2 + 2 for even m.
    for m in 3..=10usize {
        let n = if m % 2 == 1 { m + 2 } else { m / 2 + 2 };
        cat.push(
            e(format!("D{}", 2 * m), format!("builtin:dihedral:{}", 2 * m))
                .n(n)
                .flags(true, true),
        );
    }
    cat.push(e("Q8", "builtin:quaternion8").n(4).m(2).flags(true, true));
    for a in 1..=3u32 {
        let order = 1usize << (2 * a + 1);
        let ca = a == 1;
        for v in ["plus", "minus"] {
            let sign = if v == "plus" { '+' } else { '-' };
            cat.push(
                e(
                    format!("E{order}{sign}"),
                    format!("builtin:extraspecial2:{a}:{v}"),
                )
                .n(order / 2)
                .m(2)
                .flags(true, ca),
            );
        }
    }
    for (p, k) in [(2u64, 1u32), (3, 1), (2, 2), (5, 1), (2, 3), (3, 2)] {
        let q = p.pow(k);
        cat.push(
            e(
                format!("Heis(GF{q})"),
                format!("builtin:heisenberg:{p}:{k}"),
            )
            .n(q as usize + 2)
            .m(q)
            .flags(true, true),
        );
    }
    for (q, n, r) in [
        (5u64, 4u64, 2u64),
        (7, 3, 2),
        (7, 6, 3),
        (11, 5, 3),
        (13, 3, 3),
        (13, 4, 5),
    ] {
        cat.push(
            e(
                format!("C{q}:C{n}"),
                format!("builtin:frobenius:{q}:{n}:{r}"),
            )
            .n(q as usize + 2)
            .flags(true, true),
        );
    }
    cat.push(e("A4", "builtin:alternating:4").n(6).flags(true, true));
    cat.push(e("S4", "builtin:symmetric:4").n(14).flags(false, false));
    cat.push(e("A5", "builtin:alternating:5").n(22).flags(true, true));
    cat.push(e("S5", "builtin:symmetric:5"));
    cat.push(
        e("S3xS3", "builtin:dihedral:6 * builtin:dihedral:6")
            .n(25)
            .flags(false, false),
    );
    cat.push(
        e("C6xA5", "builtin:cyclic:6 * builtin:alternating:5")
            .n(22)
            .flags(true, true),
    );
    cat.push(
        e("D8xC2", "builtin:dihedral:8 * builtin:cyclic:2")
            .n(4)
            .m(2)
            .flags(true, true),
    );
    cat.push(
        e("Heis(GF3)xC2", "builtin:heisenberg:3:1 * builtin:cyclic:2")
            .n(5)
            .m(3)
            .flags(true, true),
    );
    cat.push(
        e("Q8xC3", "builtin:quaternion8 * builtin:cyclic:3")
            .n(4)
            .m(2)
            .flags(true, true),
    );
    cat.push(e("C6", "builtin:cyclic:6"));
    cat.push(e("C2^3", "builtin:elementary_abelian:2:3"));
    cat
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_shape() {
        let cat = default_catalog();
        assert!(cat.len() >= 35);
        let find = |name: &str| cat.iter().find(|c| c.name == name).unwrap();
        assert_eq!(find("D6").expected.n, Some(5));
        assert_eq!(find("D6").builder_spec, "builtin:dihedral:6");
        assert_eq!(find("Heis(GF4)").expected.n, Some(6));
        assert_eq!(find("E32+").expected.n, Some(16));
        assert_eq!(find("E32+").builder_spec, "builtin:extraspecial2:2:plus");
        let mut names: Vec<&str> = cat.iter().map(|c| c.name.as_str()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), cat.len());
        assert!(cat.iter().all(|c| !c.name.contains(char::is_whitespace)));
    }

    #[test]
    fn every_spec_parses() {
        for c in default_catalog() {
            parse_spec(&c.builder_spec).unwrap_or_else(|e| panic!("{}: {e}", c.name));
        }
    }
}
