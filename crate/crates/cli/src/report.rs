//! Rendered forms of analyses, suite runs and searches.

use std::fmt::Write;

use ncent_core::analytics::{BoundReport, ConjugateTypeReport, GroupAnalysis, PartitionReport};
use ncent_core::verifier::{CheckResult, SearchHit, Status, SuiteReport, VerifyConfig, CHECKS};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Predicate flags. Centralizer-based flags are `None` for abelian groups.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub abelian: bool,
    pub nilpotent: bool,
    pub f_group: Option<bool>,
    pub ca_group: Option<bool>,
    pub i_group: Option<bool>,
    pub extraspecial: bool,
    pub semi_extraspecial: bool,
    pub ultraspecial: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub group: String,
    pub order: usize,
    pub center_order: usize,
    /// `|Cent(G)|`; `1` for abelian groups.
    pub cent_count: usize,
    pub conjugate_type: Option<ConjugateTypeReport>,
    pub flags: Flags,
    pub partition: Option<PartitionReport>,
    pub bounds: Option<BoundReport>,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn new(a: &GroupAnalysis, config: &VerifyConfig) -> Self {
        let g = a.group();
        let abelian = a.is_abelian();
        Report {
            group: g.name().to_string(),
            order: g.order(),
            center_order: a.center().order(),
            cent_count: a.n().unwrap_or(1),
            conjugate_type: a.conjugate_type().ok().cloned(),
            flags: Flags {
                abelian,
                nilpotent: a.is_nilpotent(),
                f_group: a.is_f_group().ok(),
                ca_group: a.is_ca_group().ok(),
                i_group: a.is_i_group().ok(),
                extraspecial: a.is_extraspecial(),
                semi_extraspecial: a.is_semi_extraspecial(),
                ultraspecial: a.is_ultraspecial(),
            },
            partition: a.central_partition().ok().cloned(),
            bounds: a.bounds().ok(),
            checks: CHECKS.iter().map(|c| c.run(a, config)).collect(),
        }
    }

    pub fn has_failures(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let yn = |b: Option<bool>| match b {
            Some(true) => "yes",
            Some(false) => "no",
            None => "n/a",
        };
        let _ = writeln!(out, "group           {}", self.group);
        let _ = writeln!(out, "order           {}", self.order);
        let _ = writeln!(out, "center order    {}", self.center_order);
        let _ = writeln!(out, "|Cent(G)|       {}", self.cent_count);
        match &self.conjugate_type {
            Some(t) if t.is_uniform => {
                let _ = writeln!(out, "conjugate type  ({}, 1)", t.m.unwrap_or_default());
            }
            Some(_) => {
                let _ = writeln!(out, "conjugate type  not uniform");
            }
            None => {}
        }
        let f = &self.flags;
        let _ = writeln!(out, "abelian         {}", yn(Some(f.abelian)));
        let _ = writeln!(out, "nilpotent       {}", yn(Some(f.nilpotent)));
        let _ = writeln!(out, "F-group         {}", yn(f.f_group));
        let _ = writeln!(out, "CA-group        {}", yn(f.ca_group));
        let _ = writeln!(out, "I-group         {}", yn(f.i_group));
        let _ = writeln!(out, "extraspecial    {}", yn(Some(f.extraspecial)));
        let _ = writeln!(out, "semi-extraspec. {}", yn(Some(f.semi_extraspecial)));
        let _ = writeln!(out, "ultraspecial    {}", yn(Some(f.ultraspecial)));
        if let Some(p) = &self.partition {
            let _ = writeln!(
                out,
                "partition       {} components, partition {}, normal {}",
                p.components.len(),
                yn(Some(p.is_partition)),
                yn(Some(p.is_normal))
            );
        }
        if let Some(b) = &self.bounds {
            let _ = writeln!(
                out,
                "bounds          |G/Z| = {}, (n-2)^2 = {}, general = {}, (n-1)! = {}",
                b.q_order, b.bound_f, b.bound_general, b.factorial_bound
            );
        }
        for c in &self.checks {
            let _ = writeln!(out, "{}", check_line(c));
        }
        out
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
        Status::Skip => "skip",
        Status::Indeterminate => "indeterminate",
        Status::Error => "ERROR",
    }
}

fn check_line(c: &CheckResult) -> String {
    let mut line = format!(
        "{:<14} {:<7} {}",
        c.group_name,
        c.check_id,
        status_word(c.status)
    );
    if let Some(r) = &c.reason {
        let _ = write!(line, " ({r})");
    }
    if c.status == Status::Fail {
        let _ = write!(line, " {}", serde_json::Value::Object(c.details.clone()));
    }
    line
}

pub fn suite_text(r: &SuiteReport) -> String {
    let mut out = String::new();
    for c in &r.results {
        let _ = writeln!(out, "{}", check_line(c));
    }
    let s = &r.summary;
    let _ = writeln!(
        out,
        "groups {} results {} pass {} fail {} skip {} indeterminate {} error {}",
        s.groups, s.results, s.pass, s.fail, s.skip, s.indeterminate, s.error
    );
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub predicate: String,
    pub max_order: Option<usize>,
    pub f_groups_only: bool,
    pub hits: Vec<SearchHit>,
}

impl SearchReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for h in &self.hits {
            let _ = writeln!(
                out,
                "{:<14} n={:<4} |G|={:<5} |Z|={:<3} F={:<3} CA={:<3} {}",
                h.group,
                h.n,
                h.order,
                h.center_order,
                if h.f_group { "yes" } else { "no" },
                if h.ca_group { "yes" } else { "no" },
                h.known_family
                    .as_deref()
                    .unwrap_or("outside known families"),
            );
        }
        let _ = writeln!(out, "{} match(es) for {}", self.hits.len(), self.predicate);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ncent_core::constructions::{alternating, cyclic};

    #[test]
    fn json_round_trip() {
        for g in [alternating(4).unwrap(), cyclic(5).unwrap()] {
            let r = Report::new(&GroupAnalysis::new(g), &VerifyConfig::default());
            let text = serde_json::to_string_pretty(&r).unwrap();
            let back: Report = serde_json::from_str(&text).unwrap();
            assert_eq!(back, r);
        }
    }

    #[test]
    fn fixed_keys() {
        let r = Report::new(
            &GroupAnalysis::new(cyclic(3).unwrap()),
            &VerifyConfig::default(),
        );
        let v = serde_json::to_value(&r).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        let mut want = [
            "group",
            "order",
            "center_order",
            "cent_count",
            "conjugate_type",
            "flags",
            "partition",
            "bounds",
            "checks",
        ];
        want.sort();
        assert_eq!(keys, want);
        assert_eq!(r.cent_count, 1);
        assert_eq!(r.flags.f_group, None);
    }
}
