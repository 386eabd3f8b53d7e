//! JSON and markdown renderings of a corpus run.
//!
//! Both are deterministic: groups appear in manifest order, checks in
//! registry order, and every map is keyed in sorted order.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use super::analysis::{Corpus, GroupAnalysis};
use super::checks::CheckResult;
use crate::classes::{ClassId, Witness};

#[derive(Serialize)]
struct ShapeEntry {
    p: u64,
    tag: String,
    order: u64,
}

#[derive(Serialize)]
struct GroupEntry<'a> {
    id: &'a str,
    order: u64,
    solvable: Option<bool>,
    sylow_shapes: Vec<ShapeEntry>,
    classes: BTreeMap<&'static str, &'static str>,
    witnesses: Vec<&'a Witness>,
}

#[derive(Serialize)]
struct RunReport<'a> {
    groups: Vec<GroupEntry<'a>>,
    checks: &'a [CheckResult],
}

fn group_entry(g: &GroupAnalysis) -> GroupEntry<'_> {
    GroupEntry {
        id: &g.id,
        order: g.order(),
        solvable: g.solvable,
        sylow_shapes: g
            .sylows
            .iter()
            .map(|s| ShapeEntry {
                p: s.shape.p,
                tag: s.shape.tag.to_string(),
                order: s.shape.tag.order(),
            })
            .collect(),
        classes: ClassId::ALL
            .iter()
            .map(|&c| (c.as_str(), g.verdict(c).as_str()))
            .collect(),
        witnesses: g.report.witnesses.values().collect(),
    }
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_json(corpus: &Corpus, checks: &[CheckResult]) -> String {
    let report = RunReport {
        groups: corpus.groups.iter().map(group_entry).collect(),
        checks,
    };
    let mut out = serde_json::to_string_pretty(&report).expect("report serializes");
    out.push('\n');
    out
}

pub fn to_markdown(corpus: &Corpus, checks: &[CheckResult]) -> String {
    let mut out = String::from("# Corpus run\n\n## Groups\n\n| group | order | solvable | Sylow |");
    for c in ClassId::ALL {
        write!(out, " {} |", c.as_str()).unwrap();
    }
    out.push_str("\n|---|---:|---|---|");
    out.push_str(&"---|".repeat(ClassId::ALL.len()));
    out.push('\n');
    for g in &corpus.groups {
        let solvable = match g.solvable {
            Some(true) => "yes",
            Some(false) => "no",
            None => "?",
        };
        let shapes: Vec<String> = g
            .sylows
            .iter()
            .map(|s| format!("{}:{}", s.shape.p, s.shape.tag))
            .collect();
        write!(
            out,
            "| {} | {} | {} | {} |",
            g.id,
            g.order(),
            solvable,
            shapes.join(" ")
        )
        .unwrap();
        for c in ClassId::ALL {
            let mark = match g.verdict(c).as_str() {
                "member" => "yes",
                "non-member" => "no",
                _ => "?",
            };
            write!(out, " {mark} |").unwrap();
        }
        out.push('\n');
    }
    out.push_str("\n## Checks\n\n| check | status | details |\n|---|---|---|\n");
    for r in checks {
        writeln!(out, "| {} | {} | {} |", r.id, r.status.as_str(), r.details).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::Caps;
    use crate::harness::{run_checks, Manifest};

    #[test]
    fn empty_corpus_gives_empty_arrays() {
        let json = to_json(&Corpus::default(), &[]);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["groups"], serde_json::json!([]));
        assert_eq!(v["checks"], serde_json::json!([]));
    }

    #[test]
    fn json_lists_verdicts_and_shapes() {
        let m = Manifest::parse("S3\nQ8\n", &Caps::default(), None).unwrap();
        let c = Corpus::analyze(&m, 1).unwrap();
        let checks = run_checks(&c, Some(&["b-equals-h".to_string()])).unwrap();
        let v: serde_json::Value = serde_json::from_str(&to_json(&c, &checks)).unwrap();
        assert_eq!(v["groups"][0]["id"], "S3");
        assert_eq!(v["groups"][1]["sylow_shapes"][0]["tag"], "Q8");
        assert_eq!(v["groups"][0]["classes"]["B"], "member");
        assert_eq!(v["checks"][0]["status"], "pass");
        let md = to_markdown(&c, &checks);
        assert!(md.contains("| Q8 | 8 | yes | 2:Q8 |"), "{md}");
    }
}
