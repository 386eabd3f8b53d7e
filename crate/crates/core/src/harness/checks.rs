//! Registry of consequence checks run over an analysed corpus.
//!
//! Each check has a hypothesis over a group's verdicts and structure and a
//! consequence that must hold whenever the hypothesis does. Groups where the
//! hypothesis fails contribute nothing; groups where a cap left it open are
//! recorded as skipped.

use std::collections::BTreeMap;

use serde::Serialize;

use super::analysis::{witness_search, Corpus, GroupAnalysis};
use crate::classes::{ClassId, Classifier, Verdict, Witness};
use crate::group::{Enumeration, Group, Subgroup};
use crate::perm::gcd;
use crate::structure::{
    derived_subgroup_in, fitting_subgroup_in, is_isomorphic_small, normal_subgroups_in, o_pprime_in,
    structural_fingerprint, sylow_shape_in, ShapeTag,
};
use crate::zoo::{self, NamedGroupId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Vacuous,
    Skipped,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Vacuous => "vacuous",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Holds,
    Violated,
    Skipped,
}

/// One group on which a check's hypothesis held (or could not be decided).
#[derive(Clone, Debug, Serialize)]
pub struct Instance {
    pub group: String,
    pub order: u64,
    pub outcome: Outcome,
    pub note: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub id: &'static str,
    pub statement: &'static str,
    pub status: Status,
    pub details: String,
    pub instances: Vec<Instance>,
}

pub struct CheckSpec {
    pub id: &'static str,
    pub statement: &'static str,
    run: fn(&Corpus) -> Vec<Instance>,
}

impl CheckSpec {
    pub fn run(&self, corpus: &Corpus) -> CheckResult {
        let instances = (self.run)(corpus);
        let count = |o: Outcome| instances.iter().filter(|i| i.outcome == o).count();
        let (holds, violated, skipped) = (
            count(Outcome::Holds),
            count(Outcome::Violated),
            count(Outcome::Skipped),
        );
        let status = if violated > 0 {
            Status::Fail
        } else if holds > 0 {
            Status::Pass
        } else if skipped > 0 {
            Status::Skipped
        } else {
            Status::Vacuous
        };
        CheckResult {
            id: self.id,
            statement: self.statement,
            status,
            details: format!("{holds} held, {violated} violated, {skipped} skipped"),
            instances,
        }
    }
}

macro_rules! check {
    ($id:expr, $statement:expr, $run:expr) => {
        CheckSpec {
            id: $id,
            statement: $statement,
            run: $run,
        }
    };
}

static REGISTRY: &[CheckSpec] = &[
    check!(
        "simple-b-facts",
        "PSL(2,8) is in B_pi (and in B when decidable); SL(2,5) and A5 are in B",
        simple_b_facts
    ),
    check!(
        "odd-normal-quotient",
        "G in A_pi and N normal of odd order imply G/N in A_pi",
        odd_normal_quotient
    ),
    check!(
        "even-quotient-counterexample",
        "SL(2,7) is in A_pi but its quotient by the center is not, witnessed by a cyclic and a non-cyclic subgroup of order 4",
        even_quotient_counterexample
    ),
    check!(
        "nonsolvable-odd-sylow",
        "non-solvable G in A_pi: every odd Sylow subgroup is cyclic or elementary abelian",
        nonsolvable_odd_sylow
    ),
    check!(
        "nonsolvable-sylow2",
        "non-solvable G in A_pi: the Sylow 2-subgroup is generalized quaternion, Q8, E4, E8 or E32",
        nonsolvable_sylow2
    ),
    check!(
        "solvable-cpi-sylow",
        "solvable G in C_pi: Sylow subgroups are cyclic, elementary abelian or Q8, other 2-groups being reported as the unclassified alternative that must lie outside A_pi",
        solvable_cpi_sylow
    ),
    check!(
        "solvable-api-sylow-and-top",
        "solvable G in A_pi: Sylow subgroups lie in the permitted list and G/O_2'(G) is a cyclic 2-group, E4:C3, E8:(C7:C3), E8:C7, E32:(C31:C5) or Q8:C3",
        solvable_api_sylow_and_top
    ),
    check!(
        "noncyclic-sylow-normal",
        "solvable G in A_pi: a non-cyclic Sylow subgroup is normal or isomorphic to Q8",
        noncyclic_sylow_normal
    ),
    check!(
        "quaternion-sylow-not-normal",
        "E25:SL(2,3) is a solvable member of B whose Q8 Sylow 2-subgroup is not normal",
        quaternion_sylow_not_normal
    ),
    check!(
        "solvable-api-in-bpi",
        "solvable G in A_pi implies G in B_pi",
        solvable_api_in_bpi
    ),
    check!(
        "solvable-quotient-closure",
        "solvable G in A_pi: every quotient is in A_pi",
        solvable_quotient_closure
    ),
    check!(
        "coprime-fibre-product",
        "normal N1, N2 of coprime orders with G/N1 and G/N2 in A_pi imply G in A_pi",
        coprime_fibre_product
    ),
    check!(
        "ep2-top-structure",
        "solvable G in A_pi containing E_{p^2}: G/O_p'(G) has a normal elementary abelian Sylow p-subgroup with all other Sylow subgroups cyclic, or is one of the exceptional groups for p = 5, 11",
        ep2_top_structure
    ),
    check!(
        "ep2-top-in-b",
        "solvable G in A_pi containing E_{p^2}: G/O_p'(G) is in B",
        ep2_top_in_b
    ),
    check!(
        "all-cyclic-sylow",
        "solvable G in A_pi with all Sylow subgroups cyclic: G in B, [G,G] and G/[G,G] cyclic of coprime orders",
        all_cyclic_sylow
    ),
    check!(
        "normal-e4",
        "solvable G in A_pi with a normal E4: E4 is the Sylow 2-subgroup and G/O_2'(G) is isomorphic to E4:C3",
        normal_e4
    ),
    check!(
        "quaternion-subgroup",
        "solvable G in A_pi containing Q8: either Q8 is normal with G/C_G(Q8) = E4:C3 and G/O_2'(G) = Q8:C3, or Q8F/F is normal in G/F (F the Fitting subgroup) and G/F is in B",
        quaternion_subgroup
    ),
    check!(
        "normal-c2",
        "solvable G in A_pi with a normal subgroup of order 2: the Sylow 2-subgroup is cyclic with a normal 2-complement, or it is a normal Q8",
        normal_c2
    ),
    check!(
        "cyclic-sylow2-noncyclic-odd",
        "G in A_pi with cyclic Sylow 2-subgroups and a non-cyclic Sylow p-subgroup A: A is normal, elementary abelian of rank 2 or 3, the p-part of F(G) is A, and G/V is in B for V the p'-part of F(G)",
        cyclic_sylow2_noncyclic_odd
    ),
    check!(
        "central-involution",
        "solvable G in A_pi with a normal subgroup of order 2 and no normal Q8: the Sylow 2-subgroups are cyclic and G is 2-nilpotent",
        central_involution
    ),
    check!(
        "list-cpi",
        "M11, PSL(2,q) and SL(2,q) for odd q = p^n with n odd and q >= 7, PSL(2,2^a) with a >= 3, SL(2,5) and A5 are in C_pi",
        list_cpi
    ),
    check!(
        "mathieu-not-api",
        "M11 is not in A_pi: its Sylow 2-subgroup is neither cyclic nor elementary abelian and contains non-conjugate cyclic and non-cyclic subgroups of order 4",
        mathieu_not_api
    ),
    check!(
        "psl2-api-e4",
        "PSL(2,q), q odd and at least 5, is in A_pi exactly when q = +-3 mod 8, and then has E4 Sylow 2-subgroups and lies in B_pi",
        psl2_api_e4
    ),
    check!(
        "sl2-bpi-congruence",
        "SL(2,q), q odd, is in B_pi exactly when q = +-3 mod 8",
        sl2_bpi_congruence
    ),
    check!(
        "sl2-in-a",
        "SL(2,p) is in A for every odd prime p",
        sl2_in_a
    ),
    check!(
        "bpi-hpi-npi-equal",
        "B_pi, H_pi and N_pi verdicts coincide and every report is chain-consistent",
        bpi_hpi_npi_equal
    ),
    check!("b-equals-h", "B and H verdicts coincide", b_equals_h),
    check!(
        "strict-inclusions",
        "the corpus separates B from B_pi and from N, N from A, A from C, B_pi and N_pi from A_pi, and A_pi from C_pi",
        strict_inclusions
    ),
];

pub fn registry() -> &'static [CheckSpec] {
    REGISTRY
}

pub fn run_check(id: &str, corpus: &Corpus) -> Option<CheckResult> {
    REGISTRY.iter().find(|c| c.id == id).map(|c| c.run(corpus))
}

/// Runs the selected checks (all when `only` is `None`) in registry order.
/// Unknown ids are returned as errors.
pub fn run_checks(corpus: &Corpus, only: Option<&[String]>) -> Result<Vec<CheckResult>, String> {
    if let Some(ids) = only {
        if let Some(bad) = ids
            .iter()
            .find(|id| !REGISTRY.iter().any(|c| c.id == id.as_str()))
        {
            return Err(format!("unknown check {bad:?}"));
        }
    }
    Ok(REGISTRY
        .iter()
        .filter(|c| only.is_none_or(|ids| ids.iter().any(|i| i == c.id)))
        .map(|c| c.run(corpus))
        .collect())
}

fn instance(g: &GroupAnalysis, outcome: Outcome, note: impl Into<String>) -> Instance {
    Instance {
        group: g.id.clone(),
        order: g.order(),
        outcome,
        note: note.into(),
        witness: None,
    }
}

fn verdict_outcome(g: &GroupAnalysis, v: &Verdict, ok: bool, note: String) -> Instance {
    match v {
        Verdict::Undecided(reason) => instance(g, Outcome::Skipped, format!("{note}: {reason}")),
        _ if ok => instance(g, Outcome::Holds, note),
        _ => instance(g, Outcome::Violated, note),
    }
}

/// Membership as a three-way value.
fn member(g: &GroupAnalysis, c: ClassId) -> Option<bool> {
    match g.verdict(c) {
        Verdict::Member => Some(true),
        Verdict::NonMember => Some(false),
        Verdict::Undecided(_) => None,
    }
}

enum Hyp<'a> {
    Holds(&'a GroupAnalysis, std::sync::Arc<Enumeration>),
    Fails,
    Open(Box<Instance>),
}

/// Hypothesis "member of `class`", optionally also "solvable is `solvable`".
fn hyp<'a>(g: &'a GroupAnalysis, class: ClassId, solvable: Option<bool>) -> Hyp<'a> {
    let Some(en) = g.enumeration() else {
        return Hyp::Open(Box::new(instance(
            g,
            Outcome::Skipped,
            "group exceeds the enumeration cap",
        )));
    };
    if solvable.is_some_and(|s| g.solvable != Some(s)) {
        return Hyp::Fails;
    }
    match member(g, class) {
        Some(true) => Hyp::Holds(g, en),
        Some(false) => Hyp::Fails,
        None => Hyp::Open(Box::new(instance(
            g,
            Outcome::Skipped,
            format!("{class} undecided"),
        ))),
    }
}

/// Runs `f` on every group satisfying the hypothesis; `f` may return
/// several instances or none.
fn each(
    corpus: &Corpus,
    class: ClassId,
    solvable: Option<bool>,
    mut f: impl FnMut(&GroupAnalysis, &Enumeration) -> Vec<Instance>,
) -> Vec<Instance> {
    let mut out = Vec::new();
    for g in &corpus.groups {
        match hyp(g, class, solvable) {
            Hyp::Holds(g, en) => out.extend(f(g, &en)),
            Hyp::Fails => {}
            Hyp::Open(i) => out.push(*i),
        }
    }
    out
}

fn named(g: &GroupAnalysis) -> Option<NamedGroupId> {
    g.id.parse().ok()
}

fn quotient(g: &GroupAnalysis, n: &Subgroup) -> Group {
    g.group.quotient(n).expect("normal subgroup")
}

fn decide_b(q: &Group, g: &GroupAnalysis) -> (Verdict, Option<Witness>) {
    let d = Classifier::new(q, g.caps).decide(ClassId::B);
    (d.verdict, d.witness)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum MatchLevel {
    Exact,
    Fingerprint,
}

/// Compares `q` with `target`: exactly up to the isomorphism cap, by
/// structural fingerprint above it.
fn matches(q: &Group, target: &Group, cap: u64) -> Option<MatchLevel> {
    if q.order() != target.order() {
        return None;
    }
    if q.order() <= cap {
        return is_isomorphic_small(q, target, cap)
            .ok()
            .filter(|&b| b)
            .map(|_| MatchLevel::Exact);
    }
    let (a, b) = (
        structural_fingerprint(q).ok()?,
        structural_fingerprint(target).ok()?,
    );
    (a == b).then_some(MatchLevel::Fingerprint)
}

fn level_name(l: MatchLevel) -> &'static str {
    match l {
        MatchLevel::Exact => "isomorphic",
        MatchLevel::Fingerprint => "consistent by fingerprint with",
    }
}

/// Matches `q` against the named targets, returning the first hit.
fn match_named(q: &Group, names: &[&str], cap: u64) -> Option<(String, MatchLevel)> {
    names.iter().find_map(|&name| {
        let t = zoo::by_name(name).ok()?;
        matches(q, &t, cap).map(|l| (name.to_string(), l))
    })
}

fn is_power_of_two(n: u64) -> bool {
    n.is_power_of_two()
}

fn central_involution_exists(en: &Enumeration) -> bool {
    en.center().elements().iter().any(|&x| en.element_order(x) == 2)
}

/// `|G : O_2'(G)|` equals the order of the Sylow 2-subgroup.
fn two_nilpotent(g: &GroupAnalysis, en: &Enumeration) -> bool {
    let s2 = g.sylow(2).map_or(1, |s| s.subgroup.order());
    g.order() / o_pprime_in(en, 2).order() == s2
}

fn simple_b_facts(corpus: &Corpus) -> Vec<Instance> {
    let mut out = Vec::new();
    for (id, classes) in [
        ("PSL(2,8)", &[ClassId::BPi, ClassId::B][..]),
        ("SL(2,5)", &[ClassId::B][..]),
        ("A5", &[ClassId::B][..]),
    ] {
        let Some(g) = corpus.get(id) else { continue };
        let required = classes[0];
        let mut i = verdict_outcome(
            g,
            g.verdict(required),
            g.is_member(required),
            format!("{required}: {}", g.verdict(required).as_str()),
        );
        for &c in &classes[1..] {
            // decided only when the full enumeration fits its cap
            match g.verdict(c) {
                Verdict::Member => i.note.push_str(&format!("; {c}: member")),
                Verdict::NonMember => {
                    i.outcome = Outcome::Violated;
                    i.note.push_str(&format!("; {c}: non-member"));
                    i.witness = g.report.witnesses.get(&c).cloned();
                }
                Verdict::Undecided(r) => i.note.push_str(&format!("; {c} undecided: {r}")),
            }
        }
        if i.outcome == Outcome::Violated && i.witness.is_none() {
            i.witness = g.report.witnesses.get(&required).cloned();
        }
        out.push(i);
    }
    out
}

/// Shared by the two quotient checks: every stored quotient `G/N` with `N`
/// accepted by `keep` must be in `A_pi`.
fn quotients_in_api(g: &GroupAnalysis, keep: impl Fn(&Subgroup) -> bool) -> Vec<Instance> {
    let Some(facts) = &g.quotients else {
        return vec![instance(g, Outcome::Skipped, "normal subgroups not enumerated")];
    };
    let mut checked = Vec::new();
    let mut skipped = Vec::new();
    for f in facts.iter().filter(|f| keep(&f.normal)) {
        match &f.a_pi.verdict {
            Verdict::Member => checked.push(f.normal.order()),
            Verdict::NonMember => {
                let mut i = instance(
                    g,
                    Outcome::Violated,
                    format!(
                        "quotient by a normal subgroup of order {} is not in A_pi",
                        f.normal.order()
                    ),
                );
                i.witness = f.a_pi.witness.clone();
                return vec![i];
            }
            Verdict::Undecided(r) => skipped.push(format!("|N| = {}: {r}", f.normal.order())),
        }
    }
    let mut out = Vec::new();
    if !checked.is_empty() {
        out.push(instance(
            g,
            Outcome::Holds,
            format!("quotients by normal subgroups of orders {checked:?} are in A_pi"),
        ));
    }
    if !skipped.is_empty() {
        out.push(instance(g, Outcome::Skipped, skipped.join("; ")));
    }
    out
}

fn odd_normal_quotient(corpus: &Corpus) -> Vec<Instance> {
    each(corpus, ClassId::APi, None, |g, _| {
        quotients_in_api(g, |n| n.order() % 2 == 1)
    })
}

fn solvable_quotient_closure(corpus: &Corpus) -> Vec<Instance> {
    each(corpus, ClassId::APi, Some(true), |g, _| {
        quotients_in_api(g, |_| true)
    })
}

fn even_quotient_counterexample(corpus: &Corpus) -> Vec<Instance> {
    let Some(g) = corpus.get("SL(2,7)") else {
        return Vec::new();
    };
    let Some(en) = g.enumeration() else {
        return vec![instance(g, Outcome::Skipped, "group exceeds the enumeration cap")];
    };
    if member(g, ClassId::APi) != Some(true) {
        return vec![verdict_outcome(
            g,
            g.verdict(ClassId::APi),
            false,
            "SL(2,7) in A_pi".into(),
        )];
    }
    let z = en.center();
    let q = quotient(g, &z);
    let d = Classifier::new(&q, g.caps).decide(ClassId::APi);
    let Some(w) = d.witness.clone().filter(|_| d.verdict.is_non_member()) else {
        return vec![verdict_outcome(
            g,
            &d.verdict,
            false,
            format!("quotient of order {} by the center", q.order()),
        )];
    };
    let qen = q.enumeration().expect("quotient fits");
    let cyclic = [w.subgroups.0.is_cyclic(&qen), w.subgroups.1.is_cyclic(&qen)];
    let ok = w.order == 4 && cyclic[0] != cyclic[1];
    let mut i = instance(
        g,
        if ok { Outcome::Holds } else { Outcome::Violated },
        format!(
            "SL(2,7)/Z of order {} is not in A_pi; order-{} witness, cyclic flags {:?}",
            q.order(),
            w.order,
            cyclic
        ),
    );
    i.witness = Some(w);
    vec![i]
}

fn shapes_instance(g: &GroupAnalysis, bad: Vec<String>, what: &str) -> Vec<Instance> {
    let shapes: Vec<String> = g
        .sylows
        .iter()
        .map(|s| format!("{}:{}", s.shape.p, s.shape.tag))
        .collect();
    if bad.is_empty() {
        vec![instance(
            g,
            Outcome::Holds,
            format!("{what} {}", shapes.join(" ")),
        )]
    } else {
        vec![instance(
            g,
            Outcome::Violated,
            format!("{what} outside the permitted set: {}", bad.join(" ")),
        )]
    }
}

fn nonsolvable_odd_sylow(corpus: &Corpus) -> Vec<Instance> {
    each(corpus, ClassId::APi, Some(false), |g, _| {
        let bad = g
            .sylows
            .iter()
            .filter(|s| s.shape.p != 2)
            .filter(|s| {
                !matches!(
                    s.shape.tag,
                    ShapeTag::Cyclic(_) | ShapeTag::ElementaryAbelian { .. }
                )
            })
            .map(|s| format!("{}:{}", s.shape.p, s.shape.tag))
            .collect();
        shapes_instance(g, bad, "Sylow shapes")
    })
}

fn nonsolvable_sylow2(corpus: &Corpus) -> Vec<Instance> {
    each(corpus, ClassId::APi, Some(false), |g, _| {
        let Some(s) = g.sylow(2) else {
            return vec![instance(g, Outcome::Violated, "odd order yet non-solvable")];
        };
        let ok = matches!(
            s.shape.tag,
            ShapeTag::GeneralizedQuaternion(_)
                | ShapeTag::QuaternionQ8
                | ShapeTag::ElementaryAbelian {
                    p: 2,
                    rank: 2 | 3 | 5
                }
        );
        let bad = if ok {
            Vec::new()
        } else {
            vec![s.shape.tag.to_string()]
        };
        shapes_instance(g, bad, "Sylow 2-subgroup")
    })
}

fn solvable_cpi_sylow(corpus: &Corpus) -> Vec<Instance> {
    each(corpus, ClassId::CPi, Some(true), |g, _| {
        let mut bad = Vec::new();
        let mut alternative = None;
        for s in &g.sylows {
            match s.shape.tag {
                ShapeTag::Cyclic(_) | ShapeTag::ElementaryAbelian { .. } | ShapeTag::QuaternionQ8 => {}
                tag if s.shape.p == 2 => alternative = Some(tag),
                tag => bad.push(format!("{}:{tag}", s.shape.p)),
            }
        }
        if let Some(tag) = alternative {
            // such a 2-group has both kinds of order-4 subgroups
            if member(g, ClassId::APi) == Some(true) {
                bad.push(format!("2:{tag} in a member of A_pi"));
            } else if bad.is_empty() {
                return vec![instance(
                    g,
                    Outcome::Holds,
                    format!("Sylow 2-subgroup {tag} reported as the unclassified alternative; not in A_pi"),
                )];
            }
        }
        shapes_instance(g, bad, "Sylow shapes")
    })
}

const TOP_TARGETS: [&str; 5] = ["E4:C3", "E8:(C7:C3)", "E8:C7", "E32:(C31:C5)", "Q8:C3"];

fn solvable_api_sylow_and_top(corpus: &Corpus) -> Vec<Instance> {
    each(corpus, ClassId::APi, Some(true), |g, en| {
        let bad: Vec<String> = g
            .sylows
            .iter()
            .filter(|s| {
                !matches!(
                    (s.shape.p, s.shape.tag),
                    (_, ShapeTag::Cyclic(_))
                        | (2, ShapeTag::QuaternionQ8)
                        | (2, ShapeTag::ElementaryAbelian { rank: 2 | 3 | 5, .. })
                        | (3.., ShapeTag::ElementaryAbelian { rank: 2 | 3, .. })
                )
            })
            .map(|s| format!("{}:{}", s.shape.p, s.shape.tag))
            .collect();
        if !bad.is_empty() {
            return shapes_instance(g, bad, "Sylow shapes");
        }
        let top = quotient(g, &o_pprime_in(en, 2));
        let found = if is_power_of_two(top.order()) {
            let c = zoo::cyclic(top.order()).expect("small cyclic group");
            matches(&top, &c, g.caps.isomorphism).map(|l| (format!("C{}", top.order()), l))
        } else {
            match_named(&top, &TOP_TARGETS, g.caps.isomorphism)
        };
        match found {
            Some((name, level)) => vec![instance(
                g,
                Outcome::Holds,
                format!(
                    "G/O_2'(G) of order {} {} to {name}",
                    top.order(),
                    level_name(level)
                ),
            )],
            None => vec![instance(
                g,
                Outcome::Violated,
                format!("G/O_2'(G) of order {} matches no listed group", top.order()),
            )],
        }
    })
}

fn noncyclic_sylow_normal(corpus: &Corpus) -> Vec<Instance> {
    each(corpus, ClassId::APi, Some(true), |g, _| {
        let relevant: Vec<_> = g
            .sylows
            .iter()
            .filter(|s| !matches!(s.shape.tag, ShapeTag::Cyclic(_)))
            .collect();
        if relevant.is_empty() {
            return Vec::new();
        }
        let bad: Vec<String> = relevant
            .iter()
            .filter(|s| !s.normal && s.shape.tag != ShapeTag::QuaternionQ8)
            .map(|s| format!("{}:{}", s.shape.p, s.shape.tag))
            .collect();
        if bad.is_empty() {
            let desc: Vec<String> = relevant
                .iter()
                .map(|s| {
                    format!(
                        "{}:{} {}",
                        s.shape.p,
                        s.shape.tag,
                        if s.normal { "normal" } else { "not normal" }
                    )
                })
                .collect();
            vec![instance(g, Outcome::Holds, desc.join(", "))]
        } else {
            vec![instance(
                g,
                Outcome::Violated,
                format!("non-normal: {}", bad.join(" ")),
            )]
        }
    })
}

fn quaternion_sylow_not_normal(corpus: &Corpus) -> Vec<Instance> {
    let Some(g) = corpus.get("E25:SL(2,3)") else {
        return Vec::new();
    };
    let Some(s) = g.sylow(2) else {
        return vec![instance(g, Outcome::Skipped, "group exceeds the enumeration cap")];
    };
    let note = format!(
        "B: {}, solvable: {:?}, Sylow 2-subgroup {} {}",
        g.verdict(ClassId::B).as_str(),
        g.solvable,
        s.shape.tag,
        if s.normal { "normal" } else { "not normal" }
    );
    let ok = g.solvable == Some(true) && s.shape.tag == ShapeTag::QuaternionQ8 && !s.normal;
    vec![verdict_outcome(
        g,
        g.verdict(ClassId::B),
        ok && g.is_member(ClassId::B),
        note,
    )]
}

fn solvable_api_in_bpi(corpus: &Corpus) -> Vec<Instance> {
    each(corpus, ClassId::APi, Some(true), |g, _| {
        let mut i = verdict_outcome(
            g,
            g.verdict(ClassId::BPi),
            g.is_member(ClassId::BPi),
            format!("B_pi: {}", g.verdict(ClassId::BPi).as_str()),
        );
        if i.outcome == Outcome::Violated {
            i.witness = g.report.witnesses.get(&ClassId::BPi).cloned();
        }
        vec![i]
    })
}

fn coprime_fibre_product(corpus: &Corpus) -> Vec<Instance> {
    let mut out = Vec::new();
    for g in &corpus.groups {
        let Some(facts) = &g.quotients else { continue };
        let mut pairs = Vec::new();
        for (i, a) in facts.iter().enumerate() {
            for b in &facts[i + 1..] {
                if gcd(a.normal.order(), b.normal.order()) == 1
                    && a.a_pi.verdict.is_member()
                    && b.a_pi.verdict.is_member()
                {
                    pairs.push((a.normal.order(), b.normal.order()));
                }
            }
        }
        if pairs.is_empty() {
            continue;
        }
        let note = format!("coprime normal pairs with quotients in A_pi: {pairs:?}");
        let mut i = verdict_outcome(g, g.verdict(ClassId::APi), g.is_member(ClassId::APi), note);
        if i.outcome == Outcome::Violated {
            i.witness = g.report.witnesses.get(&ClassId::APi).cloned();
        }
        out.push(i);
    }
    out
}

/// Primes whose Sylow subgroup contains an `E_{p^2}`, i.e. is neither
/// cyclic nor generalized quaternion, with `G/O_p'(G)` for each.
fn ep2_tops(g: &GroupAnalysis, en: &Enumeration) -> Vec<(u64, Group)> {
    g.sylows
        .iter()
        .filter(|s| !matches!(s.shape.tag, ShapeTag::Cyclic(_)) && !s.shape.tag.is_quaternion())
        .map(|s| (s.shape.p, quotient(g, &o_pprime_in(en, s.shape.p))))
        .collect()
}

fn ep2_top_structure(corpus: &Corpus) -> Vec<Instance> {
    each(corpus, ClassId::APi, Some(true), |g, en| {
        ep2_tops(g, en)
            .into_iter()
            .map(|(p, top)| {
                let ten = top.enumeration().expect("quotient fits");
                let shapes: Vec<(u64, ShapeTag, bool)> = crate::field::factorize(top.order())
                    .into_iter()
                    .map(|(r, _)| {
                        let s = crate::structure::sylow_subgroup_in(&ten, r);
                        let tag = sylow_shape_in(&ten, &s).expect("prime power").tag;
                        (r, tag, ten.is_normal(&s))
                    })
                    .collect();
                let first = shapes.iter().all(|&(r, tag, normal)| {
                    if r == p {
                        normal && matches!(tag, ShapeTag::ElementaryAbelian { .. })
                    } else {
                        matches!(tag, ShapeTag::Cyclic(_))
                    }
                });
                let desc: Vec<String> = shapes
                    .iter()
                    .map(|(r, t, n)| format!("{r}:{t}{}", if *n { " normal" } else { "" }))
                    .collect();
                if first {
                    return instance(
                        g,
                        Outcome::Holds,
                        format!(
                            "p = {p}: G/O_p'(G) of order {} has {}",
                            top.order(),
                            desc.join(", ")
                        ),
                    );
                }
                let exceptional = match p {
                    5 => match_named(&top, &["E25:SL(2,3)"], g.caps.isomorphism)
                        .map(|(n, l)| format!("{} to {n}", level_name(l))),
                    11 if matches!(top.order(), 2904 | 14520) => Some("of an exceptional order".to_string()),
                    _ => None,
                };
                match exceptional {
                    Some(how) => instance(
                        g,
                        Outcome::Holds,
                        format!("p = {p}: G/O_p'(G) of order {} {how}", top.order()),
                    ),
                    None => instance(
                        g,
                        Outcome::Violated,
                        format!(
                            "p = {p}: G/O_p'(G) of order {} has {}",
                            top.order(),
                            desc.join(", ")
                        ),
                    ),
                }
            })
            .collect()
    })
}

fn ep2_top_in_b(corpus: &Corpus) -> Vec<Instance> {
    each(corpus, ClassId::APi, Some(true), |g, en| {
        ep2_tops(g, en)
            .into_iter()
            .map(|(p, top)| {
                let (v, w) = decide_b(&top, g);
                let mut i = verdict_outcome(
                    g,
                    &v,
                    v.is_member(),
                    format!("p = {p}: G/O_p'(G) of order {} B: {}", top.order(), v.as_str()),
                );
                if i.outcome == Outcome::Violated {
                    i.witness = w;
                }
                i
            })
            .collect()
    })
}

fn all_cyclic_sylow(corpus: &Corpus) -> Vec<Instance> {
    each(corpus, ClassId::APi, Some(true), |g, en| {
        if !g
            .sylows
            .iter()
            .all(|s| matches!(s.shape.tag, ShapeTag::Cyclic(_)))
        {
            return Vec::new();
        }
        let d = derived_subgroup_in(en, &en.whole());
        let index = g.order() / d.order();
        // G/G' is cyclic iff some coset has order |G : G'|
        let top_cyclic = en.all().any(|x| {
            let mut y = x;
            let mut k = 1;
            while !d.contains(y) {
                y = en.mul(y, x);
                k += 1;
            }
            k == index
        });
        let structural = d.is_cyclic(en) && top_cyclic && gcd(d.order(), index) == 1;
        let note = format!(
            "B: {}, |G'| = {}, |G/G'| = {}, G' cyclic: {}, G/G' cyclic: {}",
            g.verdict(ClassId::B).as_str(),
            d.order(),
            index,
            d.is_cyclic(en),
            top_cyclic
        );
        let mut i = verdict_outcome(
            g,
            g.verdict(ClassId::B),
            structural && g.is_member(ClassId::B),
            note,
        );
        if i.outcome == Outcome::Violated {
            i.witness = g.report.witnesses.get(&ClassId::B).cloned();
        }
        vec![i]
    })
}

fn normal_e4(corpus: &Corpus) -> Vec<Instance> {
    each(corpus, ClassId::APi, Some(true), |g, en| {
        let has = normal_subgroups_in(en)
            .iter()
            .any(|n| n.order() == 4 && n.elements().iter().all(|&x| en.element_order(x) <= 2));
        if !has {
            return Vec::new();
        }
        let s2 = g.sylow(2).expect("even order").subgroup.order();
        let top = quotient(g, &o_pprime_in(en, 2));
        let found = match_named(&top, &["E4:C3"], g.caps.isomorphism);
        let ok = s2 == 4 && found.is_some();
        let note = match found {
            Some((n, l)) => format!("Sylow 2 order {s2}; G/O_2'(G) {} to {n}", level_name(l)),
            None => format!(
                "Sylow 2 order {s2}; G/O_2'(G) of order {} is not E4:C3",
                top.order()
            ),
        };
        vec![instance(
            g,
            if ok { Outcome::Holds } else { Outcome::Violated },
            note,
        )]
    })
}

fn quaternion_subgroup(corpus: &Corpus) -> Vec<Instance> {
    each(corpus, ClassId::APi, Some(true), |g, en| {
        let Some(s) = g.sylow(2).filter(|s| s.shape.tag == ShapeTag::QuaternionQ8) else {
            return Vec::new();
        };
        if s.normal {
            let c = en.centralizer_in(&en.whole(), &s.subgroup);
            let action = match_named(&quotient(g, &c), &["E4:C3"], g.caps.isomorphism);
            let top = match_named(&quotient(g, &o_pprime_in(en, 2)), &["Q8:C3"], g.caps.isomorphism);
            let ok = action.is_some() && top.is_some();
            let note = format!(
                "Q8 normal; G/C_G(Q8) {}; G/O_2'(G) {}",
                action.map_or("is not E4:C3".into(), |(n, l)| format!(
                    "{} to {n}",
                    level_name(l)
                )),
                top.map_or("is not Q8:C3".into(), |(n, l)| format!(
                    "{} to {n}",
                    level_name(l)
                ))
            );
            return vec![instance(
                g,
                if ok { Outcome::Holds } else { Outcome::Violated },
                note,
            )];
        }
        let f = fitting_subgroup_in(en);
        let qf = en.join(&s.subgroup, &f);
        let qf_normal = en.is_normal(&qf);
        let (v, w) = decide_b(&quotient(g, &f), g);
        let note = format!(
            "Q8 not normal; |F| = {}, QF normal: {qf_normal}, G/F in B: {}",
            f.order(),
            v.as_str()
        );
        let mut i = verdict_outcome(g, &v, qf_normal && v.is_member(), note);
        if i.outcome == Outcome::Violated {
            i.witness = w;
        }
        vec![i]
    })
}

fn normal_c2(corpus: &Corpus) -> Vec<Instance> {
    each(corpus, ClassId::APi, Some(true), |g, en| {
        if !central_involution_exists(en) {
            return Vec::new();
        }
        let s = g.sylow(2).expect("even order");
        let cyclic_branch = matches!(s.shape.tag, ShapeTag::Cyclic(_)) && two_nilpotent(g, en);
        let q8_branch = s.shape.tag == ShapeTag::QuaternionQ8 && s.normal;
        let note = if cyclic_branch {
            format!("Sylow 2 {} cyclic with a normal 2-complement", s.shape.tag)
        } else if q8_branch {
            "Sylow 2 is a normal Q8".to_string()
        } else {
            format!("Sylow 2 {} fits neither alternative", s.shape.tag)
        };
        let ok = cyclic_branch || q8_branch;
        vec![instance(
            g,
            if ok { Outcome::Holds } else { Outcome::Violated },
            note,
        )]
    })
}

fn cyclic_sylow2_noncyclic_odd(corpus: &Corpus) -> Vec<Instance> {
    each(corpus, ClassId::APi, None, |g, en| {
        if g.sylow(2)
            .is_some_and(|s| !matches!(s.shape.tag, ShapeTag::Cyclic(_)))
        {
            return Vec::new();
        }
        let f = fitting_subgroup_in(en);
        g.sylows
            .iter()
            .filter(|s| s.shape.p != 2 && !matches!(s.shape.tag, ShapeTag::Cyclic(_)))
            .map(|s| {
                let p = s.shape.p;
                let a = &s.subgroup;
                let rank_ok = matches!(s.shape.tag, ShapeTag::ElementaryAbelian { rank: 2 | 3, .. });
                let p_part_of_f = crate::structure::p_part(f.order(), p);
                let v_elems: Vec<_> = f
                    .elements()
                    .iter()
                    .copied()
                    .filter(|&x| !(en.element_order(x) as u64).is_multiple_of(p))
                    .collect();
                let v = en.closure(&v_elems);
                let (b, w) = decide_b(&quotient(g, &v), g);
                let structural =
                    s.normal && rank_ok && p_part_of_f == a.order() && v.order() * a.order() == f.order();
                let note = format!(
                    "p = {p}: A = {} {}, |F| = {}, |V| = {}, G/V in B: {}",
                    s.shape.tag,
                    if s.normal { "normal" } else { "not normal" },
                    f.order(),
                    v.order(),
                    b.as_str()
                );
                let mut i = verdict_outcome(g, &b, structural && b.is_member(), note);
                if i.outcome == Outcome::Violated {
                    i.witness = w;
                }
                i
            })
            .collect()
    })
}

fn central_involution(corpus: &Corpus) -> Vec<Instance> {
    each(corpus, ClassId::APi, Some(true), |g, en| {
        if !central_involution_exists(en) {
            return Vec::new();
        }
        let normal_q8 = normal_subgroups_in(en)
            .iter()
            .any(|n| n.order() == 8 && sylow_shape_in(en, n).is_ok_and(|s| s.tag == ShapeTag::QuaternionQ8));
        if normal_q8 {
            return Vec::new();
        }
        let s = g.sylow(2).expect("even order");
        let ok = matches!(s.shape.tag, ShapeTag::Cyclic(_)) && two_nilpotent(g, en);
        vec![instance(
            g,
            if ok { Outcome::Holds } else { Outcome::Violated },
            format!("Sylow 2 {}, 2-nilpotent: {}", s.shape.tag, two_nilpotent(g, en)),
        )]
    })
}

/// Whether a named group belongs to the list of simple (or quasisimple)
/// groups that can occur as non-solvable chief factors of `C_pi` groups.
fn in_simple_list(id: &NamedGroupId) -> bool {
    use crate::field::prime_power;
    let linear = |q: u64| match prime_power(q) {
        Some((2, a)) => a >= 3,
        Some((_, n)) => n % 2 == 1 && q >= 7,
        None => false,
    };
    match id {
        NamedGroupId::PSL2(q) => linear(*q),
        NamedGroupId::SL2(q) => linear(*q) || *q == 5,
        NamedGroupId::Alternating(5) => true,
        NamedGroupId::Dataset(name) => name == "M11",
        _ => false,
    }
}

fn list_cpi(corpus: &Corpus) -> Vec<Instance> {
    corpus
        .groups
        .iter()
        .filter(|g| named(g).is_some_and(|id| in_simple_list(&id)))
        .map(|g| {
            verdict_outcome(
                g,
                g.verdict(ClassId::CPi),
                g.is_member(ClassId::CPi),
                format!("C_pi: {}", g.verdict(ClassId::CPi).as_str()),
            )
        })
        .collect()
}

/// An element conjugating `h` into `s`, if any.
fn conjugate_into(en: &Enumeration, h: &Subgroup, s: &Subgroup) -> Option<u32> {
    en.all()
        .find(|&t| h.elements().iter().all(|&x| s.contains(en.conj(x, t))))
}

fn mathieu_not_api(corpus: &Corpus) -> Vec<Instance> {
    let Some(g) = corpus.get("M11") else {
        return Vec::new();
    };
    let Some(en) = g.enumeration() else {
        return vec![instance(g, Outcome::Skipped, "group exceeds the enumeration cap")];
    };
    let s = g.sylow(2).expect("even order");
    let shape_ok = !matches!(
        s.shape.tag,
        ShapeTag::Cyclic(_) | ShapeTag::ElementaryAbelian { .. }
    );
    let Some(w) = g
        .report
        .witnesses
        .get(&ClassId::APi)
        .filter(|_| g.report.is_non_member(ClassId::APi))
    else {
        return vec![verdict_outcome(
            g,
            g.verdict(ClassId::APi),
            false,
            "M11 in A_pi".into(),
        )];
    };
    let (x, y) = &w.subgroups;
    let kinds = [x.is_cyclic(&en), y.is_cyclic(&en)];
    let inside =
        conjugate_into(&en, x, &s.subgroup).is_some() && conjugate_into(&en, y, &s.subgroup).is_some();
    let ok = shape_ok && w.order == 4 && kinds[0] != kinds[1] && inside;
    let mut i = instance(
        g,
        if ok { Outcome::Holds } else { Outcome::Violated },
        format!(
            "Sylow 2 {}; order-{} witness with cyclic flags {:?}, both conjugate into the Sylow 2-subgroup: {inside}",
            s.shape.tag, w.order, kinds
        ),
    );
    i.witness = Some(w.clone());
    vec![i]
}

fn plus_minus_three_mod_eight(q: u64) -> bool {
    matches!(q % 8, 3 | 5)
}

fn psl2_api_e4(corpus: &Corpus) -> Vec<Instance> {
    corpus
        .groups
        .iter()
        .filter_map(|g| match named(g)? {
            NamedGroupId::PSL2(q) if q % 2 == 1 && q >= 5 => Some((g, q)),
            _ => None,
        })
        .map(|(g, q)| {
            let expected = plus_minus_three_mod_eight(q);
            let Some(m) = member(g, ClassId::APi) else {
                return instance(g, Outcome::Skipped, "A_pi undecided");
            };
            let mut note = format!("q mod 8 = {}, A_pi: {}", q % 8, g.verdict(ClassId::APi).as_str());
            let mut ok = m == expected;
            if m {
                let s = g.sylow(2).map(|s| s.shape.tag);
                note.push_str(&format!(
                    ", Sylow 2 {:?}, B_pi: {}",
                    s.map(|t| t.to_string()),
                    g.verdict(ClassId::BPi).as_str()
                ));
                ok &= s == Some(ShapeTag::ElementaryAbelian { p: 2, rank: 2 }) && g.is_member(ClassId::BPi);
            }
            instance(g, if ok { Outcome::Holds } else { Outcome::Violated }, note)
        })
        .collect()
}

fn sl2_bpi_congruence(corpus: &Corpus) -> Vec<Instance> {
    corpus
        .groups
        .iter()
        .filter_map(|g| match named(g)? {
            NamedGroupId::SL2(q) if q % 2 == 1 => Some((g, q)),
            _ => None,
        })
        .map(|(g, q)| {
            let expected = plus_minus_three_mod_eight(q);
            let v = g.verdict(ClassId::BPi);
            let mut i = verdict_outcome(
                g,
                v,
                v.is_member() == expected,
                format!("q mod 8 = {}, B_pi: {}", q % 8, v.as_str()),
            );
            if i.outcome == Outcome::Violated && !expected {
                i.note.push_str(" (expected non-member)");
            }
            i
        })
        .collect()
}

fn sl2_in_a(corpus: &Corpus) -> Vec<Instance> {
    corpus
        .groups
        .iter()
        .filter(|g| matches!(named(g), Some(NamedGroupId::SL2(q)) if q % 2 == 1 && crate::field::is_prime(q)))
        .map(|g| {
            let mut i = verdict_outcome(
                g,
                g.verdict(ClassId::A),
                g.is_member(ClassId::A),
                format!("A: {}", g.verdict(ClassId::A).as_str()),
            );
            if i.outcome == Outcome::Violated {
                i.witness = g.report.witnesses.get(&ClassId::A).cloned();
            }
            i
        })
        .collect()
}

fn bpi_hpi_npi_equal(corpus: &Corpus) -> Vec<Instance> {
    corpus
        .groups
        .iter()
        .map(|g| {
            let trio = [ClassId::BPi, ClassId::HPi, ClassId::NPi].map(|c| g.verdict(c));
            if !g.report.violations.is_empty() {
                return instance(g, Outcome::Violated, g.report.violations.join("; "));
            }
            if trio.iter().any(|v| !v.is_decided()) {
                return instance(g, Outcome::Skipped, "a pi-class verdict is undecided");
            }
            instance(g, Outcome::Holds, format!("all {}", trio[0].as_str()))
        })
        .collect()
}

fn b_equals_h(corpus: &Corpus) -> Vec<Instance> {
    corpus
        .groups
        .iter()
        .map(|g| {
            let (b, h) = (g.verdict(ClassId::B), g.verdict(ClassId::H));
            if !b.is_decided() || !h.is_decided() {
                instance(g, Outcome::Skipped, "B or H undecided")
            } else if b == h {
                instance(g, Outcome::Holds, format!("both {}", b.as_str()))
            } else {
                instance(
                    g,
                    Outcome::Violated,
                    format!("B {} but H {}", b.as_str(), h.as_str()),
                )
            }
        })
        .collect()
}

/// `(larger, smaller)` pairs the corpus should separate.
pub const STRICT_PAIRS: [(ClassId, ClassId); 7] = [
    (ClassId::BPi, ClassId::B),
    (ClassId::N, ClassId::B),
    (ClassId::A, ClassId::N),
    (ClassId::C, ClassId::A),
    (ClassId::APi, ClassId::BPi),
    (ClassId::APi, ClassId::NPi),
    (ClassId::CPi, ClassId::APi),
];

fn strict_inclusions(corpus: &Corpus) -> Vec<Instance> {
    if corpus.groups.is_empty() {
        return Vec::new();
    }
    let mut found: BTreeMap<(ClassId, ClassId), Instance> = BTreeMap::new();
    for (a, b) in STRICT_PAIRS {
        let i = match witness_search(corpus, a, b) {
            Some(g) => {
                let mut i = instance(g, Outcome::Holds, format!("smallest in {a} but not {b}"));
                i.witness = g.report.witnesses.get(&b).cloned();
                i
            }
            None => Instance {
                group: "-".into(),
                order: 0,
                outcome: Outcome::Skipped,
                note: format!("no corpus group in {a} but not {b}"),
                witness: None,
            },
        };
        found.insert((a, b), i);
    }
    STRICT_PAIRS
        .iter()
        .map(|k| found.remove(k).expect("inserted"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::Caps;
    use crate::harness::manifest::Manifest;

    fn corpus(text: &str) -> Corpus {
        Corpus::analyze(&Manifest::parse(text, &Caps::default(), None).unwrap(), 1).unwrap()
    }

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), registry().len());
    }

    #[test]
    fn empty_corpus_is_vacuous() {
        let c = Corpus::default();
        for r in run_checks(&c, None).unwrap() {
            assert_eq!(r.status, Status::Vacuous, "{}", r.id);
        }
    }

    #[test]
    fn quotient_counterexample_on_sl27() {
        let c = corpus("SL(2,7)\n");
        let r = run_check("even-quotient-counterexample", &c).unwrap();
        assert_eq!(r.status, Status::Pass, "{:?}", r.instances);
    }

    #[test]
    fn nonsolvable_sylow2_with_vacuous_members() {
        let c = corpus("A5\nSL(2,5)\nPSL(2,7)\nSL(2,8)\nSL(2,7)\n");
        let r = run_check("nonsolvable-sylow2", &c).unwrap();
        assert_eq!(r.status, Status::Pass);
        // PSL(2,7) is not in A_pi, so it contributes no instance
        assert!(r.instances.iter().all(|i| i.group != "PSL(2,7)"));
        assert_eq!(r.instances.len(), 4);
    }

    #[test]
    fn top_quotient_of_sl23_is_exact() {
        let c = corpus("SL(2,3)\n");
        let r = run_check("solvable-api-sylow-and-top", &c).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert!(
            r.instances[0].note.contains("isomorphic to Q8:C3"),
            "{}",
            r.instances[0].note
        );
    }

    #[test]
    fn unknown_ids_are_rejected() {
        assert!(run_checks(&Corpus::default(), Some(&["nope".to_string()])).is_err());
    }
}
